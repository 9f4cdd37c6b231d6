#include "kmstab/ring.hpp"

#include <algorithm>

#include "kmstab/error.hpp"
#include "kmstab/tensor.hpp"

namespace kmstab {

namespace {

std::size_t default_head(const DoubleWeight& lambda, const DoubleWeight& mu, const MarkedDiagram& x) {
  return std::max(x.rank(), lambda.head.length() + mu.head.length());
}

// Sum of j * y_j: the largest tail index any beta below this weight can use.
std::size_t tail_moment(const DoubleWeight& w) {
  std::int64_t m = 0;
  for (std::size_t j = 1; j <= w.tail.length(); ++j) m += static_cast<std::int64_t>(j) * w.tail.at(j);
  return static_cast<std::size_t>(std::max<std::int64_t>(m, 0));
}

// Bounds b on `block` from C_block b <= top_block + s * (couplings to the
// window), which holds for every candidate because b equals the depth
// s <= max_depth on the window nodes next to the block.
void bound_block(const LevelAlgebra& alg, const std::vector<std::size_t>& block, std::span<const std::int64_t> top,
                 std::int64_t max_depth, std::vector<std::int64_t>& budget) {
  if (block.empty()) return;
  const IntMatrix sub = alg.cartan().principal(block);
  const auto inv = inverse_exact(sub);
  if (!inv)
    throw PreconditionError(ErrorKind::kUnboundedWindow,
                            "the end block of " + std::to_string(block.size()) + " nodes is singular");
  for (const auto& row : *inv)
    for (const auto& v : row)
      if (v < 0)
        throw PreconditionError(ErrorKind::kUnboundedWindow,
                                "the end block of " + std::to_string(block.size()) +
                                    " nodes has an inverse Cartan matrix with negative entries; root coefficients "
                                    "there are not bounded by the cutoff");
  std::vector<BigRational> rhs(block.size());
  for (std::size_t a = 0; a < block.size(); ++a) {
    const std::size_t i = block[a];
    rhs[a] = static_cast<long>(top[i]);
    for (const auto j : alg.neighbours(i))
      if (std::find(block.begin(), block.end(), j) == block.end())
        rhs[a] -= static_cast<long>(alg.cartan()(i, j) * max_depth);
  }
  for (std::size_t a = 0; a < block.size(); ++a) {
    BigRational u = 0;
    for (std::size_t c = 0; c < block.size(); ++c) u += (*inv)[a][c] * rhs[c];
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), u.get_num_mpz_t(), u.get_den_mpz_t());
    budget[block[a]] = to_int64(fl);
  }
}

}  // namespace

ProductPlan plan_product(const DoubleWeight& lambda, const DoubleWeight& mu, const MarkedDiagram& x,
                         const Cutoff& cutoff) {
  if (cutoff.max_depth < 0) throw std::invalid_argument("negative depth cutoff");
  const std::size_t head = cutoff.max_head ? cutoff.max_head : default_head(lambda, mu, x);
  ProductPlan plan;
  plan.head_window = std::max({x.rank(), head, lambda.head.length(), mu.head.length()});
  plan.tail_window = std::max({cutoff.max_tail, lambda.tail.length(), mu.tail.length()});
  const auto s = static_cast<std::size_t>(cutoff.max_depth);
  plan.level = nondegenerate_level_from(x, plan.head_window + plan.tail_window + 2 * s);

  const LevelAlgebra alg(x, plan.level);
  const auto top = instantiate(lambda + mu, alg).coords;
  const std::size_t n = plan.level;
  const std::size_t l = plan.head_window;
  const std::size_t r = plan.tail_window;
  // Nodes l .. n-r+1 (one-based) carry the constant depth.
  plan.budget.assign(n, cutoff.max_depth);
  std::vector<std::size_t> left;
  for (std::size_t i = 0; i + 1 < l; ++i) left.push_back(i);
  std::vector<std::size_t> right;
  for (std::size_t i = n - r + 1; i < n; ++i) right.push_back(i);
  bound_block(alg, left, top, cutoff.max_depth, plan.budget);
  bound_block(alg, right, top, cutoff.max_depth, plan.budget);
  return plan;
}

MultTable stable_product(const DoubleWeight& lambda, const DoubleWeight& mu, const MarkedDiagram& x,
                         const Cutoff& cutoff, const ExploreOptions& opts) {
  require_extensible(x);
  if (!lambda.is_dominant() || !mu.is_dominant())
    throw PreconditionError(ErrorKind::kNegativeEntry, "factors of a product must be dominant");

  MultTable table;
  table.grade = boxes(lambda, x) + boxes(mu, x);
  table.cutoff = cutoff;
  if (table.cutoff.max_head == 0) table.cutoff.max_head = default_head(lambda, mu, x);

  const ProductPlan plan = plan_product(lambda, mu, x, cutoff);
  const LevelAlgebra alg(x, plan.level);
  const auto lam = instantiate(lambda, alg).coords;
  const auto muc = instantiate(mu, alg).coords;
  const auto dec = decompose_at_level(alg, lam, muc, plan.budget, opts);

  const DoubleWeight top = lambda + mu;
  for (const auto& [beta, count] : dec) {
    const DoubleWeight g = lift(beta, plan.level - plan.tail_window);
    if (g.head.length() > table.cutoff.max_head || g.tail.length() > cutoff.max_tail) continue;
    if (boxes(g, x) != table.grade) continue;
    const RootProfile prof = profile(top - g, x);
    if (prof.s > cutoff.max_depth) continue;
    if (!prof.is_nonnegative()) throw InvariantError("product term " + g.to_string() + " is not below lambda + mu");
    table.terms.emplace(g, count);
  }
  return table;
}

namespace {

void restrict_to(MultTable& t, const DoubleWeight& top, const MarkedDiagram& x, const Cutoff& window) {
  for (auto it = t.terms.begin(); it != t.terms.end();) {
    const auto& g = it->first;
    const bool inside = g.head.length() <= window.max_head && g.tail.length() <= window.max_tail &&
                        depth(top - g, x) <= window.max_depth;
    it = inside ? std::next(it) : t.terms.erase(it);
  }
}

// (a * b) * c when inner_first, else c * (a * b); restricted to the window,
// with the inner product widened.
MultTable bracket(const DoubleWeight& a, const DoubleWeight& b, const DoubleWeight& c, bool inner_first,
                  const MarkedDiagram& x, const Cutoff& window, const ExploreOptions& opts) {
  const Cutoff inner{window.max_depth, std::max(window.max_tail, tail_moment(a + b)), window.max_head};
  const MultTable first = stable_product(a, b, x, inner, opts);
  MultTable out;
  out.grade = first.grade + boxes(c, x);
  out.cutoff = window;
  for (const auto& [beta, c1] : first.terms) {
    const std::int64_t used = depth(a + b - beta, x);
    const Cutoff outer{window.max_depth - used, window.max_tail, window.max_head};
    const MultTable second =
        inner_first ? stable_product(beta, c, x, outer, opts) : stable_product(c, beta, x, outer, opts);
    for (const auto& [g, c2] : second.terms) out.terms[g] += c1 * c2;
  }
  restrict_to(out, a + b + c, x, window);
  return out;
}

}  // namespace

AssociativityReport check_associativity(const DoubleWeight& lambda, const DoubleWeight& mu, const DoubleWeight& nu,
                                        const MarkedDiagram& x, const Cutoff& cutoff, const ExploreOptions& opts) {
  Cutoff window = cutoff;
  if (window.max_head == 0)
    window.max_head = std::max(x.rank(), lambda.head.length() + mu.head.length() + nu.head.length());

  AssociativityReport rep;
  rep.left = bracket(lambda, mu, nu, true, x, window, opts);
  rep.right = bracket(mu, nu, lambda, false, x, window, opts);

  std::map<DoubleWeight, std::pair<std::int64_t, std::int64_t>> all;
  for (const auto& [g, c] : rep.left.terms) all[g].first = c;
  for (const auto& [g, c] : rep.right.terms) all[g].second = c;
  for (const auto& [g, cs] : all) {
    if (cs.first == cs.second) continue;
    rep.associative = false;
    rep.discrepancies.push_back(g.to_string() + ": " + std::to_string(cs.first) + " vs " + std::to_string(cs.second));
  }
  return rep;
}

}  // namespace kmstab
