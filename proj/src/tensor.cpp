#include "kmstab/tensor.hpp"

#include <algorithm>
#include <numeric>

#include "kmstab/error.hpp"

namespace kmstab {

namespace {

void require_dominant(const DoubleWeight& w, const char* role) {
  if (!w.is_dominant())
    throw PreconditionError(ErrorKind::kNegativeEntry, std::string(role) + " = " + w.to_string() + " is not dominant");
}

std::vector<std::int64_t> plus(std::vector<std::int64_t> a, std::span<const std::int64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

std::vector<std::int64_t> minus(std::vector<std::int64_t> a, std::span<const std::int64_t> b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

bool all_nonnegative(std::span<const std::int64_t> v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e >= 0; });
}

}  // namespace

std::size_t MultQuery::min_level(const MarkedDiagram& x) const {
  std::size_t n = x.rank();
  for (const auto* w : {&lambda, &mu, &nu}) n = std::max({n, w->head.length(), w->tail.length()});
  return n;
}

std::string MultQuery::key() const { return lambda.to_string() + "|" + mu.to_string() + "|" + nu.to_string(); }

LevelDecomposition decompose_at_level(const LevelAlgebra& alg, std::span<const std::int64_t> lambda,
                                      std::span<const std::int64_t> mu, std::span<const std::int64_t> budget,
                                      const ExploreOptions& opts, ExploreStats* stats) {
  if (alg.is_degenerate())
    throw PreconditionError(ErrorKind::kDegenerateLevel, "decomposition needs det(X_n) != 0");
  LevelDecomposition out;
  const auto st = explore(alg, lambda, budget, opts, [&](const ReachedPath& r) {
    if (!is_dominant_after_shift(r.path, mu)) return;
    const auto end = r.path.endpoint();
    std::vector<std::int64_t> beta(mu.begin(), mu.end());
    for (std::size_t i = 0; i < beta.size(); ++i) {
      if (!end[i].is_integer()) throw InvariantError("L-S path with a non-integral endpoint");
      beta[i] += end[i].num();
    }
    ++out[beta];
  });
  if (stats) *stats = st;
  return out;
}

LevelReport TensorEvaluator::evaluate(const MultQuery& q, std::size_t n, bool force_degenerate) {
  require_dominant(q.lambda, "lambda");
  require_dominant(q.mu, "mu");
  require_dominant(q.nu, "nu");
  const std::size_t minimal = q.min_level(x_);
  if (n < minimal)
    throw PreconditionError(ErrorKind::kLevelTooSmall, "level " + std::to_string(n) +
                                                           " is below the minimal legal level " +
                                                           std::to_string(minimal));

  const std::string key = q.key() + "@" + std::to_string(n) + (force_degenerate ? "!" : "");
  {
    const std::lock_guard lock(memo_mutex_);
    if (const auto it = memo_.find(key); it != memo_.end()) return it->second;
  }

  const LevelAlgebra alg(x_, n);
  LevelReport rep;
  rep.level = n;
  rep.det = alg.det();
  rep.degenerate = alg.is_degenerate();

  const DoubleWeight gamma = q.gamma();
  std::optional<std::vector<std::int64_t>> budget;
  if (!rep.degenerate) {
    budget = root_coefficients(alg, instantiate(gamma, alg).coords);
  } else {
    if (!force_degenerate)
      throw PreconditionError(ErrorKind::kDegenerateLevel,
                              "det(X_" + std::to_string(n) + ") = 0; evaluation at this level must be forced");
    if (boxes(gamma, x_) != 0)
      throw PreconditionError(ErrorKind::kDegenerateLevel,
                              "forced evaluation at a degenerate level needs |lambda + mu - nu| = 0");
    budget = profile(gamma, x_).reassemble(n);
  }

  if (budget && all_nonnegative(*budget)) {
    rep.budget_height = std::accumulate(budget->begin(), budget->end(), std::int64_t{0});
    ExploreStats stats;
    const auto lam = instantiate(q.lambda, alg).coords;
    const auto mu = instantiate(q.mu, alg).coords;
    const auto paths = ls_paths_to_target(alg, lam, *budget, opts_, &stats);
    rep.paths_enumerated = stats.visited;
    rep.count = std::count_if(paths.begin(), paths.end(),
                              [&](const Path& p) { return is_dominant_after_shift(p, mu); });
  }

  const std::lock_guard lock(memo_mutex_);
  return memo_.emplace(key, rep).first->second;
}

StabilityVerdict TensorEvaluator::stability_bound(const MultQuery& q) const {
  require_extensible(x_);
  require_dominant(q.lambda, "lambda");
  require_dominant(q.mu, "mu");
  require_dominant(q.nu, "nu");
  StabilityVerdict v;
  const std::int64_t lhs = boxes(q.lambda, x_) + boxes(q.mu, x_);
  const std::int64_t rhs = boxes(q.nu, x_);
  if (lhs != rhs) {
    v.stably_zero = true;
    v.reason = "box criterion: |lambda| + |mu| = " + std::to_string(lhs) + " but |nu| = " + std::to_string(rhs);
    return v;
  }
  const DoubleWeight gamma = q.gamma();
  const RootProfile prof = profile(gamma, x_);
  v.depth = prof.s;
  if (prof.s < 0) {
    v.stably_zero = true;
    v.reason = "negative depth " + std::to_string(prof.s);
    return v;
  }
  if (!prof.is_nonnegative()) {
    v.stably_zero = true;
    v.reason = "negative root coefficient in the profile of lambda + mu - nu";
    return v;
  }
  const std::size_t d = x_.rank();
  v.gamma_length = gamma.length(d);
  v.bound = std::max({v.gamma_length + 2 * static_cast<std::size_t>(prof.s), q.lambda.length(d), q.mu.length(d),
                      q.nu.length(d)});
  return v;
}

std::int64_t TensorEvaluator::stable_multiplicity(const MultQuery& q) {
  const auto v = stability_bound(q);
  if (v.stably_zero) return 0;
  return multiplicity(q, nondegenerate_level_from(x_, v.bound));
}

std::int64_t TensorEvaluator::kfold_at_level(const LevelAlgebra& alg, std::vector<std::vector<std::int64_t>> weights,
                                             const std::vector<std::int64_t>& nu) {
  if (weights.size() == 1) return weights.front() == nu ? 1 : 0;
  std::vector<std::int64_t> total(alg.level(), 0);
  for (const auto& w : weights) total = plus(std::move(total), w);
  const auto c = root_coefficients(alg, minus(total, nu));
  if (!c || !all_nonnegative(*c)) return 0;

  const auto dec = decompose_at_level(alg, weights[0], weights[1], *c, opts_);
  std::int64_t sum = 0;
  for (const auto& [beta, mult] : dec) {
    std::vector<std::vector<std::int64_t>> next;
    next.push_back(beta);
    next.insert(next.end(), weights.begin() + 2, weights.end());
    sum += mult * kfold_at_level(alg, std::move(next), nu);
  }
  return sum;
}

std::int64_t TensorEvaluator::kfold_multiplicity(const std::vector<DoubleWeight>& lambdas, const DoubleWeight& nu,
                                                 std::size_t n) {
  if (lambdas.empty()) throw std::invalid_argument("k-fold product of no factors");
  require_dominant(nu, "nu");
  std::size_t minimal = std::max({x_.rank(), nu.head.length(), nu.tail.length()});
  for (const auto& l : lambdas) {
    require_dominant(l, "lambda");
    minimal = std::max({minimal, l.head.length(), l.tail.length()});
  }
  if (n < minimal)
    throw PreconditionError(ErrorKind::kLevelTooSmall, "level " + std::to_string(n) +
                                                           " is below the minimal legal level " +
                                                           std::to_string(minimal));
  const LevelAlgebra alg(x_, n);
  if (alg.is_degenerate())
    throw PreconditionError(ErrorKind::kDegenerateLevel, "det(X_" + std::to_string(n) + ") = 0");
  std::vector<std::vector<std::int64_t>> coords;
  for (const auto& l : lambdas) coords.push_back(instantiate(l, alg).coords);
  return kfold_at_level(alg, std::move(coords), instantiate(nu, alg).coords);
}

std::int64_t TensorEvaluator::stable_kfold(const std::vector<DoubleWeight>& lambdas, const DoubleWeight& nu,
                                           Fold fold) {
  const std::size_t k = lambdas.size();
  if (k == 0) throw std::invalid_argument("k-fold product of no factors");
  if (k == 1) return lambdas.front() == nu ? 1 : 0;
  if (k == 2) return stable_multiplicity({lambdas[0], lambdas[1], nu});

  require_extensible(x_);
  DoubleWeight total;
  std::int64_t total_boxes = 0;
  for (const auto& l : lambdas) {
    total += l;
    total_boxes += boxes(l, x_);
  }
  if (total_boxes != boxes(nu, x_) || !leq(nu, total, x_)) return 0;

  // The only possible partial sums are gamma - rest with gamma in I(total, nu).
  const auto candidates = interval(total, nu, x_);
  std::int64_t sum = 0;
  if (fold == Fold::kLeft) {
    DoubleWeight rest;
    for (std::size_t j = 2; j < k; ++j) rest += lambdas[j];
    const DoubleWeight pair = lambdas[0] + lambdas[1];
    for (const auto& g : candidates) {
      const DoubleWeight beta = g - rest;
      if (!beta.is_dominant() || !leq(beta, pair, x_)) continue;
      const std::int64_t c = stable_multiplicity({lambdas[0], lambdas[1], beta});
      if (c == 0) continue;
      std::vector<DoubleWeight> next{beta};
      next.insert(next.end(), lambdas.begin() + 2, lambdas.end());
      sum += c * stable_kfold(next, nu, fold);
    }
  } else {
    DoubleWeight rest;
    for (std::size_t j = 0; j + 2 < k; ++j) rest += lambdas[j];
    const DoubleWeight pair = lambdas[k - 2] + lambdas[k - 1];
    for (const auto& g : candidates) {
      const DoubleWeight delta_w = g - rest;
      if (!delta_w.is_dominant() || !leq(delta_w, pair, x_)) continue;
      const std::int64_t c = stable_multiplicity({lambdas[k - 2], lambdas[k - 1], delta_w});
      if (c == 0) continue;
      std::vector<DoubleWeight> next(lambdas.begin(), lambdas.end() - 2);
      next.push_back(delta_w);
      sum += c * stable_kfold(next, nu, fold);
    }
  }
  return sum;
}

}  // namespace kmstab
