#include "kmstab/path.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "kmstab/error.hpp"

namespace kmstab {

namespace {

bool is_zero_segment(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r.is_zero(); });
}

// b = c * a with c > 0.
bool positively_proportional(std::span<const Rational> a, std::span<const Rational> b) {
  std::size_t j = 0;
  while (j < a.size() && a[j].is_zero()) ++j;
  if (j == a.size() || b[j].is_zero() || a[j].sign() != b[j].sign()) return false;
  const Rational c = b[j] / a[j];
  for (std::size_t k = 0; k < a.size(); ++k)
    if (b[k] != c * a[k]) return false;
  return true;
}

// Heights of coordinate `node` at the breakpoints 0, 1, ..., segment_count.
std::vector<Rational> heights(const Path& p, std::size_t node) {
  std::vector<Rational> h(p.segment_count() + 1);
  for (std::size_t k = 0; k < p.segment_count(); ++k) h[k + 1] = h[k] + p.segment(k)[node];
  return h;
}

void append_scaled(std::vector<Rational>& out, std::span<const Rational> v, const Rational& c) {
  for (const auto& x : v) out.push_back(x * c);
}

// Appends v - v[node] * alpha_node.
void append_reflected(std::vector<Rational>& out, std::span<const Rational> v, const Rational& c, std::size_t node,
                      const LevelAlgebra& alg) {
  const std::size_t start = out.size();
  append_scaled(out, v, c);
  const Rational coeff = out[start + node];
  for (const auto& e : alg.root_column(node)) out[start + e.row] -= coeff * Rational(e.value);
}

void check_node(const Path& p, std::size_t node, const LevelAlgebra& alg) {
  if (p.level() != alg.level() && !p.empty())
    throw PreconditionError(ErrorKind::kLevelMismatch, "path level differs from algebra level");
  if (node >= alg.level()) throw std::out_of_range("node index out of range");
}

}  // namespace

Path::Path(std::size_t level, std::vector<Rational> segments) : level_(level), data_(std::move(segments)) {
  if (level_ == 0 ? !data_.empty() : data_.size() % level_ != 0)
    throw std::invalid_argument("segment data is not a multiple of the level");
  canonicalize();
}

void Path::canonicalize() {
  std::vector<Rational> out;
  out.reserve(data_.size());
  const std::size_t k = segment_count();
  for (std::size_t s = 0; s < k; ++s) {
    const auto seg = segment(s);
    if (is_zero_segment(seg)) continue;
    if (!out.empty()) {
      const std::span<Rational> last(out.data() + out.size() - level_, level_);
      if (positively_proportional(last, seg)) {
        for (std::size_t j = 0; j < level_; ++j) last[j] += seg[j];
        continue;
      }
    }
    out.insert(out.end(), seg.begin(), seg.end());
  }
  data_ = std::move(out);
}

std::vector<Rational> Path::endpoint() const {
  std::vector<Rational> e(level_);
  for (std::size_t k = 0; k < segment_count(); ++k)
    for (std::size_t j = 0; j < level_; ++j) e[j] += segment(k)[j];
  return e;
}

std::string Path::dump() const {
  std::string out = "[";
  for (std::size_t k = 0; k < segment_count(); ++k) {
    out += k ? ", [" : "[";
    for (std::size_t j = 0; j < level_; ++j) {
      if (j) out += ", ";
      out += segment(k)[j].to_string();
    }
    out += "]";
  }
  return out + "]";
}

Path straight(std::span<const std::int64_t> w) {
  std::vector<Rational> seg(w.begin(), w.end());
  return Path(w.size(), std::move(seg));
}

Rational min_pairing(const Path& p, std::size_t node) {
  const auto h = heights(p, node);
  return *std::min_element(h.begin(), h.end());
}

std::optional<Path> lower(const Path& p, std::size_t node, const LevelAlgebra& alg) {
  check_node(p, node, alg);
  const auto h = heights(p, node);
  const std::size_t k = p.segment_count();
  const Rational m = *std::min_element(h.begin(), h.end());
  if (h[k] - m < Rational(1)) return std::nullopt;

  // future[s] = min of g over breakpoints s..k, with g = h - m.
  std::vector<Rational> future(k + 1);
  future[k] = h[k] - m;
  for (std::size_t s = k; s-- > 0;) future[s] = std::min(future[s + 1], h[s] - m);

  std::vector<Rational> out;
  out.reserve(p.flat().size() + 2 * alg.level());
  for (std::size_t s = 0; s < k; ++s) {
    const auto seg = p.segment(s);
    const Rational g0 = h[s] - m;
    const Rational g1 = h[s + 1] - m;
    const Rational cap = std::min(Rational(1), future[s + 1]);
    if (g1 <= g0 || cap <= g0) {
      append_scaled(out, seg, Rational(1));
    } else if (cap >= g1) {
      append_reflected(out, seg, Rational(1), node, alg);
    } else {
      const Rational tau = (cap - g0) / (g1 - g0);
      append_reflected(out, seg, tau, node, alg);
      append_scaled(out, seg, Rational(1) - tau);
    }
  }
  return Path(alg.level(), std::move(out));
}

std::optional<Path> raise(const Path& p, std::size_t node, const LevelAlgebra& alg) {
  check_node(p, node, alg);
  const auto h = heights(p, node);
  const std::size_t k = p.segment_count();
  const Rational m = *std::min_element(h.begin(), h.end());
  if (m > Rational(-1)) return std::nullopt;

  std::vector<Rational> out;
  out.reserve(p.flat().size() + 2 * alg.level());
  Rational past = h[0] - m;
  for (std::size_t s = 0; s < k; ++s) {
    const auto seg = p.segment(s);
    const Rational g0 = h[s] - m;
    const Rational g1 = h[s + 1] - m;
    const Rational cap = std::min(Rational(1), past);
    if (g1 >= g0 || cap <= g1) {
      append_scaled(out, seg, Rational(1));
    } else if (cap >= g0) {
      append_reflected(out, seg, Rational(1), node, alg);
    } else {
      const Rational tau = (cap - g0) / (g1 - g0);
      append_scaled(out, seg, tau);
      append_reflected(out, seg, Rational(1) - tau, node, alg);
    }
    past = std::min(past, g1);
  }
  return Path(alg.level(), std::move(out));
}

bool is_dominant_after_shift(const Path& p, std::span<const std::int64_t> mu) {
  if (!p.empty() && p.level() != mu.size())
    throw PreconditionError(ErrorKind::kLevelMismatch, "path level " + std::to_string(p.level()) +
                                                           " differs from weight level " + std::to_string(mu.size()));
  for (std::size_t i = 0; i < mu.size(); ++i)
    if (min_pairing(p, i) < Rational(-mu[i])) return false;
  return true;
}

namespace {

struct NodeHash {
  std::size_t operator()(const ReachedPath& r) const noexcept {
    std::size_t h = std::hash<Path>{}(r.path);
    for (const auto c : r.letters) h = h * 31 + static_cast<std::size_t>(c);
    return h;
  }
};

struct NodeEq {
  bool operator()(const ReachedPath& a, const ReachedPath& b) const {
    return a.letters == b.letters && a.path == b.path;
  }
};

bool node_less(const ReachedPath& a, const ReachedPath& b) {
  if (a.letters != b.letters) return a.letters < b.letters;
  return a.path < b.path;
}

void expand(const LevelAlgebra& alg, std::span<const std::int64_t> budget, bool reverse,
            std::span<const ReachedPath> nodes, std::vector<ReachedPath>& out) {
  const std::size_t n = alg.level();
  for (const auto& node : nodes) {
    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t i = reverse ? n - 1 - step : step;
      if (node.letters[i] >= budget[i]) continue;
      auto next = lower(node.path, i, alg);
      if (!next) continue;
      ReachedPath r{std::move(*next), node.letters};
      ++r.letters[i];
      out.push_back(std::move(r));
    }
  }
}

}  // namespace

ExploreStats explore(const LevelAlgebra& alg, std::span<const std::int64_t> lambda,
                     std::span<const std::int64_t> budget, const ExploreOptions& opts,
                     const std::function<void(const ReachedPath&)>& visit) {
  const std::size_t n = alg.level();
  if (lambda.size() != n || budget.size() != n)
    throw PreconditionError(ErrorKind::kLevelMismatch, "weight or budget length differs from the level");
  if (std::any_of(budget.begin(), budget.end(), [](std::int64_t b) { return b < 0; }))
    throw PreconditionError(ErrorKind::kNonIntegralBudget, "budget has a negative entry");

  ExploreStats stats;
  std::vector<ReachedPath> layer;
  layer.push_back({straight(lambda), std::vector<std::int64_t>(n, 0)});
  if (layer.front().path.empty()) layer.front().path = Path(n);

  const unsigned threads = std::max(1U, opts.threads);
  while (!layer.empty()) {
    ++stats.layers;
    for (const auto& node : layer) visit(node);
    stats.visited += layer.size();

    std::vector<std::vector<ReachedPath>> produced(threads);
    if (threads == 1 || layer.size() < 2 * threads) {
      expand(alg, budget, opts.reverse_nodes, layer, produced[0]);
    } else {
      std::vector<std::thread> pool;
      const std::size_t chunk = (layer.size() + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        const std::size_t begin = std::min(layer.size(), t * chunk);
        const std::size_t end = std::min(layer.size(), begin + chunk);
        pool.emplace_back([&, t, begin, end] {
          expand(alg, budget, opts.reverse_nodes, std::span<const ReachedPath>(layer).subspan(begin, end - begin),
                 produced[t]);
        });
      }
      for (auto& th : pool) th.join();
    }

    std::unordered_set<ReachedPath, NodeHash, NodeEq> seen;
    for (auto& part : produced)
      for (auto& r : part) seen.insert(std::move(r));
    layer.assign(std::make_move_iterator(seen.begin()), std::make_move_iterator(seen.end()));
    std::sort(layer.begin(), layer.end(), node_less);
  }
  return stats;
}

std::vector<Path> ls_paths_to_target(const LevelAlgebra& alg, std::span<const std::int64_t> lambda,
                                     std::span<const std::int64_t> budget, const ExploreOptions& opts,
                                     ExploreStats* stats) {
  if (budget.size() != alg.level())
    throw PreconditionError(ErrorKind::kNonIntegralBudget, "budget length differs from the level");
  std::vector<Path> out;
  const std::vector<std::int64_t> target(budget.begin(), budget.end());
  const auto st = explore(alg, lambda, budget, opts, [&](const ReachedPath& r) {
    if (r.letters == target) out.push_back(r.path);
  });
  if (stats) *stats = st;
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace kmstab
