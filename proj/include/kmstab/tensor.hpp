#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "kmstab/diagram.hpp"
#include "kmstab/path.hpp"
#include "kmstab/weight.hpp"

namespace kmstab {

struct MultQuery {
  DoubleWeight lambda;
  DoubleWeight mu;
  DoubleWeight nu;

  /// lambda + mu - nu.
  [[nodiscard]] DoubleWeight gamma() const { return lambda + mu - nu; }
  /// Smallest level at which every instantiation in the query is defined.
  [[nodiscard]] std::size_t min_level(const MarkedDiagram& x) const;
  [[nodiscard]] std::string key() const;
};

/// One evaluation of c_{lambda mu}^nu(n).
struct LevelReport {
  std::size_t level = 0;
  BigInt det;
  bool degenerate = false;
  /// Sum of the root coefficients of (lambda + mu - nu)^(n); -1 when there is no budget.
  std::int64_t budget_height = -1;
  std::size_t paths_enumerated = 0;
  std::int64_t count = 0;
};

struct StabilityVerdict {
  bool stably_zero = false;
  std::string reason;
  /// Valid when !stably_zero.
  std::size_t bound = 0;
  std::int64_t depth = 0;
  std::size_t gamma_length = 0;
};

enum class Fold { kLeft, kRight };

/// Coefficients c_{lambda mu}^beta(n) for every beta at one level, read off
/// the lambda-paths that are mu-dominant. Keys are level-n coordinate vectors.
using LevelDecomposition = std::map<std::vector<std::int64_t>, std::int64_t>;

/// Decomposition of L(lambda) x L(mu) restricted to the root-coefficient box
/// 0 <= lambda + mu - beta <= budget.
LevelDecomposition decompose_at_level(const LevelAlgebra& alg, std::span<const std::int64_t> lambda,
                                      std::span<const std::int64_t> mu, std::span<const std::int64_t> budget,
                                      const ExploreOptions& opts = {}, ExploreStats* stats = nullptr);

/// Tensor multiplicities for one seed, with a memo of binary queries. The
/// memo is an insert-once map guarded by a mutex, so an evaluator may be
/// shared between threads.
class TensorEvaluator {
 public:
  explicit TensorEvaluator(MarkedDiagram x, ExploreOptions opts = {}) : x_(std::move(x)), opts_(opts) {}

  [[nodiscard]] const MarkedDiagram& diagram() const { return x_; }

  /// c_{lambda mu}^nu(n). Throws kLevelTooSmall, and kDegenerateLevel when
  /// det(X_n) = 0 unless `force_degenerate`.
  LevelReport evaluate(const MultQuery& q, std::size_t n, bool force_degenerate = false);
  std::int64_t multiplicity(const MultQuery& q, std::size_t n) { return evaluate(q, n).count; }

  StabilityVerdict stability_bound(const MultQuery& q) const;
  std::int64_t stable_multiplicity(const MultQuery& q);

  /// Iterated binary sums at level n.
  std::int64_t kfold_multiplicity(const std::vector<DoubleWeight>& lambdas, const DoubleWeight& nu, std::size_t n);
  /// Stable value of the k-fold multiplicity, folding from the left or right.
  std::int64_t stable_kfold(const std::vector<DoubleWeight>& lambdas, const DoubleWeight& nu, Fold fold = Fold::kLeft);

 private:
  std::int64_t kfold_at_level(const LevelAlgebra& alg, std::vector<std::vector<std::int64_t>> weights,
                              const std::vector<std::int64_t>& nu);

  MarkedDiagram x_;
  ExploreOptions opts_;
  std::mutex memo_mutex_;
  std::map<std::string, LevelReport> memo_;
};

}  // namespace kmstab
