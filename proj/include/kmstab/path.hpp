#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmstab/diagram.hpp"
#include "kmstab/rational.hpp"
#include "kmstab/weight.hpp"

namespace kmstab {

/// Piecewise-linear path from the origin, stored as its list of segment
/// displacements in coroot-pairing coordinates. Always canonical: no zero
/// segments and no two consecutive positively proportional segments, so two
/// paths are equal iff they are reparametrizations of each other.
class Path {
 public:
  Path() = default;
  explicit Path(std::size_t level) : level_(level) {}
  /// Canonicalizes `segments` (flat, stride `level`).
  Path(std::size_t level, std::vector<Rational> segments);

  [[nodiscard]] std::size_t level() const { return level_; }
  [[nodiscard]] std::size_t segment_count() const { return level_ == 0 ? 0 : data_.size() / level_; }
  [[nodiscard]] std::span<const Rational> segment(std::size_t k) const {
    return std::span<const Rational>(data_).subspan(k * level_, level_);
  }
  [[nodiscard]] std::span<const Rational> flat() const { return data_; }
  [[nodiscard]] bool empty() const { return data_.empty(); }

  [[nodiscard]] std::vector<Rational> endpoint() const;
  /// Segments as reduced fraction strings, one bracketed vector per segment.
  [[nodiscard]] std::string dump() const;

  friend bool operator==(const Path&, const Path&) = default;
  friend bool operator<(const Path& a, const Path& b) { return a.data_ < b.data_; }

 private:
  void canonicalize();

  std::size_t level_ = 0;
  std::vector<Rational> data_;
};

/// Straight-line path to w; the zero weight gives the empty path.
Path straight(std::span<const std::int64_t> w);

/// Minimum of the coordinate `node` along the path (attained at a breakpoint).
Rational min_pairing(const Path& p, std::size_t node);

/// Root operator f_node; nullopt when it kills the path.
std::optional<Path> lower(const Path& p, std::size_t node, const LevelAlgebra& alg);

/// Root operator e_node; nullopt when it kills the path.
std::optional<Path> raise(const Path& p, std::size_t node, const LevelAlgebra& alg);

/// mu + p(t) stays in the dominant chamber. Throws kLevelMismatch.
bool is_dominant_after_shift(const Path& p, std::span<const std::int64_t> mu);

struct ExploreOptions {
  /// Apply operators in decreasing node order (used to check order independence).
  bool reverse_nodes = false;
  /// Worker threads for frontier expansion; 0 or 1 runs inline.
  unsigned threads = 1;
};

/// A path reached by the enumeration together with its f-letter counts.
struct ReachedPath {
  Path path;
  std::vector<std::int64_t> letters;
};

struct ExploreStats {
  std::size_t visited = 0;
  std::size_t layers = 0;
};

/// Breadth-first search over f-words applied to straight(lambda), pruning any
/// word whose letter-count vector exceeds `budget` in some coordinate.
/// `visit` is called once for every distinct (path, letters) pair, in a
/// deterministic order (layer by layer, sorted within a layer).
ExploreStats explore(const LevelAlgebra& alg, std::span<const std::int64_t> lambda,
                     std::span<const std::int64_t> budget, const ExploreOptions& opts,
                     const std::function<void(const ReachedPath&)>& visit);

/// All L-S paths of shape lambda whose letter-count vector equals `budget`,
/// sorted. Throws kNonIntegralBudget for negative entries or a length mismatch.
std::vector<Path> ls_paths_to_target(const LevelAlgebra& alg, std::span<const std::int64_t> lambda,
                                     std::span<const std::int64_t> budget, const ExploreOptions& opts = {},
                                     ExploreStats* stats = nullptr);

}  // namespace kmstab

template <>
struct std::hash<kmstab::Path> {
  std::size_t operator()(const kmstab::Path& p) const noexcept {
    std::size_t h = p.level();
    for (const auto& r : p.flat()) h = h * 1099511628211ULL ^ std::hash<kmstab::Rational>{}(r);
    return h;
  }
};
