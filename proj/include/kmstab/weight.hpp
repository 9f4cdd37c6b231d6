#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kmstab/diagram.hpp"

namespace kmstab {

/// Finitely supported integer sequence x_1, x_2, ... stored without
/// trailing zeros. Indexing through at() is one-based.
class SupportSeq {
 public:
  SupportSeq() = default;
  explicit SupportSeq(std::vector<std::int64_t> entries);
  /// c * epsilon_i.
  static SupportSeq unit(std::size_t i, std::int64_t c = 1);

  /// Largest index with a nonzero entry; 0 for the zero sequence.
  [[nodiscard]] std::size_t length() const { return entries_.size(); }
  [[nodiscard]] std::int64_t at(std::size_t i) const { return i >= 1 && i <= entries_.size() ? entries_[i - 1] : 0; }
  [[nodiscard]] std::span<const std::int64_t> entries() const { return entries_; }
  [[nodiscard]] bool is_zero() const { return entries_.empty(); }
  [[nodiscard]] bool is_nonnegative() const;

  SupportSeq& operator+=(const SupportSeq& o);
  SupportSeq& operator-=(const SupportSeq& o);
  friend SupportSeq operator+(SupportSeq a, const SupportSeq& b) { return a += b; }
  friend SupportSeq operator-(SupportSeq a, const SupportSeq& b) { return a -= b; }
  friend SupportSeq operator*(std::int64_t c, const SupportSeq& a);
  friend SupportSeq operator-(const SupportSeq& a) { return -1 * a; }

  friend bool operator==(const SupportSeq&, const SupportSeq&) = default;
  /// Lexicographic on the zero-padded sequences.
  friend std::strong_ordering operator<=>(const SupportSeq& a, const SupportSeq& b);

 private:
  void trim();
  std::vector<std::int64_t> entries_;
};

/// An element (x, y) of H_2: head coefficients on omega_1, omega_2, ... and
/// tail coefficients on the backwards-indexed fundamental weights.
struct DoubleWeight {
  SupportSeq head;
  SupportSeq tail;

  [[nodiscard]] bool is_dominant() const { return head.is_nonnegative() && tail.is_nonnegative(); }
  [[nodiscard]] bool is_zero() const { return head.is_zero() && tail.is_zero(); }
  /// l(lambda, X) = l(y) + max(d, l(x)).
  [[nodiscard]] std::size_t length(std::size_t rank) const;
  /// CLI shorthand "h1,h2,.../t1,t2,...".
  [[nodiscard]] std::string to_string() const;

  DoubleWeight& operator+=(const DoubleWeight& o);
  DoubleWeight& operator-=(const DoubleWeight& o);
  friend DoubleWeight operator+(DoubleWeight a, const DoubleWeight& b) { return a += b; }
  friend DoubleWeight operator-(DoubleWeight a, const DoubleWeight& b) { return a -= b; }

  friend bool operator==(const DoubleWeight&, const DoubleWeight&) = default;
  friend std::strong_ordering operator<=>(const DoubleWeight& a, const DoubleWeight& b);
};

/// A weight of g(X_n) by its coroot pairings: coords[i] = <w, coroot_{i+1}>.
struct InstantiatedWeight {
  std::vector<std::int64_t> coords;

  [[nodiscard]] std::size_t level() const { return coords.size(); }
  [[nodiscard]] bool is_dominant() const;
  friend bool operator==(const InstantiatedWeight&, const InstantiatedWeight&) = default;
};

/// Coefficients of a box-zero element of H_2 in the simple-root basis:
/// a fixed left block p_1..p_{l-1}, the constant s on nodes l..n-r+1 and a
/// fixed right block q_{r-1}..q_1 ending at node n.
struct RootProfile {
  std::vector<std::int64_t> p;
  std::int64_t s = 0;
  std::vector<std::int64_t> q;
  std::size_t l = 0;
  std::size_t r = 0;

  /// Simple-root coefficients at level n >= l + r.
  [[nodiscard]] std::vector<std::int64_t> reassemble(std::size_t n) const;
  [[nodiscard]] bool is_nonnegative() const;
  friend bool operator==(const RootProfile&, const RootProfile&) = default;
};

/// lambda^(n) in coroot coordinates. Throws kLevelTooSmall when n < max(d, l(x), l(y));
/// head and tail entries add where the supports meet.
InstantiatedWeight instantiate(const DoubleWeight& lambda, const LevelAlgebra& alg);

/// |lambda|_X = sum a_i x_i - Delta * sum i y_i.
std::int64_t boxes(const DoubleWeight& lambda, const MarkedDiagram& x);

/// Root profile of gamma, solved at the smallest nondegenerate level >= l + r.
/// Throws kBoxesNonzero when |gamma|_X != 0.
RootProfile profile(const DoubleWeight& gamma, const MarkedDiagram& x);

/// The middle constant s of profile(gamma).
std::int64_t depth(const DoubleWeight& gamma, const MarkedDiagram& x);

/// lower <= upper in the partial order on H_2.
bool leq(const DoubleWeight& lower, const DoubleWeight& upper, const MarkedDiagram& x);

/// { gamma in H_2^+ : upper >= gamma >= lower }, sorted.
/// Throws kNotComparable unless lower <= upper, kNegativeEntry unless both are dominant.
std::vector<DoubleWeight> interval(const DoubleWeight& upper, const DoubleWeight& lower, const MarkedDiagram& x);

/// Smallest level >= n with det(X_level) != 0.
std::size_t nondegenerate_level_from(const MarkedDiagram& x, std::size_t n);

/// Unique integral solution b of C(X_n) b = coords, nullopt when the unique
/// rational solution is not integral. Throws kDegenerateLevel when det(X_n) = 0.
std::optional<std::vector<std::int64_t>> root_coefficients(const LevelAlgebra& alg, std::span<const std::int64_t> coords);

/// coords + C(X_n) * b.
std::vector<std::int64_t> add_roots(const LevelAlgebra& alg, std::span<const std::int64_t> coords,
                                    std::span<const std::int64_t> b, std::int64_t sign = 1);

/// The double-headed weight whose head is coords[0, head_len) and whose tail
/// reads the remaining coordinates backwards from node n.
DoubleWeight lift(std::span<const std::int64_t> coords, std::size_t head_len);

}  // namespace kmstab
