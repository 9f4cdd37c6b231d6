#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kmstab/exact.hpp"

namespace kmstab {

/// A symmetrizable generalized Cartan matrix with one distinguished node.
///
/// Nodes are renumbered at construction so that the marked node is the last
/// one (index rank()-1 here, node d in one-based terms); the relative order of
/// the remaining nodes is preserved. The convention for entries is
/// cartan(i, j) = <alpha_j, coroot_i>, so column j holds the coroot pairings
/// of the simple root alpha_j.
///
/// A seed with zero determinant is replaced by its one-node extension when
/// the extension is nonsingular; warnings() records the substitution.
class MarkedDiagram {
 public:
  /// `marked` is a zero-based index into `cartan`. Throws PreconditionError
  /// (kInvalidDiagram) unless `cartan` is a symmetrizable GCM.
  static MarkedDiagram create(std::string name, const IntMatrix& cartan, std::size_t marked);

  /// One of preset_names(); node numbering as in the standard pictures of
  /// the nine series seeds (A, B, C, D, E, F1, F2, G1, G2).
  static MarkedDiagram preset(std::string_view name);
  static const std::vector<std::string>& preset_names();

  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] std::size_t rank() const { return cartan_.rows(); }
  [[nodiscard]] const IntMatrix& cartan() const { return cartan_; }
  /// det C(X).
  [[nodiscard]] const BigInt& det() const { return det_; }
  /// det of X with the marked node deleted (1 for the empty diagram).
  [[nodiscard]] const BigInt& det_without_marked() const { return det_minor_; }
  /// Positive diagonal D with D * cartan symmetric, normalised so the first
  /// entry of each connected component is 1.
  [[nodiscard]] const std::vector<BigRational>& symmetrizer() const { return symmetrizer_; }
  [[nodiscard]] const std::vector<std::string>& warnings() const { return warnings_; }
  /// a_1 .. a_d, read off det(X) times the marked fundamental coweight in
  /// the simple coroot basis; empty when det(X) = 0.
  [[nodiscard]] const std::vector<BigInt>& head_labels() const { return head_labels_; }
  /// internal index -> index in the matrix passed to create().
  [[nodiscard]] const std::vector<std::size_t>& input_order() const { return input_order_; }

  friend bool operator==(const MarkedDiagram& a, const MarkedDiagram& b) {
    return a.cartan_ == b.cartan_;
  }

 private:
  MarkedDiagram() = default;

  std::string name_;
  IntMatrix cartan_;
  BigInt det_;
  BigInt det_minor_;
  std::vector<BigRational> symmetrizer_;
  std::vector<std::string> warnings_;
  std::vector<BigInt> head_labels_;
  std::vector<std::size_t> input_order_;
};

/// Nonzero entry of a simple root's coordinate column.
struct ColumnEntry {
  std::size_t row;
  std::int64_t value;
};

/// The Kac-Moody datum X_n: the seed with a type-A tail of n - d nodes
/// attached to the marked node.
class LevelAlgebra {
 public:
  LevelAlgebra(MarkedDiagram base, std::size_t level);

  [[nodiscard]] const MarkedDiagram& base() const { return base_; }
  [[nodiscard]] std::size_t level() const { return level_; }
  [[nodiscard]] const IntMatrix& cartan() const { return cartan_; }
  [[nodiscard]] const BigInt& det() const { return det_; }
  [[nodiscard]] bool is_degenerate() const { return det_ == 0; }

  /// Coroot pairings of the simple root alpha_node (zero-based), i.e. the
  /// nonzero entries of column `node` of the Cartan matrix.
  [[nodiscard]] std::span<const ColumnEntry> root_column(std::size_t node) const {
    return columns_[node];
  }
  /// Nodes adjacent to `node` in the Dynkin diagram.
  [[nodiscard]] const std::vector<std::size_t>& neighbours(std::size_t node) const { return neighbours_[node]; }

 private:
  MarkedDiagram base_;
  std::size_t level_;
  IntMatrix cartan_;
  BigInt det_;
  std::vector<std::vector<ColumnEntry>> columns_;
  std::vector<std::vector<std::size_t>> neighbours_;
};

/// Builds C(X_n). Throws PreconditionError(kLevelBelowRank) when n < d.
LevelAlgebra extend(const MarkedDiagram& x, std::size_t n);

/// The block matrix C(X_n) without the determinant bookkeeping.
IntMatrix extended_cartan(const MarkedDiagram& x, std::size_t n);

/// det(X_n) for n >= d - 1 through the two-term recurrence.
BigInt level_determinant(const MarkedDiagram& x, std::size_t n);

/// Common difference of the arithmetic progression det(X_n).
BigInt delta(const MarkedDiagram& x);

struct Extensibility {
  bool extensible = false;
  std::string reason;
};

Extensibility is_extensible(const MarkedDiagram& x);

/// Throws PreconditionError(kNotExtensible) with the failing clause.
void require_extensible(const MarkedDiagram& x);

/// Transposed Cartan matrix, same marked node.
MarkedDiagram dual(const MarkedDiagram& x);

/// a_i for a one-based index i.
BigInt a_value(const MarkedDiagram& x, std::size_t i);

/// a_1 .. a_upto.
std::vector<BigInt> a_sequence(const MarkedDiagram& x, std::size_t upto);

}  // namespace kmstab
