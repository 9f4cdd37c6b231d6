#pragma once

#include <cstdint>
#include <vector>

#include "kmstab/weight.hpp"

namespace kmstab {

/// Weakly decreasing positive parts.
struct Partition {
  std::vector<std::int64_t> parts;

  Partition() = default;
  /// Drops trailing zeros; throws std::invalid_argument unless weakly decreasing and nonnegative.
  explicit Partition(std::vector<std::int64_t> p);

  [[nodiscard]] std::int64_t size() const;
  [[nodiscard]] std::size_t rows() const { return parts.size(); }
  [[nodiscard]] std::int64_t at(std::size_t row) const { return row < parts.size() ? parts[row] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// All partitions of k, in decreasing lexicographic order.
std::vector<Partition> partitions_of(std::int64_t k);

/// Number of Littlewood-Richardson tableaux of shape z/x and content y.
std::int64_t lr_coefficient(const Partition& x, const Partition& y, const Partition& z);

/// Parts (x_1 + ... + x_m, x_2 + ... + x_m, ..., x_m): x_i counts the
/// columns of height i. Throws kNegativeEntry.
Partition h1_to_partition(const SupportSeq& x);
SupportSeq partition_to_h1(const Partition& p);

}  // namespace kmstab
