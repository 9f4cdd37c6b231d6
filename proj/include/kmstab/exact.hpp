#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kmstab {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static IntMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }

  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  [[nodiscard]] std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  [[nodiscard]] IntMatrix transpose() const;
  /// Principal submatrix on the given index list, in that order.
  [[nodiscard]] IntMatrix principal(std::span<const std::size_t> indices) const;
  [[nodiscard]] std::vector<std::vector<std::int64_t>> to_rows() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Determinant by Bareiss fraction-free elimination; the empty matrix has determinant 1.
BigInt bareiss_determinant(const IntMatrix& m);

/// Unique solution of m * x = rhs over the rationals, or nullopt when m is singular.
std::optional<std::vector<BigRational>> solve_exact(const IntMatrix& m, std::span<const std::int64_t> rhs);

/// Inverse over the rationals, or nullopt when singular.
std::optional<std::vector<std::vector<BigRational>>> inverse_exact(const IntMatrix& m);

/// Integer vector if every entry is integral and fits in 64 bits.
std::optional<std::vector<std::int64_t>> as_integers(std::span<const BigRational> v);

std::int64_t to_int64(const BigInt& v);

}  // namespace kmstab
