#include "kmstab/exact.hpp"

#include <stdexcept>
#include <utility>

#include "kmstab/error.hpp"

namespace kmstab {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("matrix rows have different lengths");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::principal(std::span<const std::size_t> indices) const {
  IntMatrix p(indices.size(), indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = 0; b < indices.size(); ++b) p(a, b) = (*this)(indices[a], indices[b]);
  return p;
}

std::vector<std::vector<std::int64_t>> IntMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

BigInt bareiss_determinant(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));

  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k] == 0) ++swap;
      if (swap == n) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]);
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

namespace {

// Gauss-Jordan on an augmented rational matrix; returns false when singular.
bool reduce(std::vector<std::vector<BigRational>>& a, std::size_t n) {
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return false;
    std::swap(a[col], a[pivot]);
    const BigRational inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const BigRational f = a[r][col];
      for (std::size_t c = col; c < a[r].size(); ++c) a[r][c] -= f * a[col][c];
    }
  }
  return true;
}

}  // namespace

std::optional<std::vector<BigRational>> solve_exact(const IntMatrix& m, std::span<const std::int64_t> rhs) {
  if (!m.is_square() || rhs.size() != m.rows()) throw std::invalid_argument("solve_exact: dimension mismatch");
  const std::size_t n = m.rows();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
    a[i][n] = static_cast<long>(rhs[i]);
  }
  if (!reduce(a, n)) return std::nullopt;
  std::vector<BigRational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n];
  return x;
}

std::optional<std::vector<std::vector<BigRational>>> inverse_exact(const IntMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse_exact: non-square matrix");
  const std::size_t n = m.rows();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
    a[i][n + i] = 1;
  }
  if (!reduce(a, n)) return std::nullopt;
  std::vector<std::vector<BigRational>> inv(n, std::vector<BigRational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) throw InvariantError("integer does not fit in 64 bits: " + v.get_str());
  return v.get_si();
}

std::optional<std::vector<std::int64_t>> as_integers(std::span<const BigRational> v) {
  std::vector<std::int64_t> out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(to_int64(q.get_num()));
  }
  return out;
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidDiagram: return "invalid-diagram";
    case ErrorKind::kLevelBelowRank: return "level-below-d";
    case ErrorKind::kNotExtensible: return "not-extensible";
    case ErrorKind::kLevelTooSmall: return "level-too-small";
    case ErrorKind::kBoxesNonzero: return "boxes-nonzero";
    case ErrorKind::kNotComparable: return "not-comparable";
    case ErrorKind::kNegativeEntry: return "negative-entry";
    case ErrorKind::kLevelMismatch: return "level-mismatch";
    case ErrorKind::kNonIntegralBudget: return "non-integral-budget";
    case ErrorKind::kDegenerateLevel: return "degenerate-level";
    case ErrorKind::kUnboundedWindow: return "unbounded-window";
  }
  return "unknown";
}

}  // namespace kmstab
