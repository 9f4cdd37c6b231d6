#pragma once

// Independent reference computations used only by the tests. None of these
// call into the library's solvers or path code.

#include <cstdint>
#include <algorithm>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "kmstab/exact.hpp"
#include "kmstab/io.hpp"
#include "kmstab/weight.hpp"

namespace kmstab::testing {

inline DoubleWeight W(const std::string& s) { return parse_weight(s); }

/// Determinant as a signed sum over permutations, organised as a dynamic
/// program over the set of used columns (row-by-row Laplace expansion).
inline BigInt cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  std::vector<BigInt> dp(std::size_t{1} << n, 0);
  dp[0] = 1;
  for (std::size_t mask = 0; mask < dp.size(); ++mask) {
    if (dp[mask] == 0) continue;
    const std::size_t row = static_cast<std::size_t>(__builtin_popcountll(mask));
    if (row == n) continue;
    for (std::size_t col = 0; col < n; ++col) {
      if (mask >> col & 1 || m(row, col) == 0) continue;
      // Sign of placing `col` after the columns already used: one
      // transposition per used column to its right.
      const int above = __builtin_popcountll(mask >> col);
      BigInt term = dp[mask] * static_cast<long>(m(row, col));
      if (above % 2) term = -term;
      dp[mask | (std::size_t{1} << col)] += term;
    }
  }
  return dp.back();
}

/// Replace column `col` of m by the unit vector e_row (Cramer numerator).
inline IntMatrix with_unit_column(const IntMatrix& m, std::size_t col, std::size_t row) {
  IntMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) out(i, col) = i == row ? 1 : 0;
  return out;
}

/// Small exact Gaussian elimination over mpq, written independently of the
/// library solver: returns the solution of m x = rhs, or empty if singular.
inline std::vector<BigRational> naive_solve(const IntMatrix& m, const std::vector<std::int64_t>& rhs) {
  const std::size_t n = m.rows();
  std::vector<std::vector<BigRational>> a(n, std::vector<BigRational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = static_cast<long>(m(i, j));
    a[i][n] = static_cast<long>(rhs[i]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return {};
    std::swap(a[p], a[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const BigRational f = a[r][c] / a[c][c];
      for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<BigRational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    BigRational s = a[i][n];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

/// Raw level-n interval: every dominant beta with upper >= beta >= lower,
/// found by scanning the full root-coefficient box 0 <= b <= upper - lower
/// (no use of the constant-window structure).
inline std::vector<std::vector<std::int64_t>> brute_level_interval(const IntMatrix& c,
                                                                   const std::vector<std::int64_t>& upper,
                                                                   const std::vector<std::int64_t>& lower) {
  const std::size_t n = c.rows();
  std::vector<std::int64_t> diff(n);
  for (std::size_t i = 0; i < n; ++i) diff[i] = upper[i] - lower[i];
  const auto sol = naive_solve(c, diff);
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> box(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sol[i].get_den() != 1 || sol[i] < 0) return out;
    box[i] = sol[i].get_num().get_si();
  }
  std::vector<std::int64_t> b(n, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      std::vector<std::int64_t> beta = lower;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) beta[i] += c(i, j) * b[j];
      if (std::all_of(beta.begin(), beta.end(), [](std::int64_t v) { return v >= 0; })) out.push_back(beta);
      return;
    }
    // Rows whose entries are all assigned can be checked early.
    for (std::int64_t v = 0; v <= box[pos]; ++v) {
      b[pos] = v;
      bool ok = true;
      if (pos >= 1) {
        const std::size_t row = pos - 1;
        bool ready = true;
        for (std::size_t j = pos + 1; j < n; ++j)
          if (c(row, j) != 0) ready = false;
        if (ready) {
          std::int64_t val = lower[row];
          for (std::size_t j = 0; j <= pos; ++j) val += c(row, j) * b[j];
          ok = val >= 0;
        }
      }
      if (ok) rec(pos + 1);
    }
    b[pos] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Sum of the root coefficients of lambda + mu - nu at level n; -1 when they
/// are not nonnegative integers. Lets samplers skip huge enumerations.
inline std::int64_t budget_height(const MarkedDiagram& x, const DoubleWeight& gamma, std::size_t n) {
  const LevelAlgebra alg(x, n);
  const auto b = root_coefficients(alg, instantiate(gamma, alg).coords);
  if (!b) return -1;
  std::int64_t h = 0;
  for (const auto v : *b) {
    if (v < 0) return -1;
    h += v;
  }
  return h;
}

/// Random dominant double-headed weight with short supports.
inline DoubleWeight random_dominant(std::mt19937_64& rng, std::size_t max_len, std::int64_t max_entry) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<std::int64_t> entry(0, max_entry);
  auto seq = [&] {
    std::vector<std::int64_t> v(len(rng));
    for (auto& e : v) e = entry(rng);
    return SupportSeq(v);
  };
  DoubleWeight w;
  w.head = seq();
  w.tail = seq();
  return w;
}

}  // namespace kmstab::testing
