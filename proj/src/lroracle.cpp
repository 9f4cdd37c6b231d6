#include "kmstab/lroracle.hpp"

#include <functional>
#include <stdexcept>

#include "kmstab/error.hpp"

namespace kmstab {

Partition::Partition(std::vector<std::int64_t> p) : parts(std::move(p)) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0) throw std::invalid_argument("partition with a negative part");
    if (i && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

std::int64_t Partition::size() const {
  std::int64_t s = 0;
  for (const auto p : parts) s += p;
  return s;
}

std::vector<Partition> partitions_of(std::int64_t k) {
  std::vector<Partition> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> rec = [&](std::int64_t left, std::int64_t cap) {
    if (left == 0) {
      out.emplace_back(cur);
      return;
    }
    for (std::int64_t p = std::min(left, cap); p >= 1; --p) {
      cur.push_back(p);
      rec(left - p, p);
      cur.pop_back();
    }
  };
  rec(k, k);
  return out;
}

std::int64_t lr_coefficient(const Partition& x, const Partition& y, const Partition& z) {
  if (x.size() + y.size() != z.size()) return 0;
  for (std::size_t r = 0; r < x.rows(); ++r)
    if (x.at(r) > z.at(r)) return 0;

  // Cells of z/x in reading order: rows top to bottom, each row right to left.
  struct Cell {
    std::size_t row;
    std::int64_t col;
  };
  std::vector<Cell> cells;
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::int64_t c = z.at(r) - 1; c >= x.at(r); --c) cells.push_back({r, c});

  std::vector<std::vector<std::int64_t>> fill(z.rows());
  for (std::size_t r = 0; r < z.rows(); ++r) fill[r].assign(static_cast<std::size_t>(z.at(r)), 0);
  std::vector<std::int64_t> used(y.rows() + 1, 0);
  std::int64_t count = 0;

  std::function<void(std::size_t)> place = [&](std::size_t k) {
    if (k == cells.size()) {
      ++count;
      return;
    }
    const auto [r, c] = cells[k];
    for (std::int64_t v = 1; v <= static_cast<std::int64_t>(y.rows()); ++v) {
      if (used[v] >= y.at(v - 1)) continue;
      // Lattice word: letter v never outnumbers letter v - 1.
      if (v > 1 && used[v] + 1 > used[v - 1]) continue;
      // Rows weakly increase to the right.
      if (c + 1 < z.at(r) && fill[r][c + 1] < v) continue;
      // Columns strictly increase downwards.
      if (r > 0 && c >= x.at(r - 1) && fill[r - 1][c] >= v) continue;
      fill[r][c] = v;
      ++used[v];
      place(k + 1);
      --used[v];
      fill[r][c] = 0;
    }
  };
  place(0);
  return count;
}

Partition h1_to_partition(const SupportSeq& x) {
  if (!x.is_nonnegative())
    throw PreconditionError(ErrorKind::kNegativeEntry, "column counts must be nonnegative");
  std::vector<std::int64_t> parts(x.length(), 0);
  std::int64_t running = 0;
  for (std::size_t i = x.length(); i >= 1; --i) {
    running += x.at(i);
    parts[i - 1] = running;
  }
  return Partition(std::move(parts));
}

SupportSeq partition_to_h1(const Partition& p) {
  std::vector<std::int64_t> x(p.rows());
  for (std::size_t i = 0; i < p.rows(); ++i) x[i] = p.at(i) - p.at(i + 1);
  return SupportSeq(std::move(x));
}

}  // namespace kmstab
