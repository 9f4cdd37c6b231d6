#include "kmstab/weight.hpp"

#include <algorithm>
#include <functional>

#include "kmstab/error.hpp"

namespace kmstab {

// ---- SupportSeq ----------------------------------------------------------

SupportSeq::SupportSeq(std::vector<std::int64_t> entries) : entries_(std::move(entries)) { trim(); }

SupportSeq SupportSeq::unit(std::size_t i, std::int64_t c) {
  if (i == 0) throw std::invalid_argument("sequences are indexed from 1");
  std::vector<std::int64_t> v(i, 0);
  v[i - 1] = c;
  return SupportSeq(std::move(v));
}

void SupportSeq::trim() {
  while (!entries_.empty() && entries_.back() == 0) entries_.pop_back();
}

bool SupportSeq::is_nonnegative() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int64_t v) { return v >= 0; });
}

SupportSeq& SupportSeq::operator+=(const SupportSeq& o) {
  if (o.entries_.size() > entries_.size()) entries_.resize(o.entries_.size(), 0);
  for (std::size_t i = 0; i < o.entries_.size(); ++i) entries_[i] += o.entries_[i];
  trim();
  return *this;
}

SupportSeq& SupportSeq::operator-=(const SupportSeq& o) {
  if (o.entries_.size() > entries_.size()) entries_.resize(o.entries_.size(), 0);
  for (std::size_t i = 0; i < o.entries_.size(); ++i) entries_[i] -= o.entries_[i];
  trim();
  return *this;
}

SupportSeq operator*(std::int64_t c, const SupportSeq& a) {
  std::vector<std::int64_t> v(a.entries_.begin(), a.entries_.end());
  for (auto& e : v) e *= c;
  return SupportSeq(std::move(v));
}

std::strong_ordering operator<=>(const SupportSeq& a, const SupportSeq& b) {
  const std::size_t n = std::max(a.length(), b.length());
  for (std::size_t i = 1; i <= n; ++i)
    if (const auto c = a.at(i) <=> b.at(i); c != 0) return c;
  return std::strong_ordering::equal;
}

// ---- DoubleWeight --------------------------------------------------------

std::size_t DoubleWeight::length(std::size_t rank) const { return tail.length() + std::max(rank, head.length()); }

DoubleWeight& DoubleWeight::operator+=(const DoubleWeight& o) {
  head += o.head;
  tail += o.tail;
  return *this;
}

DoubleWeight& DoubleWeight::operator-=(const DoubleWeight& o) {
  head -= o.head;
  tail -= o.tail;
  return *this;
}

std::strong_ordering operator<=>(const DoubleWeight& a, const DoubleWeight& b) {
  if (const auto c = a.head <=> b.head; c != 0) return c;
  return a.tail <=> b.tail;
}

std::string DoubleWeight::to_string() const {
  auto join = [](const SupportSeq& s) {
    std::string out;
    for (std::size_t i = 0; i < s.length(); ++i) {
      if (i) out += ',';
      out += std::to_string(s.entries()[i]);
    }
    return out;
  };
  return join(head) + "/" + join(tail);
}

bool InstantiatedWeight::is_dominant() const {
  return std::all_of(coords.begin(), coords.end(), [](std::int64_t v) { return v >= 0; });
}

// ---- level-n helpers ------------------------------------------------------

InstantiatedWeight instantiate(const DoubleWeight& lambda, const LevelAlgebra& alg) {
  const std::size_t n = alg.level();
  // The defining sum makes sense as soon as both supports fit; the length
  // l(lambda, X) is only needed for stability statements.
  const std::size_t need = std::max({alg.base().rank(), lambda.head.length(), lambda.tail.length()});
  if (n < need)
    throw PreconditionError(ErrorKind::kLevelTooSmall, "weight " + lambda.to_string() + " needs level >= " +
                                                           std::to_string(need) + ", got " + std::to_string(n));
  InstantiatedWeight w{std::vector<std::int64_t>(n, 0)};
  for (std::size_t i = 1; i <= lambda.head.length(); ++i) w.coords[i - 1] += lambda.head.at(i);
  for (std::size_t j = 1; j <= lambda.tail.length(); ++j) w.coords[n - j] += lambda.tail.at(j);
  return w;
}

std::size_t nondegenerate_level_from(const MarkedDiagram& x, std::size_t n) {
  n = std::max(n, x.rank());
  while (level_determinant(x, n) == 0) ++n;
  return n;
}

std::optional<std::vector<std::int64_t>> root_coefficients(const LevelAlgebra& alg,
                                                           std::span<const std::int64_t> coords) {
  if (coords.size() != alg.level()) throw PreconditionError(ErrorKind::kLevelMismatch, "coordinate vector length");
  if (alg.is_degenerate())
    throw PreconditionError(ErrorKind::kDegenerateLevel,
                            "det(X_" + std::to_string(alg.level()) + ") = 0; root coefficients are not unique");
  const auto sol = solve_exact(alg.cartan(), coords);
  if (!sol) throw InvariantError("nonzero determinant but singular solve");
  return as_integers(*sol);
}

std::vector<std::int64_t> add_roots(const LevelAlgebra& alg, std::span<const std::int64_t> coords,
                                    std::span<const std::int64_t> b, std::int64_t sign) {
  std::vector<std::int64_t> out(coords.begin(), coords.end());
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] == 0) continue;
    for (const auto& e : alg.root_column(j)) out[e.row] += sign * e.value * b[j];
  }
  return out;
}

DoubleWeight lift(std::span<const std::int64_t> coords, std::size_t head_len) {
  const std::size_t n = coords.size();
  head_len = std::min(head_len, n);
  std::vector<std::int64_t> head(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(head_len));
  std::vector<std::int64_t> tail(n - head_len);
  for (std::size_t j = 1; j <= n - head_len; ++j) tail[j - 1] = coords[n - j];
  return {SupportSeq(std::move(head)), SupportSeq(std::move(tail))};
}

// ---- boxes, profile, depth -----------------------------------------------

std::int64_t boxes(const DoubleWeight& lambda, const MarkedDiagram& x) {
  require_extensible(x);
  BigInt total = 0;
  for (std::size_t i = 1; i <= lambda.head.length(); ++i)
    if (lambda.head.at(i) != 0) total += a_value(x, i) * static_cast<long>(lambda.head.at(i));
  BigInt tail_sum = 0;
  for (std::size_t i = 1; i <= lambda.tail.length(); ++i) tail_sum += static_cast<long>(i) * static_cast<long>(lambda.tail.at(i));
  total -= delta(x) * tail_sum;
  return to_int64(total);
}

std::vector<std::int64_t> RootProfile::reassemble(std::size_t n) const {
  if (n < l + r) throw PreconditionError(ErrorKind::kLevelTooSmall, "profile needs level >= l + r");
  std::vector<std::int64_t> out(n, s);
  for (std::size_t i = 1; i < l; ++i) out[i - 1] = p[i - 1];
  for (std::size_t j = 1; j < r; ++j) out[n - j] = q[j - 1];
  return out;
}

bool RootProfile::is_nonnegative() const {
  auto nonneg = [](const std::vector<std::int64_t>& v) {
    return std::all_of(v.begin(), v.end(), [](std::int64_t e) { return e >= 0; });
  };
  return s >= 0 && nonneg(p) && nonneg(q);
}

RootProfile profile(const DoubleWeight& gamma, const MarkedDiagram& x) {
  if (const auto b = boxes(gamma, x); b != 0)
    throw PreconditionError(ErrorKind::kBoxesNonzero, "|" + gamma.to_string() + "|_X = " + std::to_string(b));

  RootProfile prof;
  prof.l = std::max(x.rank(), gamma.head.length());
  prof.r = gamma.tail.length();
  const std::size_t m = nondegenerate_level_from(x, prof.l + prof.r);
  const LevelAlgebra alg(x, m);
  const auto coords = instantiate(gamma, alg).coords;
  const auto sol = root_coefficients(alg, coords);
  if (!sol) throw InvariantError("root coefficients of " + gamma.to_string() + " are not integral");
  const auto& c = *sol;

  prof.s = c[prof.l - 1];
  prof.p.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(prof.l - 1));
  for (std::size_t j = 1; j < prof.r; ++j) prof.q.push_back(c[m - j]);

  const std::size_t string_end = prof.r == 0 ? m : m - prof.r + 1;
  for (std::size_t i = prof.l; i <= string_end; ++i)
    if (c[i - 1] != prof.s) throw InvariantError("root coefficients of " + gamma.to_string() + " are not constant on the middle string");

  // Both closed forms of the middle constant.
  BigInt head_sum = 0;
  for (std::size_t i = 1; i <= gamma.head.length(); ++i) head_sum += a_value(x, i) * static_cast<long>(gamma.head.at(i));
  std::int64_t tail_sum = 0;
  for (std::size_t j = 1; j <= gamma.tail.length(); ++j) tail_sum += static_cast<std::int64_t>(j) * gamma.tail.at(j);
  if (head_sum != delta(x) * static_cast<long>(prof.s) || tail_sum != prof.s)
    throw InvariantError("depth closed forms disagree for " + gamma.to_string());

  // Reassembly must reproduce the weight one level up as well.
  const LevelAlgebra next(x, m + 1);
  const auto up = prof.reassemble(m + 1);
  if (add_roots(next, std::vector<std::int64_t>(m + 1, 0), up) != instantiate(gamma, next).coords)
    throw InvariantError("profile of " + gamma.to_string() + " does not reassemble at level " + std::to_string(m + 1));
  return prof;
}

std::int64_t depth(const DoubleWeight& gamma, const MarkedDiagram& x) { return profile(gamma, x).s; }

bool leq(const DoubleWeight& lower, const DoubleWeight& upper, const MarkedDiagram& x) {
  if (boxes(lower, x) != boxes(upper, x)) return false;
  return profile(upper - lower, x).is_nonnegative();
}

// ---- interval -------------------------------------------------------------

std::vector<DoubleWeight> interval(const DoubleWeight& upper, const DoubleWeight& lower, const MarkedDiagram& x) {
  if (!upper.is_dominant() || !lower.is_dominant())
    throw PreconditionError(ErrorKind::kNegativeEntry, "interval endpoints must be dominant");
  if (!leq(lower, upper, x))
    throw PreconditionError(ErrorKind::kNotComparable, lower.to_string() + " is not below " + upper.to_string());

  const std::size_t l = std::max({x.rank(), upper.head.length(), lower.head.length()});
  const std::size_t r = std::max(upper.tail.length(), lower.tail.length());
  const RootProfile prof = profile(upper - lower, x);
  const auto s = static_cast<std::size_t>(prof.s);
  const std::size_t n = nondegenerate_level_from(x, l + r + 2 * s);
  const LevelAlgebra alg(x, n);
  const auto bound = prof.reassemble(n);
  const auto base = instantiate(lower, alg).coords;

  // Coefficients are constant on the one-based window [l+s, n-r+1-s].
  const std::size_t window_begin = l + s - 1;
  const std::size_t window_end = n - r - s;  // inclusive, zero-based

  // Node i can be checked once it and all its neighbours are assigned.
  std::vector<std::vector<std::size_t>> ready(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t last = i;
    for (const auto j : alg.neighbours(i)) last = std::max(last, j);
    ready[last].push_back(i);
  }

  std::vector<std::int64_t> b(n, 0);
  std::vector<DoubleWeight> found;
  std::function<void(std::size_t)> assign = [&](std::size_t pos) {
    if (pos == n) {
      const auto beta = add_roots(alg, base, b);
      const std::size_t head_len = l + s;
      for (std::size_t i = head_len; i + r + s < n; ++i)
        if (beta[i] != 0) throw InvariantError("interval element is supported in the middle window");
      found.push_back(lift(beta, head_len));
      return;
    }
    std::int64_t lo = 0;
    std::int64_t hi = bound[pos];
    if (pos > window_begin && pos <= window_end) lo = hi = b[pos - 1];
    if (hi > bound[pos]) return;
    for (std::int64_t v = lo; v <= hi; ++v) {
      b[pos] = v;
      bool ok = true;
      for (const auto i : ready[pos]) {
        std::int64_t pairing = base[i];
        pairing += 2 * b[i];
        for (const auto j : alg.neighbours(i)) pairing += alg.cartan()(i, j) * b[j];
        if (pairing < 0) {
          ok = false;
          break;
        }
      }
      if (ok) assign(pos + 1);
    }
    b[pos] = 0;
  };
  assign(0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace kmstab
