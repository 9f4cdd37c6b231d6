#include "kmstab/diagram.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <utility>

#include "kmstab/error.hpp"

namespace kmstab {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw PreconditionError(ErrorKind::kInvalidDiagram, what); }

void check_gcm(const IntMatrix& c) {
  if (!c.is_square() || c.rows() == 0) invalid("Cartan matrix must be square and non-empty");
  const std::size_t d = c.rows();
  for (std::size_t i = 0; i < d; ++i) {
    if (c(i, i) != 2) invalid("diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(i + 1) + ") is not 2");
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      if (c(i, j) > 0) invalid("off-diagonal entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") is positive");
      if ((c(i, j) == 0) != (c(j, i) == 0))
        invalid("zero pattern is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
  }
}

// Propagates d_j = d_i * c(i,j) / c(j,i) along edges and checks every edge.
std::vector<BigRational> find_symmetrizer(const IntMatrix& c) {
  const std::size_t d = c.rows();
  std::vector<BigRational> diag(d, 0);
  std::vector<bool> seen(d, false);
  for (std::size_t root = 0; root < d; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    diag[root] = 1;
    std::queue<std::size_t> todo;
    todo.push(root);
    while (!todo.empty()) {
      const std::size_t i = todo.front();
      todo.pop();
      for (std::size_t j = 0; j < d; ++j) {
        if (i == j || c(i, j) == 0) continue;
        BigRational ratio(static_cast<long>(c(i, j)), static_cast<long>(c(j, i)));
        ratio.canonicalize();
        const BigRational want = diag[i] * ratio;
        if (!seen[j]) {
          seen[j] = true;
          diag[j] = want;
          todo.push(j);
        } else if (diag[j] != want) {
          invalid("Cartan matrix is not symmetrizable");
        }
      }
    }
  }
  return diag;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

MarkedDiagram MarkedDiagram::create(std::string name, const IntMatrix& cartan, std::size_t marked) {
  check_gcm(cartan);
  const std::size_t d = cartan.rows();
  if (marked >= d) invalid("marked node " + std::to_string(marked + 1) + " is out of range 1.." + std::to_string(d));

  std::vector<std::size_t> order;
  order.reserve(d);
  for (std::size_t i = 0; i < d; ++i)
    if (i != marked) order.push_back(i);
  order.push_back(marked);

  MarkedDiagram x;
  x.name_ = std::move(name);
  x.cartan_ = cartan.principal(order);
  x.input_order_ = order;
  x.symmetrizer_ = find_symmetrizer(x.cartan_);
  x.det_ = bareiss_determinant(x.cartan_);
  const auto minor_indices = iota(d - 1);
  x.det_minor_ = bareiss_determinant(x.cartan_.principal(minor_indices));

  if (x.det_ == 0) {
    const BigInt next = 2 * x.det_ - x.det_minor_;
    if (next != 0) {
      MarkedDiagram grown = create(x.name_, extended_cartan(x, d + 1), d);
      grown.warnings_.insert(grown.warnings_.begin(),
                             "det(X) = 0; seed replaced by its one-node extension X_" + std::to_string(d + 1));
      return grown;
    }
  }

  if (x.det_ != 0) {
    const auto inv = inverse_exact(x.cartan_.transpose());
    if (!inv) throw InvariantError("nonzero determinant but singular Cartan matrix");
    x.head_labels_.reserve(d);
    for (std::size_t i = 0; i < d; ++i) {
      const BigRational label = BigRational(x.det_) * (*inv)[i][d - 1];
      if (label.get_den() != 1) throw InvariantError("non-integral head label a_" + std::to_string(i + 1));
      x.head_labels_.push_back(label.get_num());
    }
    if (x.head_labels_.back() != x.det_minor_)
      throw InvariantError("a_d differs from det(X_{d-1})");
  }
  return x;
}

const std::vector<std::string>& MarkedDiagram::preset_names() {
  static const std::vector<std::string> names = {"A", "B", "C", "D", "E", "F1", "F2", "G1", "G2"};
  return names;
}

MarkedDiagram MarkedDiagram::preset(std::string_view name) {
  using Rows = std::vector<std::vector<std::int64_t>>;
  static const std::map<std::string, Rows, std::less<>> table = {
      {"A", {{2}}},
      // node 1 short
      {"B", {{2, -2}, {-1, 2}}},
      {"C", {{2, -1}, {-2, 2}}},
      {"D", {{2, 0, -1}, {0, 2, -1}, {-1, -1, 2}}},
      // 1-2-3-5-6 with 4 hanging off 3
      {"E",
       {{2, -1, 0, 0, 0, 0},
        {-1, 2, -1, 0, 0, 0},
        {0, -1, 2, -1, -1, 0},
        {0, 0, -1, 2, 0, 0},
        {0, 0, -1, 0, 2, -1},
        {0, 0, 0, 0, -1, 2}}},
      // nodes 1,2 short
      {"F1", {{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}},
      {"F2", {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}}},
      // node 1 short
      {"G1", {{2, -3}, {-1, 2}}},
      {"G2", {{2, -1}, {-3, 2}}},
  };
  const auto it = table.find(name);
  if (it == table.end()) invalid("unknown preset '" + std::string(name) + "'");
  const IntMatrix m = IntMatrix::from_rows(it->second);
  return create(it->first, m, m.rows() - 1);
}

IntMatrix extended_cartan(const MarkedDiagram& x, std::size_t n) {
  const std::size_t d = x.rank();
  if (n < d)
    throw PreconditionError(ErrorKind::kLevelBelowRank,
                            "level " + std::to_string(n) + " is below the seed rank " + std::to_string(d));
  IntMatrix c(n, n);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) c(i, j) = x.cartan()(i, j);
  for (std::size_t i = d; i < n; ++i) {
    c(i, i) = 2;
    c(i, i - 1) = -1;
    c(i - 1, i) = -1;
  }
  return c;
}

BigInt level_determinant(const MarkedDiagram& x, std::size_t n) {
  const std::size_t d = x.rank();
  if (n + 1 < d) throw PreconditionError(ErrorKind::kLevelBelowRank, "level below d - 1");
  BigInt before = x.det_without_marked();
  BigInt current = x.det();
  if (n + 1 == d) return before;
  for (std::size_t k = d; k < n; ++k) {
    BigInt next = 2 * current - before;
    before = std::move(current);
    current = std::move(next);
  }
  return current;
}

LevelAlgebra::LevelAlgebra(MarkedDiagram base, std::size_t level)
    : base_(std::move(base)), level_(level), cartan_(extended_cartan(base_, level)),
      det_(level_determinant(base_, level)), columns_(level), neighbours_(level) {
  for (std::size_t j = 0; j < level_; ++j) {
    for (std::size_t i = 0; i < level_; ++i) {
      if (cartan_(i, j) == 0) continue;
      columns_[j].push_back({i, cartan_(i, j)});
      if (i != j) neighbours_[j].push_back(i);
    }
  }
}

LevelAlgebra extend(const MarkedDiagram& x, std::size_t n) { return LevelAlgebra(x, n); }

BigInt delta(const MarkedDiagram& x) { return x.det() - x.det_without_marked(); }

Extensibility is_extensible(const MarkedDiagram& x) {
  const BigInt diff = delta(x);
  if (diff == 0) return {false, "Delta = 0"};
  if (x.det() == 0) return {false, "det(X) = 0"};
  BigInt g;
  mpz_gcd(g.get_mpz_t(), BigInt(abs(diff)).get_mpz_t(), BigInt(abs(x.det())).get_mpz_t());
  if (g != 1)
    return {false, "gcd(|Delta|, |det(X)|) = " + g.get_str() + " (Delta = " + diff.get_str() +
                       ", det(X) = " + x.det().get_str() + ")"};
  return {true, "Delta = " + diff.get_str() + " and det(X) = " + x.det().get_str() + " are coprime"};
}

void require_extensible(const MarkedDiagram& x) {
  const auto verdict = is_extensible(x);
  if (!verdict.extensible)
    throw PreconditionError(ErrorKind::kNotExtensible, x.name() + " is not extensible: " + verdict.reason);
}

MarkedDiagram dual(const MarkedDiagram& x) {
  return MarkedDiagram::create(x.name() + "^vee", x.cartan().transpose(), x.rank() - 1);
}

BigInt a_value(const MarkedDiagram& x, std::size_t i) {
  if (i == 0) throw std::invalid_argument("a_i is indexed from 1");
  require_extensible(x);
  if (i <= x.rank()) return x.head_labels()[i - 1];
  return level_determinant(x, i - 1);
}

std::vector<BigInt> a_sequence(const MarkedDiagram& x, std::size_t upto) {
  require_extensible(x);
  std::vector<BigInt> out;
  out.reserve(upto);
  for (std::size_t i = 1; i <= upto; ++i) out.push_back(a_value(x, i));
  return out;
}

}  // namespace kmstab
