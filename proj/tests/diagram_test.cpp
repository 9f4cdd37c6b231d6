#include <gtest/gtest.h>

#include <numeric>

#include "kmstab/diagram.hpp"
#include "kmstab/error.hpp"
#include "kmstab/exact.hpp"
#include "kmstab/rational.hpp"
#include "oracles.hpp"

namespace kmstab {
namespace {

using testing::cofactor_det;
using testing::with_unit_column;

TEST(Rational, NormalizesSignAndGcd) {
  const Rational r(4, -6);
  EXPECT_EQ(r.num(), -2);
  EXPECT_EQ(r.den(), 3);
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_LT(Rational(-1, 2), Rational(0));
  EXPECT_TRUE((Rational(3, 3)).is_integer());
}

TEST(Rational, OverflowThrowsInsteadOfWrapping) {
  const Rational big(std::numeric_limits<std::int64_t>::max() / 2 + 1);
  EXPECT_ANY_THROW(big + big);
  EXPECT_ANY_THROW(big * Rational(3));
}

TEST(Exact, BareissMatchesCofactorExpansion) {
  std::uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return static_cast<std::int64_t>(state >> 59) - 16;
  };
  for (std::size_t n = 1; n <= 7; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      IntMatrix m(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = next();
      EXPECT_EQ(bareiss_determinant(m), cofactor_det(m)) << "n=" << n << " rep=" << rep;
    }
  }
  EXPECT_EQ(bareiss_determinant(IntMatrix()), 1);
}

TEST(Exact, SolveAndInverse) {
  const auto m = IntMatrix::from_rows({{2, -1}, {-1, 2}});
  const std::vector<std::int64_t> rhs{1, 0};
  const auto x = solve_exact(m, rhs);
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], BigRational(2, 3));
  EXPECT_EQ((*x)[1], BigRational(1, 3));
  EXPECT_FALSE(as_integers(*x));
  const auto inv = inverse_exact(m);
  ASSERT_TRUE(inv);
  EXPECT_EQ((*inv)[0][1], BigRational(1, 3));
  EXPECT_FALSE(solve_exact(IntMatrix::from_rows({{1, 2}, {2, 4}}), rhs));
}

TEST(Diagram, ExtendTypeAIsTridiagonal) {
  const auto a = MarkedDiagram::preset("A");
  EXPECT_EQ(extended_cartan(a, 3), IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
  EXPECT_EQ(extend(a, 3).det(), 4);
}

TEST(Diagram, ExtendAtRankIsTheSeed) {
  for (const auto& name : MarkedDiagram::preset_names()) {
    const auto x = MarkedDiagram::preset(name);
    EXPECT_EQ(extended_cartan(x, x.rank()), x.cartan()) << name;
  }
}

TEST(Diagram, ExtendBelowRankThrows) {
  const auto e = MarkedDiagram::preset("E");
  try {
    extend(e, e.rank() - 1);
    FAIL();
  } catch (const PreconditionError& err) {
    EXPECT_EQ(err.kind(), ErrorKind::kLevelBelowRank);
  }
}

TEST(Diagram, E8HasDeterminantOne) {
  const auto e = MarkedDiagram::preset("E");
  EXPECT_EQ(cofactor_det(extended_cartan(e, 8)), 1);
  EXPECT_EQ(extend(e, 8).det(), 1);
}

TEST(Diagram, RecurrenceAgreesWithDirectDeterminant) {
  for (const auto& name : MarkedDiagram::preset_names()) {
    const auto x = MarkedDiagram::preset(name);
    for (std::size_t n = x.rank(); n <= 12; ++n) {
      const BigInt direct = cofactor_det(extended_cartan(x, n));
      EXPECT_EQ(level_determinant(x, n), direct) << name << " n=" << n;
      EXPECT_EQ(direct, x.det() + static_cast<long>(n - x.rank()) * delta(x)) << name << " n=" << n;
    }
  }
}

TEST(Diagram, DeltaValues) {
  EXPECT_EQ(delta(MarkedDiagram::preset("A")), 1);
  EXPECT_EQ(delta(MarkedDiagram::preset("E")), -1);
  EXPECT_EQ(delta(MarkedDiagram::preset("B")), 0);
}

TEST(Diagram, Extensibility) {
  EXPECT_TRUE(is_extensible(MarkedDiagram::preset("E")).extensible);
  const auto d = is_extensible(MarkedDiagram::preset("D"));
  EXPECT_FALSE(d.extensible);
  EXPECT_NE(d.reason.find("Delta = 0"), std::string::npos);

  // Affine A1 with one extra node hanging off the second node.
  const auto x = MarkedDiagram::create("affA1+", IntMatrix::from_rows({{2, -2, 0}, {-2, 2, -1}, {0, -1, 2}}), 2);
  EXPECT_EQ(x.det(), -2);
  EXPECT_EQ(delta(x), -2);
  const auto v = is_extensible(x);
  EXPECT_FALSE(v.extensible);
  EXPECT_NE(v.reason.find("gcd"), std::string::npos);
  EXPECT_THROW(require_extensible(x), PreconditionError);
}

TEST(Diagram, RejectsNonGcm) {
  EXPECT_THROW(MarkedDiagram::create("bad", IntMatrix::from_rows({{2, 1}, {1, 2}}), 0), PreconditionError);
  EXPECT_THROW(MarkedDiagram::create("bad", IntMatrix::from_rows({{2, -1}, {0, 2}}), 0), PreconditionError);
  EXPECT_THROW(MarkedDiagram::create("bad", IntMatrix::from_rows({{2, -1}, {-1, 2}}), 5), PreconditionError);
  // Not symmetrizable: a three-cycle with inconsistent ratios.
  EXPECT_THROW(MarkedDiagram::create("bad", IntMatrix::from_rows({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}}), 0),
               PreconditionError);
}

TEST(Diagram, Symmetrizer) {
  const auto b = MarkedDiagram::preset("B");
  const auto& dvec = b.symmetrizer();
  const auto& c = b.cartan();
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j)
      EXPECT_EQ(dvec[i] * static_cast<long>(c(i, j)), dvec[j] * static_cast<long>(c(j, i)));
}

TEST(Diagram, Dual) {
  const auto a = MarkedDiagram::preset("A");
  EXPECT_EQ(dual(a), a);
  EXPECT_EQ(dual(MarkedDiagram::preset("B")), MarkedDiagram::preset("C"));
  EXPECT_EQ(dual(MarkedDiagram::preset("F1")), MarkedDiagram::preset("F2"));
  const auto e = MarkedDiagram::preset("E");
  EXPECT_EQ(dual(dual(e)), e);
}

TEST(Diagram, MarkedNodeIsMovedLast) {
  const auto x = MarkedDiagram::create("A2", IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}), 0);
  EXPECT_EQ(x.input_order(), (std::vector<std::size_t>{1, 2, 0}));
  EXPECT_EQ(x.cartan()(2, 2), 2);
  EXPECT_EQ(x.cartan()(1, 2), 0);
}

TEST(Diagram, ASequences) {
  const auto a = a_sequence(MarkedDiagram::preset("A"), 5);
  EXPECT_EQ(a, (std::vector<BigInt>{1, 2, 3, 4, 5}));
  const auto e = a_sequence(MarkedDiagram::preset("E"), 8);
  EXPECT_EQ(e, (std::vector<BigInt>{2, 4, 6, 3, 5, 4, 3, 2}));
}

// Cramer: det(X_n) times the i-th entry of the inverse's last column is the
// determinant with column n replaced by e_i, so a_i equals that determinant
// for the marked coweight pairing. Checked for every extensible preset.
TEST(Diagram, ALabelsMatchCramer) {
  for (const auto& name : MarkedDiagram::preset_names()) {
    const auto x = MarkedDiagram::preset(name);
    if (!is_extensible(x).extensible) continue;
    const std::size_t d = x.rank();
    const IntMatrix ct = x.cartan().transpose();
    for (std::size_t i = 1; i <= d; ++i)
      EXPECT_EQ(a_value(x, i), cofactor_det(with_unit_column(ct, i - 1, d - 1))) << name << " i=" << i;
    for (std::size_t i = d + 1; i <= d + 6; ++i)
      EXPECT_EQ(a_value(x, i), level_determinant(x, i - 1)) << name << " i=" << i;
    EXPECT_EQ(a_value(x, d), level_determinant(x, d - 1)) << name;
  }
}

}  // namespace
}  // namespace kmstab
