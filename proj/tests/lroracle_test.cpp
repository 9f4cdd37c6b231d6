#include <gtest/gtest.h>

#include "kmstab/error.hpp"
#include "kmstab/lroracle.hpp"

namespace kmstab {
namespace {

TEST(Partition, Validates) {
  EXPECT_EQ(Partition({2, 1, 0, 0}).rows(), 2u);
  EXPECT_EQ(Partition({3, 2}).size(), 5);
  EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
  EXPECT_THROW(Partition({-1}), std::invalid_argument);
}

TEST(Partition, Counts) {
  const std::vector<std::size_t> expect{1, 1, 2, 3, 5, 7, 11, 15};
  for (std::int64_t k = 0; k < 8; ++k) EXPECT_EQ(partitions_of(k).size(), expect[k]) << k;
  EXPECT_EQ(partitions_of(3).front(), Partition({3}));
}

TEST(LrCoefficient, SmallCases) {
  EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1}), Partition({2})), 1);
  EXPECT_EQ(lr_coefficient(Partition({1}), Partition({1}), Partition({1, 1})), 1);
  EXPECT_EQ(lr_coefficient(Partition({2, 1}), Partition({2, 1}), Partition({3, 2, 1})), 2);
  EXPECT_EQ(lr_coefficient(Partition({2}), Partition({1}), Partition({2})), 0);
  EXPECT_EQ(lr_coefficient(Partition({2}), Partition({1}), Partition({1, 1, 1})), 0);
  EXPECT_EQ(lr_coefficient(Partition(), Partition({2, 1}), Partition({2, 1})), 1);
}

// Sum over z of c * f^z equals binom(|x|+|y|, |x|) f^x f^y, with f the number
// of standard tableaux from the hook length formula.
std::int64_t standard_tableaux(const Partition& p) {
  std::int64_t n = p.size();
  std::int64_t num = 1;
  for (std::int64_t k = 2; k <= n; ++k) num *= k;
  std::int64_t den = 1;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::int64_t c = 0; c < p.at(r); ++c) {
      std::int64_t below = 0;
      for (std::size_t rr = r + 1; rr < p.rows() && p.at(rr) > c; ++rr) ++below;
      den *= p.at(r) - c + below;
    }
  }
  return num / den;
}

TEST(LrCoefficient, DimensionIdentityAndSymmetry) {
  for (std::int64_t i = 0; i <= 4; ++i) {
    for (std::int64_t j = 0; i + j <= 6; ++j) {
      for (const auto& x : partitions_of(i)) {
        for (const auto& y : partitions_of(j)) {
          std::int64_t lhs = 0;
          for (const auto& z : partitions_of(i + j)) {
            const auto c = lr_coefficient(x, y, z);
            EXPECT_EQ(c, lr_coefficient(y, x, z));
            lhs += c * standard_tableaux(z);
          }
          std::int64_t binom = 1;
          for (std::int64_t k = 1; k <= i; ++k) binom = binom * (j + k) / k;
          EXPECT_EQ(lhs, binom * standard_tableaux(x) * standard_tableaux(y));
        }
      }
    }
  }
}

TEST(H1, Conversions) {
  EXPECT_EQ(h1_to_partition(SupportSeq()), Partition());
  EXPECT_EQ(h1_to_partition(SupportSeq::unit(2)), Partition({1, 1}));
  EXPECT_EQ(h1_to_partition(SupportSeq({1, 1})), Partition({2, 1}));
  EXPECT_EQ(partition_to_h1(Partition({3, 1, 1})), SupportSeq({2, 0, 1}));
  for (const auto& p : partitions_of(6)) EXPECT_EQ(h1_to_partition(partition_to_h1(p)), p);
  EXPECT_THROW(h1_to_partition(SupportSeq({1, -1})), PreconditionError);
}

}  // namespace
}  // namespace kmstab
