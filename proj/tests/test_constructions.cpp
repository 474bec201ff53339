#include <gtest/gtest.h>

#include "qrbf/constructions.hpp"
#include "qrbf/properties.hpp"
#include "qrbf/random.hpp"
#include "support/oracles.hpp"

namespace qrbf {
namespace {

TEST(LinearCode, RankCheckAndSyndromes) {
  EXPECT_THROW(LinearCode(3, {0b011, 0b011}), std::invalid_argument);
  EXPECT_THROW(LinearCode(3, {0b1000}), std::invalid_argument);
  const LinearCode h = hamming_parity_check(3);
  EXPECT_EQ(h.n(), 7);
  EXPECT_EQ(h.k(), 4);
  for (Point x = 0; x < 128; ++x) {
    Point expected = 0;
    for (std::size_t i = 0; i < h.rows().size(); ++i)
      expected |= static_cast<Point>(std::popcount(h.rows()[i] & x) & 1) << i;
    EXPECT_EQ(h.syndrome(x), expected);
  }
  // Column j (1-based) of the Hamming matrix is j in binary.
  for (int j = 1; j <= 7; ++j) EXPECT_EQ(h.syndrome(Point{1} << (j - 1)), static_cast<Point>(j));
}

TEST(LinearCode, GeneratorBasisSpansKernel) {
  for (const LinearCode& c : {hamming_parity_check(3), extended_hamming(3), example_hamming_matrix(), hamming_parity_check(4)}) {
    const auto basis = c.generator_basis();
    EXPECT_EQ(static_cast<int>(basis.size()), c.k());
    EXPECT_EQ(rank(basis), c.k());
    for (Point b : basis) EXPECT_TRUE(c.contains(b));
  }
}

TEST(LinearCode, MinimumWeightMatchesExhaustiveScan) {
  for (const LinearCode& c : {hamming_parity_check(2), hamming_parity_check(3), extended_hamming(3),
                              example_hamming_matrix(), hamming_parity_check(4), extended_hamming(4)})
    EXPECT_EQ(min_kernel_weight(c), oracle::min_kernel_weight(c));
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    CounterRng rng(seed, 0);
    std::vector<Point> rows;
    while (rows.size() < 4) {
      std::vector<Point> trial = rows;
      trial.push_back(rng.below(Point{1} << 10));
      if (rank(trial) == static_cast<int>(trial.size())) rows = trial;
    }
    const LinearCode c(10, rows);
    EXPECT_EQ(min_kernel_weight(c), oracle::min_kernel_weight(c));
  }
}

TEST(LinearCode, ParseAndPrint) {
  const LinearCode c = example_hamming_matrix();
  EXPECT_EQ(LinearCode::parse(c.to_text()), c);
  EXPECT_EQ(c.to_text().substr(0, 13), "n=8 k=4\n01111");
  EXPECT_THROW(LinearCode::parse("n=3 k=1\n110\n"), ParseError);
  EXPECT_THROW(LinearCode::parse("n=3 k=2\n1a0\n"), ParseError);
  EXPECT_THROW(LinearCode::parse("n=3 k=1\n110\n110\n"), ParseError);
  try {
    LinearCode::parse("n=3 k=2\n11\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
}

TEST(LinearCode, PrintedMatrixHasMinimumDistanceFour) {
  const LinearCode printed = example_hamming_matrix();
  EXPECT_EQ(min_kernel_weight(printed), 4);
  EXPECT_EQ(min_kernel_weight(extended_hamming(3)), 4);
}

TEST(Bent, InnerProductIsBentAndOthersAreNot) {
  for (int m = 1; m <= 6; ++m) {
    const BentCertificate c = is_bent(inner_product(m));
    EXPECT_TRUE(c.ok) << m;
    EXPECT_DOUBLE_EQ(c.worst_deviation, 0.0);
  }
  EXPECT_FALSE(is_bent(BooleanFunction::character(4, 3)).ok);
  EXPECT_FALSE(is_bent(random_function(3, 0)).ok);
}

TEST(Tower, ExtendedHammingWithInnerProduct) {
  const TowerVerdict v = verify_tower(inner_product(2), extended_hamming(3));
  EXPECT_TRUE(v.ok()) << v.failure;
  EXPECT_EQ(v.n, 8);
  EXPECT_EQ(v.d_star, 3);
  EXPECT_EQ(v.inf_error, Rational(0));
  EXPECT_EQ(weight(v.separation_witness), 4);
  EXPECT_EQ(v.separation_influence, Rational(0));
  EXPECT_EQ(v.mean, Rational(1, 4));
}

TEST(Tower, HammingTwoWithSmallInnerProduct) {
  const TowerVerdict v = verify_tower(inner_product(1), hamming_parity_check(2));
  EXPECT_TRUE(v.ok()) << v.failure;
  EXPECT_EQ(v.n, 3);
  EXPECT_EQ(v.d_star, 2);
  EXPECT_EQ(weight(v.separation_witness), 3);
  EXPECT_EQ(v.mean.abs(), Rational(1, 2));
  EXPECT_FALSE(v.mean_zero_ok);
}

TEST(Tower, ComposedFunctionAgreesWithDirectEvaluation) {
  const LinearCode h = extended_hamming(3);
  const BooleanFunction g = inner_product(2);
  const BooleanFunction f = compose(g, h);
  for (Point x = 0; x < f.size(); ++x) EXPECT_EQ(f.sign(x), g.sign(h.syndrome(x)));
  // Inf vanishes on codewords.
  for (Point x = 1; x < f.size(); ++x)
    if (h.contains(x)) {
      EXPECT_EQ(oracle::influence(f, x), Rational(0));
    }
}

TEST(Tower, IdentityCodeReturnsInnerFunction) {
  const BooleanFunction g = inner_product(1);
  EXPECT_EQ(compose(g, identity_code(2)), g);
  const TowerVerdict v = verify_tower(g, identity_code(2));
  EXPECT_EQ(v.d_star, 2);
  EXPECT_FALSE(v.separation_applicable);
}

TEST(Tower, DimensionMismatchIsRejected) {
  EXPECT_THROW(compose(inner_product(1), hamming_parity_check(3)), std::invalid_argument);
}

}  // namespace
}  // namespace qrbf
