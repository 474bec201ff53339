#include <gtest/gtest.h>

#include <sstream>

#include "qrbf/core.hpp"
#include "qrbf/errors.hpp"
#include "qrbf/io.hpp"
#include "qrbf/random.hpp"
#include "support/oracles.hpp"

namespace qrbf {
namespace {

TEST(Rational, ArithmeticAndOrdering) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(-3, 6).to_string(), "-1/2");
  EXPECT_EQ(Rational(0).to_string(), "0/1");
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(Rational::dyadic(3, 4), Rational(3, 16));
  EXPECT_EQ((Rational(1, 2) - Rational(3, 4)).abs(), Rational(1, 4));
  EXPECT_DOUBLE_EQ(Rational(1, 8).to_double(), 0.125);
}

TEST(Transform, MatchesDirectSumsOnRandomFunctions) {
  for (int n = 0; n <= 7; ++n) {
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const BooleanFunction f = random_function(n, seed);
      const Spectrum s = walsh_transform(f);
      const AutocorrelationTable t = autocorrelation(f);
      for (Point g = 0; g < f.size(); ++g) {
        EXPECT_EQ(s.W[g], oracle::walsh(f, g));
        EXPECT_EQ(t.A[g], oracle::autocorrelation(f, g));
        EXPECT_EQ(autocorrelation_at(f, g), t.A[g]);
      }
    }
  }
}

TEST(Transform, ParsevalHolds) {
  for (int n = 1; n <= 12; ++n) {
    const Spectrum s = walsh_transform(random_function(n, 17));
    std::int64_t total = 0;
    for (auto w : s.W) total += w * w;
    EXPECT_EQ(total, std::int64_t{1} << (2 * n)) << "n=" << n;
  }
}

TEST(Influence, TableRouteMatchesCounting) {
  const BooleanFunction f = random_function(8, 3);
  const AutocorrelationTable t = autocorrelation(f);
  for (Point g = 0; g < f.size(); ++g) {
    EXPECT_EQ(influence(f, g), oracle::influence(f, g));
    EXPECT_EQ(influence(t, g), oracle::influence(f, g));
  }
}

TEST(Influence, CharacterIsOneOnOddOverlap) {
  const BooleanFunction chi = BooleanFunction::character(5, 0b10110);
  for (Point g = 0; g < chi.size(); ++g) EXPECT_EQ(influence(chi, g), Rational(dot(g, 0b10110)));
}

TEST(Subcube, RejectsOverlapAndOutOfRange) {
  EXPECT_THROW(Subcube(4, 0b0011, 0b0001), std::invalid_argument);
  EXPECT_THROW(Subcube(4, 0b10000, 0), std::invalid_argument);
  const Subcube c(4, 0b0101, 0b1010);
  EXPECT_EQ(c.dimension(), 2);
  EXPECT_EQ(c.codimension(), 2);
  EXPECT_TRUE(c.contains(0b1111));
  EXPECT_FALSE(c.contains(0b0111));
  EXPECT_EQ(c.embed(0b11), Point{0b1111});
}

TEST(Subcube, SpectralMassMatchesOracle) {
  const BooleanFunction f = random_function(6, 9);
  const Spectrum s = walsh_transform(f);
  for (Point free = 0; free < 64; free += 7) {
    const Point fixed_set = 63 & ~free;
    for_each_submask(fixed_set, [&](Point z) {
      EXPECT_EQ(spectral_mass(s, Subcube(6, free, z)), oracle::spectral_mass(f, free, z));
    });
  }
}

TEST(Subcube, RestrictionIdentityMatchesRestrictedTransform) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BooleanFunction f = random_function(7, seed);
    const Spectrum s = walsh_transform(f);
    for (Point free : {Point{0x1}, Point{0x2a}, Point{0x55}, Point{0x7f}}) {
      const Subcube cube(7, free, 0x7f & ~free & 0x49);
      const BooleanFunction r = restrict(f, cube);
      ASSERT_EQ(r.n(), weight(free));
      for (Point x = 0; x < r.size(); ++x) EXPECT_EQ(r.sign(x), f.sign(cube.embed(x)));
      for (Point g = 0; g < r.size(); ++g)
        EXPECT_EQ(restricted_fourier_identity(s, cube, deposit(g, free)), oracle::fourier(r, g));
    }
  }
}

TEST(BooleanFunction, ConstructionChecks) {
  EXPECT_THROW(BooleanFunction(-1), std::invalid_argument);
  EXPECT_THROW(BooleanFunction(31), std::invalid_argument);
  const std::vector<int> bad{1, 0};
  EXPECT_THROW(BooleanFunction::from_signs(1, bad), std::invalid_argument);
  const std::vector<int> wrong_size{1, -1, 1};
  EXPECT_THROW(BooleanFunction::from_signs(1, wrong_size), std::invalid_argument);
  EXPECT_THROW((void)BooleanFunction(2).evaluate(4), std::out_of_range);
  EXPECT_EQ(BooleanFunction::constant(3, -1).count_negative(), 8u);
}

TEST(TruthTable, TextAndPackedRoundTrip) {
  for (int n : {0, 1, 3, 9}) {
    const BooleanFunction f = random_function(n, 5);
    std::istringstream text(to_truth_table_text(f));
    EXPECT_EQ(parse_truth_table(text), f);
    EXPECT_EQ(unpack_truth_table(pack_truth_table(f)), f);
  }
}

TEST(TruthTable, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) {
    std::istringstream in(text);
    try {
      parse_truth_table(in);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("n=2\n+-+\n"), 2);
  EXPECT_EQ(line_of("n=2\n+-x+\n"), 2);
  EXPECT_EQ(line_of("m=2\n++++\n"), 1);
  EXPECT_EQ(line_of("n=2\n"), 2);
}

TEST(Random, CounterStreamsDependOnlyOnSeedAndIndex) {
  CounterRng a(7, 3), b(7, 3), c(7, 4);
  const auto a1 = a(), b1 = b();
  EXPECT_EQ(a1, b1);
  EXPECT_NE(a1, c());
  EXPECT_EQ(random_function(10, 11), random_function(10, 11));
  EXPECT_NE(random_function(10, 11), random_function(10, 12));
  CounterRng r(1, 1);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(r.below(7), 7u);
}

}  // namespace
}  // namespace qrbf
