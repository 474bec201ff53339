#include <gtest/gtest.h>

#include "qrbf/constructions.hpp"
#include "qrbf/properties.hpp"
#include "qrbf/random.hpp"
#include "support/oracles.hpp"

namespace qrbf {
namespace {

Rational exact(const PropertyReport& r) { return std::get<Rational>(r.epsilon); }

TEST(SpectralTesters, InfMatchesOracle) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const BooleanFunction f = random_function(7, seed);
    for (int d = 1; d <= 4; ++d) EXPECT_EQ(exact(inf_error(f, d)), oracle::inf_error(f, d)) << seed << ' ' << d;
  }
}

TEST(SpectralTesters, SdMatchesSubcubeOracle) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const BooleanFunction f = random_function(5, seed + 10);
    for (int d = 1; d <= 5; ++d) {
      EXPECT_EQ(exact(sd_error(f, d)), oracle::sd_error(f, d)) << seed << ' ' << d;
      EXPECT_EQ(exact(rf_error(f, d)), exact(sd_error(f, d)));
    }
  }
}

TEST(SpectralTesters, RestrictionReductionsMatchEnumeration) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const BooleanFunction f = random_function(6, seed + 20);
    for (int d = 1; d <= 3; ++d) {
      EXPECT_EQ(exact(rc_error(f, d)), definitional::rc_error(f, d));
      EXPECT_EQ(exact(ri_error(f, d)), definitional::ri_error(f, d));
      EXPECT_EQ(exact(rf_error(f, d)), definitional::rf_error(f, d));
      EXPECT_EQ(exact(lsr_error(f, d)), definitional::lsr_error(f, d));
    }
  }
}

TEST(SpectralTesters, LsrMatchesCodegreeOracle) {
  const BooleanFunction f = random_function(6, 31);
  const Rational p = dth_p(walsh_transform(f));
  Rational worst(0);
  for (Point u = 0; u < f.size(); ++u)
    for (Point v = 0; v < f.size(); ++v)
      if (u != v && hamming_distance(u, v) <= 2) {
        const Rational dev = (Rational(oracle::codegree(f, u, v), 64) - p).abs();
        if (dev > worst) worst = dev;
      }
  EXPECT_EQ(exact(lsr_error(f, 2)), worst);
}

TEST(SpectralTesters, WitnessesReproduceTheReportedDeviation) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BooleanFunction f = random_function(7, seed + 40);
    const Analysis a(f);
    for (int d = 1; d <= 3; ++d)
      for (const auto& r : {inf_error(a, d), sd_error(a, d), rf_error(a, d), rc_error(a, d), ri_error(a, d), lsr_error(a, d)})
        EXPECT_EQ(reevaluate_witness(f, r), exact(r)) << to_string(r.property) << " d=" << d;
  }
}

TEST(SpectralTesters, ChainHoldsOnRandomFunctions) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const BooleanFunction f = random_function(3 + static_cast<int>(seed % 6), seed);
    const Analysis a(f);
    for (int d = 1; d <= f.n(); ++d) {
      const Rational inf = exact(inf_error(a, d)), sd = exact(sd_error(a, d)), rf = exact(rf_error(a, d));
      EXPECT_LE(sd, Rational(2) * inf);
      EXPECT_LE(rf, sd);
      EXPECT_LE(exact(rc_error(a, d)), Rational(std::int64_t{1} << d) * rf);
      EXPECT_EQ(exact(ri_error(a, d)), inf);
      EXPECT_EQ(Rational(2) * exact(lsr_error(a, d)), inf);
    }
  }
}

TEST(SpectralTesters, CheckChainReportsViolations) {
  const BooleanFunction f = random_function(6, 2);
  const Analysis a(f);
  std::vector<PropertyReport> reports{inf_error(a, 2), sd_error(a, 2), rf_error(a, 2),
                                      rc_error(a, 2),  ri_error(a, 2), lsr_error(a, 2)};
  EXPECT_EQ(check_chain(reports), "");
  reports[4].epsilon = exact(reports[0]) + Rational(1, 64);
  EXPECT_NE(check_chain(reports), "");
}

TEST(SpectralTesters, BentFunctionIsPerfectAtEveryRank) {
  const BooleanFunction ip = inner_product(3);
  for (int d = 1; d <= 6; ++d) {
    EXPECT_EQ(exact(inf_error(ip, d)), Rational(0));
    EXPECT_EQ(exact(rc_error(ip, d)), Rational(0));
    EXPECT_EQ(exact(lsr_error(ip, d)), Rational(0));
  }
}

TEST(SpectralTesters, AllOnesCharacterHasInfErrorHalf) {
  const BooleanFunction chi = BooleanFunction::character(4, 0xf);
  EXPECT_EQ(exact(inf_error(chi, 1)), Rational(1, 2));
}

TEST(SpectralTesters, ConstantFunctionFlagsMeanEverywhere) {
  const BooleanFunction one = BooleanFunction::constant(4, 1);
  for (const auto& r : full_report(one, 2)) EXPECT_FALSE(r.mean_zero_ok) << to_string(r.property);
}

TEST(SpectralTesters, RankOutOfRangeIsRejected) {
  const BooleanFunction f = random_function(4, 1);
  EXPECT_THROW(inf_error(f, 0), std::invalid_argument);
  EXPECT_THROW(inf_error(f, 5), std::invalid_argument);
}

TEST(SpectralTesters, SubcubeScanRespectsBudget) {
  const BooleanFunction f = random_function(8, 1);
  EXPECT_THROW(sd_error(f, 3, 10), BudgetExceeded);
}

TEST(Homomorphisms, DensityParametersFollowTheMean) {
  const Spectrum s = walsh_transform(BooleanFunction::constant(3, -1));
  EXPECT_EQ(dth_p(s), Rational(3, 4));
  EXPECT_EQ(dth_q(s), Rational(1));
  const Spectrum bal = walsh_transform(BooleanFunction::character(3, 1));
  EXPECT_EQ(dth_p(bal), Rational(1, 4));
  EXPECT_EQ(dth_q(bal), Rational(1, 2));
}

TEST(Homomorphisms, DthPathMatchesDirectCount) {
  // Left {a, b}, right {r, s}, edges a-r b-r b-s.
  const BooleanFunction f = random_function(4, 8);
  const BipartitePattern g({"a", "b"}, {"r", "s"}, {{0, 0}, {1, 0}, {1, 1}});
  const InjectionMap psi({0x0, 0x3});
  const PropertyReport r = dth_deviation(f, g, psi, 2, {Mode::exact, kDefaultBudget, 0, 0});
  std::int64_t hits = 0, maps = 0;
  for (Point x = 0; x < 16; ++x)
    for (Point y = 0; y < 16; ++y) {
      if (x == y) continue;
      ++maps;
      hits += f.sign(x) == -1 && f.sign(0x3 ^ x) == -1 && f.sign(0x3 ^ y) == -1;
    }
  const Rational density(hits, maps);
  const Spectrum s = walsh_transform(f);
  const Rational target = dth_p(s) * dth_q(s);
  ASSERT_NE(target, Rational(0));
  EXPECT_EQ(exact(r), (density - target).abs() / target);
}

TEST(Homomorphisms, DthValidatesPattern) {
  const BooleanFunction f = random_function(4, 8);
  const BipartitePattern triple({"a", "b", "c"}, {"r"}, {{0, 0}, {1, 0}, {2, 0}});
  EXPECT_THROW(dth_deviation(f, triple, InjectionMap({0, 1, 2}), 2), std::invalid_argument);
  const BipartitePattern wide({"a", "b"}, {"r"}, {{0, 0}, {1, 0}});
  EXPECT_THROW(dth_deviation(f, wide, InjectionMap({0x0, 0xf}), 2), std::invalid_argument);
}

TEST(Homomorphisms, RainbowEdgeIsOneMinusInfluence) {
  const BooleanFunction f = random_function(6, 4);
  const PropertyReport r =
      rain_deviation(f, SimplePattern::complete(2), InjectionMap({0x5, 0x0}), 2, {Mode::exact, kDefaultBudget, 0, 0});
  EXPECT_EQ(exact(r), (Rational(1, 2) - influence(f, 0x5)).abs());
}

TEST(FullReport, ProducesEightRecordsInOrder) {
  const auto reports = full_report(random_function(6, 3), 2);
  ASSERT_EQ(reports.size(), 8u);
  const PropertyTag order[] = {PropertyTag::INF, PropertyTag::SD,  PropertyTag::RF,  PropertyTag::RC,
                               PropertyTag::RI,  PropertyTag::LSR, PropertyTag::DTH, PropertyTag::RAIN};
  for (std::size_t i = 0; i < 8; ++i) EXPECT_EQ(reports[i].property, order[i]);
}

}  // namespace
}  // namespace qrbf
