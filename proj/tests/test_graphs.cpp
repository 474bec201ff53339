#include <gtest/gtest.h>

#include <cmath>

#include "qrbf/graphs.hpp"
#include "qrbf/injective.hpp"
#include "qrbf/random.hpp"
#include "support/oracles.hpp"

namespace qrbf {
namespace {

SlotTables random_slots(int n, std::size_t m, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  SlotTables t{n, {}};
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<std::uint8_t> slot(std::size_t{1} << n);
    for (auto& b : slot) b = static_cast<std::uint8_t>(rng.below(3) != 0);
    t.slots.push_back(slot);
  }
  return t;
}

TEST(Injective, MapCountIsFallingFactorial) {
  EXPECT_EQ(injective_map_count(3, 0), 1);
  EXPECT_EQ(injective_map_count(3, 3), 8 * 7 * 6);
  EXPECT_EQ(injective_map_count(2, 4), 24);
  EXPECT_EQ(injective_map_count(30, 20), 0);
}

TEST(Injective, MoebiusEngineMatchesBruteForce) {
  for (int n = 1; n <= 3; ++n)
    for (std::size_t m = 0; m <= std::min<std::size_t>(5, std::size_t{1} << n); ++m)
      for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const SlotTables t = random_slots(n, m, seed * 31 + m);
        const Rational expected = oracle::injective_mean(n, t.slots);
        EXPECT_EQ(injective_mean_exact(t), expected) << "n=" << n << " m=" << m;
        EXPECT_EQ(injective_mean_enumerated(t), expected);
      }
}

TEST(Injective, SamplingAgreesWithinFourStandardErrors) {
  const SlotTables t = random_slots(4, 4, 77);
  const double exact = injective_mean_exact(t).to_double();
  const MonteCarloEstimate e = injective_mean_sampled(t, 40'000, 5);
  EXPECT_LE(std::abs(e.mean - exact), 4 * e.std_error + 1e-12);
  EXPECT_LE(e.ci_low, e.mean);
  EXPECT_GE(e.ci_high, e.mean);
  const MonteCarloEstimate again = injective_mean_sampled(t, 40'000, 5);
  EXPECT_EQ(again.mean, e.mean);
}

TEST(Injective, RejectsImpossibleTables) {
  EXPECT_THROW(injective_mean_exact(random_slots(1, 3, 0)), std::invalid_argument);
  SlotTables bad{2, {{1, 1, 1}}};
  EXPECT_THROW(injective_mean_exact(bad), std::invalid_argument);
}

TEST(Patterns, ValidateEdgesAndInjections) {
  EXPECT_THROW(SimplePattern({"a"}, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(SimplePattern({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(BipartitePattern({"a"}, {"r"}, {{0, 0}, {0, 0}}), std::invalid_argument);
  EXPECT_THROW(InjectionMap({3, 3}), std::invalid_argument);
  EXPECT_EQ(InjectionMap({0, 0b111, 0b001}).diameter(), 3);
  EXPECT_EQ(SimplePattern::complete(4).edges().size(), 6u);
  EXPECT_EQ(SimplePattern::path(3).vertices().size(), 4u);
  EXPECT_EQ(SimplePattern::star(3).edges().size(), 3u);
}

TEST(Patterns, TextRoundTrip) {
  const BipartitePattern b = parse_bipartite_pattern("# path\nleft: a b\nright: r s\nedges: a-r b-r b-s\n");
  EXPECT_EQ(b.left().size(), 2u);
  EXPECT_EQ(b.right_degree(0), 2u);
  EXPECT_EQ(b.count_right_degree(1), 1u);
  EXPECT_EQ(parse_bipartite_pattern(to_text(b)).edges(), b.edges());
  const SimplePattern s = parse_simple_pattern("vertices: x y z\nedges: x-y y-z\n");
  EXPECT_EQ(parse_simple_pattern(to_text(s)).edges(), s.edges());
  const InjectionMap phi = parse_injection("y=0x2 x=1 z=0X4", s.vertices());
  EXPECT_EQ(phi.images(), (std::vector<Point>{1, 2, 4}));
}

TEST(Patterns, ParseErrorsAreReported) {
  EXPECT_THROW(parse_bipartite_pattern("left: a\nright: r\nedges: a-q\n"), ParseError);
  EXPECT_THROW(parse_simple_pattern("vertices: a b\nedges: a-a\n"), ParseError);
  EXPECT_THROW(parse_injection("a=zz", {"a"}), ParseError);
  EXPECT_THROW(parse_injection("a=1", {"a", "b"}), ParseError);
}

TEST(Cayley, CodegreeIdentityMatchesCounting) {
  const BooleanFunction f = random_function(6, 12);
  const AutocorrelationTable t = autocorrelation(f);
  const std::int64_t w0 = walsh_transform(f).W[0];
  for (Point u = 0; u < 64; u += 5)
    for (Point v = 0; v < 64; v += 3) {
      EXPECT_EQ(codegree(f, u, v), oracle::codegree(f, u, v));
      EXPECT_EQ(codegree(t, w0, u, v), oracle::codegree(f, u, v));
    }
}

TEST(Cayley, RainbowEdgesAreSymmetric) {
  const BooleanFunction f = random_function(5, 1);
  for (Point c = 0; c < 32; ++c) EXPECT_EQ(rhg_edge(f, 3, 9, c), rhg_edge(f, 9, 3, c));
  EXPECT_THROW(rhg_edge(f, 4, 4, 0), std::invalid_argument);
}

TEST(Rainbow, SingleEdgeDensityIsOneMinusInfluence) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const BooleanFunction f = random_function(6, seed);
    for_each_in_ball(6, 2, [&](Point u) {
      const Estimate e = rainbow_embedding_density(SimplePattern::complete(2), InjectionMap({u, 0}), f, 2,
                                                   {Mode::exact, kDefaultBudget, 0, 0});
      EXPECT_EQ(std::get<Rational>(e), Rational(1) - oracle::influence(f, u));
    });
  }
}

TEST(Rainbow, ValidatesBallAndDiameter) {
  const BooleanFunction f = random_function(5, 2);
  EXPECT_THROW(rainbow_embedding_density(SimplePattern::complete(2), InjectionMap({0b111, 0}), f, 2), std::invalid_argument);
  EXPECT_THROW(rainbow_embedding_density(SimplePattern::complete(2), InjectionMap({0b11, 0b1100}), f, 2),
               std::invalid_argument);
}

TEST(Subdivision, LabelsAndOrientation) {
  const BipartitePattern s = subdivision(SimplePattern::path(2));
  EXPECT_EQ(s.left().size(), 3u);
  ASSERT_EQ(s.right().size(), 2u);
  EXPECT_EQ(s.right()[0], "v0_v1");
  EXPECT_EQ(s.edges()[0], (BipartitePattern::Edge{0, 0}));
  EXPECT_EQ(s.edges()[1], (BipartitePattern::Edge{1, 0}));
}

TEST(Subdivision, ExpansionMatchesClosedFormOnSmallGraphs) {
  // Every graph on at most four labelled vertices.
  for (std::size_t v = 1; v <= 4; ++v) {
    std::vector<SimplePattern::Edge> all;
    for (std::size_t a = 0; a < v; ++a)
      for (std::size_t b = a + 1; b < v; ++b) all.push_back({a, b});
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
      std::vector<SimplePattern::Edge> edges;
      for (std::size_t i = 0; i < all.size(); ++i)
        if ((mask >> i) & 1) edges.push_back(all[i]);
      std::vector<std::string> labels;
      for (std::size_t i = 0; i < v; ++i) labels.push_back("v" + std::to_string(i));
      const SimplePattern g(labels, edges);
      CounterRng rng(mask, v);
      const double x = rng.uniform01() - 0.5, y = rng.uniform01() - 0.5, z = rng.uniform01() - 0.5;
      const double closed = std::pow(1 + x + y + z, static_cast<double>(edges.size()));
      EXPECT_NEAR(subgraph_expansion_sum(g, x, y, z), closed, 1e-12);
    }
  }
}

}  // namespace
}  // namespace qrbf
