#include <gtest/gtest.h>

#include <random>

#include "toricq/error.hpp"
#include "toricq/qubit_toric.hpp"
#include "toricq/segre.hpp"
#include "toricq/toric_ideal.hpp"

using namespace toricq;

namespace {

IntVector v(std::initializer_list<long> xs) { return make_int_vector(xs); }

IntMatrix identity(std::size_t n) {
  IntMatrix id;
  for (std::size_t i = 0; i < n; ++i) id.push_back(unit_vector(n, i));
  return id;
}

ComplexRational random_nonzero(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
  while (true) {
    const long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const ComplexRational z(Rational(a, b), Rational(c, d));
    if (!z.is_zero()) return z;
  }
}

const ChartTransition* find_transition(const ChartAtlas& a, std::size_t from, std::size_t to) {
  for (const auto& t : a.transitions) {
    if (t.from == from && t.to == to) return &t;
  }
  return nullptr;
}

}  // namespace

TEST(ProjectiveSpaceFan, CpOneThreeCones) {
  const auto f = projective_space_fan(1);
  EXPECT_EQ(f.cones(), (std::vector<LatticeCone>{LatticeCone(1, {}), LatticeCone(1, {v({-1})}), LatticeCone(1, {v({1})})}));
  EXPECT_EQ(f, multiqubit_fan(1));
}

TEST(ProjectiveSpaceFan, CpTwoMaximalCones) {
  const auto maxes = maximal_cones(projective_space_fan(2));
  const std::vector<LatticeCone> want{LatticeCone(2, {v({1, 0}), v({0, 1})}), LatticeCone(2, {v({0, 1}), v({-1, -1})}),
                                      LatticeCone(2, {v({1, 0}), v({-1, -1})})};
  ASSERT_EQ(maxes.size(), 3u);
  for (const auto& c : want) EXPECT_TRUE(std::count(maxes.begin(), maxes.end(), c));
  EXPECT_EQ(check_fan(projective_space_fan(3)), "");
  EXPECT_THROW(projective_space_fan(0), ValidationError);
}

TEST(MultiqubitPolytope, CubeVertices) {
  EXPECT_EQ(multiqubit_polytope(3).vertices().size(), 8u);
  EXPECT_EQ(multiqubit_polytope(1).vertices(), (IntMatrix{v({-1}), v({1})}));
  EXPECT_EQ(polar(multiqubit_polytope(2)).vertices(), (IntMatrix{v({-1, 0}), v({0, -1}), v({0, 1}), v({1, 0})}));
  // The unchecked constructor agrees with the extreme-point filter.
  EXPECT_EQ(LatticePolytope(3, multiqubit_polytope(3).vertices()), multiqubit_polytope(3));
  EXPECT_THROW(multiqubit_polytope(0), ValidationError);
  EXPECT_THROW(multiqubit_polytope(11), ValidationError);
}

TEST(MultiqubitFan, DualityWithCube) {
  for (std::size_t m = 1; m <= 5; ++m) {
    EXPECT_EQ(multiqubit_fan(m), normal_fan(multiqubit_polytope(m))) << m;
    EXPECT_EQ(maximal_cones(multiqubit_fan(m)).size(), std::size_t{1} << m);
  }
  for (std::size_t m = 1; m <= 6; ++m) EXPECT_EQ(polar(multiqubit_polytope(m)), cross_polytope(m)) << m;
}

TEST(MultiqubitFan, TwoQubitRays) {
  std::vector<IntVector> rays;
  const auto fan = multiqubit_fan(2);
  for (const auto& c : fan.cones()) {
    if (c.generators().size() == 1) rays.push_back(c.generators()[0]);
  }
  EXPECT_EQ(rays, (std::vector<IntVector>{v({-1, 0}), v({0, -1}), v({0, 1}), v({1, 0})}));
}

TEST(ChartAtlas, CpOneGluing) {
  const auto a = chart_atlas(projective_space_fan(1));
  ASSERT_EQ(a.charts.size(), 2u);
  ASSERT_EQ(a.transitions.size(), 2u);
  for (const auto& t : a.transitions) EXPECT_EQ(t.exponents, (IntMatrix{v({-1})}));
  EXPECT_EQ(compose(a.transitions[0].exponents, a.transitions[1].exponents), identity(1));
}

TEST(ChartAtlas, CpOneTimesCpOneFourCharts) {
  const auto a = chart_atlas(multiqubit_fan(2));
  ASSERT_EQ(a.charts.size(), 4u);
  std::vector<IntMatrix> coords;
  for (const auto& c : a.charts) coords.push_back(c.coordinates);
  // (z1, z2), (z1^-1, z2), (z1, z2^-1), (z1^-1, z2^-1)
  for (const auto& want : std::vector<IntMatrix>{{v({1, 0}), v({0, 1})},
                                                 {v({-1, 0}), v({0, 1})},
                                                 {v({1, 0}), v({0, -1})},
                                                 {v({-1, 0}), v({0, -1})}}) {
    EXPECT_TRUE(std::count(coords.begin(), coords.end(), want));
  }
  // Each chart borders two others.
  EXPECT_EQ(a.transitions.size(), 8u);
}

TEST(ChartAtlas, TransitionsRoundTrip) {
  for (const auto& f : {projective_space_fan(2), projective_space_fan(3), multiqubit_fan(3)}) {
    const auto a = chart_atlas(f);
    EXPECT_EQ(a.charts.size(), maximal_cones(f).size());
    for (const auto& t : a.transitions) {
      const auto* back = find_transition(a, t.to, t.from);
      ASSERT_NE(back, nullptr);
      EXPECT_EQ(compose(t.exponents, back->exponents), identity(f.dim()));
    }
  }
}

TEST(ChartAtlas, TransitionMatchesEvaluation) {
  // Chart coordinates at a torus point z are z^{c}; a transition must map one
  // chart's values to the other's.
  const auto a = chart_atlas(projective_space_fan(2));
  const std::vector<ComplexRational> z{ComplexRational(Rational(2, 3)), ComplexRational(5, -1)};
  auto values = [&](const IntMatrix& coords) {
    std::vector<ComplexRational> out;
    for (const auto& c : coords) out.push_back(power(z[0], c[0].get_si()) * power(z[1], c[1].get_si()));
    return out;
  };
  for (const auto& t : a.transitions) {
    const auto from = values(a.charts[t.from].coordinates);
    const auto to = values(a.charts[t.to].coordinates);
    for (std::size_t i = 0; i < t.exponents.size(); ++i) {
      ComplexRational got(1);
      for (std::size_t k = 0; k < from.size(); ++k) got *= power(from[k], t.exponents[i][k].get_si());
      EXPECT_EQ(got, to[i]);
    }
  }
}

TEST(ChartAtlas, RejectsSingularCone) {
  const Fan bad(2, {LatticeCone(2, {}), LatticeCone(2, {v({1, 0})}), LatticeCone(2, {v({1, 2})}),
                    LatticeCone(2, {v({1, 0}), v({1, 2})})});
  EXPECT_THROW(chart_atlas(bad), ValidationError);
}

TEST(InvariantSubvarieties, Counts) {
  auto count = [](const std::vector<InvariantSubvariety>& xs, InvariantSubvariety::Kind k) {
    return std::count_if(xs.begin(), xs.end(), [&](const InvariantSubvariety& x) { return x.kind == k; });
  };
  for (std::size_t m = 1; m <= 3; ++m) {
    const auto xs = invariant_subvarieties(multiqubit_fan(m));
    EXPECT_EQ(count(xs, InvariantSubvariety::Kind::kDivisor), static_cast<long>(2 * m));
    EXPECT_EQ(count(xs, InvariantSubvariety::Kind::kFixedPoint), static_cast<long>(1u << m));
  }
  EXPECT_THROW(invariant_subvarieties(projective_space_fan(2)), ValidationError);
}

TEST(InvariantSubvarieties, TwoQubitLabels) {
  std::vector<std::string> divisors, points;
  for (const auto& x : invariant_subvarieties(multiqubit_fan(2))) {
    (x.kind == InvariantSubvariety::Kind::kDivisor ? divisors : points).push_back(x.description);
  }
  std::sort(divisors.begin(), divisors.end());
  EXPECT_EQ(divisors, (std::vector<std::string>{"CP^1 x {0}", "CP^1 x {inf}", "{0} x CP^1", "{inf} x CP^1"}));
  std::sort(points.begin(), points.end());
  EXPECT_EQ(points, (std::vector<std::string>{"{0} x {0}", "{0} x {inf}", "{inf} x {0}", "{inf} x {inf}"}));
  const auto one = invariant_subvarieties(multiqubit_fan(1));
  ASSERT_EQ(one.size(), 4u);
  EXPECT_EQ(one[2].description, "{inf}");
  EXPECT_EQ(one[3].description, "{0}");
}

TEST(Parameterization, Exponents) {
  const auto p = parameterization(2);
  EXPECT_EQ(p.exponents, (IntMatrix{v({0, 0}), v({0, 1}), v({1, 0}), v({1, 1})}));
  const auto p3 = parameterization(3);
  EXPECT_TRUE(is_zero(p3.exponents.front()));
  EXPECT_EQ(p3.exponents.back(), v({1, 1, 1}));
}

TEST(Parameterization, MatchesSegreMapOfLocalPairs) {
  const std::vector<ComplexRational> z{ComplexRational(2), ComplexRational(3)};
  EXPECT_EQ(parameterize(parameterization(2), z), (std::vector<ComplexRational>{1, 3, 2, 6}));
  const auto ones = parameterize(parameterization(3), {1, 1, 1});
  const auto image = segre_map(ProductState<ComplexRational>{{{1, 1}, {1, 1}, {1, 1}}});
  EXPECT_EQ(ones, image.amplitudes());
}

TEST(VerifyParameterization, Examples) {
  EXPECT_TRUE(verify_parameterization(2, {2, 3}));
  EXPECT_TRUE(verify_parameterization(3, {1, -1, 5}));
  EXPECT_THROW(verify_parameterization(2, {0, 3}), ValidationError);
  // Perturbing one amplitude of the image breaks the single minor.
  auto amps = parameterize(parameterization(2), {2, 3});
  amps[3] += ComplexRational(1);
  const PureState<ComplexRational> s(SystemShape({2, 2}), amps);
  EXPECT_FALSE(evaluate_minor(segre_minors(SystemShape({2, 2}))[0], s).is_zero());
}

TEST(VerifyParameterization, RandomPoints) {
  std::mt19937 rng(41);
  for (std::size_t m = 1; m <= 4; ++m) {
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<ComplexRational> z;
      for (std::size_t j = 0; j < m; ++j) z.push_back(random_nonzero(rng));
      ASSERT_TRUE(verify_parameterization(m, z));
    }
  }
}

TEST(VerifyParameterization, IdealVanishesOnImages) {
  std::mt19937 rng(43);
  for (std::size_t m = 2; m <= 3; ++m) {
    const auto p = parameterization(m);
    const auto ideal = toric_ideal_binomials(MonomialMap(m, p.exponents), 2);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<ComplexRational> z;
      for (std::size_t j = 0; j < m; ++j) z.push_back(random_nonzero(rng));
      const auto image = parameterize(p, z);
      for (const auto& b : ideal.generators) ASSERT_TRUE(evaluate_binomial(b, image).is_zero());
    }
  }
}
