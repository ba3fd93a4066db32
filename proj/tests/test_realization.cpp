#include <doctest.h>

#include <cmath>

#include "np/realization.hpp"
#include "support.hpp"

using namespace np;

namespace {

// Independent polyline construction: sorted distinct-ratio segments of a
// random positive pair give strictly convex cumulative-sum vertices.
std::vector<BoundaryVertex> random_convex_polyline(std::mt19937_64& rng, std::size_t items) {
  while (true) {
    const auto pair = tests::random_positive_pair(rng, items);
    std::vector<std::pair<double, std::size_t>> order;
    for (std::size_t i = 0; i < pair.size(); ++i) order.push_back({pair.p[i] / pair.q[i], i});
    std::sort(order.rbegin(), order.rend());
    bool distinct = true;
    for (std::size_t i = 1; i < order.size(); ++i)
      distinct &= order[i].first < order[i - 1].first * (1.0 - 1e-9);
    if (!distinct) continue;

    std::vector<BoundaryVertex> vertices;
    double ca = 0.0, cb = 1.0;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {  // interior change points only
      ca += pair.q[order[i].second];
      cb -= pair.p[order[i].second];
      vertices.push_back({ca, cb});
    }
    if (!vertices.empty()) return vertices;
  }
}

}  // namespace

TEST_CASE("categorical realization of the reference boundary") {
  const CategoricalPair pair = realize_categorical({{0.1, 0.4}, {0.4, 0.1}});
  REQUIRE(pair.size() == 3);
  const double ep[] = {0.6, 0.3, 0.1};
  const double eq[] = {0.1, 0.3, 0.6};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(pair.p[i] == doctest::Approx(ep[i]).epsilon(1e-12));
    CHECK(pair.q[i] == doctest::Approx(eq[i]).epsilon(1e-12));
  }
}

TEST_CASE("degenerate realizations") {
  const CategoricalPair ignorance = realize_categorical({{1.0, 0.0}});
  CHECK(ignorance.size() == 1);
  CHECK(ignorance.p[0] == 1.0);

  const CategoricalPair two = realize_categorical({{0.5, 0.25}});
  REQUIRE(two.size() == 2);
  CHECK(two.p[0] == doctest::Approx(0.75));
  CHECK(two.q[0] == doctest::Approx(0.5));
  const auto oracle = brute_force_boundary(two);
  REQUIRE(oracle.vertices.size() == 3);
  CHECK(oracle.vertices[1].alpha == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(oracle.vertices[1].beta == doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("vertical drop at alpha = 0 realizes q-null mass") {
  const CategoricalPair pair = realize_categorical({{0.0, 0.6}, {0.5, 0.2}});
  const auto b = exact_boundary(pair);
  REQUIRE(b.vertices.size() >= 2);
  CHECK(b.vertices.front().alpha == 0.0);
  CHECK(b.vertices.front().beta == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(eval_boundary(b, 0.5) == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("realization input validation") {
  CHECK_THROWS_WITH_AS(realize_categorical({{0.4, 0.5}, {0.2, 0.3}}),
                       doctest::Contains("NonMonotoneInput"), Error);
  CHECK_THROWS_WITH_AS(realize_categorical({{0.2, 0.5}, {0.4, 0.6}}),
                       doctest::Contains("NonMonotoneInput"), Error);
  // Slopes 1.25 then 1.5 break convexity.
  CHECK_THROWS_WITH_AS(realize_categorical({{0.4, 0.5}, {0.6, 0.2}}),
                       doctest::Contains("NonConvexInput"), Error);
  // Terminal vertex at alpha = 1 must close at beta = 0.
  CHECK_THROWS_WITH_AS(realize_categorical({{1.0, 0.2}}), doctest::Contains("NonConvexInput"),
                       Error);
  // Collinear terminal segment: slope to (1,0) repeats the last slope.
  CHECK_THROWS_WITH_AS(realize_categorical({{0.5, 0.5}}), doctest::Contains("NonConvexInput"),
                       Error);
}

TEST_CASE("round trip: polyline -> pair -> boundary") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 100; ++trial) {
    const auto vertices = random_convex_polyline(rng, 2 + trial % 8);
    const CategoricalPair pair = realize_categorical(vertices);
    const auto b = exact_boundary(pair);
    REQUIRE(b.vertices.size() == vertices.size() + 2);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      CHECK(std::abs(b.vertices[i + 1].alpha - vertices[i].alpha) <= 1e-12);
      CHECK(std::abs(b.vertices[i + 1].beta - vertices[i].beta) <= 1e-12);
    }

    // Ratio law: p_i / q_i equals the negative slope of segment i.
    BoundaryVertex prev{0.0, 1.0};
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      const double k = (prev.beta - vertices[i].beta) / (vertices[i].alpha - prev.alpha);
      CHECK(pair.p[i] / pair.q[i] == doctest::Approx(k).epsilon(1e-12));
      prev = vertices[i];
    }
  }
}

TEST_CASE("unit-interval realization inverts closed-form boundaries") {
  SUBCASE("(1-a)^2 gives the Beta(1, 1/2) cdf") {
    const auto table =
        realize_unit_interval([](double a) { return (1.0 - a) * (1.0 - a); }, 1001);
    for (std::size_t i = 0; i < table.knots.size(); ++i) {
      const double expect = 1.0 - std::sqrt(1.0 - table.knots[i]);
      CHECK(std::abs(table.values[i] - expect) <= 1e-10);
    }
  }

  SUBCASE("the ignorance line gives the uniform cdf") {
    const auto table = realize_unit_interval([](double a) { return 1.0 - a; }, 101);
    for (std::size_t i = 0; i < table.knots.size(); ++i)
      CHECK(std::abs(table.values[i] - table.knots[i]) <= 1e-10);
  }

  SUBCASE("(1-a)^3 inverts and stays convex") {
    const auto table = realize_unit_interval(
        [](double a) { return (1.0 - a) * (1.0 - a) * (1.0 - a); }, 513);
    for (std::size_t i = 0; i < table.knots.size(); ++i) {
      const double expect = 1.0 - std::cbrt(1.0 - table.knots[i]);
      CHECK(std::abs(table.values[i] - expect) <= 1e-10);
    }
    CHECK_NOTHROW(validate_cdf(table));
  }

  SUBCASE("flat stretches are rejected") {
    // Interior plateau at beta = 0.8.
    const auto flat = [](double a) {
      if (a <= 0.2) return 1.0 - a;
      if (a <= 0.4) return 0.8;
      return 0.8 * (1.0 - a) / 0.6;
    };
    CHECK_THROWS_WITH_AS(realize_unit_interval(flat, 101),
                         doctest::Contains("NonInvertibleBoundary"), Error);
    // Zero tail before alpha = 1.
    PiecewiseLinearBoundary zero_tail{{{0.0, 1.0}, {0.5, 0.0}, {1.0, 0.0}}};
    CHECK_THROWS_WITH_AS(realize_unit_interval(zero_tail, 101),
                         doctest::Contains("NonInvertibleBoundary"), Error);
  }
}

TEST_CASE("verify_realization") {
  const CategoricalPair r = tests::pair_r();
  const auto b = exact_boundary(r);
  CHECK(verify_realization(r, [&](double a) { return eval_boundary(b, a); }, 101) <= 1e-12);

  SUBCASE("64-vertex approximation of (1-a)^2") {
    std::vector<BoundaryVertex> vertices;
    for (int i = 1; i < 64; ++i) {
      const double a = i / 64.0;
      vertices.push_back({a, (1.0 - a) * (1.0 - a)});
    }
    const CategoricalPair pair = realize_categorical(vertices);
    const double gap =
        verify_realization(pair, [](double a) { return (1.0 - a) * (1.0 - a); }, 1001);
    // Secant error of a chord of width h on a curve with B'' = 2 is h^2/4.
    CHECK(gap <= (1.0 / 64.0) * (1.0 / 64.0) / 4.0 + 1e-12);
    CHECK(gap <= 2e-3);
  }
}

TEST_CASE("distinct pairs share a boundary") {
  const CategoricalPair r = tests::pair_r();
  const CategoricalPair split =
      make_categorical_pair({0.6, 0.15, 0.15, 0.1}, {0.1, 0.15, 0.15, 0.6});
  const auto br = exact_boundary(r);
  const auto bs = exact_boundary(split);
  REQUIRE(br.vertices.size() == bs.vertices.size());
  for (std::size_t i = 0; i < br.vertices.size(); ++i) {
    CHECK(br.vertices[i].alpha == doctest::Approx(bs.vertices[i].alpha).epsilon(1e-12));
    CHECK(br.vertices[i].beta == doctest::Approx(bs.vertices[i].beta).epsilon(1e-12));
  }
}

TEST_CASE("cdf table validation") {
  CdfTable bad;
  bad.knots = {0.0, 0.5, 1.0};
  bad.values = {0.0, 0.9, 1.0};  // concave kink
  CHECK_THROWS_WITH_AS(validate_cdf(bad), doctest::Contains("NonInvertibleBoundary"), Error);
  bad.values = {0.0, 0.4, 0.9};
  CHECK_THROWS_AS(validate_cdf(bad), Error);
}
