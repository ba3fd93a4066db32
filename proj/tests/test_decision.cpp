#include <doctest.h>

#include <cmath>

#include "np/decision.hpp"
#include "np/divergences.hpp"
#include "np/upper_bounds.hpp"
#include "support.hpp"

using namespace np;

TEST_CASE("bayes error at the reference boundary") {
  const auto b = exact_boundary(tests::pair_r());

  const auto even = bayes_error(b, make_prior(0.5));
  CHECK(even.ber == doctest::Approx(0.25).epsilon(1e-12));
  // Tie along the slope -1 segment resolves toward the smaller alpha.
  CHECK(even.argmin.alpha == doctest::Approx(0.1));
  CHECK(even.argmin.beta == doctest::Approx(0.4));

  const auto skewed = bayes_error(b, make_prior(0.9));
  CHECK(skewed.ber == doctest::Approx(0.1).epsilon(1e-12));
  CHECK(skewed.argmin.alpha == 0.0);

  PiecewiseLinearBoundary ignorance{{{0.0, 1.0}, {1.0, 0.0}}};
  for (double prior : {0.2, 0.5, 0.8})
    CHECK(bayes_error(ignorance, make_prior(prior)).ber ==
          doctest::Approx(std::min(prior, 1.0 - prior)));

  CHECK_THROWS_WITH_AS(make_prior(1.0), doctest::Contains("DomainError"), Error);
}

TEST_CASE("supporting-line law") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 50; ++trial) {
    const auto pair = tests::random_pair(rng, 2 + trial % 9);
    const auto b = exact_boundary(pair);
    for (double prior : {0.1, 0.5, 0.9}) {
      const auto be = bayes_error(b, make_prior(prior));
      for (int i = 0; i <= 100; ++i) {
        const double a = i / 100.0;
        CHECK(prior * a + (1.0 - prior) * eval_boundary(b, a) >= be.ber - 1e-12);
      }
      const double at_contact = prior * be.argmin.alpha + (1.0 - prior) * be.argmin.beta;
      CHECK(at_contact == doctest::Approx(be.ber).epsilon(1e-12));
    }
  }
}

TEST_CASE("convex conjugate of the boundary") {
  const auto b = exact_boundary(tests::pair_r());
  const auto c = conjugate(b, -1.0);
  CHECK(c.Bstar == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(c.pi_p == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(c.ber == doctest::Approx(0.25).epsilon(1e-12));

  PiecewiseLinearBoundary ignorance{{{0.0, 1.0}, {1.0, 0.0}}};
  const auto ci = conjugate(ignorance, -1.0);
  CHECK(ci.Bstar == doctest::Approx(-1.0));
  CHECK(ci.ber == doctest::Approx(0.5));

  CHECK_THROWS_WITH_AS(conjugate(b, 0.5), doctest::Contains("NonNegativeSlope"), Error);

  SUBCASE("polyline approximation of (1-a)^2") {
    std::vector<BoundaryVertex> vertices{{0.0, 1.0}};
    for (int i = 1; i < 1024; ++i) {
      const double a = i / 1024.0;
      vertices.push_back({a, (1.0 - a) * (1.0 - a)});
    }
    vertices.push_back({1.0, 0.0});
    const PiecewiseLinearBoundary smooth{vertices};
    const auto cs = conjugate(smooth, -1.0);
    // Smooth model: min of a/2 + (1-a)^2/2 is 0.375 at a = 1/2.
    CHECK(std::abs(cs.Bstar - (-0.75)) <= 1e-5);
    CHECK(cs.pi_p == doctest::Approx(0.5));
    CHECK(std::abs(cs.ber - 0.375) <= 1e-5);
  }

  SUBCASE("agrees with bayes_error across slopes and pairs") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 50; ++trial) {
      const auto pair = tests::random_pair(rng, 2 + trial % 9);
      const auto bb = exact_boundary(pair);
      for (double z : {-10.0, -2.0, -1.0, -0.5, -0.1}) {
        const auto cv = conjugate(bb, z);
        const auto be = bayes_error(bb, make_prior(cv.pi_p));
        CHECK(std::abs(cv.ber - be.ber) <= 1e-12);
      }
    }
  }
}

TEST_CASE("ber bounds from curve pairs") {
  SUBCASE("hellinger lower vs refined upper at rho = 0.8") {
    const auto lower = named_lower_curve(LowerKind::Hellinger, {.value = 0.8});
    const auto upper = refined_chernoff_curve(0.5, 0.8, 1);
    const auto iv = ber_bounds(lower.eval, upper.eval, make_prior(0.5), 201);
    CHECK(iv.lb == doctest::Approx(0.2).epsilon(1e-9));   // 0.5 (1 - sqrt(1 - rho^2))
    CHECK(iv.ub == doctest::Approx(0.4).epsilon(1e-9));   // symmetric point of the hyperbola
    CHECK(iv.lb <= iv.ub);
  }

  SUBCASE("ignorance line collapses the interval") {
    const auto line = [](double a) { return 1.0 - a; };
    const auto iv = ber_bounds(line, line, make_prior(0.3), 101);
    CHECK(iv.lb == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(iv.ub == doctest::Approx(0.3).epsilon(1e-12));
  }

  SUBCASE("indistinguishable pair collapses to min prior") {
    const auto lower = named_lower_curve(LowerKind::Hellinger, {.value = 1.0});
    const auto upper = refined_chernoff_curve(0.5, 1.0, 1);
    const auto iv = ber_bounds(lower.eval, upper.eval, make_prior(0.7), 101);
    CHECK(iv.lb == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(iv.ub == doctest::Approx(0.3).epsilon(1e-12));
  }

  SUBCASE("sandwich around the exact bayes error") {
    std::mt19937_64 rng(103);
    for (int trial = 0; trial < 50; ++trial) {
      const auto pair = tests::random_pair(rng, 2 + trial % 9);
      const double rho = chernoff_coefficient(pair, 0.5);
      if (rho == 0.0) continue;
      const auto lower = named_lower_curve(LowerKind::Hellinger, {.value = rho});
      const auto upper = refined_chernoff_curve(0.5, rho, 1);
      const double prior = 0.25 + 0.5 * (trial % 3) / 2.0;
      const auto iv = ber_bounds(lower.eval, upper.eval, make_prior(prior), 2001);
      const double exact = bayes_error(exact_boundary(pair), make_prior(prior)).ber;
      CHECK(iv.lb <= exact + 1e-6);
      CHECK(iv.ub >= exact - 1e-6);
    }
  }

  CHECK_THROWS_WITH_AS(
      ber_bounds([](double) { return 0.0; }, [](double) { return 0.0; }, make_prior(0.5), 1),
      doctest::Contains("DegenerateGrid"), Error);
}

TEST_CASE("roc points flip the boundary") {
  const auto pts = roc_points(exact_boundary(tests::pair_r()));
  REQUIRE(pts.size() == 4);
  CHECK(pts[0].fpr == 0.0);
  CHECK(pts[0].tpr == 0.0);
  CHECK(pts[1].fpr == doctest::Approx(0.1));
  CHECK(pts[1].tpr == doctest::Approx(0.6));
  CHECK(pts[2].tpr == doctest::Approx(0.9));
  CHECK(pts[3].tpr == 1.0);

  const auto diag = roc_points(PiecewiseLinearBoundary{{{0.0, 1.0}, {1.0, 0.0}}});
  CHECK(diag.front().tpr == 0.0);
  CHECK(diag.back().tpr == 1.0);

  const auto perfect = roc_points(PiecewiseLinearBoundary{{{0.0, 0.0}, {1.0, 0.0}}});
  CHECK(perfect.front().tpr == 1.0);
  CHECK(perfect.back().tpr == 1.0);
}

TEST_CASE("roc mixing weights") {
  const auto b = exact_boundary(tests::pair_r());

  CHECK(roc_mixing_weight(b, 0.25, 0.25).lambda == doctest::Approx(1.0));
  CHECK(roc_mixing_weight(b, 0.25, 0.75).lambda == doctest::Approx(0.0));
  const auto plan = roc_mixing_weight(b, 0.25, 0.5);
  CHECK(plan.lambda == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(plan.realized().beta == doctest::Approx(0.5).epsilon(1e-12));

  CHECK_THROWS_WITH_AS(roc_mixing_weight(b, 0.25, 0.1), doctest::Contains("TargetOutsideRegion"),
                       Error);
  CHECK_THROWS_WITH_AS(roc_mixing_weight(b, 0.25, 0.9), doctest::Contains("TargetOutsideRegion"),
                       Error);

  SUBCASE("random in-region targets reconstruct exactly") {
    std::mt19937_64 rng(107);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
      const auto pair = tests::random_pair(rng, 2 + trial % 9);
      const auto bb = exact_boundary(pair);
      for (int k = 0; k < 20; ++k) {
        const double t = std::nextafter(unif(rng), 1.0);
        const double floor = eval_boundary(bb, t);
        const double g = floor + unif(rng) * (1.0 - t - floor);
        if (g < floor || g > 1.0 - t) continue;
        const auto mixed = roc_mixing_weight(bb, t, g);
        CHECK(std::abs(mixed.realized().beta - g) <= 1e-12);
        CHECK(mixed.realized().alpha == t);
      }
    }
  }
}
