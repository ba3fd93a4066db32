#include "np/realization.hpp"

#include <algorithm>
#include <cmath>

#include "np/parallel.hpp"

namespace np {

void validate_cdf(const CdfTable& table) {
  const auto& x = table.knots;
  const auto& f = table.values;
  if (x.size() != f.size() || x.size() < 2) fail("DomainError", "cdf table needs >= 2 knots");
  if (x.front() != 0.0 || x.back() != 1.0) fail("DomainError", "knots must span [0,1]");
  if (std::abs(f.front()) > 1e-12 || std::abs(f.back() - 1.0) > 1e-12)
    fail("DomainError", "cdf must run from 0 to 1");
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) fail("DomainError", "knots must strictly increase");
    if (f[i] < f[i - 1] - 1e-12) fail("DomainError", "cdf must be nondecreasing");
  }
  // Midpoint convexity over knot triples; required for the realization.
  for (std::size_t i = 2; i < x.size(); ++i) {
    const double w = (x[i - 1] - x[i - 2]) / (x[i] - x[i - 2]);
    const double chord = (1.0 - w) * f[i - 2] + w * f[i];
    if (f[i - 1] > chord + 1e-9) fail("NonInvertibleBoundary", "cdf is not convex");
  }
}

CategoricalPair realize_categorical(const std::vector<BoundaryVertex>& vertices) {
  if (vertices.empty()) fail("NonMonotoneInput", "at least one vertex required");

  BoundaryVertex prev{0.0, 1.0};
  double prev_slope = kInf;
  std::vector<double> p, q;
  p.reserve(vertices.size() + 1);
  q.reserve(vertices.size() + 1);

  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& v = vertices[i];
    const bool vertical_first = i == 0 && v.alpha == 0.0;
    if (!(v.alpha >= 0.0 && v.alpha <= 1.0 && v.beta >= 0.0 && v.beta < 1.0))
      fail("NonMonotoneInput", "vertices must lie in [0,1] x [0,1) ");
    if (!vertical_first && !(v.alpha > prev.alpha))
      fail("NonMonotoneInput", "alpha must strictly increase");
    if (!(v.beta < prev.beta)) fail("NonMonotoneInput", "beta must strictly decrease");

    const double dq = v.alpha - prev.alpha;
    const double dp = prev.beta - v.beta;
    const double slope = vertical_first ? kInf : dp / dq;
    if (!vertical_first && !(slope < prev_slope))
      fail("NonConvexInput", "negative slopes must strictly decrease");
    p.push_back(dp);
    q.push_back(dq);
    prev = v;
    prev_slope = slope;
  }

  if (prev.alpha == 1.0 && prev.beta != 0.0)
    fail("NonConvexInput", "a vertex at alpha = 1 must close the polyline at (1,0)");
  if (prev.alpha != 1.0 || prev.beta != 0.0) {
    // Terminal item carries the leftover mass down to (1, 0).
    const double dq = 1.0 - prev.alpha;
    const double dp = prev.beta;
    if (!(dp / dq < prev_slope))
      fail("NonConvexInput", "terminal segment breaks strict convexity");
    p.push_back(dp);
    q.push_back(dq);
  }
  return make_categorical_pair(std::move(p), std::move(q));
}

namespace {

// B^{-1}(y) for a continuous nonincreasing B with B(1) = 0: the smallest
// alpha with B(alpha) <= y, located by bisection.
double invert_boundary(const std::function<double(double)>& B, double y) {
  if (y >= B(0.0)) return 0.0;
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (B(mid) <= y)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

}  // namespace

CdfTable realize_unit_interval(const std::function<double(double)>& boundary,
                               std::size_t knots) {
  if (knots < 2) fail("DegenerateGrid", "need at least 2 knots");
  if (std::abs(boundary(1.0)) > 1e-12)
    fail("NonInvertibleBoundary", "boundary must vanish at alpha = 1");
  if (!(boundary(1.0 - 1e-9) > 0.0))
    fail("NonInvertibleBoundary", "boundary reaches zero before alpha = 1");

  CdfTable table;
  table.knots.resize(knots);
  table.values.resize(knots);
  const double step = 1.0 / static_cast<double>(knots - 1);
  parallel_for(knots, [&](std::size_t i) {
    const double x = static_cast<double>(i) * step;
    table.knots[i] = x;
    table.values[i] = invert_boundary(boundary, 1.0 - x);
  });
  table.values.front() = 0.0;
  table.values.back() = 1.0;

  // A flat stretch of B at positive beta or a flat zero tail before alpha=1
  // shows up as a convexity break or a jump in the inverted table.
  validate_cdf(table);
  return table;
}

CdfTable realize_unit_interval(const PiecewiseLinearBoundary& boundary, std::size_t knots) {
  const auto& v = boundary.vertices;
  for (std::size_t i = 1; i < v.size(); ++i) {
    const bool flat = v[i].beta >= v[i - 1].beta - 1e-15;
    if (flat && v[i - 1].beta > 0.0)
      fail("NonInvertibleBoundary", "boundary has a flat stretch at positive beta");
    if (v[i - 1].beta == 0.0 && v[i - 1].alpha < 1.0)
      fail("NonInvertibleBoundary", "boundary reaches zero before alpha = 1");
  }
  return realize_unit_interval(
      [&](double alpha) { return eval_boundary(boundary, alpha); }, knots);
}

double verify_realization(const CategoricalPair& pair,
                          const std::function<double(double)>& target, std::size_t samples) {
  if (samples < 2) fail("DegenerateGrid", "need at least 2 samples");
  const PiecewiseLinearBoundary b = exact_boundary(pair);
  double worst = 0.0;
  const double step = 1.0 / static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    const double alpha = static_cast<double>(i) * step;
    worst = std::max(worst, std::abs(eval_boundary(b, alpha) - target(alpha)));
  }
  return worst;
}

}  // namespace np
