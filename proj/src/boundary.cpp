#include "np/boundary.hpp"

#include <algorithm>
#include <cmath>

#include "np/parallel.hpp"

namespace np {

namespace {

constexpr double kTol = 1e-12;

// Right-turn test for the lower hull sweep; collinear points (within an
// absolute band, all coordinates are O(1)) are dropped.
bool keeps_convex(const BoundaryVertex& a, const BoundaryVertex& b, const BoundaryVertex& c) {
  const double cross = (b.alpha - a.alpha) * (c.beta - a.beta) -
                       (b.beta - a.beta) * (c.alpha - a.alpha);
  return cross > 1e-14;
}

PiecewiseLinearBoundary lower_hull(std::vector<BoundaryVertex> pts) {
  std::sort(pts.begin(), pts.end(), [](const BoundaryVertex& l, const BoundaryVertex& r) {
    return l.alpha != r.alpha ? l.alpha < r.alpha : l.beta < r.beta;
  });
  // One point per alpha: the lowest.
  std::vector<BoundaryVertex> best;
  for (const auto& v : pts) {
    if (!best.empty() && std::abs(best.back().alpha - v.alpha) <= kTol) continue;
    best.push_back(v);
  }
  std::vector<BoundaryVertex> hull;
  for (const auto& v : best) {
    while (hull.size() >= 2 && !keeps_convex(hull[hull.size() - 2], hull.back(), v))
      hull.pop_back();
    hull.push_back(v);
  }
  for (auto& v : hull)
    if (v.beta < 0.0 && v.beta >= -kTol) v.beta = 0.0;  // subset-sum roundoff
  if (std::abs(hull.back().alpha - 1.0) <= kTol && std::abs(hull.back().beta) <= kTol)
    hull.back() = {1.0, 0.0};
  return PiecewiseLinearBoundary{std::move(hull)};
}

}  // namespace

PiecewiseLinearBoundary exact_boundary(const CategoricalPair& pair) {
  const LRProfile prof = lr_profile(pair);
  PiecewiseLinearBoundary b;

  double drop = 0.0;  // P-mass on {q = 0}
  std::size_t first = 0;
  if (!prof.segments.empty() && std::isinf(prof.segments.front().ratio)) {
    drop = prof.segments.front().p_mass;
    first = 1;
  }
  b.vertices.push_back({0.0, 1.0 - drop});

  double ca = 0.0, cp = drop;
  for (std::size_t j = first; j < prof.segments.size(); ++j) {
    ca += prof.segments[j].q_mass;
    cp += prof.segments[j].p_mass;
    double beta = 1.0 - cp;
    if (beta < 0.0 && beta >= -kTol) beta = 0.0;  // cumsum roundoff
    b.vertices.push_back({ca, beta});
  }

  // Snap the terminal vertex: cumulative sums land on (1, 0) up to roundoff.
  BoundaryVertex& last = b.vertices.back();
  if (std::abs(last.alpha - 1.0) <= kTol && std::abs(last.beta) <= kTol) {
    last = {1.0, 0.0};
  } else {
    b.vertices.push_back({1.0, 0.0});
  }
  return b;
}

PiecewiseLinearBoundary brute_force_boundary(const CategoricalPair& pair) {
  const std::size_t n = pair.size();
  if (n > 16) fail("BlowupLimit", "brute force supports at most 16 items");
  const std::size_t count = std::size_t{1} << n;

  std::vector<BoundaryVertex> pts(count);
  parallel_for(count, [&](std::size_t mask) {
    double qe = 0.0, pe = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) {
        qe += pair.q[i];
        pe += pair.p[i];
      }
    }
    pts[mask] = {qe, 1.0 - pe};
  });
  pts.push_back({1.0, 0.0});  // full set, exact endpoint against roundoff
  return lower_hull(std::move(pts));
}

double eval_boundary(const PiecewiseLinearBoundary& b, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) fail("DomainError", "alpha must lie in [0,1]");
  const auto& v = b.vertices;
  if (alpha <= v.front().alpha) return v.front().beta;
  auto it = std::lower_bound(v.begin(), v.end(), alpha,
                             [](const BoundaryVertex& w, double a) { return w.alpha < a; });
  if (it == v.end()) return v.back().beta;
  const auto& hi = *it;
  if (hi.alpha == alpha) return hi.beta;
  const auto& lo = *(it - 1);
  const double w = (alpha - lo.alpha) / (hi.alpha - lo.alpha);
  return lo.beta + w * (hi.beta - lo.beta);
}

bool region_contains(const PiecewiseLinearBoundary& b, double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0)) return false;
  const double lo = eval_boundary(b, alpha);
  const double hi = 1.0 - eval_boundary(b, 1.0 - alpha);
  return beta >= lo - kTol && beta <= hi + kTol;
}

void validate_boundary(const PiecewiseLinearBoundary& b) {
  const auto& v = b.vertices;
  if (v.size() < 2) fail("DomainError", "boundary needs at least two vertices");
  if (v.front().alpha != 0.0) fail("DomainError", "boundary must start at alpha = 0");
  if (v.back().alpha != 1.0 || v.back().beta != 0.0)
    fail("DomainError", "boundary must end at (1, 0)");
  double prev_slope = -kInf;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i].alpha > v[i - 1].alpha)) fail("DomainError", "alpha must strictly increase");
    if (!(v[i].beta <= v[i - 1].beta)) fail("DomainError", "beta must be nonincreasing");
    const double slope = (v[i].beta - v[i - 1].beta) / (v[i].alpha - v[i - 1].alpha);
    if (!(slope > prev_slope - kTol)) fail("DomainError", "boundary must be convex");
    prev_slope = slope;
  }
}

}  // namespace np
