#include "np/upper_bounds.hpp"

#include <algorithm>
#include <cmath>

#include "np/parallel.hpp"

namespace np {

namespace {

void check_q_rho(double q, double rho) {
  if (!(q > 0.0 && q < 1.0)) fail("ParamOutOfRange", "q must lie in (0,1)");
  if (!(rho > 0.0 && rho <= 1.0)) fail("ParamOutOfRange", "rho must lie in (0,1]");
}

}  // namespace

Line chernoff_tangent_line(double s, double q, double rho) {
  if (!(s > 0.0 && s < 2.0)) fail("ParamOutOfRange", "s must lie in (0,2)");
  check_q_rho(q, rho);
  const double c = std::pow(s, q) * std::pow(2.0 - s, 1.0 - q) * rho;
  return Line{2.0 - s, s, c, Line::Orientation::Upper};
}

BoundaryVertex chernoff_tangent_point(double s, double q, double rho) {
  if (!(s > 0.0 && s < 2.0)) fail("ParamOutOfRange", "s must lie in (0,2)");
  check_q_rho(q, rho);
  const double alpha = std::pow(s, q) * std::pow(2.0 - s, -q) * rho * (1.0 - q);
  const double beta = std::pow(s, q - 1.0) * std::pow(2.0 - s, 1.0 - q) * rho * q;
  return {alpha, beta};
}

double chernoff_envelope(double q, double rho, unsigned n, double alpha) {
  check_q_rho(q, rho);
  if (n < 1) fail("ParamOutOfRange", "sample count must be >= 1");
  if (!(alpha > 0.0 && alpha <= 1.0)) fail("ParamOutOfRange", "alpha must lie in (0,1]");
  const double c = std::pow(q, q) * std::pow(1.0 - q, 1.0 - q) * std::pow(rho, n);
  return std::pow(c, 1.0 / q) * std::pow(alpha, (q - 1.0) / q);
}

double refined_chernoff(double q, double rho, unsigned n, double alpha) {
  check_q_rho(q, rho);
  if (n < 1) fail("ParamOutOfRange", "sample count must be >= 1");
  if (!(alpha >= 0.0 && alpha <= 1.0)) fail("ParamOutOfRange", "alpha must lie in [0,1]");

  const double r = std::pow(rho, n);
  // Tangency abscissas of the chords through (0,1) and (1,0).
  const double alpha_left = (1.0 - q) * std::pow(r, 1.0 / (1.0 - q));
  const double alpha_right = 1.0 - q;
  if (alpha <= alpha_left) return 1.0 - std::pow(r, -1.0 / (1.0 - q)) * alpha;
  if (alpha >= alpha_right) return std::pow(r, 1.0 / q) * (1.0 - alpha);
  return chernoff_envelope(q, rho, n, alpha);
}

BoundCurve chernoff_envelope_curve(double q, double rho, unsigned n) {
  check_q_rho(q, rho);
  BoundCurve curve;
  curve.kind = "chernoff_envelope";
  curve.value = rho;
  curve.q = q;
  curve.samples = n;
  curve.orientation = Line::Orientation::Upper;
  curve.eval = [q, rho, n](double alpha) { return chernoff_envelope(q, rho, n, alpha); };
  return curve;
}

BoundCurve refined_chernoff_curve(double q, double rho, unsigned n) {
  check_q_rho(q, rho);
  BoundCurve curve;
  curve.kind = "refined_chernoff";
  curve.value = rho;
  curve.q = q;
  curve.samples = n;
  curve.orientation = Line::Orientation::Upper;
  curve.eval = [q, rho, n](double alpha) { return refined_chernoff(q, rho, n, alpha); };
  return curve;
}

PiecewiseLinearBoundary convex_refine(const std::function<double(double)>& g, std::size_t grid) {
  if (grid < 2) fail("DegenerateGrid", "hull grid must have at least 2 points");

  std::vector<BoundaryVertex> pts(grid + 2);
  pts[0] = {0.0, 1.0};
  const double step = 1.0 / static_cast<double>(grid - 1);
  parallel_for(grid, [&](std::size_t i) {
    const double alpha = static_cast<double>(i) * step;
    double v = g(alpha);
    if (std::isnan(v)) v = kInf;
    v = std::min(v, 1.0 - alpha);
    pts[i + 1] = {alpha, std::max(0.0, v)};
  });
  pts[grid + 1] = {1.0, 0.0};

  std::sort(pts.begin(), pts.end(), [](const BoundaryVertex& l, const BoundaryVertex& r) {
    return l.alpha != r.alpha ? l.alpha < r.alpha : l.beta < r.beta;
  });
  std::vector<BoundaryVertex> hull;
  for (const auto& v : pts) {
    if (!hull.empty() && hull.back().alpha == v.alpha) continue;
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      const double cross =
          (b.alpha - a.alpha) * (v.beta - a.beta) - (b.beta - a.beta) * (v.alpha - a.alpha);
      if (cross > 1e-14) break;
      hull.pop_back();
    }
    hull.push_back(v);
  }
  return PiecewiseLinearBoundary{std::move(hull)};
}

unsigned min_sample_size(double q, double rho, double alpha, double beta) {
  if (!(q > 0.0 && q < 1.0)) fail("ParamOutOfRange", "q must lie in (0,1)");
  if (rho >= 1.0) fail("DegenerateTarget", "rho = 1 admits no finite sample size");
  if (!(rho > 0.0)) fail("ParamOutOfRange", "rho must lie in (0,1)");
  if (!(alpha > 0.0 && beta > 0.0 && alpha + beta < 1.0))
    fail("DomainError", "target must lie strictly below the line of ignorance");

  const double h = std::pow(1.0 - beta, q) * std::pow(alpha, 1.0 - q) +
                   std::pow(beta, q) * std::pow(1.0 - alpha, 1.0 - q);
  const double n = std::ceil(std::log(h) / std::log(rho));
  return n < 1.0 ? 1u : static_cast<unsigned>(n);
}

unsigned achievable_sample_size(double q, double rho, double alpha, double beta, unsigned cap) {
  check_q_rho(q, rho);
  if (!(alpha > 0.0 && alpha < 1.0 && beta > 0.0 && beta < 1.0))
    fail("DomainError", "target must lie inside the open square");
  if (rho == 1.0) return 0;

  const auto reaches = [&](unsigned n) { return refined_chernoff(q, rho, n, alpha) <= beta; };
  if (reaches(1)) return 1;
  unsigned hi = 2;
  while (!reaches(hi)) {
    if (hi >= cap) return 0;
    hi *= 2;
  }
  unsigned lo = hi / 2;  // fails
  while (hi - lo > 1) {
    const unsigned mid = lo + (hi - lo) / 2;
    (reaches(mid) ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace np
