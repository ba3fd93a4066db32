#include "np/decision.hpp"

#include <cmath>

namespace np {

PriorPair make_prior(double pi_p) {
  if (!(pi_p > 0.0 && pi_p < 1.0)) fail("DomainError", "prior must lie in (0,1)");
  return {pi_p, 1.0 - pi_p};
}

BayesError bayes_error(const PiecewiseLinearBoundary& b, const PriorPair& prior) {
  BayesError best{kInf, {0.0, 0.0}};
  for (const auto& v : b.vertices) {
    const double cost = prior.pi_p * v.alpha + prior.pi_q * v.beta;
    if (cost < best.ber) best = {cost, v};  // strict: ties keep the smaller alpha
  }
  return best;
}

BerInterval ber_bounds(const std::function<double(double)>& lower,
                       const std::function<double(double)>& upper, const PriorPair& prior,
                       std::size_t grid) {
  if (grid < 2) fail("DegenerateGrid", "grid must have at least 2 points");
  double lb = kInf, ub = kInf;
  const double step = 1.0 / static_cast<double>(grid - 1);
  for (std::size_t i = 0; i < grid; ++i) {
    const double alpha = static_cast<double>(i) * step;
    lb = std::min(lb, prior.pi_p * alpha + prior.pi_q * lower(alpha));
    ub = std::min(ub, prior.pi_p * alpha + prior.pi_q * upper(alpha));
  }
  return {lb, ub};
}

ConjugateValue conjugate(const PiecewiseLinearBoundary& b, double z) {
  if (!(z < 0.0)) fail("NonNegativeSlope", "conjugate defined for slopes z < 0");
  double bstar = -kInf;
  for (const auto& v : b.vertices) bstar = std::max(bstar, z * v.alpha - v.beta);
  const double pi_p = z / (z - 1.0);
  return {bstar, pi_p, bstar / (z - 1.0)};
}

std::vector<RocPoint> roc_points(const PiecewiseLinearBoundary& b) {
  std::vector<RocPoint> out;
  out.reserve(b.vertices.size());
  for (const auto& v : b.vertices) out.push_back({v.alpha, 1.0 - v.beta});
  return out;
}

MixingPlan roc_mixing_weight(const PiecewiseLinearBoundary& b, double t, double g) {
  if (!(t > 0.0 && t <= 1.0)) fail("DomainError", "t must lie in (0,1]");
  const double floor = eval_boundary(b, t);
  const double ceiling = 1.0 - t;
  if (g < floor - 1e-12 || g > ceiling + 1e-12)
    fail("TargetOutsideRegion", "target must lie between the boundary and the ignorance line");

  MixingPlan plan;
  plan.t = t;
  plan.boundary_point = {t, floor};
  plan.ignorance_point = {t, ceiling};
  plan.lambda = floor < ceiling ? (ceiling - g) / (ceiling - floor) : 1.0;
  plan.lambda = std::min(1.0, std::max(0.0, plan.lambda));
  return plan;
}

}  // namespace np
