#pragma once

#include "np/boundary.hpp"
#include "np/lower_bounds.hpp"

namespace np {

struct PriorPair {
  double pi_p;
  double pi_q;
};

/// Errors: DomainError unless pi_p in (0,1).
PriorPair make_prior(double pi_p);

struct BayesError {
  double ber;
  BoundaryVertex argmin;  // ties broken toward smaller alpha
};

/// BER = min over vertices of pi_p * alpha + pi_q * beta; the minimum of a
/// linear functional over a convex polyline sits at a vertex.
BayesError bayes_error(const PiecewiseLinearBoundary& b, const PriorPair& prior);

struct BerInterval {
  double lb;
  double ub;
};

/// Bounds BER by scanning the prior functional along sampled lower/upper
/// curves. Errors: DegenerateGrid.
BerInterval ber_bounds(const std::function<double(double)>& lower,
                       const std::function<double(double)>& upper, const PriorPair& prior,
                       std::size_t grid);

struct ConjugateValue {
  double Bstar;  // B*(z) = max over vertices of (z * alpha - beta)
  double pi_p;   // z / (z - 1)
  double ber;    // B*(z) / (z - 1), equals bayes_error at that prior
};

/// Convex conjugate of the boundary at slope z < 0.
/// Errors: NonNegativeSlope.
ConjugateValue conjugate(const PiecewiseLinearBoundary& b, double z);

struct RocPoint {
  double fpr;
  double tpr;
};

/// The optimal ROC curve: boundary vertices mapped (alpha, beta) -> (alpha, 1 - beta).
std::vector<RocPoint> roc_points(const PiecewiseLinearBoundary& b);

/// One-parameter randomization between the boundary test at t and the
/// ignorance test at t, hitting a target (t, g) in between.
struct MixingPlan {
  double t;
  double lambda;  // weight on the boundary test
  BoundaryVertex boundary_point;
  BoundaryVertex ignorance_point;

  BoundaryVertex realized() const {
    return {t, lambda * boundary_point.beta + (1.0 - lambda) * ignorance_point.beta};
  }
};

/// Solves g = lambda * B(t) + (1 - lambda) * (1 - t).
/// Errors: TargetOutsideRegion unless B(t) <= g <= 1 - t.
MixingPlan roc_mixing_weight(const PiecewiseLinearBoundary& b, double t, double g);

}  // namespace np
