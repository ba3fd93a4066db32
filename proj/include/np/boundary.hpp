#pragma once

#include <vector>

#include "np/distributions.hpp"

namespace np {

struct BoundaryVertex {
  double alpha;
  double beta;
};

/// The Neyman-Pearson boundary B(alpha) of a finite pair: a convex,
/// nonincreasing polyline from (0, 1 - P[q=0]) to (1, 0). A first vertex
/// (0, b0) with b0 < 1 encodes the vertical drop at alpha = 0 caused by
/// P-mass on {q = 0}.
struct PiecewiseLinearBoundary {
  std::vector<BoundaryVertex> vertices;  // strictly increasing alpha
};

/// Boundary via the likelihood ratio profile: vertex j is the cumulative
/// (Q-mass, 1 - P-mass) of the top-j ratio segments.
PiecewiseLinearBoundary exact_boundary(const CategoricalPair& pair);

/// Independent oracle: enumerates all 2^n test sets E, maps each to
/// (Q(E), 1 - P(E)) and takes the lower convex hull. Errors: BlowupLimit
/// for supports larger than 16 items.
PiecewiseLinearBoundary brute_force_boundary(const CategoricalPair& pair);

/// B(alpha) by linear interpolation; at alpha = 0 returns the post-drop
/// value. Errors: DomainError outside [0,1].
double eval_boundary(const PiecewiseLinearBoundary& b, double alpha);

/// Point-in-region test: B(alpha) <= beta <= 1 - B(1 - alpha) within 1e-12
/// (the region is the boundary's epigraph cut by its point reflection
/// through (1/2, 1/2)).
bool region_contains(const PiecewiseLinearBoundary& b, double alpha, double beta);

/// Construction-time validation of the polyline invariants (monotone,
/// convex, endpoints). Used by tests and by deserialized boundaries.
void validate_boundary(const PiecewiseLinearBoundary& b);

}  // namespace np
