#pragma once

#include "np/lower_bounds.hpp"

namespace np {

/// Tangent line of the Chernoff upper-bound family:
/// (2-s) alpha + s beta = s^q (2-s)^(1-q) rho, s in (0,2).
/// Errors: ParamOutOfRange.
Line chernoff_tangent_line(double s, double q, double rho);

/// Point where the tangent at parameter s touches the envelope:
/// alpha = s^q (2-s)^(-q) rho (1-q), beta = s^(q-1) (2-s)^(1-q) rho q.
BoundaryVertex chernoff_tangent_point(double s, double q, double rho);

/// Envelope of the tangent family, for n i.i.d. samples (rho -> rho^n):
/// beta = (q^q (1-q)^(1-q) rho^n)^(1/q) alpha^((q-1)/q).
/// For q = 1/2 this is the hyperbola rho^(2n) / (4 alpha).
double chernoff_envelope(double q, double rho, unsigned n, double alpha);

/// The envelope refined by the lower convex envelope with the line of
/// ignorance: chord from (0,1) to the tangency at alpha = (1-q) r^(1/(1-q)),
/// the raw envelope in the middle, chord from the tangency at alpha = 1-q
/// down to (1,0), where r = rho^n.
double refined_chernoff(double q, double rho, unsigned n, double alpha);

BoundCurve chernoff_envelope_curve(double q, double rho, unsigned n);
BoundCurve refined_chernoff_curve(double q, double rho, unsigned n);

/// Numeric refinement of an arbitrary upper bound g: the lower convex
/// envelope of min{g(alpha), 1 - alpha} on a uniform grid (default 4097),
/// anchored at (0,1) and (1,0). Errors: DegenerateGrid.
PiecewiseLinearBoundary convex_refine(const std::function<double(double)>& g,
                                      std::size_t grid = 4097);

/// Smallest n such that the tensorized alpha-divergence lower bound no
/// longer excludes (alpha, beta):
///   n = max(1, ceil(ln h / ln rho)),
///   h = (1-beta)^q alpha^(1-q) + beta^q (1-alpha)^(1-q),
/// where rho is the coefficient sum p^q q^(1-q).
/// Errors: DegenerateTarget (rho = 1), DomainError (target outside the open
/// triangle below the ignorance line).
unsigned min_sample_size(double q, double rho, double alpha, double beta);

/// Smallest n with refined_chernoff(q, rho, n, alpha) <= beta, by doubling
/// then bisection; 0 when no finite n works (rho = 1).
unsigned achievable_sample_size(double q, double rho, double alpha, double beta,
                                unsigned cap = 1u << 26);

}  // namespace np
