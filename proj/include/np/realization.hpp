#pragma once

#include <functional>

#include "np/boundary.hpp"

namespace np {

/// Tabulated convex cdf F on [0,1] with F(0) = 0, F(1) = 1. Pairing Q ~ F
/// with P = uniform mass realizes the boundary F was inverted from.
struct CdfTable {
  std::vector<double> knots;   // sorted x values in [0,1]
  std::vector<double> values;  // F(x), nondecreasing
};

/// Validates monotonicity, range and midpoint convexity (within 1e-9).
void validate_cdf(const CdfTable& table);

/// Builds the categorical pair whose exact boundary is the convex polyline
/// through the given interior vertices (the anchors (0,1) and (1,0) are
/// implied): q_i = alpha_i - alpha_{i-1}, p_i = beta_{i-1} - beta_i, plus a
/// terminal item carrying the leftover mass. Density ratios equal the
/// negative slopes. Errors: NonConvexInput, NonMonotoneInput.
CategoricalPair realize_categorical(const std::vector<BoundaryVertex>& vertices);

/// Unit-interval realization: tabulates F(x) = B^{-1}(1 - x) on `knots`
/// uniform x values (B inverted by bisection to 1e-12). Requires B
/// continuous, strictly decreasing where positive, with B(1) = 0.
/// Errors: NonInvertibleBoundary.
CdfTable realize_unit_interval(const std::function<double(double)>& boundary,
                               std::size_t knots);
CdfTable realize_unit_interval(const PiecewiseLinearBoundary& boundary, std::size_t knots);

/// Sup over `samples` uniform alpha values of |B_pair(alpha) - target(alpha)|.
double verify_realization(const CategoricalPair& pair,
                          const std::function<double(double)>& target, std::size_t samples);

}  // namespace np
