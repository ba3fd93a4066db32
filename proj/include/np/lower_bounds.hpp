#pragma once

#include <functional>
#include <string>
#include <vector>

#include "np/boundary.hpp"
#include "np/divergences.hpp"

namespace np {

/// A bound line a*alpha + b*beta = c. Lower-oriented lines have the feasible
/// region on the side a*alpha + b*beta >= c; upper-oriented tangents bound the
/// boundary from above.
struct Line {
  double a;
  double b;
  double c;
  enum class Orientation { Lower, Upper } orientation;

  /// beta implied at a given alpha (requires b != 0).
  double beta_at(double alpha) const { return (c - a * alpha) / b; }
};

/// A pointwise-evaluable beta(alpha) on [0,1] with provenance metadata:
/// which divergence generated it, at what value, and for how many i.i.d.
/// samples (tensorization count).
struct BoundCurve {
  std::string kind;
  double value = 0.0;         // divergence value or coefficient rho
  double q = 0.0;             // order parameter where applicable
  unsigned samples = 1;       // tensorization count n
  Line::Orientation orientation = Line::Orientation::Lower;
  std::function<double(double)> eval;

  double operator()(double alpha) const { return eval(alpha); }
};

/// The general bound of the theory: the smallest beta in [0, 1-alpha] with
///   L(alpha, beta) = (1-alpha) f(beta/(1-alpha)) + alpha f((1-beta)/alpha) <= D.
/// L is convex in beta, zero at beta = 1-alpha and nonincreasing on the
/// interval, so bisection (to absolute width 1e-12) is safe. Endpoints
/// follow the curve's continuity limits: at alpha = 0 the constraint is
/// f(beta) + (1-beta) f'(inf) <= D, at alpha = 1 the bound is 0.
/// Errors: DomainError, NegativeDivergence.
double generic_lower(const FGenerator& gen, double D, double alpha);

enum class LowerKind { Tvd, Hellinger, Kl, Alpha, Chi2Fwd, Chi2Rev, Pinsker, Indicator };

struct LowerParams {
  double value = 0.0;   // divergence value; for hellinger/alpha the coefficient rho
  double q = 0.5;       // alpha-divergence order
  double l = 0.0;       // indicator essinf
  double u = 2.0;       // indicator esssup
  unsigned n = 1;       // i.i.d. sample count; only hellinger/alpha tensorize
};

/// Closed-form / bisected specializations of the general bound.
/// Errors: KindMismatch (n > 1 on a non-tensorizable kind), ValueOutOfRange.
double named_lower(LowerKind kind, const LowerParams& params, double alpha);

BoundCurve named_lower_curve(LowerKind kind, const LowerParams& params);
BoundCurve generic_lower_curve(const FGenerator& gen, double D);

LowerKind parse_lower_kind(const std::string& name);

/// Supporting line from the hockey-stick divergence at threshold gamma:
/// beta >= -gamma * alpha + 1 - D_gamma(P||Q).
Line hockey_stick_line(double gamma, double d_gamma);

/// Hockey-stick divergence D_gamma(P||Q) = sum max(p_i - gamma q_i, 0).
double hockey_stick_divergence(const CategoricalPair& pair, double gamma);

/// Envelope of the pair's supporting lines: max over gamma in
/// {finite likelihood ratios} U {0}, clamped at 0. Recovers the exact
/// boundary pointwise.
double hockey_envelope(const CategoricalPair& pair, double alpha);

/// Supporting line of the closed-form Hellinger curve:
/// s*alpha + (2-s)*beta = 1 - sqrt(1 - s(2-s) rho^2), s in (0,2).
/// Errors: ParamOutOfRange.
Line hellinger_supporting_line(double s, double rho);

}  // namespace np
