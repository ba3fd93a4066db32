#include "np/lower_bounds.hpp"

#include <algorithm>
#include <cmath>

namespace np {

namespace {

constexpr double kBisectWidth = 1e-12;
constexpr int kBisectCap = 200;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

// Smallest beta in [0, hi] with constraint(beta) <= D, where constraint is
// convex, nonincreasing on [0, hi] and reaches a feasible value at hi.
template <class Fn>
double smallest_feasible(const Fn& constraint, double D, double hi) {
  if (constraint(0.0) <= D) return 0.0;
  double lo = 0.0;  // infeasible
  double up = hi;   // feasible
  for (int it = 0; it < kBisectCap && up - lo > kBisectWidth; ++it) {
    const double mid = 0.5 * (lo + up);
    if (constraint(mid) <= D)
      up = mid;
    else
      lo = mid;
  }
  return up;
}

double arcsin_clamped(double x) { return std::asin(clamp01(x)); }

}  // namespace

double generic_lower(const FGenerator& gen, double D, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) fail("DomainError", "alpha must lie in [0,1]");
  if (std::isnan(D) || D < 0.0) fail("NegativeDivergence", "divergence must be >= 0");
  if (std::isinf(D)) return 0.0;  // vacuous bound
  if (alpha == 1.0) return 0.0;

  if (alpha == 0.0) {
    // Continuity limit of the curve: alpha*f((1-beta)/alpha) -> (1-beta) f'(inf).
    const double slope_inf = gen.slope_at_infinity();
    if (std::isinf(slope_inf)) return 1.0;
    const auto constraint = [&](double beta) { return gen(beta) + (1.0 - beta) * slope_inf; };
    return smallest_feasible(constraint, D, 1.0);
  }

  const double rest = 1.0 - alpha;
  const auto constraint = [&](double beta) {
    return xmul(rest, gen(beta / rest)) + xmul(alpha, gen((1.0 - beta) / alpha));
  };
  return smallest_feasible(constraint, D, rest);
}

Line hockey_stick_line(double gamma, double d_gamma) {
  if (!(gamma >= 0.0)) fail("ParamOutOfRange", "gamma must be >= 0");
  if (!(d_gamma >= 0.0)) fail("NegativeDivergence", "divergence must be >= 0");
  return Line{gamma, 1.0, 1.0 - d_gamma, Line::Orientation::Lower};
}

double hockey_stick_divergence(const CategoricalPair& pair, double gamma) {
  double d = 0.0;
  for (std::size_t i = 0; i < pair.size(); ++i)
    d += std::max(pair.p[i] - gamma * pair.q[i], 0.0);
  return d;
}

double hockey_envelope(const CategoricalPair& pair, double alpha) {
  double best = 0.0;  // the gamma -> inf limit line contributes beta >= 0
  auto consider = [&](double gamma) {
    const double d = hockey_stick_divergence(pair, gamma);
    best = std::max(best, -gamma * alpha + 1.0 - d);
  };
  consider(0.0);
  for (const LRSegment& seg : lr_profile(pair).segments)
    if (std::isfinite(seg.ratio)) consider(seg.ratio);
  return best;
}

Line hellinger_supporting_line(double s, double rho) {
  if (!(s > 0.0 && s < 2.0)) fail("ParamOutOfRange", "s must lie in (0,2)");
  if (!(rho > 0.0 && rho <= 1.0)) fail("ParamOutOfRange", "rho must lie in (0,1]");
  const double c = 1.0 - std::sqrt(std::max(0.0, 1.0 - s * (2.0 - s) * rho * rho));
  return Line{s, 2.0 - s, c, Line::Orientation::Lower};
}

namespace {

double hellinger_closed_form(double rho_n, double alpha) {
  const double gap = arcsin_clamped(rho_n) - arcsin_clamped(std::sqrt(alpha));
  if (gap <= 0.0) return 0.0;
  const double s = std::sin(gap);
  return s * s;
}

// Coarse-graining functional for the alpha-divergence bound, written so that
// rho is the coefficient sum p^q q^(1-q):
//   h(alpha, beta) = (1-beta)^q alpha^(1-q) + beta^q (1-alpha)^(1-q) >= rho^n.
// h is increasing in beta on [0, 1-alpha] and reaches 1 at the ignorance line.
double alpha_div_bound(double q, double rho_n, double alpha) {
  if (alpha >= 1.0) return 0.0;
  const auto deficit = [&](double beta) {
    const double h = std::pow(1.0 - beta, q) * std::pow(alpha, 1.0 - q) +
                     std::pow(beta, q) * std::pow(1.0 - alpha, 1.0 - q);
    return -h;  // smallest beta with h >= rho_n
  };
  return smallest_feasible(deficit, -rho_n, 1.0 - alpha);
}

double chi2_forward_bound(double chi2, double alpha) {
  return std::max(0.0, 1.0 - alpha - std::sqrt(chi2 * alpha * (1.0 - alpha)));
}

// Smallest nonnegative root of (1 - beta - alpha)^2 = chi2 * beta (1 - beta).
double chi2_reverse_bound(double chi2, double alpha) {
  if (chi2 == 0.0) return 1.0 - alpha;
  const double a = 1.0 - alpha;
  const double disc = chi2 * (chi2 + 4.0 * alpha * a);
  const double root = (2.0 * a + chi2 - std::sqrt(disc)) / (2.0 * (1.0 + chi2));
  return std::max(0.0, root);
}

double indicator_bound(double l, double u, double alpha) {
  double best = std::max(-l * alpha + l, -u * alpha + 1.0);
  best = std::max(best, (-alpha + 1.0) / u);
  if (l > 0.0) best = std::max(best, -alpha / l + 1.0);
  return std::max(0.0, best);
}

}  // namespace

double named_lower(LowerKind kind, const LowerParams& params, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0)) fail("DomainError", "alpha must lie in [0,1]");
  if (params.n < 1) fail("ValueOutOfRange", "sample count must be >= 1");
  const bool tensorizable = kind == LowerKind::Hellinger || kind == LowerKind::Alpha;
  if (params.n > 1 && !tensorizable)
    fail("KindMismatch", "only the hellinger/alpha kinds tensorize");

  switch (kind) {
    case LowerKind::Tvd:
      if (!(params.value >= 0.0 && params.value <= 1.0))
        fail("ValueOutOfRange", "TVD must lie in [0,1]");
      return std::max(0.0, 1.0 - params.value - alpha);
    case LowerKind::Hellinger: {
      if (!(params.value >= 0.0 && params.value <= 1.0))
        fail("ValueOutOfRange", "Hellinger affinity must lie in [0,1]");
      return hellinger_closed_form(std::pow(params.value, params.n), alpha);
    }
    case LowerKind::Kl:
      if (!(params.value >= 0.0)) fail("ValueOutOfRange", "KL must be >= 0");
      return generic_lower(FGenerator::kl(), params.value, alpha);
    case LowerKind::Alpha: {
      if (!(params.value >= 0.0 && params.value <= 1.0))
        fail("ValueOutOfRange", "Chernoff coefficient must lie in [0,1]");
      if (!(params.q > 0.0 && params.q < 1.0))
        fail("ValueOutOfRange", "alpha kind requires q in (0,1)");
      if (alpha == 0.0) {
        // h(0, beta) = beta^q; smallest beta with h >= rho^n.
        return std::pow(std::pow(params.value, params.n), 1.0 / params.q);
      }
      return alpha_div_bound(params.q, std::pow(params.value, params.n), alpha);
    }
    case LowerKind::Chi2Fwd:
      if (!(params.value >= 0.0)) fail("ValueOutOfRange", "chi2 must be >= 0");
      if (std::isinf(params.value)) return 0.0;
      return chi2_forward_bound(params.value, alpha);
    case LowerKind::Chi2Rev:
      if (!(params.value >= 0.0)) fail("ValueOutOfRange", "chi2 must be >= 0");
      if (std::isinf(params.value)) return 0.0;
      return chi2_reverse_bound(params.value, alpha);
    case LowerKind::Pinsker:
      if (!(params.value >= 0.0)) fail("ValueOutOfRange", "KL must be >= 0");
      if (std::isinf(params.value)) return 0.0;
      return std::max(0.0, 1.0 - std::sqrt(0.5 * params.value) - alpha);
    case LowerKind::Indicator:
      if (!(params.l >= 0.0 && params.l <= 1.0 && params.u > 1.0))
        fail("ValueOutOfRange", "indicator requires 0 <= l <= 1 < u");
      return indicator_bound(params.l, params.u, alpha);
  }
  fail("KindMismatch", "unhandled lower bound kind");
}

BoundCurve named_lower_curve(LowerKind kind, const LowerParams& params) {
  static const char* names[] = {"tvd", "hellinger", "kl", "alpha", "chi2_fwd", "chi2_rev",
                                "pinsker", "indicator"};
  BoundCurve curve;
  curve.kind = names[static_cast<int>(kind)];
  curve.value = params.value;
  curve.q = params.q;
  curve.samples = params.n;
  curve.orientation = Line::Orientation::Lower;
  curve.eval = [kind, params](double alpha) { return named_lower(kind, params, alpha); };
  return curve;
}

BoundCurve generic_lower_curve(const FGenerator& gen, double D) {
  BoundCurve curve;
  curve.kind = gen.spec_string();
  curve.value = D;
  curve.orientation = Line::Orientation::Lower;
  curve.eval = [gen, D](double alpha) { return generic_lower(gen, D, alpha); };
  return curve;
}

LowerKind parse_lower_kind(const std::string& name) {
  if (name == "tvd") return LowerKind::Tvd;
  if (name == "hellinger") return LowerKind::Hellinger;
  if (name == "kl") return LowerKind::Kl;
  if (name == "alpha") return LowerKind::Alpha;
  if (name == "chi2_fwd") return LowerKind::Chi2Fwd;
  if (name == "chi2_rev") return LowerKind::Chi2Rev;
  if (name == "pinsker") return LowerKind::Pinsker;
  if (name == "indicator") return LowerKind::Indicator;
  fail("KindMismatch", "unknown lower bound kind " + name);
}

}  // namespace np
