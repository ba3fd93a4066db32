#pragma once

#include <string>

#include "np/common.hpp"

namespace np {

/// A convex generator f with f(1) = 0, evaluable on [0, inf) together with
/// its slope at infinity f'(inf) = lim t*f(1/t). Values may be +inf
/// (indicator outside its window, chi2/kl slope at infinity).
class FGenerator {
 public:
  enum class Kind { Tvd, Kl, ReverseKl, Hellinger2, Alpha, HockeyStick, Chi2, Indicator };

  static FGenerator tvd();
  static FGenerator kl();
  static FGenerator reverse_kl();
  static FGenerator hellinger2();                // f = (1 - sqrt(t))^2 / 2, so D = 1 - rho
  static FGenerator alpha(double q);             // q not in {0, 1}
  // f = max(t - gamma, 0) for gamma >= 1; the affine-normalized
  // max(gamma - t, 0) for gamma in [0, 1) so f(1) = 0 holds family-wide.
  static FGenerator hockey_stick(double gamma);
  static FGenerator chi2();                      // f = (t - 1)^2
  static FGenerator indicator(double l, double u);  // 0 on (l, u), +inf outside

  Kind kind() const { return kind_; }
  double param_a() const { return a_; }  // alpha q / hockey gamma / indicator l
  double param_b() const { return b_; }  // indicator u

  /// f(t) for t >= 0, with 0*log 0 = 0 for the KL-type kinds.
  double operator()(double t) const;

  /// f'(inf), computed analytically per kind (never by numeric limiting).
  double slope_at_infinity() const;

  /// The conjugate generator f*(t) = t f(1/t), which satisfies
  /// D_{f*}(Q||P) = D_f(P||Q). Defined for the closed kinds
  /// kl<->reverse_kl, tvd, hellinger2, alpha(q)<->alpha(1-q);
  /// errors with KindMismatch otherwise.
  FGenerator conjugate() const;

  /// CLI spec string: tvd, kl, rkl, h2, alpha:q, hs:gamma, chi2, ind:l,u.
  static FGenerator parse(const std::string& spec);
  std::string spec_string() const;

 private:
  FGenerator(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}
  Kind kind_;
  double a_ = 0.0;
  double b_ = 0.0;
};

/// f(t) for finite t, or f'(inf) for the t = +inf sentinel.
double generator_value(const FGenerator& gen, double t);

}  // namespace np
