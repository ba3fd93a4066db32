#include "np/generators.hpp"

#include <cmath>
#include <cstdio>

namespace np {

FGenerator FGenerator::tvd() { return {Kind::Tvd, 0.0, 0.0}; }
FGenerator FGenerator::kl() { return {Kind::Kl, 0.0, 0.0}; }
FGenerator FGenerator::reverse_kl() { return {Kind::ReverseKl, 0.0, 0.0}; }
FGenerator FGenerator::hellinger2() { return {Kind::Hellinger2, 0.0, 0.0}; }

FGenerator FGenerator::alpha(double q) {
  if (q == 0.0 || q == 1.0 || !std::isfinite(q))
    fail("ParamOutOfRange", "alpha generator requires q outside {0, 1}");
  return {Kind::Alpha, q, 0.0};
}

FGenerator FGenerator::hockey_stick(double gamma) {
  if (!(gamma >= 0.0)) fail("ParamOutOfRange", "hockey stick requires gamma >= 0");
  return {Kind::HockeyStick, gamma, 0.0};
}

FGenerator FGenerator::chi2() { return {Kind::Chi2, 0.0, 0.0}; }

FGenerator FGenerator::indicator(double l, double u) {
  if (!(l >= 0.0 && l <= 1.0 && u > 1.0))
    fail("ParamOutOfRange", "indicator requires 0 <= l <= 1 < u");
  return {Kind::Indicator, l, u};
}

double FGenerator::operator()(double t) const {
  if (!(t >= 0.0)) fail("DomainError", "generator evaluated at t < 0");
  switch (kind_) {
    case Kind::Tvd:
      return 0.5 * std::abs(t - 1.0);
    case Kind::Kl:
      return t == 0.0 ? 0.0 : t * std::log(t);
    case Kind::ReverseKl:
      return t == 0.0 ? kInf : -std::log(t);
    case Kind::Hellinger2: {
      const double d = 1.0 - std::sqrt(t);
      return 0.5 * d * d;
    }
    case Kind::Alpha: {
      const double q = a_;
      return (q + (1.0 - q) * t - std::pow(t, 1.0 - q)) / (q * (1.0 - q));
    }
    case Kind::HockeyStick:
      // For gamma < 1, max(t - gamma, 0) has f(1) != 0; the affine-equivalent
      // generator with f(1) = 0 is max(gamma - t, 0) (same bound, divergence
      // shifted by the constant 1 - gamma).
      return a_ >= 1.0 ? std::max(t - a_, 0.0) : std::max(a_ - t, 0.0);
    case Kind::Chi2:
      return (t - 1.0) * (t - 1.0);
    case Kind::Indicator:
      // Open window (l, u); t = 1 always admissible since f(1) = 0.
      return (t > a_ && t < b_) || t == 1.0 ? 0.0 : kInf;
  }
  return 0.0;
}

double FGenerator::slope_at_infinity() const {
  switch (kind_) {
    case Kind::Tvd: return 0.5;
    case Kind::Kl: return kInf;
    case Kind::ReverseKl: return 0.0;
    case Kind::Hellinger2: return 0.5;
    case Kind::Alpha: {
      const double q = a_;
      // lim t*f(1/t) = lim (q t + (1-q) - t^q) / (q(1-q)); t^q dominates for q < 0.
      if (q < 0.0) return kInf;
      return 1.0 / q;
    }
    case Kind::HockeyStick: return a_ >= 1.0 ? 1.0 : 0.0;
    case Kind::Chi2: return kInf;
    case Kind::Indicator: return kInf;  // u is finite, so 1/t leaves (l, u)
  }
  return 0.0;
}

FGenerator FGenerator::conjugate() const {
  switch (kind_) {
    case Kind::Tvd: return tvd();
    case Kind::Kl: return reverse_kl();
    case Kind::ReverseKl: return kl();
    case Kind::Hellinger2: return hellinger2();
    case Kind::Alpha: return alpha(1.0 - a_);
    default:
      fail("KindMismatch", "conjugate generator implemented only for tvd/kl/rkl/h2/alpha");
  }
}

FGenerator FGenerator::parse(const std::string& spec) {
  if (spec == "tvd") return tvd();
  if (spec == "kl") return kl();
  if (spec == "rkl") return reverse_kl();
  if (spec == "h2") return hellinger2();
  if (spec == "chi2") return chi2();
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string head = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);
    try {
      if (head == "alpha") return alpha(std::stod(args));
      if (head == "hs") return hockey_stick(std::stod(args));
      if (head == "ind") {
        const auto comma = args.find(',');
        if (comma == std::string::npos) fail("ParamOutOfRange", "ind needs l,u");
        return indicator(std::stod(args.substr(0, comma)), std::stod(args.substr(comma + 1)));
      }
    } catch (const Error&) {
      throw;
    } catch (const std::exception&) {
      fail("ParamOutOfRange", "unparsable generator parameters in " + spec);
    }
  }
  fail("ParamOutOfRange", "unknown generator spec " + spec);
}

std::string FGenerator::spec_string() const {
  char buf[64];
  switch (kind_) {
    case Kind::Tvd: return "tvd";
    case Kind::Kl: return "kl";
    case Kind::ReverseKl: return "rkl";
    case Kind::Hellinger2: return "h2";
    case Kind::Chi2: return "chi2";
    case Kind::Alpha:
      std::snprintf(buf, sizeof buf, "alpha:%g", a_);
      return buf;
    case Kind::HockeyStick:
      std::snprintf(buf, sizeof buf, "hs:%g", a_);
      return buf;
    case Kind::Indicator:
      std::snprintf(buf, sizeof buf, "ind:%g,%g", a_, b_);
      return buf;
  }
  return "?";
}

double generator_value(const FGenerator& gen, double t) {
  if (std::isinf(t)) return gen.slope_at_infinity();
  return gen(t);
}

}  // namespace np
