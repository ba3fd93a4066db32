#include "np/divergences.hpp"

#include <cmath>

namespace np {

DivergenceValue f_divergence(const CategoricalPair& pair, const FGenerator& gen) {
  double sum = 0.0;
  double p_on_null = 0.0;  // P-mass where q = 0
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const double pi = pair.p[i];
    const double qi = pair.q[i];
    if (qi == 0.0) {
      p_on_null += pi;
      continue;
    }
    sum += xmul(gen(pi / qi), qi);
    if (std::isinf(sum)) return {kInf};
  }
  sum += xmul(gen.slope_at_infinity(), p_on_null);
  return {sum};
}

double chernoff_coefficient(const CategoricalPair& pair, double q) {
  if (!(q > 0.0 && q < 1.0)) fail("ExponentOutOfRange", "chernoff coefficient needs q in (0,1)");
  double rho = 0.0;
  for (std::size_t i = 0; i < pair.size(); ++i) {
    const double pi = pair.p[i];
    const double qi = pair.q[i];
    if (pi == 0.0 || qi == 0.0) continue;  // 0^x = 0 kills the term
    rho += std::pow(pi, q) * std::pow(qi, 1.0 - q);
  }
  return std::min(rho, 1.0);  // roundoff guard; rho <= 1 by Hoelder
}

DivergenceValue alpha_divergence(const CategoricalPair& pair, double q) {
  if (q == 0.0) return f_divergence(pair, FGenerator::kl());
  if (q == 1.0) return f_divergence(pair, FGenerator::reverse_kl());
  if (!(q > 0.0 && q < 1.0))
    fail("ExponentOutOfRange", "alpha divergence implemented for q in [0,1]");
  const double rho = chernoff_coefficient(pair, q);
  return {(1.0 - rho) / (q * (1.0 - q))};
}

}  // namespace np
