#pragma once

#include "np/distributions.hpp"
#include "np/generators.hpp"

namespace np {

/// Extended-real divergence value in [0, +inf].
struct DivergenceValue {
  double value = 0.0;
  bool finite() const { return std::isfinite(value); }
};

/// D_f(P||Q) = sum_{q_i>0} f(p_i/q_i) q_i + f'(inf) * P[q = 0],
/// with extended-real arithmetic (0 * inf = 0).
DivergenceValue f_divergence(const CategoricalPair& pair, const FGenerator& gen);

/// rho_q(P||Q) = sum p_i^q q_i^(1-q), q in (0,1). Always in [0, 1];
/// equals 1 iff p = q. Errors: ExponentOutOfRange.
double chernoff_coefficient(const CategoricalPair& pair, double q);

/// (1 - rho_q) / (q(1-q)) for q in (0,1); KL(P||Q) at q = 0 and
/// KL(Q||P) at q = 1.
DivergenceValue alpha_divergence(const CategoricalPair& pair, double q);

}  // namespace np
