#pragma once

#include <random>
#include <vector>

#include "np/distributions.hpp"

namespace tests {

inline np::CategoricalPair pair_r() {
  return np::make_categorical_pair({0.6, 0.3, 0.1}, {0.1, 0.3, 0.6});
}

/// Deterministic random pair; with_zeros sprinkles p_i = 0 or q_i = 0 items
/// (never both) to exercise the extended-real paths.
inline np::CategoricalPair random_pair(std::mt19937_64& rng, std::size_t n,
                                       bool with_zeros = true) {
  std::uniform_real_distribution<double> mass(0.05, 1.0);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  while (true) {
    std::vector<double> p(n), q(n);
    for (std::size_t i = 0; i < n; ++i) {
      p[i] = mass(rng);
      q[i] = mass(rng);
      if (with_zeros && n >= 3) {
        const double c = coin(rng);
        if (c < 0.08)
          p[i] = 0.0;
        else if (c < 0.16)
          q[i] = 0.0;
      }
    }
    double sp = 0.0, sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      sp += p[i];
      sq += q[i];
    }
    if (sp <= 0.0 || sq <= 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      p[i] /= sp;
      q[i] /= sq;
    }
    bool dead = false;
    for (std::size_t i = 0; i < n; ++i) dead |= p[i] == 0.0 && q[i] == 0.0;
    if (dead) continue;
    return np::make_categorical_pair(std::move(p), std::move(q));
  }
}

/// Strictly positive masses, almost surely distinct likelihood ratios.
inline np::CategoricalPair random_positive_pair(std::mt19937_64& rng, std::size_t n) {
  return random_pair(rng, n, false);
}

}  // namespace tests
