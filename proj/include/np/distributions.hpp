#pragma once

#include <string>
#include <vector>

#include "np/common.hpp"

namespace np {

/// Two probability mass vectors over a shared finite support. This is the
/// universal computation substrate: analytic pairs are discretized into it,
/// boundaries and divergences are computed from it. Immutable after
/// construction; construction validates.
struct CategoricalPair {
  std::vector<std::string> labels;  // empty means unlabeled (use indices)
  std::vector<double> p;
  std::vector<double> q;

  std::size_t size() const { return p.size(); }
};

/// Builds a validated pair. Mass sums may deviate from 1 by at most 1e-9
/// (then both vectors are renormalized exactly); larger deviations are
/// rejected. Items with p_i = q_i = 0 are rejected, not dropped.
///
/// Errors: LengthMismatch, NegativeMass, NotNormalized, DeadItem.
CategoricalPair make_categorical_pair(std::vector<double> p, std::vector<double> q,
                                      std::vector<std::string> labels = {});

struct GridSpec {
  double lower = 0.0;
  double upper = 1.0;
  std::size_t nodes = 2;  // cell count
};

struct AnalyticFamily {
  enum class Kind { Uniform, Gaussian, Beta };
  Kind kind = Kind::Uniform;
  double a = 0.0;  // uniform lower / gaussian mean / beta a
  double b = 1.0;  // uniform upper / gaussian sigma / beta b

  double pdf(double x) const;
  double cdf(double x) const;
  /// Natural support, used for default CLI windows. Gaussians report
  /// mean +- 10 sigma (truncation below 1e-20 relative mass).
  std::pair<double, double> support() const;
};

AnalyticFamily uniform_family(double a, double b);
AnalyticFamily gaussian_family(double mu, double sigma);
AnalyticFamily beta_family(double a, double b);

/// Parses CLI family specs: "gaussian:mu,sigma", "uniform:a,b", "beta:a,b".
AnalyticFamily parse_family(const std::string& spec);

struct DiscretizedPair {
  CategoricalPair pair;
  double p_truncation = 0.0;  // mass outside the grid window, pre-normalization
  double q_truncation = 0.0;
};

/// Discretization over equal-width cells; each cell mass is the exact cdf
/// increment, so cell masses are directly probabilities (and integrable
/// endpoint singularities such as Beta(1, 1/2) lose no tail mass). The
/// result is renormalized exactly over the window; cells where both
/// densities vanish are dropped. Errors: DegenerateGrid.
DiscretizedPair discretize_analytic(const AnalyticFamily& pf, const AnalyticFamily& qf,
                                    const GridSpec& g);

/// n-fold product pair over the tuple support. Errors: BlowupLimit when
/// (support size)^n exceeds 1e6.
CategoricalPair tensor_power(const CategoricalPair& pair, unsigned n);

/// The likelihood ratio p/q as a sorted step profile: segments in strictly
/// decreasing ratio order, ties merged, all q=0 mass in a single leading
/// infinite-ratio segment, all p=0 mass in a trailing zero-ratio segment.
struct LRSegment {
  double ratio;  // +inf allowed only first, 0 only last
  double p_mass;
  double q_mass;
};

struct LRProfile {
  std::vector<LRSegment> segments;
};

LRProfile lr_profile(const CategoricalPair& pair);

}  // namespace np
