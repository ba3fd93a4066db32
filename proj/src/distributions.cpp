#include "np/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "np/parallel.hpp"

namespace np {

namespace {

constexpr double kSumSlack = 1e-9;  // accepted deviation of each mass sum from 1

double checked_sum(const std::vector<double>& v, const char* side) {
  double s = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) fail("NegativeMass", std::string(side) + " has a non-finite entry");
    if (x < 0.0) fail("NegativeMass", std::string(side) + " has a negative entry");
    s += x;
  }
  return s;
}

}  // namespace

CategoricalPair make_categorical_pair(std::vector<double> p, std::vector<double> q,
                                      std::vector<std::string> labels) {
  if (p.size() != q.size())
    fail("LengthMismatch", "p has " + std::to_string(p.size()) + " entries, q has " +
                               std::to_string(q.size()));
  if (p.empty()) fail("LengthMismatch", "support must contain at least one item");
  if (!labels.empty() && labels.size() != p.size())
    fail("LengthMismatch", "labels length does not match mass vectors");

  const double sp = checked_sum(p, "p");
  const double sq = checked_sum(q, "q");
  if (std::abs(sp - 1.0) > kSumSlack)
    fail("NotNormalized", "sum(p) = " + std::to_string(sp));
  if (std::abs(sq - 1.0) > kSumSlack)
    fail("NotNormalized", "sum(q) = " + std::to_string(sq));

  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] == 0.0 && q[i] == 0.0)
      fail("DeadItem", "item " + std::to_string(i) + " has zero mass under both P and Q");

  for (double& x : p) x /= sp;
  for (double& x : q) x /= sq;
  return CategoricalPair{std::move(labels), std::move(p), std::move(q)};
}

double AnalyticFamily::pdf(double x) const {
  switch (kind) {
    case Kind::Uniform:
      return (x >= a && x <= b) ? 1.0 / (b - a) : 0.0;
    case Kind::Gaussian: {
      const double z = (x - a) / b;
      return std::exp(-0.5 * z * z) / (b * std::sqrt(2.0 * M_PI));
    }
    case Kind::Beta: {
      if (x <= 0.0 || x >= 1.0) return 0.0;
      const double log_beta = std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
      return std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_beta);
    }
  }
  return 0.0;
}

namespace {

// Continued fraction for the regularized incomplete beta (Lentz's method).
double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = 3e-16;
  constexpr double kTiny = 1e-300;
  const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const int m2 = 2 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < kEps) break;
  }
  return h;
}

double reg_incomplete_beta(double a, double b, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_bt = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                        a * std::log(x) + b * std::log1p(-x);
  const double bt = std::exp(log_bt);
  if (x < (a + 1.0) / (a + b + 2.0)) return bt * beta_cf(a, b, x) / a;
  return 1.0 - bt * beta_cf(b, a, 1.0 - x) / b;
}

}  // namespace

double AnalyticFamily::cdf(double x) const {
  switch (kind) {
    case Kind::Uniform:
      if (x <= a) return 0.0;
      if (x >= b) return 1.0;
      return (x - a) / (b - a);
    case Kind::Gaussian:
      return 0.5 * std::erfc(-(x - a) / (b * std::sqrt(2.0)));
    case Kind::Beta:
      return reg_incomplete_beta(a, b, x);
  }
  return 0.0;
}

std::pair<double, double> AnalyticFamily::support() const {
  switch (kind) {
    case Kind::Uniform: return {a, b};
    case Kind::Gaussian: return {a - 10.0 * b, a + 10.0 * b};
    case Kind::Beta: return {0.0, 1.0};
  }
  return {0.0, 1.0};
}

AnalyticFamily uniform_family(double a, double b) {
  if (!(b > a)) fail("UnsupportedFamily", "uniform requires b > a");
  return AnalyticFamily{AnalyticFamily::Kind::Uniform, a, b};
}

AnalyticFamily gaussian_family(double mu, double sigma) {
  if (!(sigma > 0.0)) fail("UnsupportedFamily", "gaussian requires sigma > 0");
  return AnalyticFamily{AnalyticFamily::Kind::Gaussian, mu, sigma};
}

AnalyticFamily beta_family(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) fail("UnsupportedFamily", "beta requires a, b > 0");
  return AnalyticFamily{AnalyticFamily::Kind::Beta, a, b};
}

AnalyticFamily parse_family(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) fail("UnsupportedFamily", "expected kind:params, got " + spec);
  const std::string kind = spec.substr(0, colon);
  const std::string params = spec.substr(colon + 1);
  const auto comma = params.find(',');
  if (comma == std::string::npos)
    fail("UnsupportedFamily", "expected two comma-separated parameters in " + spec);
  double x = 0.0, y = 0.0;
  try {
    x = std::stod(params.substr(0, comma));
    y = std::stod(params.substr(comma + 1));
  } catch (const std::exception&) {
    fail("UnsupportedFamily", "unparsable parameters in " + spec);
  }
  if (kind == "gaussian") return gaussian_family(x, y);
  if (kind == "uniform") return uniform_family(x, y);
  if (kind == "beta") return beta_family(x, y);
  fail("UnsupportedFamily", "unknown family kind " + kind);
}

DiscretizedPair discretize_analytic(const AnalyticFamily& pf, const AnalyticFamily& qf,
                                    const GridSpec& g) {
  if (!(g.lower < g.upper) || g.nodes < 2)
    fail("DegenerateGrid", "grid needs lower < upper and at least 2 cells");

  const std::size_t n = g.nodes;
  const double h = (g.upper - g.lower) / static_cast<double>(n);
  std::vector<double> p(n), q(n);
  parallel_for(n, [&](std::size_t i) {
    const double left = g.lower + static_cast<double>(i) * h;
    const double right = g.lower + static_cast<double>(i + 1) * h;
    p[i] = std::max(0.0, pf.cdf(right) - pf.cdf(left));
    q[i] = std::max(0.0, qf.cdf(right) - qf.cdf(left));
  });

  // Serial sums keep the output independent of the thread count.
  const double sp = std::accumulate(p.begin(), p.end(), 0.0);
  const double sq = std::accumulate(q.begin(), q.end(), 0.0);
  if (sp <= 0.0 || sq <= 0.0)
    fail("DegenerateGrid", "a density places no mass inside the grid window");

  std::vector<double> pl, ql;
  pl.reserve(n);
  ql.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p[i] == 0.0 && q[i] == 0.0) continue;  // dead cell outside both supports
    pl.push_back(p[i] / sp);
    ql.push_back(q[i] / sq);
  }

  DiscretizedPair out;
  out.p_truncation = 1.0 - sp;
  out.q_truncation = 1.0 - sq;
  out.pair = CategoricalPair{{}, std::move(pl), std::move(ql)};
  return out;
}

CategoricalPair tensor_power(const CategoricalPair& pair, unsigned n) {
  if (n == 0) fail("BlowupLimit", "tensor power requires n >= 1");
  const std::size_t base = pair.size();
  double cells = 1.0;
  for (unsigned k = 0; k < n; ++k) {
    cells *= static_cast<double>(base);
    if (cells > 1e6)
      fail("BlowupLimit", "support size " + std::to_string(base) + "^" + std::to_string(n) +
                              " exceeds 1e6 items");
  }
  const std::size_t total = static_cast<std::size_t>(cells);

  std::vector<double> p(total), q(total);
  parallel_for(total, [&](std::size_t idx) {
    double mp = 1.0, mq = 1.0;
    std::size_t rest = idx;
    for (unsigned k = 0; k < n; ++k) {
      const std::size_t j = rest % base;
      rest /= base;
      mp *= pair.p[j];
      mq *= pair.q[j];
    }
    p[idx] = mp;
    q[idx] = mq;
  });

  // Products of normalized vectors sum to 1 up to roundoff; renormalize so
  // downstream invariants see exact mass.
  const double sp = std::accumulate(p.begin(), p.end(), 0.0);
  const double sq = std::accumulate(q.begin(), q.end(), 0.0);
  std::vector<double> pl, ql;
  std::vector<std::string> labels;
  pl.reserve(total);
  ql.reserve(total);
  const bool labeled = !pair.labels.empty();
  if (labeled) labels.reserve(total);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (p[idx] == 0.0 && q[idx] == 0.0) continue;  // tuples dead under both measures
    pl.push_back(p[idx] / sp);
    ql.push_back(q[idx] / sq);
    if (labeled) {
      std::string name;
      std::size_t rest = idx;
      for (unsigned k = 0; k < n; ++k) {
        if (k) name += '|';
        name += pair.labels[rest % base];
        rest /= base;
      }
      labels.push_back(std::move(name));
    }
  }
  return CategoricalPair{std::move(labels), std::move(pl), std::move(ql)};
}

namespace {

// Ratio order without forming p/q: compare p_i*q_j vs p_j*q_i. Exact when the
// cross-products are exact; otherwise a 1e-12 relative band merges the tie.
int ratio_compare(double pi, double qi, double pj, double qj) {
  const double lhs = pi * qj;
  const double rhs = pj * qi;
  if (lhs == rhs) return 0;
  const double tol = 1e-12 * std::max(std::abs(lhs), std::abs(rhs));
  if (std::abs(lhs - rhs) <= tol) return 0;
  return lhs > rhs ? 1 : -1;
}

}  // namespace

LRProfile lr_profile(const CategoricalPair& pair) {
  std::vector<std::size_t> order(pair.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return ratio_compare(pair.p[i], pair.q[i], pair.p[j], pair.q[j]) > 0;
  });

  LRProfile prof;
  for (std::size_t k : order) {
    const double pm = pair.p[k];
    const double qm = pair.q[k];
    if (!prof.segments.empty()) {
      LRSegment& last = prof.segments.back();
      if (ratio_compare(last.p_mass, last.q_mass, pm, qm) == 0) {
        last.p_mass += pm;
        last.q_mass += qm;
        last.ratio = last.q_mass == 0.0 ? kInf : last.p_mass / last.q_mass;
        continue;
      }
    }
    prof.segments.push_back(LRSegment{qm == 0.0 ? kInf : pm / qm, pm, qm});
  }
  return prof;
}

}  // namespace np
