#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

namespace np {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Domain error carrying a stable machine-readable kind (e.g. "NotNormalized",
/// "BlowupLimit"). The CLI maps these to exit code 1 and prints the kind.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

[[noreturn]] inline void fail(std::string kind, const std::string& message) {
  throw Error(std::move(kind), message);
}

// Extended-real product with the measure-theoretic convention 0 * inf = 0.
inline double xmul(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

inline bool nearly_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol;
}

}  // namespace np
