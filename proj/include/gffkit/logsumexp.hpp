#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace gffkit {

/*
 * Log-domain value: magnitude stored as log|x|, sign kept separately.
 * sign == 0 represents an exact zero (log_mag is then -inf by convention).
 * Only nonnegative-sum accumulation is needed by the growth analysis, but
 * signed addition is provided for the truncated-moment recursion.
 */
struct LogValue {
  double log_mag = -std::numeric_limits<double>::infinity();
  int sign = 0;

  static LogValue zero() { return {}; }
  static LogValue from(double x) {
    if (x == 0.0) return {};
    return {std::log(std::abs(x)), x > 0 ? 1 : -1};
  }
  static LogValue from_log(double log_mag, int sign = 1) {
    return {log_mag, sign};
  }

  bool is_zero() const { return sign == 0; }

  double value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_mag);
  }

  friend LogValue operator*(const LogValue& a, const LogValue& b) {
    if (a.sign == 0 || b.sign == 0) return {};
    return {a.log_mag + b.log_mag, a.sign * b.sign};
  }

  friend LogValue operator+(const LogValue& a, const LogValue& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const LogValue& hi = a.log_mag >= b.log_mag ? a : b;
    const LogValue& lo = a.log_mag >= b.log_mag ? b : a;
    double r = std::exp(lo.log_mag - hi.log_mag);  // in [0, 1]
    double s = hi.sign == lo.sign ? 1.0 + r : 1.0 - r;
    if (s == 0.0) return {};
    return {hi.log_mag + std::log(s), hi.sign};
  }
};

// log(sum exp(args[i])), stable against the usual overflow.
inline double log_sum_exp(const std::vector<double>& args) {
  if (args.empty()) return -std::numeric_limits<double>::infinity();
  double m = *std::max_element(args.begin(), args.end());
  if (!std::isfinite(m)) return m;
  double s = 0.0;
  for (double a : args) s += std::exp(a - m);
  return m + std::log(s);
}

// log(n!) via lgamma; exact enough for growth diagnostics.
inline double log_factorial(int n) { return std::lgamma(double(n) + 1.0); }

// log((2n-1)!!) = log((2n)!) - n log 2 - log(n!)
inline double log_double_factorial_odd(int n) {
  return log_factorial(2 * n) - double(n) * std::log(2.0) - log_factorial(n);
}

}  // namespace gffkit
