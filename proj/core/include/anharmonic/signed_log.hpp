#pragma once

#include <cmath>
#include <limits>

#include "anharmonic/errors.hpp"

namespace anharmonic {

/**
 * A real number stored as sign * exp(log_abs).
 *
 * Used wherever products of gammas, factorials and parabolic cylinder
 * values overflow double long before their combination does.
 */
struct SignedLog {
  double log_abs = -std::numeric_limits<double>::infinity();
  int sign = 0;  // -1, 0, +1

  static SignedLog from_value(double v) {
    if (v == 0.0) return {};
    return {std::log(std::fabs(v)), v > 0 ? 1 : -1};
  }
  static SignedLog from_log(double l, int s = 1) {
    if (s == 0) return {};
    return {l, s};
  }

  bool is_zero() const { return sign == 0; }

  /// Plain double value; may underflow to 0 for very negative log_abs.
  double value() const {
    if (sign == 0) return 0.0;
    return sign * std::exp(log_abs);
  }

  /// As value(), but throws instead of returning +-inf.
  double value_checked() const {
    if (sign != 0 && log_abs > 700.0)
      throw OverflowError("signed-log value exceeds double range");
    return value();
  }

  SignedLog operator*(const SignedLog& o) const {
    if (sign == 0 || o.sign == 0) return {};
    return {log_abs + o.log_abs, sign * o.sign};
  }
  SignedLog operator/(const SignedLog& o) const {
    if (o.sign == 0) throw DomainError("signed-log division by zero");
    if (sign == 0) return {};
    return {log_abs - o.log_abs, sign * o.sign};
  }
  SignedLog operator+(const SignedLog& o) const {
    if (sign == 0) return o;
    if (o.sign == 0) return *this;
    const SignedLog& big = (log_abs >= o.log_abs) ? *this : o;
    const SignedLog& small = (log_abs >= o.log_abs) ? o : *this;
    double d = small.log_abs - big.log_abs;  // <= 0
    if (big.sign == small.sign) return {big.log_abs + std::log1p(std::exp(d)), big.sign};
    double m = 1.0 - std::exp(d);
    if (m <= 0.0) return {};  // exact cancellation
    return {big.log_abs + std::log(m), big.sign};
  }
  SignedLog operator-(const SignedLog& o) const {
    return *this + SignedLog{o.log_abs, -o.sign};
  }
};

}  // namespace anharmonic
