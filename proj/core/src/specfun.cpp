#include "anharmonic/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "anharmonic/errors.hpp"

namespace anharmonic::specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

/**
 * log of Int exp(f(u)) du over the real line for unimodal f, by the
 * trapezoid rule on a uniform grid around the peak.  The integrands used
 * here are analytic in a strip of width >= pi/4 around the real axis, so
 * h = 1/8 already puts the discretization error near 1e-17; h is further
 * capped by half the curvature scale sigma at the peak.
 */
double log_integral(const std::function<double(double)>& f, double u_peak,
                    double sigma) {
  const double h = std::min(0.125, 0.5 * sigma);
  const double f0 = f(u_peak);
  const double drop = 48.0;
  double sum = 1.0;  // exp(f0 - f0)
  for (int dir = -1; dir <= 1; dir += 2) {
    double u = u_peak;
    for (long step = 1; step < 4000000; ++step) {
      u += dir * h;
      double d = f(u) - f0;
      if (d < -drop) break;
      sum += std::exp(d);
    }
  }
  return f0 + std::log(sum * h);
}

/// log of Int_0^inf t^{alpha-1} e^{-t^2/2 - z t} dt, alpha > 0, any real z.
double log_weber_integral(double alpha, double z) {
  // peak of f(u) = alpha u - e^{2u}/2 - z e^u at t* solving t^2 + z t = alpha
  double tstar = 2.0 * alpha / (z + std::sqrt(z * z + 4.0 * alpha));
  if (!(tstar > 0.0))  // z < 0 branch of the stable form
    tstar = 0.5 * (-z + std::sqrt(z * z + 4.0 * alpha));
  double sigma = 1.0 / std::sqrt(tstar * tstar + alpha);
  auto f = [alpha, z](double u) {
    double t = std::exp(u);
    return alpha * u - 0.5 * t * t - z * t;
  };
  return log_integral(f, std::log(tstar), sigma);
}

/// log of Int_0^inf u^{m-1/2} e^{-u - u^2/(2 z^2)} du, m >= 0, z > 0.
double log_scaled_integral(double m, double z) {
  double alpha = m + 0.5;
  double z2 = z * z;
  // peak solves u + u^2/z^2 = alpha
  double ustar = 2.0 * alpha / (1.0 + std::sqrt(1.0 + 4.0 * alpha / z2));
  double sigma = 1.0 / std::sqrt(ustar + 2.0 * ustar * ustar / z2);
  auto f = [alpha, z2](double v) {
    double u = std::exp(v);
    return alpha * v - u - 0.5 * u * u / z2;
  };
  return log_integral(f, std::log(ustar), sigma);
}

}  // namespace

double log_pochhammer_positive(double x, int n) {
  if (x <= 0.0) throw DomainError("log_pochhammer_positive: x must be > 0");
  return std::lgamma(x + n) - std::lgamma(x);
}

SignedLog pochhammer_log(double x, int n) {
  if (n < 0) throw DomainError("pochhammer: n must be >= 0");
  if (x > 0.0) return SignedLog::from_log(log_pochhammer_positive(x, n));
  SignedLog r = SignedLog::from_value(1.0);
  for (int k = 0; k < n; ++k) r = r * SignedLog::from_value(x + k);
  return r;
}

double pochhammer(double x, int n) {
  return pochhammer_log(x, n).value();
}

SignedLog pcf_d_log(double nu, double z) {
  if (std::isnan(nu) || std::isnan(z)) throw DomainError("pcf_d: NaN input");
  if (nu == 0.0) return SignedLog::from_log(-0.25 * z * z);
  if (nu < 0.0) {
    double alpha = -nu;
    double l = -0.25 * z * z - std::lgamma(alpha) + log_weber_integral(alpha, z);
    return SignedLog::from_log(l);
  }
  // upward order recurrence D_{m+1} = z D_m - m D_{m-1}, seeded below zero
  int n = static_cast<int>(std::floor(nu)) + 2;
  double nu0 = nu - n;  // in [-2, -1)
  SignedLog dm1 = pcf_d_log(nu0, z);
  SignedLog dm = pcf_d_log(nu0 + 1.0, z);
  SignedLog zz = SignedLog::from_value(z);
  double m = nu0 + 1.0;
  while (m < nu - 0.5) {
    SignedLog next = zz * dm - SignedLog::from_value(m) * dm1;
    dm1 = dm;
    dm = next;
    m += 1.0;
  }
  return dm;
}

double pcf_d(double nu, double z) {
  return pcf_d_log(nu, z).value_checked();
}

double pcf_scaled_log(double m, double z) {
  if (!(z > 0.0)) throw DomainError("pcf_scaled: z must be > 0");
  if (m < 0.0) throw DomainError("pcf_scaled: m must be >= 0");
  return log_scaled_integral(m, z) - std::lgamma(m + 0.5);
}

double pcf_scaled(double m, double z) {
  return std::exp(pcf_scaled_log(m, z));
}

double hyp1f2(double a1, double b1, double b2, double x) {
  for (double b : {b1, b2}) {
    if (b <= 0.0 && std::fabs(b - std::round(b)) < 1e-12)
      throw DomainError("hyp1f2: denominator parameter is a non-positive integer");
  }
  double sum = 1.0, term = 1.0;
  int small_streak = 0;
  for (int k = 0; k < 10000; ++k) {
    term *= (a1 + k) / ((b1 + k) * (b2 + k) * (k + 1)) * x;
    sum += term;
    if (std::fabs(term) <= 1e-15 * std::max(1.0, std::fabs(sum))) {
      if (++small_streak >= 2) return sum;
    } else {
      small_streak = 0;
    }
  }
  throw ConvergenceError("hyp1f2: series did not converge");
}

PoincareResult poincare_expand(double m, double z, int J) {
  if (J <= 0) throw DomainError("poincare_expand: J must be >= 1");
  if (!(z > 0.0) || m < 0.0) throw DomainError("poincare_expand: need m >= 0, z > 0");
  double l2z2 = std::log(2.0 * z * z);
  SignedLog sum = SignedLog::from_value(0.0);
  for (int j = 0; j <= J; ++j) {
    double lt = log_pochhammer_positive(m + 0.5, 2 * j) - std::lgamma(j + 1.0) -
                j * l2z2;
    sum = sum + SignedLog::from_log(lt, (j % 2 == 0) ? 1 : -1);
  }
  double value = sum.value_checked();

  double bound = kInf;
  if (2.0 * std::sqrt(m) <= z) {
    double z2 = z * z;
    double denom = z2 - 2.0 * m;  // > 0 inside the validity domain
    double theta = std::fabs(m * m / 4.0 + 3.0 / 16.0) +
                   (2.0 * m / z2) * (1.0 + m / (2.0 * z2)) * z2 / (denom * denom);
    double arg = 1.0 - m * m / z2;
    double lead = std::exp(log_pochhammer_positive(m + 0.5, 2 * J) -
                           std::lgamma(static_cast<double>(J)) - J * l2z2);
    bound = (2.0 * z2 / denom) * lead * hyp1f2(J / 2.0, 0.5, J / 2.0 + 1.0, arg) *
            std::exp(4.0 * theta / denom * hyp1f2(0.5, 0.5, 1.5, arg));
  }
  return {value, bound, J};
}

TemmeExponent temme_exponent(double a, double z) {
  if (!(z > 0.0)) throw DomainError("temme_exponent: z must be > 0");
  if (a < 0.0) throw DomainError("temme_exponent: a must be >= 0");
  double lambda = a / (z * z);
  if (lambda == 0.0) return {0.0, 0.0, 0.0};
  double s = std::sqrt(1.0 + 4.0 * lambda);
  double w0 = 2.0 * lambda / (s + 1.0);
  double r = 2.0 / (s + 1.0);  // w0 / lambda, stable as lambda -> 0
  double big_a = 0.5 * w0 * w0 + w0 - lambda - lambda * std::log(r);
  return {lambda, w0, big_a};
}

double large_order_asymptotic(double nu, double z) {
  if (!(nu < 0.0)) throw DomainError("large_order_asymptotic: nu must be < 0");
  if (!(std::fabs(z) < std::sqrt(-nu)))
    throw DomainError("large_order_asymptotic: need |z| < sqrt(-nu)");
  return std::exp(0.5 * nu * (std::log(-nu) - 1.0) - std::sqrt(-nu) * z) /
         std::sqrt(2.0);
}

ShiftIdentity shift_identity_check(double nu, double x, double t, int terms) {
  SignedLog lhs = SignedLog::from_value(0.0);
  SignedLog tk = SignedLog::from_value(1.0);
  SignedLog ts = SignedLog::from_value(t);
  for (int k = 0; k <= terms; ++k) {
    SignedLog coeff = pochhammer_log(nu, k) *
                      SignedLog::from_log(-std::lgamma(k + 1.0));
    lhs = lhs + coeff * tk * pcf_d_log(-nu - k, x);
    tk = tk * ts;
  }
  double l = (lhs * SignedLog::from_log(0.25 * x * x)).value_checked();
  double xt = x - t;
  double r = (pcf_d_log(-nu, xt) * SignedLog::from_log(0.25 * xt * xt)).value_checked();
  return {l, r};
}

}  // namespace anharmonic::specfun
