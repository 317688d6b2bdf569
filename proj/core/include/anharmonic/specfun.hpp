#pragma once

#include <utility>

#include "anharmonic/signed_log.hpp"

namespace anharmonic::specfun {

/// Rising factorial x(x+1)...(x+n-1); n = 0 gives 1.  May overflow to inf.
double pochhammer(double x, int n);

/// Same quantity in signed-log form (never overflows).
SignedLog pochhammer_log(double x, int n);

/// log of (x)_n for x > 0 (all factors positive).
double log_pochhammer_positive(double x, int n);

/**
 * Parabolic cylinder function D_nu(z).
 *
 * nu < 0 uses the integral representation
 * D_nu(z) = e^{-z^2/4}/Gamma(-nu) Int_0^inf t^{-nu-1} e^{-t^2/2 - z t} dt,
 * evaluated as a log-space trapezoid sum on the t = e^u axis; nu >= 0 uses
 * the upward three-term order recurrence seeded two orders below zero.
 * Throws OverflowError when the value exceeds double range; may underflow
 * to zero for very large |z| (use pcf_d_log then).
 */
double pcf_d(double nu, double z);

/// D_nu(z) in signed-log form.
SignedLog pcf_d_log(double nu, double z);

/**
 * Scaled function scriptD_{-m-1/2}(z) = z^{m+1/2} e^{z^2/4} D_{-m-1/2}(z).
 *
 * Computed as 1/Gamma(m+1/2) Int_0^inf u^{m-1/2} e^{-u - u^2/(2 z^2)} du,
 * so the e^{z^2/4} scaling never materializes.  Tends to 1 as z -> inf.
 */
double pcf_scaled(double m, double z);

/// log of the scaled function (always positive).
double pcf_scaled_log(double m, double z);

struct PoincareResult {
  double value;     // truncated inverse-power sum
  double bound;     // remainder bound; +inf outside the 2*sqrt(m) <= z domain
  int order_used;   // J
};

/**
 * Truncated Poincare-type expansion of scriptD_{-m-1/2}(z),
 * value = sum_{j=0}^{J} (-1)^j (m+1/2)_{2j} / (j! (2 z^2)^j),
 * with the Temme remainder bound (finite only for 2*sqrt(m) <= z).
 */
PoincareResult poincare_expand(double m, double z, int J);

/// Hypergeometric 1F2(a1; b1, b2; x) by direct series, tail < 1e-14 relative.
double hyp1f2(double a1, double b1, double b2, double x);

struct TemmeExponent {
  double lambda;  // a / z^2
  double w0;      // (sqrt(1+4 lambda) - 1)/2
  double big_a;   // w0^2/2 + w0 - lambda - lambda ln w0 + lambda ln lambda
};

/// Exponent quantities of the Temme double asymptotic expansion.
TemmeExponent temme_exponent(double a, double z);

/// Leading large-order asymptotic (1/sqrt 2) exp[(nu/2)(ln(-nu)-1) - sqrt(-nu) z].
/// Requires nu < 0 and |z| < sqrt(-nu).
double large_order_asymptotic(double nu, double z);

struct ShiftIdentity {
  double lhs;  // e^{x^2/4} sum_k (nu)_k/k! t^k D_{-nu-k}(x), truncated
  double rhs;  // e^{(x-t)^2/4} D_{-nu}(x-t)
};

/// Both sides of the order-shift summation identity (self-test of pcf_d).
ShiftIdentity shift_identity_check(double nu, double x, double t, int terms);

}  // namespace anharmonic::specfun
