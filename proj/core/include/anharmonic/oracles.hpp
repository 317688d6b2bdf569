#pragma once

#include <cstdint>

#include "anharmonic/model.hpp"

namespace anharmonic::oracles {

struct OracleResult {
  double value;
  double error_estimate;  // >= 0
  long long cost;         // integrand / weight evaluations
};

/// Adaptive quadrature of Int exp(-(A x^4 + B x^2 + C x)) dx over R,
/// domain truncated where the integrand drops below 1e-18 of its peak.
OracleResult integrate_i1(double A, double B, double C);

/// Series form of the same integral:
/// Gamma(1/2)/(2A)^{1/4} sum_{m=0}^{M} xi^m/m! * e^{z^2/4} D_{-m-1/2}(z),
/// xi = C^2/(4 sqrt(2A)), z = B/sqrt(2A), evaluated with scaled calls.
double i1_series(double A, double B, double C, int M);

/// Nested adaptive quadrature of the N-dimensional slice integral
/// (measure factors included, phi_0 = 0, 1/2-weighted last slice). N <= 3.
OracleResult zn_bruteforce(const ModelParams& params, int N);

/// Exact Gaussian (a = 0) value via the leading-principal-minor recurrence
/// of the tridiagonal quadratic form.  Ignores params.a by definition.
double zn_gaussian(const ModelParams& params, int N);

/// -d ln Z_N/da at a = 0: delta * sum_i 3 Sigma_ii^2 with Sigma the inverse
/// of the quadratic-form matrix (two-sweep tridiagonal recurrence, log-space).
double coupling_derivative(const ModelParams& params, int N);

/// Importance sampling with the exact Gaussian part as proposal,
/// reweighting by exp(-a delta sum phi^4); batch-means standard error.
OracleResult zn_montecarlo(const ModelParams& params, int N, long long samples,
                           std::uint64_t seed);

/// Same first-order coefficient for the clamped (bridge) chain where phi_N
/// is pinned to 0 alongside phi_0: 3 delta sum_{i<N} Sigma_ii^2 over the
/// remaining (N-1)-dim quadratic form with uniform diagonal.
double coupling_derivative_clamped(const ModelParams& params, int N);

}  // namespace anharmonic::oracles
