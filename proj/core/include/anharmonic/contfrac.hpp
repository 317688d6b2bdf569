#pragma once

#include <complex>
#include <vector>

#include "anharmonic/errors.hpp"
#include "anharmonic/model.hpp"

namespace anharmonic::contfrac {

/**
 * Closed-form data for the continued fraction omega_i = 1 - A^2/omega_{i-1},
 * omega_0 = 1/2 + B.  Convergents p_n/q_n obey the two-term recurrence
 * x_n = x_{n-1} - A^2 x_{n-2} with q_0 = 2, q_1 = p_0 = 1 + 2B.
 * Roots are kept complex so 4A^2 > 1 (coarse grids, b < 0) works unchanged;
 * real outputs assert a tiny imaginary residue.
 */
struct ConvergentState {
  double A = 0.0;
  double B = 0.0;
  bool degenerate = false;  // |1 - 4A^2| below threshold: double root 1/2
  std::complex<double> rho1, rho2;  // (1 +- sqrt(1-4A^2))/2
  std::complex<double> w1, w2;      // 1 +- 2B/sqrt(1-4A^2)
  std::complex<double> wt1, wt2;    // rho-weights of p_n
};

ConvergentState make_state(double A, double B);
ConvergentState state_from_grid(const SliceGrid& grid);

/// n-fold iteration of omega_i = 1 - A^2/omega_{i-1} starting at omega0.
/// Throws ConvergenceError with the failing index if an omega_j vanishes.
double omega_iterate(double omega0, double A, int n);

struct Convergent {
  double p;      // p_n
  double q;      // q_n
  double omega;  // p_n / q_n
};

/// Closed-form n-th convergent; degenerate branch uses q_n = (2+4Bn) rho^n.
Convergent convergent_closed_form(const ConvergentState& state, int n);

/// Q_n = q_n / A^n.
double q_scaled(const ConvergentState& state, int n);

/// b_j = 1/(Q_{j+1} Q_j) + ... + 1/(Q_Lambda Q_{Lambda-1}); empty for j = Lambda.
double b_sequence(const ConvergentState& state, int j, int Lambda);

// ---- exact-mode cores (T = rational or extended float) -------------------

/// q_0..q_nmax by the two-term recurrence.
template <class T>
std::vector<T> q_recurrence(const T& A2, const T& B, int nmax) {
  std::vector<T> q(nmax + 1);
  q[0] = T(2);
  if (nmax >= 1) q[1] = T(1) + T(2) * B;
  for (int n = 2; n <= nmax; ++n) q[n] = q[n - 1] - A2 * q[n - 2];
  return q;
}

/// p_0..p_nmax by the same recurrence, p_0 = 1+2B, p_1 = 1+2B-2A^2,
/// so that p_n = q_{n+1} and omega_n = p_n / q_n.
template <class T>
std::vector<T> p_recurrence(const T& A2, const T& B, int nmax) {
  std::vector<T> p(nmax + 1);
  p[0] = T(1) + T(2) * B;
  if (nmax >= 1) p[1] = T(1) + T(2) * B - T(2) * A2;
  for (int n = 2; n <= nmax; ++n) p[n] = p[n - 1] - A2 * p[n - 2];
  return p;
}

/// omega_0..omega_nmax by direct iteration.
template <class T>
std::vector<T> omega_sequence(const T& A2, const T& B, int nmax) {
  std::vector<T> w(nmax + 1);
  w[0] = T(1) / T(2) + B;
  for (int n = 1; n <= nmax; ++n) {
    if (w[n - 1] == T(0))
      throw ConvergenceError("continued fraction hit a zero denominator", n);
    w[n] = T(1) - A2 / w[n - 1];
  }
  return w;
}

/// Q_0..Q_nmax, Q_n = q_n / A^n (requires A != 0).
template <class T>
std::vector<T> q_scaled_sequence(const T& A, const T& B, int nmax) {
  std::vector<T> q = q_recurrence<T>(A * A, B, nmax);
  T power(1);
  for (int n = 0; n <= nmax; ++n) {
    q[n] = q[n] / power;
    power = power * A;
  }
  return q;
}

}  // namespace anharmonic::contfrac
