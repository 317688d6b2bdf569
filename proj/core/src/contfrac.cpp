#include "anharmonic/contfrac.hpp"

#include <cmath>

namespace anharmonic::contfrac {

namespace {
constexpr double kDegenerateThreshold = 1e-10;

double take_real(std::complex<double> v, const char* what) {
  if (std::abs(v.imag()) > 1e-8 * (1.0 + std::abs(v.real())))
    throw ConvergenceError(std::string(what) + ": non-negligible imaginary part");
  return v.real();
}
}  // namespace

ConvergentState make_state(double A, double B) {
  ConvergentState s;
  s.A = A;
  s.B = B;
  double disc = 1.0 - 4.0 * A * A;
  s.degenerate = std::fabs(disc) < kDegenerateThreshold;
  std::complex<double> root = std::sqrt(std::complex<double>(disc, 0.0));
  s.rho1 = 0.5 * (1.0 + root);
  s.rho2 = 0.5 * (1.0 - root);
  if (!s.degenerate) {
    std::complex<double> t = 2.0 * B / root;
    s.w1 = 1.0 + t;
    s.w2 = 1.0 - t;
    std::complex<double> u = 0.5 * (root + t);
    s.wt1 = 0.5 * (1.0 + 2.0 * B) + u;
    s.wt2 = 0.5 * (1.0 + 2.0 * B) - u;
  }
  return s;
}

ConvergentState state_from_grid(const SliceGrid& grid) {
  return make_state(grid.A, grid.B);
}

double omega_iterate(double omega0, double A, int n) {
  double w = omega0;
  double A2 = A * A;
  for (int j = 1; j <= n; ++j) {
    if (w == 0.0)
      throw ConvergenceError("continued fraction hit a zero denominator", j);
    w = 1.0 - A2 / w;
  }
  return w;
}

Convergent convergent_closed_form(const ConvergentState& s, int n) {
  if (s.degenerate) {
    double rho_n = std::pow(0.5, n);
    double q = (2.0 + 4.0 * s.B * n) * rho_n;
    double p = (2.0 + 4.0 * s.B * (n + 1)) * std::pow(0.5, n + 1);
    return {p, q, p / q};
  }
  std::complex<double> r1 = std::pow(s.rho1, n), r2 = std::pow(s.rho2, n);
  double q = take_real(s.w1 * r1 + s.w2 * r2, "convergent q");
  double p = take_real(s.wt1 * r1 + s.wt2 * r2, "convergent p");
  return {p, q, p / q};
}

double q_scaled(const ConvergentState& s, int n) {
  if (s.A == 0.0) throw DomainError("q_scaled: A must be nonzero");
  if (s.degenerate) {
    // rho/A = (1/2)/A, |A| ~ 1/2, so track the ratio directly
    return (2.0 + 4.0 * s.B * n) * std::pow(0.5 / s.A, n);
  }
  std::complex<double> r1 = std::pow(s.rho1 / s.A, n), r2 = std::pow(s.rho2 / s.A, n);
  return take_real(s.w1 * r1 + s.w2 * r2, "q_scaled");
}

double b_sequence(const ConvergentState& s, int j, int Lambda) {
  if (j > Lambda) throw DomainError("b_sequence: j must be <= Lambda");
  double sum = 0.0;
  double q_prev = q_scaled(s, j);
  for (int m = j + 1; m <= Lambda; ++m) {
    double q_m = q_scaled(s, m);
    sum += 1.0 / (q_m * q_prev);
    q_prev = q_m;
  }
  return sum;
}

}  // namespace anharmonic::contfrac
