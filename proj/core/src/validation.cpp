#include "anharmonic/validation.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdio>
#include <vector>

#include "anharmonic/contfrac.hpp"
#include "anharmonic/continuum.hpp"
#include "anharmonic/errors.hpp"
#include "anharmonic/ggy.hpp"
#include "anharmonic/model.hpp"
#include "anharmonic/oracles.hpp"
#include "anharmonic/recurrence.hpp"
#include "anharmonic/remainders.hpp"
#include "anharmonic/rng.hpp"
#include "anharmonic/slicing.hpp"
#include "anharmonic/specfun.hpp"

namespace anharmonic::validation {

namespace {

using Rational = boost::multiprecision::cpp_rational;

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

double fit_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    sx += x[i]; sy += y[i]; sxx += x[i] * x[i]; sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

CheckResult check_i1_series() {
  double worst = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      double A = 0.1 + 1.9 * i / 4.0;
      double B = -1.0 + 3.0 * j / 4.0;
      double C = 2.0 * (5 * i + j) / 24.0;
      oracles::OracleResult q = oracles::integrate_i1(A, B, C);
      double s = oracles::i1_series(A, B, C, 120);
      worst = std::max(worst, std::fabs(s - q.value) / std::fabs(q.value));
    }
  return {1, "1-D series vs quadrature", worst < 1e-8,
          fmt("worst relative deviation %.3e (limit 1e-8)", worst)};
}

CheckResult check_multisum() {
  const double as[10] = {0.1, 0.3, 0.5, 1.0, 0.2, 0.7, 0.4, 0.15, 0.6, 0.25};
  const double bs[10] = {0.0, 1.0, -0.5, 2.0, 0.5, 0.0, 1.5, -0.2, 0.8, 3.0};
  const double cs[10] = {1.0, 0.5, 1.0, 2.0, 0.7, 1.2, 1.0, 0.5, 1.5, 1.0};
  const double betas[10] = {1.0, 0.5, 0.8, 1.0, 1.5, 0.6, 1.0, 0.9, 0.5, 0.7};
  double worst = 0.0;
  for (int s = 0; s < 10; ++s) {
    ModelParams p(as[s], bs[s], cs[s], betas[s]);
    for (int N = 1; N <= 3; ++N) {
      SliceGrid grid = build_grid(p, N);
      double series = slicing::zn_multisum(grid, 40);
      oracles::OracleResult bf = oracles::zn_bruteforce(p, N);
      worst = std::max(worst, std::fabs(series - bf.value) / std::fabs(bf.value));
    }
  }
  return {2, "N-slice multisum vs brute-force quadrature", worst < 1e-6,
          fmt("worst relative deviation %.3e (limit 1e-6)", worst)};
}

CheckResult check_harmonic_chain() {
  ModelParams p(0.0, 1.0, 1.0, 1.0);
  double g = std::sqrt(2.0 * p.b / p.c);
  double exact = 1.0 / std::sqrt(std::cosh(g * p.beta));
  std::vector<double> lx, ly;
  for (int k = 4; k <= 12; ++k) {
    int N = 1 << k;
    double err = std::fabs(oracles::zn_gaussian(p, N) - exact);
    lx.push_back(std::log(p.beta / N));
    ly.push_back(std::log(err));
  }
  double slope = fit_slope(lx, ly);
  double z_ode = ggy::z_beta(p, 0, ggy::Method::direct_ode);
  double ode_err = std::fabs(z_ode - exact);
  bool pass = std::fabs(slope - 1.0) < 0.2 && ode_err < 1e-10;
  return {3, "Harmonic chain convergence and closed form", pass,
          fmt("step-error slope %.3f (want 1.0+-0.2), |z_ode - exact| = %.3e",
              slope, ode_err)};
}

CheckResult check_mu1_term() {
  struct Case { double b, c, beta; } cases[3] = {{1, 1, 1}, {5, 0.5, 1}, {0, 1, 1}};
  double worst = 0.0;
  for (const Case& cs : cases) {
    ModelParams p(0.0, cs.b, cs.c, cs.beta);
    double lattice = oracles::coupling_derivative(p, 512) * cs.c * cs.c;
    double cont = continuum::continuum_c2(p, cs.beta);
    worst = std::max(worst, std::fabs(lattice - cont) / std::fabs(cont));
  }
  ModelParams p0(0.0, 0.0, 1.0, 1.0);
  double b0_dev = std::fabs(continuum::continuum_c2(p0, 1.0) - 1.0);
  bool pass = worst < 0.01 && b0_dev < 1e-9;
  return {4, "mu = 1 lattice term vs continuum closed form", pass,
          fmt("worst relative deviation %.3e (limit 1e-2), b=0 residual %.3e",
              worst, b0_dev)};
}

CheckResult check_rational_corner() {
  // (A, B) pairs from exact rational b delta^2/c values, plus the b = 0
  // double-root case A = 1/2.
  struct Pair { Rational A, B; } pairs[3] = {
      {Rational(3, 8), Rational(1, 8)},
      {Rational(1, 2), Rational(0)},
      {Rational(5, 11), Rational(-1, 22)}};
  for (const Pair& pr : pairs) {
    for (int Lambda = 1; Lambda <= 6; ++Lambda) {
      std::vector<Rational> omega =
          contfrac::omega_sequence<Rational>(pr.A * pr.A, pr.B, Lambda - 1);
      std::vector<Rational> Q =
          contfrac::q_scaled_sequence<Rational>(pr.A, pr.B, Lambda + 1);
      for (int mu = 0; mu <= 3; ++mu) {
        recurrence::LambdaTableT<Rational> table(omega, pr.A * pr.A, Lambda, mu);
        Rational want = table.at(Lambda, mu, 0);
        Rational prod = recurrence::c_matrix_corner_product<Rational>(pr.A, Q, Lambda, mu);
        Rational nest = recurrence::c_matrix_corner_nested<Rational>(pr.A, Q, Lambda, mu);
        if (prod != want || nest != want)
          return {5, "Corner element closed forms vs recurrence (rational)", false,
                  fmt("mismatch at Lambda=%.0f mu=%.0f", Lambda, mu)};
      }
    }
  }
  return {5, "Corner element closed forms vs recurrence (rational)", true,
          "exact equality for Lambda <= 6, mu <= 3, both paths, 3 (A,B) pairs"};
}

CheckResult check_contfrac() {
  const double bvals[5] = {-0.5, 0.5, 1.0, 5.0, 0.0};  // b = 0: exact double root
  double worst = 0.0;
  for (double b : bvals) {
    double delta = 0.1, c = 1.0;
    double d2bc = b * delta * delta / c;
    double A = 0.5 / (1.0 + d2bc), B = 0.5 * d2bc / (1.0 + d2bc);
    contfrac::ConvergentState st = contfrac::make_state(A, B);
    std::vector<double> q = contfrac::q_recurrence<double>(A * A, B, 201);
    for (int n = 0; n <= 200; ++n) {
      contfrac::Convergent cv = contfrac::convergent_closed_form(st, n);
      worst = std::max(worst, std::fabs(cv.q - q[n]) / std::fabs(q[n]));
      worst = std::max(worst, std::fabs(cv.p - q[n + 1]) / std::fabs(q[n + 1]));
      if (n <= 60) {
        double w_iter = contfrac::omega_iterate(0.5 + B, A, n);
        worst = std::max(worst, std::fabs(cv.omega - w_iter) / std::fabs(w_iter));
      }
    }
  }
  return {6, "Continued-fraction closed form vs recurrence", worst < 1e-12,
          fmt("worst relative deviation %.3e (limit 1e-12)", worst)};
}

CheckResult check_poincare_bound() {
  CounterRng rng(20260823u);
  int violations = 0;
  double worst_margin = 1e300;
  for (int i = 0; i < 500; ++i) {
    double m = 10.0 * rng.uniform(3 * i);
    double z = 2.0 * std::sqrt(m) * (1.0 + 3.0 * rng.uniform(3 * i + 1)) + 0.5;
    int J = 1 + static_cast<int>(8.0 * rng.uniform(3 * i + 2));
    specfun::PoincareResult pr = specfun::poincare_expand(m, z, J);
    double truth = specfun::pcf_scaled(m, z);
    double err = std::fabs(truth - pr.value);
    if (err > pr.bound) ++violations;
    worst_margin = std::min(worst_margin, pr.bound - err);
  }
  return {7, "Poincare remainder bound soundness", violations == 0,
          fmt("%.0f violations in 500 samples, smallest slack %.3e",
              static_cast<double>(violations), worst_margin)};
}

CheckResult check_shift_identity() {
  CounterRng rng(7u);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    double nu = 0.25 + 1.25 * rng.uniform(3 * i);
    double x = 0.5 + 2.5 * rng.uniform(3 * i + 1);
    double t = -0.5 + rng.uniform(3 * i + 2);
    specfun::ShiftIdentity si = specfun::shift_identity_check(nu, x, t, 60);
    worst = std::max(worst,
                     std::fabs(si.lhs - si.rhs) / std::max(1.0, std::fabs(si.rhs)));
  }
  return {8, "Weighted-sum shift identity", worst < 1e-9,
          fmt("worst residual %.3e (limit 1e-9)", worst)};
}

CheckResult check_method_agreement() {
  const double as[2] = {0.05, 0.1};
  const double bs[3] = {0.5, 1.0, 2.0};
  const double cs2[2] = {0.5, 1.0};
  const double betas[3] = {0.5, 1.0, 1.5};
  double worst = 0.0;
  for (double a : as)
    for (double b : bs)
      for (double c : cs2)
        for (double beta : betas) {
          ModelParams p(a, b, c, beta);
          double closed = ggy::z_beta(p, 1, ggy::Method::closed_form);
          double direct = ggy::z_beta(p, 1, ggy::Method::direct_ode);
          worst = std::max(worst, std::fabs(closed - direct));
        }
  // step convergence on the a = 0 (constant coefficient) problem
  ModelParams p(0.0, 2.0, 1.0, 1.0);
  auto unit = [](double) { return 1.0; };
  double ref = ggy::solve_ggy(p, unit, p.beta, p.beta / 8192.0).z_beta;
  std::vector<double> lx, ly;
  for (int n : {64, 128, 256}) {
    double z = ggy::solve_ggy(p, unit, p.beta, p.beta / n).z_beta;
    lx.push_back(std::log(p.beta / n));
    ly.push_back(std::log(std::fabs(z - ref)));
  }
  double slope = fit_slope(lx, ly);
  bool pass = worst < 1e-6 && std::fabs(slope - 4.0) < 0.2;
  return {9, "Direct ODE vs closed form, solver order", pass,
          fmt("worst |difference| %.3e (limit 1e-6), step slope %.3f", worst, slope)};
}

CheckResult check_remainder_decay() {
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  auto k0_rule = [](int N) {
    return static_cast<int>(std::ceil(4.0 * std::log2(static_cast<double>(N))));
  };
  std::vector<int> grids = {8, 16, 32, 64};
  remainders::DecayCertificate cert =
      remainders::certify_decay(p, grids, k0_rule, 2, 2);
  remainders::DecayCertificate control =
      remainders::certify_decay(p, grids, k0_rule, 0, 2);
  bool pass = cert.theta > 0.0 && !(control.theta > 0.0);
  return {10, "Remainder budget decay certification", pass,
          fmt("theta = %.3f (want > 0), J=0 control theta = %.3f (want <= 0)",
              cert.theta, control.theta)};
}

CheckResult check_moeler() {
  ModelParams p(0.0, 1.0, 1.0, 1.0);
  double v1 = oracles::coupling_derivative_clamped(p, 128) / 4.0;
  double v2 = oracles::coupling_derivative_clamped(p, 256) / 4.0;
  double bridge = 2.0 * v2 - v1;  // O(delta) Richardson
  double da = ggy::moeler_correction_da(p, p.beta);
  double rel = std::fabs(bridge - da) / std::fabs(da);

  ModelParams ph(0.1, 2.0, 1.0, 10.0);  // gamma beta = 20
  double g = std::sqrt(2.0 * ph.b / ph.c);
  double asym = 1.0 - 3.0 * ph.a / (32.0 * ph.c * ph.c * g * g * g) *
                          (2.0 * g * ph.beta - 3.0);
  double asym_dev = std::fabs(ggy::moeler_correction(ph, ph.beta) - asym);
  bool pass = rel < 0.01 && asym_dev < 1e-6;
  return {11, "Clamped-endpoint correction vs bridge oracle", pass,
          fmt("bridge deviation %.3e (limit 1e-2), asymptote residual %.3e",
              rel, asym_dev)};
}

std::string figure2_curve(double a) {
  ModelParams p(std::max(a, 0.0), 5.0, 0.5, 2.0);
  std::string out = "x,value\n";
  if (a == 0.0) {
    for (int i = 0; i < 200; ++i) {
      double tau = 0.01 + (2.0 - 0.01) * i / 199.0;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", tau, 0.0);
      out += buf;
    }
    return out;
  }
  continuum::ContinuumSeries series(p, 2.0, 3);
  for (int i = 0; i < 200; ++i) {
    double tau = 0.01 + (2.0 - 0.01) * i / 199.0;
    double s = series.s(tau), d1 = series.s_d1(tau), d2 = series.s_d2(tau);
    double r = d1 / s;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g,%.12g\n", tau, -2.0 * d2 / s - 2.0 * r * r);
    out += buf;
  }
  return out;
}

CheckResult check_figures() {
  // determinism of the cached-series pipeline
  bool deterministic = figure2_curve(0.1) == figure2_curve(0.1);
  // S decreasing in a at the figure-1 operating point
  double prev = 2.0;
  bool monotone = true;
  for (double a : {0.0, 0.05, 0.1, 0.2}) {
    ModelParams p(a, 5.0, 0.5, 1.0);
    double s = continuum::s_continuum(p, 1.0, 3);
    if (s >= prev) monotone = false;
    prev = s;
  }
  // figure-2 quantity vanishes identically at a = 0
  double worst0 = 0.0;
  {
    ModelParams p(0.0, 5.0, 0.5, 2.0);
    continuum::ContinuumSeries series(p, 2.0, 3);
    for (double tau : {0.01, 0.5, 1.0, 2.0}) {
      double s = series.s(tau), d1 = series.s_d1(tau), d2 = series.s_d2(tau);
      double r = d1 / s;
      worst0 = std::max(worst0, std::fabs(-2.0 * d2 / s - 2.0 * r * r));
    }
  }
  bool pass = deterministic && monotone && worst0 < 1e-12;
  return {12, "Figure curves: determinism and limits", pass,
          fmt("a=0 residual %.3e (limit 1e-12), monotone=%.0f, deterministic=%.0f",
              worst0, monotone ? 1.0 : 0.0, deterministic ? 1.0 : 0.0)};
}

}  // namespace

CheckResult run_check(int id) {
  switch (id) {
    case 1: return check_i1_series();
    case 2: return check_multisum();
    case 3: return check_harmonic_chain();
    case 4: return check_mu1_term();
    case 5: return check_rational_corner();
    case 6: return check_contfrac();
    case 7: return check_poincare_bound();
    case 8: return check_shift_identity();
    case 9: return check_method_agreement();
    case 10: return check_remainder_decay();
    case 11: return check_moeler();
    case 12: return check_figures();
    default: throw DomainError("run_check: id must be in 1..12");
  }
}

std::vector<CheckResult> run_suite(bool quick, bool inject_failure) {
  std::vector<CheckResult> out;
  for (int id = 1; id <= kNumChecks; ++id) {
    if (quick && id == 2) {
      out.push_back({id, "N-slice multisum vs brute-force quadrature", true,
                     "skipped in quick mode"});
      continue;
    }
    try {
      out.push_back(run_check(id));
    } catch (const std::exception& e) {
      out.push_back({id, "check raised", false, e.what()});
    }
  }
  if (inject_failure)
    out.push_back({0, "injected negative control", false, "forced failure"});
  return out;
}

}  // namespace anharmonic::validation
