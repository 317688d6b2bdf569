#include "anharmonic/oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <functional>
#include <vector>

#include "anharmonic/errors.hpp"
#include "anharmonic/rng.hpp"
#include "anharmonic/signed_log.hpp"
#include "anharmonic/specfun.hpp"

namespace anharmonic::oracles {

namespace {

using boost::math::quadrature::gauss_kronrod;

constexpr double kLogCut = 45.0;  // truncate where exp drops below ~3e-20

struct Exponent {
  double A, B, C;
  double operator()(double x) const { return ((A * x * x + B) * x + C) * x; }
};

/// Minimum of the quartic exponent by scan + Newton polish.
double exponent_min_location(const Exponent& g) {
  double span = 1.0;
  while (g(span) < g(0.0) + 1.0 || g(-span) < g(0.0) + 1.0) span *= 2.0;
  double best_x = 0.0, best = g(0.0);
  for (int i = -400; i <= 400; ++i) {
    double x = span * i / 400.0;
    double v = g(x);
    if (v < best) { best = v; best_x = x; }
  }
  double x = best_x;
  for (int it = 0; it < 60; ++it) {
    double d1 = 4.0 * g.A * x * x * x + 2.0 * g.B * x + g.C;
    double d2 = 12.0 * g.A * x * x + 2.0 * g.B;
    if (d2 <= 0.0) break;
    double step = d1 / d2;
    x -= step;
    if (std::fabs(step) < 1e-15 * (1.0 + std::fabs(x))) break;
  }
  return g(x) <= best ? x : best_x;
}

double edge(const Exponent& g, double x0, double g0, int dir) {
  double step = 1.0;
  double x = x0;
  while (g(x + dir * step) < g0 + kLogCut) step *= 2.0;
  double lo = x, hi = x + dir * step;
  for (int it = 0; it < 80; ++it) {
    double mid = 0.5 * (lo + hi);
    (g(mid) < g0 + kLogCut ? lo : hi) = mid;
  }
  return hi;
}

int tridiag_size_check(int N) {
  if (N < 1) throw DomainError("oracle: N must be >= 1");
  return N;
}

/// Diagonal coefficients of T = (2 delta / c) M: interior 2(1+b d^2/c),
/// last 1 + 2 b d^2/c; off-diagonals are -1.
std::vector<double> t_diagonal(const ModelParams& p, int N) {
  double d = p.beta / N;
  double d2bc = p.b * d * d / p.c;
  std::vector<double> t(N, 2.0 * (1.0 + d2bc));
  t[N - 1] = 1.0 + 2.0 * d2bc;
  return t;
}

/// log (T^{-1})_ii for i = 1..N via ratio sweeps; throws on non-PD.
std::vector<double> log_inverse_diagonal(const std::vector<double>& t) {
  int N = static_cast<int>(t.size());
  std::vector<double> lfr(N), lbr(N);
  double fr = t[0];
  for (int i = 0; i < N; ++i) {
    if (i > 0) fr = t[i] - 1.0 / fr;
    if (fr <= 0.0) throw NotPositiveDefinite("quadratic form not positive definite", i + 1);
    lfr[i] = std::log(fr);
  }
  double br = t[N - 1];
  for (int i = N - 1; i >= 0; --i) {
    if (i < N - 1) br = t[i] - 1.0 / br;
    if (br <= 0.0) throw NotPositiveDefinite("quadratic form not positive definite", i + 1);
    lbr[i] = std::log(br);
  }
  // log (T^{-1})_ii = -lfr_i + sum_{j > i} (lbr_j - lfr_j)
  std::vector<double> out(N);
  double suffix = 0.0;
  for (int i = N - 1; i >= 0; --i) {
    out[i] = -lfr[i] + suffix;
    suffix += lbr[i] - lfr[i];
  }
  return out;
}

}  // namespace

OracleResult integrate_i1(double A, double B, double C) {
  if (!(A > 0.0)) throw DomainError("integrate_i1: quartic coefficient must be > 0");
  Exponent g{A, B, C};
  double x0 = exponent_min_location(g);
  double g0 = g(x0);
  double lo = edge(g, x0, g0, -1), hi = edge(g, x0, g0, +1);
  long long cost = 0;
  auto f = [&](double x) {
    ++cost;
    return std::exp(-(g(x) - g0));
  };
  double err = 0.0;
  double v = gauss_kronrod<double, 15>::integrate(f, lo, hi, 12, 1e-13, &err);
  double scale = std::exp(-g0);
  return {v * scale, err * scale, cost};
}

double i1_series(double A, double B, double C, int M) {
  if (!(A > 0.0)) throw DomainError("i1_series: quartic coefficient must be > 0");
  double s = std::sqrt(2.0 * A);
  double xi = C * C / (4.0 * s);
  double z = B / s;
  SignedLog sum;
  double lxi = (xi > 0.0) ? std::log(xi) : -std::numeric_limits<double>::infinity();
  for (int m = 0; m <= M; ++m) {
    if (m > 0 && xi == 0.0) break;
    SignedLog term = SignedLog::from_log(m * lxi - std::lgamma(m + 1.0) +
                                         0.25 * z * z) *
                     specfun::pcf_d_log(-m - 0.5, z);
    sum = sum + term;
  }
  return (SignedLog::from_log(0.5 * std::log(M_PI) - 0.25 * std::log(2.0 * A)) * sum)
      .value_checked();
}

OracleResult zn_bruteforce(const ModelParams& p, int N) {
  tridiag_size_check(N);
  if (N > 3) throw DomainError("zn_bruteforce: N <= 3 only");
  double d = p.beta / N;
  double kin = 0.5 * p.c / d;
  // single-site reach: a d R^4 - |b| d R^2 = 80
  double ad = p.a * d, bd = std::fabs(p.b) * d;
  double R2 = (bd + std::sqrt(bd * bd + 320.0 * ad)) / (2.0 * ad);
  double R = std::sqrt(R2) + std::sqrt(80.0 / kin);
  long long cost = 0;

  std::vector<double> phi(N + 1, 0.0);
  double outer_err = 0.0;
  std::function<double(int)> level = [&](int i) -> double {
    auto f = [&](double x) -> double {
      phi[i] = x;
      double s = kin * (x - phi[i - 1]) * (x - phi[i - 1]) +
                 p.b * d * x * x + p.a * d * x * x * x * x;
      if (i == N) {
        ++cost;
        return std::exp(-s);
      }
      return std::exp(-s) * level(i + 1);
    };
    double err = 0.0;
    double v = gauss_kronrod<double, 15>::integrate(f, -R, R, i == 1 ? 10 : 7,
                                                    i == 1 ? 1e-9 : 3e-10, &err);
    if (i == 1) outer_err = err;
    return v;
  };
  double v = level(1);
  double measure = std::pow(p.c / (2.0 * M_PI * d), 0.5 * N);
  return {v * measure, (outer_err + 3e-9 * std::fabs(v)) * measure, cost};
}

double zn_gaussian(const ModelParams& p, int N) {
  tridiag_size_check(N);
  std::vector<double> t = t_diagonal(p, N);
  // log-space minor recurrence D_i = t_i D_{i-1} - D_{i-2}
  SignedLog dm1 = SignedLog::from_value(1.0);
  SignedLog dm = SignedLog::from_value(t[0]);
  if (dm.sign <= 0) throw NotPositiveDefinite("gaussian: leading minor not positive", 1);
  for (int i = 1; i < N; ++i) {
    SignedLog next = SignedLog::from_value(t[i]) * dm - dm1;
    if (next.sign <= 0)
      throw NotPositiveDefinite("gaussian: leading minor not positive", i + 1);
    dm1 = dm;
    dm = next;
  }
  return std::exp(-0.5 * dm.log_abs);
}

double coupling_derivative(const ModelParams& p, int N) {
  tridiag_size_check(N);
  double d = p.beta / N;
  std::vector<double> ldiag = log_inverse_diagonal(t_diagonal(p, N));
  // Sigma_ii = <phi_i^2> = (delta/c) (T^{-1})_ii
  double sum = 0.0;
  for (double l : ldiag) sum += std::exp(2.0 * l);
  return 3.0 * d * (d / p.c) * (d / p.c) * sum;
}

double coupling_derivative_clamped(const ModelParams& p, int N) {
  tridiag_size_check(N);
  if (N < 2) return 0.0;
  double d = p.beta / N;
  double d2bc = p.b * d * d / p.c;
  std::vector<double> t(N - 1, 2.0 * (1.0 + d2bc));
  std::vector<double> ldiag = log_inverse_diagonal(t);
  double sum = 0.0;
  for (double l : ldiag) sum += std::exp(2.0 * l);
  return 3.0 * d * (d / p.c) * (d / p.c) * sum;
}

OracleResult zn_montecarlo(const ModelParams& p, int N, long long samples,
                           std::uint64_t seed) {
  tridiag_size_check(N);
  if (samples < 64) throw DomainError("zn_montecarlo: need at least 64 samples");
  double d = p.beta / N;
  double z0 = zn_gaussian(p, N);
  // Cholesky of K = 2M = (c/delta) T: lower bidiagonal (l_i diagonal, m_i sub)
  std::vector<double> t = t_diagonal(p, N);
  double scale = p.c / d;
  std::vector<double> l(N), m(N, 0.0);
  for (int i = 0; i < N; ++i) {
    double v = scale * t[i];
    if (i > 0) {
      m[i] = -scale / l[i - 1];
      v -= m[i] * m[i];
    }
    if (v <= 0.0) throw NotPositiveDefinite("montecarlo: Cholesky failed", i + 1);
    l[i] = std::sqrt(v);
  }
  CounterRng rng(seed);
  const int kBatches = 32;
  long long per_batch = samples / kBatches;
  samples = per_batch * kBatches;
  std::vector<double> batch_mean(kBatches, 0.0);
  std::vector<double> phi(N);
  std::uint64_t ctr = 0;
  for (int b = 0; b < kBatches; ++b) {
    double acc = 0.0;
    for (long long s = 0; s < per_batch; ++s) {
      for (int i = N - 1; i >= 0; --i) {
        double zeta = rng.normal(ctr++);
        phi[i] = zeta / l[i];
        if (i < N - 1) phi[i] -= m[i + 1] * phi[i + 1] / l[i];
      }
      double quartic = 0.0;
      for (double x : phi) quartic += x * x * x * x;
      acc += std::exp(-p.a * d * quartic);
    }
    batch_mean[b] = acc / per_batch;
  }
  double mean = 0.0;
  for (double v : batch_mean) mean += v;
  mean /= kBatches;
  double var = 0.0;
  for (double v : batch_mean) var += (v - mean) * (v - mean);
  var /= (kBatches - 1.0) * kBatches;
  return {z0 * mean, z0 * std::sqrt(var), samples};
}

}  // namespace anharmonic::oracles
