#include "anharmonic/recurrence.hpp"

#include <cmath>

#include "anharmonic/contfrac.hpp"
#include "anharmonic/specfun.hpp"

namespace anharmonic::recurrence {

namespace {

std::vector<double> omega_from_grid(const SliceGrid& grid, int count) {
  return contfrac::omega_sequence<double>(grid.A * grid.A, grid.B, count - 1);
}

std::vector<double> q_scaled_from_grid(const SliceGrid& grid, int nmax) {
  contfrac::ConvergentState s = contfrac::state_from_grid(grid);
  std::vector<double> Q(nmax + 1);
  for (int n = 0; n <= nmax; ++n) Q[n] = contfrac::q_scaled(s, n);
  return Q;
}

double tanh_over_gamma(const ModelParams& params, double tau) {
  double g2 = 2.0 * params.b / params.c;
  if (std::fabs(g2) * tau * tau < 1e-12) return tau;
  if (g2 > 0.0) {
    double g = std::sqrt(g2);
    return std::tanh(g * tau) / g;
  }
  double g = std::sqrt(-g2);
  if (g * tau >= M_PI / 2.0)
    throw DomainError("divergent tail: tan pole inside the interval");
  return std::tan(g * tau) / g;
}

}  // namespace

double a_coeff(int j, int i) {
  if (i < 0 || i > j) return 0.0;
  return std::exp(std::lgamma(j + 1.0) - std::lgamma(i + 1.0) -
                  std::lgamma(j - i + 1.0) +
                  specfun::log_pochhammer_positive(0.5, j) -
                  specfun::log_pochhammer_positive(0.5, i));
}

LambdaTable::LambdaTable(const SliceGrid& grid, int Lmax, int mumax)
    : table_(omega_from_grid(grid, Lmax), grid.A * grid.A, Lmax, mumax) {}

Polynomial d_xi_apply(const Polynomial& poly, int times) {
  Polynomial cur = poly;
  for (int t = 0; t < times; ++t) {
    if (cur.size() <= 2) return {};
    Polynomial next(cur.size() - 2, 0.0);
    for (std::size_t k = 2; k < cur.size(); ++k)
      next[k - 2] = cur[k] * d_xi_monomial_factor<double>(static_cast<long>(k));
    cur = std::move(next);
  }
  return cur;
}

TriMatrix matrix_build(MatrixKind kind, int d, int mu, const std::vector<double>& Q,
                       double A, int Lambda) {
  if (d < 0 || d > mu) throw DomainError("matrix_build: need 0 <= d <= mu");
  ACoeffTable<double> ac(2 * mu);
  TriMatrix m{kind, d, 0, 0, {}};
  switch (kind) {
    case MatrixKind::a_lower: {
      if (Lambda < 1 || static_cast<int>(Q.size()) <= Lambda)
        throw DomainError("matrix_build: Q must hold Q_0..Q_Lambda");
      m.rows = m.cols = 2 * mu + 1;
      m.v.assign(m.rows * m.cols, 0.0);
      double aqq = A * Q[Lambda] * Q[Lambda - 1];
      for (int p = 0; p <= 2 * d; ++p)
        for (int j = 0; j <= p; ++j)
          m.at(p, j) = ac.get(2 * d - j, 2 * d - p) / detail::int_power(aqq, p - j);
      break;
    }
    case MatrixKind::c_base: {
      m.rows = 2 * mu + 1;
      m.cols = mu + 1;
      m.v.assign(m.rows * m.cols, 0.0);
      double aq10 = A * Q[1] * Q[0];
      for (int lam = 0; lam <= mu; ++lam)
        for (int j = 0; j <= 2 * lam; ++j)
          m.at(j, lam) = detail::int_power(Q[0], 4 * lam) /
                         detail::int_power(aq10, j) * ac.get(2 * lam, 2 * lam - j);
      break;
    }
    case MatrixKind::m_upper: {
      m.rows = m.cols = mu + 1;
      m.v.assign(m.rows * m.cols, 0.0);
      for (int l = 0; l <= d; ++l)
        for (int k = l; k <= d; ++k)
          m.at(l, k) = detail::binom_int<double>(k, l) *
                       detail::int_power(Q[Lambda - 1], 4 * (k - l));
      break;
    }
    case MatrixKind::projector: {
      m.rows = m.cols = mu + 1;
      m.v.assign(m.rows * m.cols, 0.0);
      m.at(d, d) = 1.0;
      break;
    }
  }
  return m;
}

double c_matrix_closed_form(const SliceGrid& grid, int Lambda, int mu) {
  std::vector<double> Q = q_scaled_from_grid(grid, Lambda);
  return c_matrix_corner_nested<double>(grid.A, Q, Lambda, mu);
}

SLambdaResult s_lambda(const SliceGrid& grid, int Lambda, int J) {
  if (J < 0) throw DomainError("s_lambda: J must be >= 0");
  LambdaTable table(grid, Lambda, J + 1);
  const double l2z2 = std::log(2.0 * grid.z * grid.z);
  double sum = 0.0;
  for (int mu = 0; mu <= J; ++mu) {
    double mag = std::exp(-std::lgamma(mu + 1.0) - mu * l2z2);
    sum += ((mu % 2 == 0) ? 1.0 : -1.0) * mag * table.value(Lambda, mu, 0);
  }
  double omitted = std::exp(-std::lgamma(J + 2.0) - (J + 1) * l2z2) *
                   std::fabs(table.value(Lambda, J + 1, 0));
  return {sum, omitted};
}

double j_function(int l, int MIN, int n, int i_j, double ratio) {
  double sum = 0.0;
  for (int p = l; p <= MIN; ++p) {
    int k = 2 * i_j - p;
    if (k < 0 || n - 2 * i_j - p < 0) continue;  // negative factorial: term is 0
    // binom(2 i_j - 1/2, k)
    double half_binom = 1.0;
    for (int t = 0; t < k; ++t) half_binom *= (2.0 * i_j - 0.5 - t) / (t + 1.0);
    double term = detail::binom_int<double>(2 * i_j - l, p - l) * half_binom *
                  std::exp(std::lgamma(n + 1.0) + std::lgamma(k + 1.0) -
                           std::lgamma(n - 2 * i_j - p + 1.0)) *
                  std::pow(ratio, p);
    sum += term;
  }
  return sum;
}

double divergent_tail_term(const ModelParams& params, double delta, double tau,
                           int mu) {
  if (mu < 0) throw DomainError("divergent_tail_term: mu must be >= 0");
  if (mu == 0) return 1.0;
  double th = tanh_over_gamma(params, tau);
  double lmag = mu * (std::log(params.a) - 2.0 * std::log(params.c) +
                      std::log(delta) + std::log(2.0)) -
                std::lgamma(mu + 1.0) +
                specfun::log_pochhammer_positive(0.5, 2 * mu) +
                2.0 * mu * std::log(std::fabs(th));
  double sign = (mu % 2 == 0) ? 1.0 : -1.0;
  if (th < 0.0) sign *= 1.0;  // even power of th
  return sign * std::exp(lmag);
}

int suggest_truncation_order(const ModelParams& params, double delta, double tau,
                             int mu_cap) {
  if (mu_cap < 1) throw DomainError("suggest_truncation_order: mu_cap >= 1");
  int best = 1;
  double best_mag = std::fabs(divergent_tail_term(params, delta, tau, 1));
  for (int mu = 2; mu <= mu_cap; ++mu) {
    double mag = std::fabs(divergent_tail_term(params, delta, tau, mu));
    if (mag < best_mag) {
      best_mag = mag;
      best = mu;
    }
  }
  return best;
}

}  // namespace anharmonic::recurrence
