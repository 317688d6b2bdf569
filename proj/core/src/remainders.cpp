#include "anharmonic/remainders.hpp"

#include <cmath>

#include "anharmonic/errors.hpp"
#include "anharmonic/specfun.hpp"

namespace anharmonic::remainders {

namespace {

/// Temme-style constant at expansion parameter a (real order proxy), finite
/// only on 2 sqrt(a) <= z.
double temme_constant(double a, double z, int J) {
  double z2 = z * z;
  double denom = z2 - 2.0 * a;
  if (!(denom > 0.0)) throw DomainError("remainders: z too small for this K0");
  double theta = std::fabs(a * a / 4.0 + 3.0 / 16.0) +
                 (2.0 * a / z2) * (1.0 + a / (2.0 * z2)) * z2 / (denom * denom);
  double arg = 1.0 - a * a / z2;
  return (2.0 * z2 / denom) *
         specfun::hyp1f2(J / 2.0, 0.5, J / 2.0 + 1.0, arg) *
         std::exp(4.0 * theta / denom * specfun::hyp1f2(0.5, 0.5, 1.5, arg));
}

double head_weight_log(const SliceGrid& grid, int k, int k_prev, int k_next,
                       int gamma_shift) {
  return 2.0 * k * std::log(grid.xi) - std::lgamma(2.0 * k + 1.0) +
         std::lgamma(k_prev + k + 0.5) +
         std::lgamma(k + k_next + gamma_shift + 0.5) +
         specfun::pcf_scaled_log(k_prev + k, grid.z);
}

}  // namespace

double bound_poincare_piece(const SliceGrid& grid, int K0, int J, int k_prev,
                            int k_next) {
  if (K0 < 0 || J < 0) throw DomainError("bound_poincare_piece: bad extents");
  const double z = grid.z;
  if (J == 0) {
    // no expansion taken: |scriptD - 1| is the whole per-factor error
    double dev = 0.0;
    for (int m = 0; m <= 2 * K0; ++m)
      dev = std::max(dev, std::fabs(specfun::pcf_scaled(m, z) - 1.0));
    double head = 0.0;
    for (int k = 0; k <= K0; ++k)
      head += std::exp(head_weight_log(grid, k, k_prev, k_next, 0) +
                       specfun::pcf_scaled_log(k + k_next, z));
    return dev * head;
  }
  double big_m = 0.0;
  for (int a = 0; a <= 2 * K0; ++a)
    big_m = std::max(big_m, temme_constant(a, z, J));
  double lead_log = std::log(big_m) - std::lgamma(static_cast<double>(J)) -
                    J * std::log(2.0 * z * z);
  double sum = 0.0;
  for (int k = 0; k <= K0; ++k)
    sum += std::exp(head_weight_log(grid, k, k_prev, k_next, 2 * J) + lead_log);
  return sum;
}

double bound_tail_piece(const SliceGrid& grid, int K0, int n) {
  if (K0 < 0) throw DomainError("bound_tail_piece: K0 must be >= 0");
  int explicit_terms = std::max(1, n);
  const double z = grid.z;
  auto term_log = [&](int k) {
    specfun::TemmeExponent te = specfun::temme_exponent(static_cast<double>(k), z);
    double replaced = -te.big_a * z * z - 0.25 * std::log1p(4.0 * te.lambda);
    return head_weight_log(grid, k, 0, 0, 0) + replaced;
  };
  double first = term_log(K0 + 1);
  double sum = 0.0, last = first;
  for (int j = 0; j < explicit_terms; ++j) {
    last = term_log(K0 + 1 + j);
    sum += std::exp(last - first);
  }
  double next = term_log(K0 + 1 + explicit_terms);
  double ratio = std::exp(next - last);
  if (!(ratio < 0.5))
    throw ConvergenceError("bound_tail_piece: tail ratio not below 1/2", K0 + 1);
  sum += std::exp(next - first) / (1.0 - ratio);
  return 2.0 * (grid.N > 1 ? grid.N - 1 : 1) * std::exp(first) * sum;
}

double bound_difference_piece(const SliceGrid& grid, int K0, int J, int n) {
  if (K0 < 0) throw DomainError("bound_difference_piece: K0 must be >= 0");
  int q = std::min(n, J);
  if (q < 0) throw DomainError("bound_difference_piece: n, J must be >= 0");
  double lc = specfun::log_pochhammer_positive(2.0 * K0 + 0.5, 2 * q) -
              std::lgamma(q + 1.0) - q * std::log(2.0);
  return std::exp(lc - 2.0 * q * std::log(grid.z));
}

RemainderBudget budget(const SliceGrid& grid, int K0, int J, int n) {
  RemainderBudget b{};
  b.N = grid.N;
  b.K0 = K0;
  b.J = J;
  b.n = n;
  b.poincare_piece = bound_poincare_piece(grid, K0, J, 0, 0);
  b.tail_piece = bound_tail_piece(grid, K0, n);
  b.difference_piece = bound_difference_piece(grid, K0, J, n);
  b.total = b.poincare_piece + b.tail_piece + b.difference_piece;
  b.theta_fit = 0.0;
  return b;
}

DecayCertificate certify_decay(const ModelParams& params,
                               const std::vector<int>& n_list,
                               const std::function<int(int)>& k0_rule, int J,
                               int n) {
  if (n_list.size() < 2) throw DomainError("certify_decay: need >= 2 grids");
  DecayCertificate cert;
  cert.monotone = true;
  for (int N : n_list) {
    SliceGrid grid = build_grid(params, N);
    cert.budgets.push_back(budget(grid, k0_rule(N), J, n));
    std::size_t m = cert.budgets.size();
    if (m > 1 && cert.budgets[m - 1].total > cert.budgets[m - 2].total)
      cert.monotone = false;
  }
  // least-squares slope of log(total) vs log(N); total ~ N^{-1-theta}
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  std::size_t m = cert.budgets.size();
  for (const RemainderBudget& b : cert.budgets) {
    double x = std::log(static_cast<double>(b.N));
    double y = std::log(b.total);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
  }
  double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  cert.theta = -slope - 1.0;
  for (RemainderBudget& b : cert.budgets) b.theta_fit = cert.theta;
  return cert;
}

}  // namespace anharmonic::remainders
