#include "anharmonic/slicing.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "anharmonic/errors.hpp"
#include "anharmonic/specfun.hpp"

namespace anharmonic::slicing {

namespace {

/// log of one slice factor: xi^{2k}/(2k)! Gamma(m+1/2) scriptD_m(z), m = k_prev + k.
class FactorCache {
 public:
  FactorCache(const SliceGrid& grid, int mmax)
      : grid_(grid),
        interior_(mmax + 1, std::numeric_limits<double>::quiet_NaN()),
        last_(mmax + 1, std::numeric_limits<double>::quiet_NaN()) {}

  double scaled_log(int m, bool last) {
    auto& v = last ? last_ : interior_;
    if (std::isnan(v[m]))
      v[m] = specfun::pcf_scaled_log(m, last ? grid_.z_last : grid_.z);
    return v[m];
  }

 private:
  const SliceGrid& grid_;
  std::vector<double> interior_, last_;
};

}  // namespace

double zn_multisum(const SliceGrid& grid, int K0) {
  const int N = grid.N;
  if (N > 5) throw DomainError("zn_multisum: N <= 5 only");
  if (K0 < 0) throw DomainError("zn_multisum: K0 must be >= 0");
  FactorCache cache(grid, 2 * K0);

  const double two_pi = 2.0 * M_PI;
  const double w_int = 1.0 / (2.0 * grid.A);             // 1 + b d^2/c
  const double w_last = grid.omega0 * w_int;             // 1/2 + b d^2/c
  const double log_pref =
      -0.5 * (N - 1) * std::log(two_pi * w_int) - 0.5 * std::log(two_pi * w_last);

  double sum = 0.0;
  std::vector<int> k(N + 1, 0);  // k[0] = k[N] = 0
  std::vector<double> partial(N + 1, 0.0);

  // partial[i] = sum of slice-factor logs for slices 1..i (factor i depends
  // on k[i-1], k[i]); slice i < N contributes xi_at(i)^{2 k_i}/(2 k_i)!
  auto slice_log = [&](int i) {
    int m = k[i - 1] + k[i];
    double l = std::lgamma(m + 0.5) + cache.scaled_log(m, i == N);
    if (i < N)
      l += 2.0 * k[i] * std::log(grid.xi_at(i)) - std::lgamma(2.0 * k[i] + 1.0);
    return l;
  };

  std::function<void(int)> rec = [&](int i) {
    if (i == N) {
      sum += std::exp(partial[N - 1] + slice_log(N));
      return;
    }
    for (k[i] = 0; k[i] <= K0; ++k[i]) {
      partial[i] = partial[i - 1] + slice_log(i);
      rec(i + 1);
    }
    k[i] = 0;
  };

  if (N == 1) {
    sum = std::exp(slice_log(1));
  } else {
    rec(1);
  }
  return std::exp(log_pref) * sum;
}

double term_log_asymptotics(long k, long k_prev, long k_next, double xi, double z) {
  if (k < 1) throw DomainError("term_log_asymptotics: k must be >= 1");
  double kk = static_cast<double>(k);
  return -(kk - 0.5 * (k_prev + k_next - 1)) * std::log(kk) +
         2.0 * kk * (std::log(xi * z) - std::log(2.0) + 0.5) -
         2.0 * std::sqrt(kk) * z + (k_prev + k_next + 1) * std::log(z) +
         0.5 * std::log(M_PI) + 0.5 * z * z;
}

double principal_sum_epsilon(const SliceGrid& grid, int K0, int k_prev, int k_next) {
  if (K0 < 0) throw DomainError("principal_sum_epsilon: K0 must be >= 0");
  const double lxi = std::log(grid.xi);
  auto term_log = [&](int k) {
    return 2.0 * k * lxi - std::lgamma(2.0 * k + 1.0) +
           std::lgamma(k_prev + k + 0.5) + std::lgamma(k + k_next + 0.5) +
           specfun::pcf_scaled_log(k_prev + k, grid.z) +
           specfun::pcf_scaled_log(k + k_next, grid.z);
  };
  double head_ref = term_log(0);
  double head = 0.0;
  for (int k = 0; k <= K0; ++k) head += std::exp(term_log(k) - head_ref);
  double tail = 0.0;
  for (int k = K0 + 1; k < K0 + 100000; ++k) {
    double t = std::exp(term_log(k) - head_ref);
    tail += t;
    if (t < 1e-18 * head) break;
  }
  return tail / head;
}

}  // namespace anharmonic::slicing
