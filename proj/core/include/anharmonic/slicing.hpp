#pragma once

#include "anharmonic/model.hpp"

namespace anharmonic::slicing {

/**
 * Exact truncated multi-index sum for the N-dimensional slice integral:
 * prefactors [2 pi (1+b d^2/c)]^{-(N-1)/2} [2 pi (1/2+b d^2/c)]^{-1/2} times
 * sum over k_1..k_{N-1} <= K0 of prod_i xi_i^{2k_i}/(2k_i)!
 * Gamma(k_{i-1}+k_i+1/2) scriptD_{-k_{i-1}-k_i-1/2}(z_i), k_0 = k_N = 0.
 * Cost (K0+1)^{N-1}; N <= 5 enforced.
 */
double zn_multisum(const SliceGrid& grid, int K0);

/**
 * Stirling-level approximation of ln a_k for the single-index series:
 * -(k - (k_prev+k_next-1)/2) ln k + 2k(ln(xi z) - ln 2 + 1/2) - 2 sqrt(k) z
 * + (k_prev+k_next+1) ln z + ln(pi)/2 + z^2/2.
 * The z^2/2 term is kept against the unscaled-D convention of the series.
 */
double term_log_asymptotics(long k, long k_prev, long k_next, double xi, double z);

/**
 * eps(K0) = (tail k > K0) / (head k <= K0) for the single-index series
 * a_k = xi^{2k}/(2k)! G(k_prev+k+1/2) G(k+k_next+1/2)
 *       scriptD(k_prev+k, z) scriptD(k+k_next, z),
 * the tail summed until terms fall below 1e-18 of the head.
 */
double principal_sum_epsilon(const SliceGrid& grid, int K0, int k_prev, int k_next);

}  // namespace anharmonic::slicing
