#pragma once

#include <functional>
#include <vector>

#include "anharmonic/model.hpp"

namespace anharmonic::remainders {

struct RemainderBudget {
  double poincare_piece;
  double tail_piece;
  double difference_piece;
  double total;
  int N;
  int K0, J, n;
  double theta_fit;  // filled by certify_decay
};

/// Finite-sum piece: the Poincare remainder summed over k <= K0 with eps
/// replaced by its bound, the constant maximized over a = 0..2 K0.
/// J = 0 falls back to the computable max |scriptD - 1| times the head weight.
double bound_poincare_piece(const SliceGrid& grid, int K0, int J, int k_prev,
                            int k_next);

/// Geometric-majorant bound on the k > K0 tail using the measured term ratio
/// and the Temme leading magnitude e^{-A z^2} (1+4 lambda)^{-1/4}.
double bound_tail_piece(const SliceGrid& grid, int K0, int n);

/// Cancellation leftover: C z^{-2 min(n, J)} with C the largest surviving
/// inverse-power coefficient on the a-grid.
double bound_difference_piece(const SliceGrid& grid, int K0, int J, int n);

/// Assembles a budget at one grid.
RemainderBudget budget(const SliceGrid& grid, int K0, int J, int n);

struct DecayCertificate {
  std::vector<RemainderBudget> budgets;
  double theta;    // fitted exponent of total ~ N^{-1-theta}
  bool monotone;   // totals non-increasing in N
};

/// Budgets over N_list with K0 = k0_rule(N); fits total(N) ~ N^{-1-theta}.
DecayCertificate certify_decay(const ModelParams& params,
                               const std::vector<int>& n_list,
                               const std::function<int(int)>& k0_rule, int J, int n);

}  // namespace anharmonic::remainders
