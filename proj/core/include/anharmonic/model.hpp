#pragma once

namespace anharmonic {

/**
 * Physical constants of the model, dimensionless units.
 * Action density: c/2 phi'^2 + b phi^2 + a phi^4.
 */
struct ModelParams {
  double a;     // quartic coupling, >= 0
  double b;     // quadratic coefficient, any sign
  double c;     // kinetic coefficient, > 0
  double beta;  // upper time bound, > 0

  ModelParams(double a_, double b_, double c_, double beta_);
};

/**
 * Discretization quantities derived from ModelParams and slice count N.
 * The last slice carries the 1/2-weighted diagonal, hence the _last pair.
 */
struct SliceGrid {
  int N;
  double delta;     // beta / N
  double xi;        // interior (1 + b delta^2/c)^{-1}
  double xi_last;   // (1 + b delta^2/c)^{-1/2} (1/2 + b delta^2/c)^{-1/2}
  double z;         // interior c (1 + b delta^2/c) / sqrt(2 a delta^3)
  double z_last;    // c (1/2 + b delta^2/c) / sqrt(2 a delta^3)
  double omega0;    // (1/2 + b delta^2/c) / (1 + b delta^2/c) = 1/2 + B
  double A;         // 1 / (2 (1 + b delta^2/c))
  double B;         // (b delta^2/c) / (2 (1 + b delta^2/c))

  /// z for slice i < N, z_last for i = N.
  double z_at(int i) const { return i < N ? z : z_last; }
  /// xi for slice i <= N-2, xi_last for i = N-1 (i = N is inert, k_N = 0).
  double xi_at(int i) const { return i < N - 1 ? xi : xi_last; }
};

/// Populates a SliceGrid; requires a > 0, N >= 1 and both diagonal weights
/// positive (throws DomainError when the grid is too coarse for negative b).
SliceGrid build_grid(const ModelParams& params, int N);

}  // namespace anharmonic
