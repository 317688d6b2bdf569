#include "anharmonic/model.hpp"

#include <cmath>

#include "anharmonic/errors.hpp"

namespace anharmonic {

ModelParams::ModelParams(double a_, double b_, double c_, double beta_)
    : a(a_), b(b_), c(c_), beta(beta_) {
  if (!(a >= 0.0)) throw DomainError("ModelParams: a must be >= 0");
  if (!std::isfinite(b)) throw DomainError("ModelParams: b must be finite");
  if (!(c > 0.0)) throw DomainError("ModelParams: c must be > 0");
  if (!(beta > 0.0)) throw DomainError("ModelParams: beta must be > 0");
}

SliceGrid build_grid(const ModelParams& params, int N) {
  if (N < 1) throw DomainError("build_grid: N must be >= 1");
  if (!(params.a > 0.0)) throw DomainError("build_grid: a must be > 0");
  SliceGrid g{};
  g.N = N;
  g.delta = params.beta / N;
  const double d2bc = params.b * g.delta * g.delta / params.c;
  const double w_int = 1.0 + d2bc;
  const double w_last = 0.5 + d2bc;
  if (!(w_int > 0.0) || !(w_last > 0.0))
    throw DomainError("build_grid: grid too coarse, diagonal weight not positive");
  const double s = std::sqrt(2.0 * params.a * g.delta * g.delta * g.delta);
  g.xi = 1.0 / w_int;
  g.xi_last = 1.0 / std::sqrt(w_int * w_last);
  g.z = params.c * w_int / s;
  g.z_last = params.c * w_last / s;
  g.omega0 = w_last / w_int;
  g.A = 0.5 / w_int;
  g.B = 0.5 * d2bc / w_int;
  return g;
}

}  // namespace anharmonic
