#pragma once

#include <memory>
#include <string>
#include <vector>

#include "anharmonic/model.hpp"

namespace anharmonic::continuum {

enum class Branch { hyperbolic, trigonometric };

struct Gamma {
  Branch branch;
  double value;  // gamma = sqrt(2b/c) or gamma-tilde = sqrt(-2b/c)
};

/// Branch-tagged frequency; b = 0 reports hyperbolic with value 0
/// (callers use the analytic tanh(g x)/g -> x limits).
Gamma gamma_of(const ModelParams& params);

/// mu = 1 continuum term (3/(8 g^3))[3 g t tanh^2(g t) + tanh(g t) - g t],
/// series-evaluated near g t = 0; trig branch maps tanh -> tan and needs
/// g t < pi/2.
double continuum_c2(const ModelParams& params, double tau);

/// First and second tau-derivatives of continuum_c2 (analytic).
double continuum_c2_d1(const ModelParams& params, double tau);
double continuum_c2_d2(const ModelParams& params, double tau);

struct Extrapolated {
  double value;
  double error;  // extrapolation residual estimate
};

/// delta^{3mu} (Lambda)_0^{2mu} (1+b delta^2/c)^{-2mu} at Lambda in
/// {64, 128, 256} with Lambda delta = tau, Richardson-extrapolated to
/// delta = 0.  mu in {2, 3}.
Extrapolated extrapolate_c_term(const ModelParams& params, double tau, int mu);

/// S = 1 - (a/c^2) C1 + (a^2/(2c^4)) C2 - (a^3/(6c^6)) C3, truncated at order.
double s_continuum(const ModelParams& params, double tau, int order);

/// -2 (ln S)'' - 4 ((ln S)')^2 with the mu = 1 part analytic and the
/// mu = 2, 3 parts from the cached-grid interpolant.
double ggy_potential_term(const ModelParams& params, double tau, int order);

/**
 * Cached series: C1 analytic, C2/C3 extrapolated on a dense tau-grid and
 * interpolated with a cubic B-spline.  Provenance strings record which
 * terms are closed-form and which are numeric extrapolations.
 */
class ContinuumSeries {
 public:
  ContinuumSeries(const ModelParams& params, double tau_max, int order);
  ~ContinuumSeries();
  ContinuumSeries(ContinuumSeries&&) noexcept;
  ContinuumSeries& operator=(ContinuumSeries&&) noexcept;

  double c_term(int mu, double tau) const;        // C_term[mu](tau)
  double s(double tau) const;                     // truncated S(tau)
  double s_d1(double tau) const;                  // dS/dtau
  double s_d2(double tau) const;                  // d2S/dtau2
  int order() const;
  double tau_max() const;
  const std::string& provenance(int mu) const;    // "closed-form" | "extrapolated(...)"

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace anharmonic::continuum
