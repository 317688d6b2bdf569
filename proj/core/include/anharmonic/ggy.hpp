#pragma once

#include <functional>
#include <vector>

#include "anharmonic/model.hpp"

namespace anharmonic::ggy {

enum class Method { direct_ode, closed_form };

struct GGYTrajectory {
  std::vector<double> tau;       // 0 .. beta
  std::vector<double> s_values;  // provider samples along the grid
  std::vector<double> f_values;  // F(tau)
  double z_beta;                 // 1/sqrt(F(beta))
  Method method;
  double error_estimate;         // |F_h(beta) - F_{h/2}(beta)|
};

/**
 * Integrates F'' + 4 F' (ln S)' = F (2b/c - 2 (ln S)'' - 4 ((ln S)')^2)
 * with F(0) = 1/S(0)^2, F'(0) = (1/S^2)'(0), classical fourth-order
 * Runge-Kutta at fixed step h plus one h/2 run for the error estimate.
 * (ln S) derivatives by central differences on the provider (one-sided at
 * the boundary).  Throws on S <= 0 or step-halving disagreement.
 */
GGYTrajectory solve_ggy(const ModelParams& params,
                        const std::function<double(double)>& s_provider,
                        double beta, double h);

/// Z(beta) = 1/sqrt(F(beta)): closed form S(beta)/sqrt(cosh(g beta))
/// (cos on the trig branch) or the direct ODE solve with S = s_continuum.
double z_beta(const ModelParams& params, int order, Method method);

struct TimedepResult {
  double y_beta;
  std::vector<double> tau;
  std::vector<double> y;
};

/// y'' = (2 b(tau)/c) y, y(0) = 1, y'(0) = 0, fixed-step RK4.
TimedepResult solve_timedep(const std::function<double(double)>& b_fn, double c,
                            double beta, double h);

/// Invariant of the reduced normal form, I(tau) = -2 b(tau)/c.
double timedep_invariant(const std::function<double(double)>& b_fn, double c,
                         double tau);

/// Clamped-endpoint (bridge) correction
/// S(beta) = 1 - (3a/(32 c^2 g^3)) { -3 coth(g beta)
///           + 2 g beta [coth^2(g beta) + 1/(2 sinh^2(g beta))] },
/// series-evaluated for small g beta; b = 0 uses the analytic limit.
double moeler_correction(const ModelParams& params, double beta);

/// -dS/da at a = 0 for the same formula (the brace factor / (32 c^2 g^3) * 3).
double moeler_correction_da(const ModelParams& params, double beta);

}  // namespace anharmonic::ggy
