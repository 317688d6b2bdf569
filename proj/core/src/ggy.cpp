#include "anharmonic/ggy.hpp"

#include <cmath>

#include "anharmonic/continuum.hpp"
#include "anharmonic/errors.hpp"

namespace anharmonic::ggy {

namespace {

constexpr double kEps = 2.220446049250313e-16;

/// Finite differences on the provider, restricted to [0, tmax]; one-sided
/// stencils of matching order at the edges.
class LogSDerivs {
 public:
  LogSDerivs(const std::function<double(double)>& s, double tmax)
      : s_(s),
        tmax_(tmax),
        h1_(std::cbrt(kEps) * std::max(1.0, tmax)),
        h2_(std::pow(kEps, 0.25) * std::max(1.0, tmax)) {}

  double value(double t) const {
    double v = s_(t);
    if (!(v > 0.0)) throw DomainError("ggy: S(tau) not positive");
    return v;
  }

  double d1(double t) const {
    double h = h1_;
    if (t - h < 0.0)
      return (-3.0 * s_(t) + 4.0 * s_(t + h) - s_(t + 2.0 * h)) / (2.0 * h);
    if (t + h > tmax_)
      return (3.0 * s_(t) - 4.0 * s_(t - h) + s_(t - 2.0 * h)) / (2.0 * h);
    return (s_(t + h) - s_(t - h)) / (2.0 * h);
  }

  double d2(double t) const {
    double h = h2_;
    if (t - h < 0.0)
      return (2.0 * s_(t) - 5.0 * s_(t + h) + 4.0 * s_(t + 2.0 * h) -
              s_(t + 3.0 * h)) / (h * h);
    if (t + h > tmax_)
      return (2.0 * s_(t) - 5.0 * s_(t - h) + 4.0 * s_(t - 2.0 * h) -
              s_(t - 3.0 * h)) / (h * h);
    return (s_(t + h) - 2.0 * s_(t) + s_(t - h)) / (h * h);
  }

 private:
  const std::function<double(double)>& s_;
  double tmax_, h1_, h2_;
};

struct State {
  double f, fp;
};

template <class Rhs>
State rk4_step(const Rhs& rhs, double t, State y, double h) {
  auto add = [](State a, State b, double w) {
    return State{a.f + w * b.f, a.fp + w * b.fp};
  };
  State k1 = rhs(t, y);
  State k2 = rhs(t + 0.5 * h, add(y, k1, 0.5 * h));
  State k3 = rhs(t + 0.5 * h, add(y, k2, 0.5 * h));
  State k4 = rhs(t + h, add(y, k3, h));
  return State{y.f + h / 6.0 * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f),
               y.fp + h / 6.0 * (k1.fp + 2.0 * k2.fp + 2.0 * k3.fp + k4.fp)};
}

template <class Rhs>
State rk4_run(const Rhs& rhs, State y0, double beta, long n,
              std::vector<double>* tau_out, std::vector<double>* f_out) {
  double h = beta / n;
  State y = y0;
  if (tau_out) { tau_out->push_back(0.0); f_out->push_back(y.f); }
  for (long i = 0; i < n; ++i) {
    y = rk4_step(rhs, i * h, y, h);
    if (tau_out) { tau_out->push_back((i + 1) * h); f_out->push_back(y.f); }
  }
  return y;
}

}  // namespace

GGYTrajectory solve_ggy(const ModelParams& params,
                        const std::function<double(double)>& s_provider,
                        double beta, double h) {
  if (!(beta > 0.0)) throw DomainError("solve_ggy: beta must be > 0");
  if (!(h > 0.0)) throw DomainError("solve_ggy: h must be > 0");
  LogSDerivs ls(s_provider, beta);
  double two_bc = 2.0 * params.b / params.c;
  auto rhs = [&](double t, State y) -> State {
    double s = ls.value(t);
    double l1 = ls.d1(t) / s;
    double sd2 = ls.d2(t);
    double l2 = sd2 / s - l1 * l1;
    return State{y.fp, -4.0 * y.fp * l1 + y.f * (two_bc - 2.0 * l2 - 4.0 * l1 * l1)};
  };
  double s0 = ls.value(0.0);
  State y0{1.0 / (s0 * s0), -2.0 * ls.d1(0.0) / (s0 * s0 * s0)};

  long n = static_cast<long>(std::ceil(beta / h));
  GGYTrajectory out;
  out.method = Method::direct_ode;
  State coarse = rk4_run(rhs, y0, beta, n, &out.tau, &out.f_values);
  State fine = rk4_run(rhs, y0, beta, 2 * n, nullptr, nullptr);
  out.error_estimate = std::fabs(coarse.f - fine.f);
  if (out.error_estimate > 1e-6 * std::max(1.0, std::fabs(fine.f)))
    throw ConvergenceError("solve_ggy: step-halving disagreement");
  out.s_values.reserve(out.tau.size());
  for (double t : out.tau) out.s_values.push_back(s_provider(t));
  if (!(fine.f > 0.0)) throw DomainError("solve_ggy: F(beta) not positive");
  out.z_beta = 1.0 / std::sqrt(fine.f);
  return out;
}

double z_beta(const ModelParams& params, int order, Method method) {
  if (method == Method::closed_form) {
    double s = continuum::s_continuum(params, params.beta, order);
    continuum::Gamma g = continuum::gamma_of(params);
    double x = g.value * params.beta;
    double denom = (g.branch == continuum::Branch::hyperbolic) ? std::cosh(x)
                                                               : std::cos(x);
    if (!(denom > 0.0)) throw DomainError("z_beta: cos(gamma beta) not positive");
    return s / std::sqrt(denom);
  }
  continuum::ContinuumSeries series(params, params.beta, order);
  auto provider = [&series](double t) { return series.s(t); };
  GGYTrajectory tr = solve_ggy(params, provider, params.beta, params.beta / 4096.0);
  return tr.z_beta;
}

TimedepResult solve_timedep(const std::function<double(double)>& b_fn, double c,
                            double beta, double h) {
  if (!(c > 0.0)) throw DomainError("solve_timedep: c must be > 0");
  if (!(beta > 0.0) || !(h > 0.0)) throw DomainError("solve_timedep: bad extents");
  auto rhs = [&](double t, State y) -> State {
    return State{y.fp, (2.0 * b_fn(t) / c) * y.f};
  };
  long n = static_cast<long>(std::ceil(beta / h));
  TimedepResult out;
  State y = rk4_run(rhs, State{1.0, 0.0}, beta, n, &out.tau, &out.y);
  out.y_beta = y.f;
  return out;
}

double timedep_invariant(const std::function<double(double)>& b_fn, double c,
                         double tau) {
  return -2.0 * b_fn(tau) / c;
}

namespace {

/// brace(x) = -3 coth x + 2x [coth^2 x + 1/(2 sinh^2 x)] on the hyperbolic
/// branch, cot/sin on the trigonometric one; divided by gamma^3 it is
/// continuous through b = 0 with limit (4/15) beta^3.
double moeler_brace_over_g3(const ModelParams& p, double beta) {
  continuum::Gamma g = continuum::gamma_of(p);
  double x = g.value * beta;
  double g2 = 2.0 * p.b / p.c;  // signed gamma^2
  if (x < 1e-2) {
    double b2 = beta * beta;
    return (4.0 / 15.0) * beta * b2 - (4.0 / 105.0) * g2 * beta * b2 * b2;
  }
  if (g.branch == continuum::Branch::hyperbolic) {
    double ch = 1.0 / std::tanh(x), ish2 = 1.0 / (std::sinh(x) * std::sinh(x));
    return (-3.0 * ch + 2.0 * x * (ch * ch + 0.5 * ish2)) /
           (g.value * g.value * g.value);
  }
  if (x >= M_PI) throw DomainError("moeler: gamma beta past the cot pole");
  double ct = 1.0 / std::tan(x), isn2 = 1.0 / (std::sin(x) * std::sin(x));
  return (-3.0 * ct + 2.0 * x * (ct * ct + 0.5 * isn2)) /
         (g.value * g.value * g.value);
}

}  // namespace

double moeler_correction(const ModelParams& params, double beta) {
  return 1.0 - params.a * moeler_correction_da(params, beta);
}

double moeler_correction_da(const ModelParams& params, double beta) {
  if (!(beta > 0.0)) throw DomainError("moeler: beta must be > 0");
  return 3.0 / (32.0 * params.c * params.c) * moeler_brace_over_g3(params, beta);
}

}  // namespace anharmonic::ggy
