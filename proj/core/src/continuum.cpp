#include "anharmonic/continuum.hpp"

#include <boost/math/interpolators/cardinal_cubic_b_spline.hpp>
#include <cmath>
#include <optional>

#include "anharmonic/contfrac.hpp"
#include "anharmonic/errors.hpp"
#include "anharmonic/recurrence.hpp"

namespace anharmonic::continuum {

namespace {

using Spline = boost::math::interpolators::cardinal_cubic_b_spline<double>;

void check_trig_domain(const ModelParams& p, double tau) {
  if (p.b < 0.0) {
    double g = std::sqrt(-2.0 * p.b / p.c);
    if (g * tau >= M_PI / 2.0)
      throw DomainError("continuum: tau at or past the trigonometric pole");
  }
}

/// delta^{3mu} (Lambda)_0^{2mu} (1 + b delta^2/c)^{-2mu}, built straight from
/// (b, c) so the quartic coupling never enters.
double c_term_at_lambda(const ModelParams& p, double tau, int mu, int Lambda) {
  double d = tau / Lambda;
  double d2bc = p.b * d * d / p.c;
  double w = 1.0 + d2bc;
  if (!(w > 0.0) || !(0.5 + d2bc > 0.0))
    throw DomainError("continuum: grid too coarse for this b");
  double A = 0.5 / w, B = 0.5 * d2bc / w;
  std::vector<double> omega =
      contfrac::omega_sequence<double>(A * A, B, Lambda - 1);
  recurrence::LambdaTableT<double> table(omega, A * A, Lambda, mu);
  return std::pow(d, 3 * mu) * table.at(Lambda, mu, 0) / std::pow(w, 2 * mu);
}

struct C1Set {
  double v, d1, d2;
};

C1Set c1_eval(const ModelParams& p, double tau) {
  check_trig_domain(p, tau);
  double g2 = 2.0 * p.b / p.c;  // signed gamma^2
  double s = g2 * tau * tau;
  if (std::fabs(s) < 1e-3) {
    double t2 = tau * tau;
    return {tau * t2 * (1.0 - 0.7 * s + (17.0 / 42.0) * s * s),
            3.0 * t2 - 3.5 * g2 * t2 * t2 + (17.0 / 6.0) * g2 * g2 * t2 * t2 * t2,
            6.0 * tau - 14.0 * g2 * tau * t2 + 17.0 * g2 * g2 * tau * t2 * t2};
  }
  if (g2 > 0.0) {
    double g = std::sqrt(g2), x = g * tau;
    double th = std::tanh(x), sh2 = 1.0 - th * th;
    return {3.0 / (8.0 * g2 * g) * (3.0 * x * th * th + th - x),
            3.0 / (4.0 * g2) * th * (th + 3.0 * x * sh2),
            3.0 / (4.0 * g) * (5.0 * th * sh2 + 3.0 * x * sh2 * (sh2 - 2.0 * th * th))};
  }
  double g = std::sqrt(-g2), x = g * tau;
  double tn = std::tan(x), sc2 = 1.0 + tn * tn;
  return {3.0 / (8.0 * g * g * g) * (3.0 * x * tn * tn - tn + x),
          3.0 / (4.0 * -g2) * tn * (tn + 3.0 * x * sc2),
          3.0 / (4.0 * g) * (5.0 * tn * sc2 + 3.0 * x * sc2 * (sc2 + 2.0 * tn * tn))};
}

}  // namespace

Gamma gamma_of(const ModelParams& params) {
  if (params.b >= 0.0)
    return {Branch::hyperbolic, std::sqrt(2.0 * params.b / params.c)};
  return {Branch::trigonometric, std::sqrt(-2.0 * params.b / params.c)};
}

double continuum_c2(const ModelParams& params, double tau) {
  return c1_eval(params, tau).v;
}

double continuum_c2_d1(const ModelParams& params, double tau) {
  return c1_eval(params, tau).d1;
}

double continuum_c2_d2(const ModelParams& params, double tau) {
  return c1_eval(params, tau).d2;
}

Extrapolated extrapolate_c_term(const ModelParams& params, double tau, int mu) {
  if (mu < 2 || mu > 3) throw DomainError("extrapolate_c_term: mu in {2, 3}");
  check_trig_domain(params, tau);
  if (tau == 0.0) return {0.0, 0.0};
  double v0 = c_term_at_lambda(params, tau, mu, 64);
  double v1 = c_term_at_lambda(params, tau, mu, 128);
  double v2 = c_term_at_lambda(params, tau, mu, 256);
  double r10 = 2.0 * v1 - v0;
  double r11 = 2.0 * v2 - v1;
  double r2 = (4.0 * r11 - r10) / 3.0;
  return {r2, std::fabs(r2 - r11)};
}

double s_continuum(const ModelParams& params, double tau, int order) {
  if (order < 0 || order > 3) throw DomainError("s_continuum: order in 0..3");
  double s = 1.0;
  double ac2 = params.a / (params.c * params.c);
  if (order >= 1) s -= ac2 * continuum_c2(params, tau);
  if (params.a > 0.0) {
    if (order >= 2) s += 0.5 * ac2 * ac2 * extrapolate_c_term(params, tau, 2).value;
    if (order >= 3)
      s -= ac2 * ac2 * ac2 / 6.0 * extrapolate_c_term(params, tau, 3).value;
  }
  return s;
}

// ---------------------------------------------------------------------------

struct ContinuumSeries::Impl {
  ModelParams params;
  double tau_max;
  int order;
  std::optional<Spline> c2, c3;
  std::vector<std::string> provenance;

  Impl(const ModelParams& p, double tmax, int ord)
      : params(p), tau_max(tmax), order(ord) {
    if (ord < 0 || ord > 3) throw DomainError("ContinuumSeries: order in 0..3");
    if (!(tmax > 0.0)) throw DomainError("ContinuumSeries: tau_max must be > 0");
    check_trig_domain(p, tmax);
    provenance = {"unity", "closed-form", "", ""};
    const int n = 161;
    double h = tmax / (n - 1);
    for (int mu = 2; mu <= ord; ++mu) {
      std::vector<double> vals(n);
      for (int i = 0; i < n; ++i)
        vals[i] = extrapolate_c_term(p, i * h, mu).value;
      (mu == 2 ? c2 : c3).emplace(vals.begin(), vals.end(), 0.0, h);
      provenance[mu] = "extrapolated(Richardson-2, Lambda=64/128/256, spline)";
    }
  }

  double c_value(int mu, double tau, int deriv) const {
    if (tau < 0.0 || tau > tau_max + 1e-12)
      throw DomainError("ContinuumSeries: tau outside cached range");
    if (mu == 0) return deriv == 0 ? 1.0 : 0.0;
    if (mu == 1) {
      C1Set c = c1_eval(params, tau);
      return deriv == 0 ? c.v : (deriv == 1 ? c.d1 : c.d2);
    }
    const std::optional<Spline>& sp = (mu == 2) ? c2 : c3;
    if (!sp) throw DomainError("ContinuumSeries: term beyond cached order");
    if (deriv == 0) return (*sp)(tau);
    return deriv == 1 ? sp->prime(tau) : sp->double_prime(tau);
  }

  double s_value(double tau, int deriv) const {
    double ac2 = params.a / (params.c * params.c);
    double out = (deriv == 0) ? 1.0 : 0.0;
    double coeff = 1.0;
    for (int mu = 1; mu <= order; ++mu) {
      coeff *= -ac2 / mu;
      out += coeff * c_value(mu, tau, deriv);
    }
    return out;
  }
};

ContinuumSeries::ContinuumSeries(const ModelParams& params, double tau_max, int order)
    : impl_(new Impl(params, tau_max, order)) {}
ContinuumSeries::~ContinuumSeries() = default;
ContinuumSeries::ContinuumSeries(ContinuumSeries&&) noexcept = default;
ContinuumSeries& ContinuumSeries::operator=(ContinuumSeries&&) noexcept = default;

double ContinuumSeries::c_term(int mu, double tau) const {
  return impl_->c_value(mu, tau, 0);
}
double ContinuumSeries::s(double tau) const { return impl_->s_value(tau, 0); }
double ContinuumSeries::s_d1(double tau) const { return impl_->s_value(tau, 1); }
double ContinuumSeries::s_d2(double tau) const { return impl_->s_value(tau, 2); }
int ContinuumSeries::order() const { return impl_->order; }
double ContinuumSeries::tau_max() const { return impl_->tau_max; }
const std::string& ContinuumSeries::provenance(int mu) const {
  return impl_->provenance.at(mu);
}

double ggy_potential_term(const ModelParams& params, double tau, int order) {
  ContinuumSeries series(params, std::max(tau, 1e-6) * 1.001, order);
  double s = series.s(tau), d1 = series.s_d1(tau), d2 = series.s_d2(tau);
  if (!(s > 0.0)) throw DomainError("ggy_potential_term: S(tau) not positive");
  double r = d1 / s;
  return -2.0 * d2 / s - 2.0 * r * r;
}

}  // namespace anharmonic::continuum
