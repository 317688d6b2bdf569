#include <cmath>

#include "anharmonic/continuum.hpp"
#include "anharmonic/errors.hpp"
#include "anharmonic/model.hpp"
#include "anharmonic/recurrence.hpp"
#include "doctest.h"

using namespace anharmonic;
using namespace anharmonic::continuum;

TEST_CASE("frequency branch selection") {
  Gamma gh = gamma_of(ModelParams(0.1, 2.0, 1.0, 1.0));
  CHECK(gh.branch == Branch::hyperbolic);
  CHECK(gh.value == doctest::Approx(2.0));
  Gamma gt = gamma_of(ModelParams(0.1, -2.0, 1.0, 1.0));
  CHECK(gt.branch == Branch::trigonometric);
  CHECK(gt.value == doctest::Approx(2.0));
  Gamma g0 = gamma_of(ModelParams(0.1, 0.0, 1.0, 1.0));
  CHECK(g0.branch == Branch::hyperbolic);
  CHECK(g0.value == 0.0);
}

TEST_CASE("leading continuum term and its zero-frequency limit") {
  ModelParams p0(0.1, 0.0, 1.0, 2.0);
  for (double tau : {0.3, 1.0, 1.3})
    CHECK(continuum_c2(p0, tau) == doctest::Approx(tau * tau * tau).epsilon(1e-12));

  // closed form on the hyperbolic branch
  ModelParams ph(0.1, 2.0, 1.0, 2.0);
  double g = 2.0, tau = 0.8, x = g * tau, th = std::tanh(x);
  double ref = 3.0 / (8.0 * g * g * g) * (3.0 * x * th * th + th - x);
  CHECK(continuum_c2(ph, tau) == doctest::Approx(ref).epsilon(1e-12));

  // branch continuity through b = 0
  ModelParams pp(0.1, 1e-7, 1.0, 2.0), pm(0.1, -1e-7, 1.0, 2.0);
  CHECK(continuum_c2(pp, 1.1) == doctest::Approx(continuum_c2(pm, 1.1)).epsilon(1e-5));
  CHECK(continuum_c2_d1(pp, 1.1) ==
        doctest::Approx(continuum_c2_d1(pm, 1.1)).epsilon(1e-5));
  CHECK(continuum_c2_d2(pp, 1.1) ==
        doctest::Approx(continuum_c2_d2(pm, 1.1)).epsilon(1e-5));

  // trig branch pole
  CHECK_THROWS_AS(continuum_c2(ModelParams(0.1, -8.0, 1.0, 1.0), 0.5), DomainError);
}

TEST_CASE("analytic derivatives match finite differences") {
  for (double b : {1.5, -0.8}) {
    ModelParams p(0.1, b, 1.0, 2.0);
    double tau = 0.7, h = 1e-4;
    double d1 = (continuum_c2(p, tau + h) - continuum_c2(p, tau - h)) / (2.0 * h);
    double d2 = (continuum_c2(p, tau + h) - 2.0 * continuum_c2(p, tau) +
                 continuum_c2(p, tau - h)) / (h * h);
    CHECK(continuum_c2_d1(p, tau) == doctest::Approx(d1).epsilon(1e-6));
    CHECK(continuum_c2_d2(p, tau) == doctest::Approx(d2).epsilon(1e-5));
  }
}

TEST_CASE("lattice extrapolation lands on the refined direct value") {
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  for (int mu : {2, 3}) {
    Extrapolated e = extrapolate_c_term(p, 1.0, mu);
    CHECK(e.error >= 0.0);
    // direct evaluation at Lambda = 512, first-order Richardson vs 256
    double d[2];
    int idx = 0;
    for (int L : {256, 512}) {
      SliceGrid g = build_grid(p, L);
      recurrence::LambdaTable t(g, L, mu);
      double w = 1.0 + p.b * g.delta * g.delta / p.c;
      d[idx++] = std::pow(g.delta, 3 * mu) * t.value(L, mu, 0) * std::pow(w, -2.0 * mu);
    }
    CHECK(2.0 * d[1] - d[0] == doctest::Approx(e.value).epsilon(1e-4));
  }
  Extrapolated zero = extrapolate_c_term(p, 0.0, 2);
  CHECK(zero.value == 0.0);
}

TEST_CASE("truncated series assembly") {
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  CHECK(s_continuum(p, 1.0, 0) == 1.0);
  double ac2 = p.a / (p.c * p.c);
  CHECK(s_continuum(p, 1.0, 1) ==
        doctest::Approx(1.0 - ac2 * continuum_c2(p, 1.0)).epsilon(1e-13));
  // a = 0 short-circuits every correction
  ModelParams pg(0.0, 1.0, 1.0, 1.0);
  CHECK(s_continuum(pg, 1.0, 3) == 1.0);
}

TEST_CASE("cached series interpolant") {
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  ContinuumSeries s(p, 1.5, 3);
  CHECK(s.order() == 3);
  CHECK(s.tau_max() == doctest::Approx(1.5));
  CHECK(s.c_term(0, 0.9) == 1.0);
  CHECK(s.c_term(1, 0.9) == doctest::Approx(continuum_c2(p, 0.9)).epsilon(1e-12));
  for (double tau : {0.2, 0.8, 1.4})
    CHECK(s.s(tau) == doctest::Approx(s_continuum(p, tau, 3)).epsilon(1e-6));
  // interpolated first derivative against a finite difference of s()
  double tau = 0.8, h = 1e-4;
  double fd = (s.s(tau + h) - s.s(tau - h)) / (2.0 * h);
  CHECK(s.s_d1(tau) == doctest::Approx(fd).epsilon(1e-5));
  CHECK(s.provenance(1) == "closed-form");
  CHECK(s.provenance(2).substr(0, 12) == "extrapolated");
  CHECK(s.provenance(3).substr(0, 12) == "extrapolated");
}
