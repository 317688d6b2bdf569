#include <cmath>

#include "anharmonic/continuum.hpp"
#include "anharmonic/errors.hpp"
#include "anharmonic/ggy.hpp"
#include "anharmonic/model.hpp"
#include "doctest.h"

using namespace anharmonic;
using namespace anharmonic::ggy;

TEST_CASE("unit series recovers the quadratic-well closed form") {
  ModelParams p(0.0, 1.5, 1.0, 2.0);
  auto unity = [](double) { return 1.0; };
  GGYTrajectory t = solve_ggy(p, unity, p.beta, p.beta / 2048.0);
  double g = std::sqrt(2.0 * p.b / p.c);
  CHECK(t.z_beta == doctest::Approx(1.0 / std::sqrt(std::cosh(g * p.beta)))
                        .epsilon(1e-9));
  CHECK(t.f_values.front() == doctest::Approx(1.0));
  CHECK(t.error_estimate < 1e-8);
  CHECK(t.tau.size() == t.f_values.size());
}

TEST_CASE("direct solve agrees with the closed form across orders") {
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  for (int order : {1, 3}) {
    double zc = z_beta(p, order, Method::closed_form);
    double zd = z_beta(p, order, Method::direct_ode);
    CHECK(zd == doctest::Approx(zc).epsilon(1e-5));
  }
  // a = 0 is pure harmonic on both paths
  ModelParams ph(0.0, 1.0, 1.0, 1.0);
  double ref = 1.0 / std::sqrt(std::cosh(std::sqrt(2.0)));
  CHECK(z_beta(ph, 3, Method::closed_form) == doctest::Approx(ref).epsilon(1e-12));
  CHECK(z_beta(ph, 3, Method::direct_ode) == doctest::Approx(ref).epsilon(1e-7));
}

TEST_CASE("negative quadratic coefficient takes the cosine branch") {
  ModelParams p(0.0, -0.3, 1.0, 1.0);
  double g = std::sqrt(0.6);
  CHECK(z_beta(p, 3, Method::closed_form) ==
        doctest::Approx(1.0 / std::sqrt(std::cos(g))).epsilon(1e-12));
}

TEST_CASE("time-dependent reduction") {
  double c = 1.0, b = 1.5, beta = 2.0;
  auto bc = [&](double) { return b; };
  TimedepResult r = solve_timedep(bc, c, beta, beta / 2048.0);
  CHECK(r.y_beta == doctest::Approx(std::cosh(std::sqrt(2.0 * b / c) * beta))
                        .epsilon(1e-9));
  CHECK(timedep_invariant(bc, c, 0.7) == doctest::Approx(-2.0 * b / c));
}

TEST_CASE("clamped-endpoint correction") {
  // b = 0 limit: -dS/da = beta^3 / (40 c^2)
  ModelParams p0(0.1, 0.0, 1.0, 2.0);
  CHECK(moeler_correction_da(p0, p0.beta) ==
        doctest::Approx(std::pow(p0.beta, 3) / 40.0).epsilon(1e-10));
  CHECK(moeler_correction(p0, p0.beta) ==
        doctest::Approx(1.0 - p0.a * std::pow(p0.beta, 3) / 40.0).epsilon(1e-10));

  // continuity through b = 0
  ModelParams pp(0.1, 1e-7, 1.0, 2.0), pm(0.1, -1e-7, 1.0, 2.0);
  CHECK(moeler_correction_da(pp, 2.0) ==
        doctest::Approx(moeler_correction_da(pm, 2.0)).epsilon(1e-5));

  // hyperbolic closed form
  ModelParams ph(0.1, 2.0, 1.0, 1.5);
  double g = 2.0, x = g * 1.5;
  double brace = -3.0 / std::tanh(x) +
                 2.0 * x * (1.0 / std::tanh(x) / std::tanh(x) +
                            0.5 / (std::sinh(x) * std::sinh(x)));
  CHECK(moeler_correction_da(ph, 1.5) ==
        doctest::Approx(3.0 / (32.0 * g * g * g) * brace).epsilon(1e-11));

  // trig branch pole at gamma beta >= pi
  CHECK_THROWS_AS(moeler_correction_da(ModelParams(0.1, -6.0, 1.0, 2.0), 2.0),
                  DomainError);
}

TEST_CASE("solver rejects a vanishing series") {
  ModelParams p(0.0, 1.0, 1.0, 1.0);
  auto bad = [](double t) { return 1.0 - t; };  // crosses zero inside [0, beta]
  CHECK_THROWS(solve_ggy(p, bad, 2.0, 2.0 / 512.0));
}
