#include <cmath>
#include <vector>

#include "anharmonic/errors.hpp"
#include "anharmonic/model.hpp"
#include "anharmonic/oracles.hpp"
#include "anharmonic/rng.hpp"
#include "doctest.h"

using namespace anharmonic;
using namespace anharmonic::oracles;

TEST_CASE("quartic integral against the gamma closed form") {
  // Int_R exp(-A x^4) dx = Gamma(1/4) / (2 A^{1/4})
  for (double A : {0.3, 0.7, 2.0}) {
    OracleResult r = integrate_i1(A, 0.0, 0.0);
    double ref = std::tgamma(0.25) / (2.0 * std::pow(A, 0.25));
    CHECK(r.value == doctest::Approx(ref).epsilon(1e-11));
    CHECK(r.error_estimate >= 0.0);
    CHECK(r.cost > 0);
  }
}

TEST_CASE("series form of the one-slice integral matches quadrature") {
  struct Triple { double A, B, C; };
  for (Triple t : {Triple{0.5, 1.0, 0.8}, Triple{2.0, 3.0, -1.5},
                   Triple{0.1, 6.0, 2.0}}) {
    double q = integrate_i1(t.A, t.B, t.C).value;
    double s = i1_series(t.A, t.B, t.C, 80);
    CHECK(s == doctest::Approx(q).epsilon(1e-10));
  }
}

TEST_CASE("one-slice brute force reduces to the single integral") {
  ModelParams p(0.3, 0.7, 1.2, 0.9);
  OracleResult bf = zn_bruteforce(p, 1);
  double quartic = p.a * p.beta;
  double quadratic = p.c / (2.0 * p.beta) + p.b * p.beta;
  double ref = integrate_i1(quartic, quadratic, 0.0).value *
               std::sqrt(p.c / (2.0 * M_PI * p.beta));
  CHECK(bf.value == doctest::Approx(ref).epsilon(1e-8));
  CHECK_THROWS_AS(zn_bruteforce(p, 4), DomainError);
}

TEST_CASE("gaussian value against a direct determinant recurrence") {
  ModelParams p(0.0, 1.3, 0.8, 2.0);
  CHECK(zn_gaussian(p, 1) ==
        doctest::Approx(1.0 / std::sqrt(1.0 + 2.0 * p.b * p.beta * p.beta / p.c))
            .epsilon(1e-13));
  for (int N : {2, 7, 64}) {
    double delta = p.beta / N;
    double t_int = 2.0 * (1.0 + p.b * delta * delta / p.c);
    double t_last = 1.0 + 2.0 * p.b * delta * delta / p.c;
    double d_prev = 1.0, d = t_int;  // D_0, D_1
    for (int i = 2; i <= N; ++i) {
      double d_next = (i == N ? t_last : t_int) * d - d_prev;
      d_prev = d;
      d = d_next;
    }
    if (N == 1) d = t_last;
    CHECK(zn_gaussian(p, N) == doctest::Approx(1.0 / std::sqrt(d)).epsilon(1e-12));
  }
}

TEST_CASE("gaussian value reports indefinite forms") {
  try {
    zn_gaussian(ModelParams(0.0, -10.0, 1.0, 1.0), 1);
    FAIL("expected NotPositiveDefinite");
  } catch (const NotPositiveDefinite& e) {
    CHECK(e.failing_index == 1);
  }
}

TEST_CASE("coupling derivative matches the finite-difference response") {
  ModelParams p0(0.0, 1.0, 1.0, 1.0);
  const int N = 3;
  double cd = coupling_derivative(p0, N);
  double z0 = zn_gaussian(p0, N);
  auto fd = [&](double a) {
    return (std::log(z0) - std::log(zn_bruteforce(ModelParams(a, 1.0, 1.0, 1.0), N).value)) / a;
  };
  // first-order Richardson in a removes the O(a) bias of the one-sided ratio
  double est = 2.0 * fd(5e-4) - fd(1e-3);
  CHECK(est == doctest::Approx(cd).epsilon(2e-4));
}

TEST_CASE("clamped coupling derivative has the exact b = 0 continuum limit") {
  // 3 Int_0^beta [x (beta - x) / (c beta)]^2 dx = beta^3 / (10 c^2)
  ModelParams p(0.1, 0.0, 1.0, 2.0);
  double target = std::pow(p.beta, 3) / (10.0 * p.c * p.c);
  CHECK(coupling_derivative_clamped(p, 256) == doctest::Approx(target).epsilon(1e-2));
  double e128 = std::fabs(coupling_derivative_clamped(p, 128) - target);
  double e256 = std::fabs(coupling_derivative_clamped(p, 256) - target);
  CHECK(e256 <= e128 + 1e-12);
}

TEST_CASE("monte carlo agrees with brute force within its own error bar") {
  ModelParams p(0.2, 1.0, 1.0, 1.0);
  const int N = 3;
  double ref = zn_bruteforce(p, N).value;
  OracleResult mc = zn_montecarlo(p, N, 40000, 7);
  CHECK(mc.error_estimate > 0.0);
  CHECK(std::fabs(mc.value - ref) < 4.0 * mc.error_estimate);

  OracleResult again = zn_montecarlo(p, N, 40000, 7);
  CHECK(mc.value == again.value);  // counter-based stream, bitwise stable
  OracleResult other = zn_montecarlo(p, N, 40000, 8);
  CHECK(mc.value != other.value);
}

TEST_CASE("counter rng stream properties") {
  CounterRng rng(42);
  CHECK(rng.bits(17) == CounterRng(42).bits(17));
  CHECK(rng.bits(17) != CounterRng(43).bits(17));
  double mean = 0.0;
  for (int i = 0; i < 4096; ++i) {
    double u = rng.uniform(i);
    CHECK(u > 0.0);
    CHECK(u <= 1.0);
    mean += rng.normal(i);
  }
  CHECK(std::fabs(mean / 4096.0) < 0.1);
}
