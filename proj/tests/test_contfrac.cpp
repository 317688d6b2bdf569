#include <cmath>
#include <vector>

#include "anharmonic/contfrac.hpp"
#include "anharmonic/errors.hpp"
#include "anharmonic/model.hpp"
#include "doctest.h"

using namespace anharmonic;
using namespace anharmonic::contfrac;

TEST_CASE("convergent recurrences and closed forms agree") {
  double A = 0.45, B = 0.07;
  ConvergentState st = make_state(A, B);
  CHECK_FALSE(st.degenerate);
  std::vector<double> q = q_recurrence<double>(A * A, B, 13);
  std::vector<double> p = p_recurrence<double>(A * A, B, 12);
  std::vector<double> w = omega_sequence<double>(A * A, B, 12);
  for (int n = 0; n <= 12; ++n) {
    CHECK(p[n] == doctest::Approx(q[n + 1]).epsilon(1e-13));
    CHECK(w[n] == doctest::Approx(p[n] / q[n]).epsilon(1e-13));
    Convergent c = convergent_closed_form(st, n);
    CHECK(c.q == doctest::Approx(q[n]).epsilon(1e-12));
    CHECK(c.p == doctest::Approx(p[n]).epsilon(1e-12));
    CHECK(c.omega == doctest::Approx(omega_iterate(0.5 + B, A, n)).epsilon(1e-11));
    CHECK(q_scaled(st, n) == doctest::Approx(q[n] / std::pow(A, n)).epsilon(1e-12));
  }
}

TEST_CASE("degenerate double root branch") {
  double B = 0.03;
  ConvergentState st = make_state(0.5, B);
  CHECK(st.degenerate);
  std::vector<double> q = q_recurrence<double>(0.25, B, 10);
  for (int n = 0; n <= 10; ++n) {
    double ref = (2.0 + 4.0 * B * n) * std::pow(0.5, n);
    CHECK(ref == doctest::Approx(q[n]).epsilon(1e-13));
    CHECK(convergent_closed_form(st, n).q == doctest::Approx(ref).epsilon(1e-13));
    CHECK(q_scaled(st, n) == doctest::Approx(2.0 + 4.0 * B * n).epsilon(1e-13));
  }
}

TEST_CASE("iteration reports the index of a vanishing denominator") {
  double A = 0.25;  // dyadic, so omega_0 = A^2 gives omega_1 = 0 exactly
  try {
    omega_iterate(A * A, A, 3);  // omega_1 = 0, division detected at step 2
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.failing_index == 2);
  }
  // same zero hit through the sequence builder: omega_0 = A^2 needs B = A^2 - 1/2
  try {
    omega_sequence<double>(A * A, A * A - 0.5, 3);
    FAIL("expected ConvergenceError");
  } catch (const ConvergenceError& e) {
    CHECK(e.failing_index == 2);
  }
}

TEST_CASE("scaled tail sums") {
  SliceGrid g = build_grid(ModelParams(0.1, 1.0, 1.0, 1.0), 16);
  ConvergentState st = state_from_grid(g);
  CHECK(b_sequence(st, 16, 16) == 0.0);
  double direct = 0.0;
  for (int m = 4; m <= 16; ++m)
    direct += 1.0 / (q_scaled(st, m) * q_scaled(st, m - 1));
  CHECK(b_sequence(st, 3, 16) == doctest::Approx(direct).epsilon(1e-13));
  CHECK_THROWS_AS(b_sequence(st, 17, 16), DomainError);
}

TEST_CASE("tail sums approach tanh differences on grid refinement") {
  // delta-scaled continuum limit: b_j * 4 delta gamma -> tanh(gamma tau) - tanh(gamma x_j)
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  double gamma = std::sqrt(2.0 * p.b / p.c);
  auto ratio = [&](int N) {
    SliceGrid g = build_grid(p, N);
    ConvergentState st = state_from_grid(g);
    int j = N / 2;
    double target = std::tanh(gamma * p.beta) - std::tanh(gamma * j * g.delta);
    return b_sequence(st, j, N) * 4.0 * g.delta * gamma / target;
  };
  double r128 = ratio(128), r256 = ratio(256);
  CHECK(r256 == doctest::Approx(1.0).epsilon(0.01));
  // first-order convergence: halving delta halves the deviation
  CHECK(std::fabs(r256 - 1.0) < 0.7 * std::fabs(r128 - 1.0));
}
