#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <vector>

#include "anharmonic/contfrac.hpp"
#include "anharmonic/errors.hpp"
#include "anharmonic/model.hpp"
#include "anharmonic/recurrence.hpp"
#include "anharmonic/specfun.hpp"
#include "doctest.h"

using namespace anharmonic;
using namespace anharmonic::recurrence;
using Rational = boost::multiprecision::cpp_rational;

TEST_CASE("a-coefficients: closed form, table, and defining identity") {
  ACoeffTable<double> table(8);
  for (int j = 0; j <= 8; ++j) {
    CHECK(a_coeff(j, j) == doctest::Approx(1.0));
    CHECK(a_coeff(j, 0) == doctest::Approx(specfun::pochhammer(0.5, j)));
    for (int i = 0; i <= j; ++i)
      CHECK(table.get(j, i) == doctest::Approx(a_coeff(j, i)).epsilon(1e-13));
  }
  CHECK(a_coeff(3, 5) == 0.0);
  CHECK(a_coeff(3, -1) == 0.0);
  // (k+1/2)_{2j} = sum_i a_i^{2j} k!/(k-i)!
  int k = 5, j = 2;
  double lhs = specfun::pochhammer(k + 0.5, 2 * j);
  double rhs = 0.0;
  for (int i = 0; i <= 2 * j && i <= k; ++i)
    rhs += a_coeff(2 * j, i) * std::tgamma(k + 1.0) / std::tgamma(k - i + 1.0);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("xi-operator algebra") {
  // D_xi xi^4 = 105 xi^2
  Polynomial p(5, 0.0);
  p[4] = 1.0;
  Polynomial d = d_xi_apply(p, 1);
  REQUIRE(d.size() >= 3);
  CHECK(d[2] == doctest::Approx(105.0));
  for (size_t i = 0; i < d.size(); ++i)
    if (i != 2) CHECK(d[i] == doctest::Approx(0.0));
  CHECK(d_xi_monomial_factor<double>(4) == doctest::Approx(105.0));
  CHECK(d_xi_monomial_factor<double>(-1) == doctest::Approx(7.5));
  CHECK(d_xi_monomial_factor<double>(0) == 0.0);
  CHECK(d_xi_monomial_factor<double>(1) == 0.0);
}

TEST_CASE("triangular matrix entries") {
  SliceGrid g = build_grid(ModelParams(0.1, 1.0, 1.0, 1.0), 6);
  contfrac::ConvergentState st = contfrac::state_from_grid(g);
  std::vector<double> Q(7);
  for (int n = 0; n <= 6; ++n) Q[n] = contfrac::q_scaled(st, n);

  TriMatrix pr = matrix_build(MatrixKind::projector, 1, 2, Q, g.A, 4);
  CHECK(pr.rows == 3);
  CHECK(pr.cols == 3);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(pr.at(r, c) == ((r == 1 && c == 1) ? 1.0 : 0.0));

  TriMatrix m = matrix_build(MatrixKind::m_upper, 2, 2, Q, g.A, 4);
  CHECK(m.at(0, 2) == doctest::Approx(std::pow(Q[3], 8)).epsilon(1e-12));
  CHECK(m.at(1, 2) == doctest::Approx(2.0 * std::pow(Q[3], 4)).epsilon(1e-12));
  CHECK(m.at(2, 2) == doctest::Approx(1.0));
  CHECK(m.at(2, 0) == 0.0);

  TriMatrix a = matrix_build(MatrixKind::a_lower, 1, 2, Q, g.A, 4);
  double denom = g.A * Q[4] * Q[3];
  CHECK(a.at(1, 0) == doctest::Approx(a_coeff(2, 1) / denom).epsilon(1e-12));
  CHECK(a.at(0, 1) == 0.0);
}

TEST_CASE("corner element: product and nested paths agree in double") {
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  for (int Lambda : {1, 2, 5}) {
    SliceGrid g = build_grid(p, Lambda);
    contfrac::ConvergentState st = contfrac::state_from_grid(g);
    std::vector<double> Q(Lambda + 1);
    for (int n = 0; n <= Lambda; ++n) Q[n] = contfrac::q_scaled(st, n);
    for (int mu = 0; mu <= 3; ++mu) {
      double prod = c_matrix_corner_product<double>(g.A, Q, Lambda, mu);
      double nest = c_matrix_closed_form(g, Lambda, mu);
      CHECK(prod == doctest::Approx(nest).epsilon(1e-10));
    }
  }
}

TEST_CASE("corner element equals the recurrence table in exact arithmetic") {
  // rational inputs shared by both paths
  Rational A2(1, 5), B(1, 20);
  int Lambda = 4, mu = 2;
  std::vector<Rational> omega = contfrac::omega_sequence<Rational>(A2, B, Lambda - 1);
  LambdaTableT<Rational> table(omega, A2, Lambda, mu);
  // A = sqrt(1/5) is irrational; compare through the double specialization instead
  SliceGrid g = build_grid(ModelParams(0.1, 1.0, 1.0, 1.0), 6);
  LambdaTable dt(g, 6, 2);
  for (int L : {1, 3, 6})
    for (int m = 0; m <= 2; ++m)
      CHECK(dt.value(L, m, 0) ==
            doctest::Approx(c_matrix_closed_form(g, L, m)).epsilon(1e-10));
  // exact path self-check: mu = 0 row is identically 1/omega-free
  CHECK(table.at(1, 0, 0) == Rational(1));
  CHECK(table.at(Lambda, 0, 0) == Rational(1));
}

TEST_CASE("single-index series assembly") {
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  SliceGrid g = build_grid(p, 32);
  SLambdaResult s = s_lambda(g, 32, 3);
  LambdaTable t(g, 32, 4);
  double inv2z2 = 1.0 / (2.0 * g.z * g.z);
  double expect = 0.0, coeff = 1.0;
  for (int mu = 0; mu <= 3; ++mu) {
    if (mu > 0) coeff *= -inv2z2 / mu;
    expect += coeff * t.value(32, mu, 0);
  }
  CHECK(s.value == doctest::Approx(expect).epsilon(1e-12));
  double omitted = std::pow(inv2z2, 4) / 24.0 * t.value(32, 4, 0);
  CHECK(s.first_omitted == doctest::Approx(omitted).epsilon(1e-10));
}

TEST_CASE("combinatorial kernel values") {
  // J(0, 0; 2, 1; r) = C(2,0) C(3/2,2) 2! 2! / 0! = 3/2 for any r
  CHECK(j_function(0, 0, 2, 1, 0.7) == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(j_function(0, 0, 2, 1, 3.0) == doctest::Approx(1.5).epsilon(1e-13));
  CHECK(j_function(2, 1, 4, 1, 0.5) == 0.0);  // l > MIN
  // n - 2 i_j - p < 0 kills every term through the reciprocal-gamma convention
  CHECK(j_function(0, 0, 1, 1, 0.5) == 0.0);
}

TEST_CASE("corner element against the kernel quadrature on refinement") {
  // {C(Lambda)}^2 corner vs (1/2) sum_k Q_k^4 b_k^2 J(0,0;2,1;b_k/b_{k-1}):
  // ratio tends to 4 at first order in delta
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  auto ratio = [&](int N) {
    SliceGrid g = build_grid(p, N);
    contfrac::ConvergentState st = contfrac::state_from_grid(g);
    double jsum = 0.0;
    for (int k = 2; k <= N; ++k) {
      double bk = contfrac::b_sequence(st, k, N);
      double bk1 = contfrac::b_sequence(st, k - 1, N);
      double Qk = contfrac::q_scaled(st, k);
      jsum += std::pow(Qk, 4) * bk * bk * j_function(0, 0, 2, 1, bk / bk1);
    }
    return c_matrix_closed_form(g, N, 1) / (0.5 * jsum);
  };
  double r128 = ratio(128), r256 = ratio(256);
  CHECK(r256 < r128);
  CHECK(2.0 * r256 - r128 == doctest::Approx(4.0).epsilon(0.02));
}

TEST_CASE("divergent tail and truncation heuristic") {
  ModelParams p(0.3, 0.0, 1.0, 2.0);
  double delta = 0.01, tau = 2.0;
  // b = 0: |term| = a^mu/(mu! c^{2mu}) delta^mu 2^mu (1/2)_{2mu} tau^{2mu}
  int mu = 2;
  double ref = std::pow(p.a, mu) / 2.0 * std::pow(delta, mu) * std::pow(2.0, mu) *
               specfun::pochhammer(0.5, 2 * mu) * std::pow(tau, 2 * mu);
  CHECK(divergent_tail_term(p, delta, tau, mu) == doctest::Approx(ref).epsilon(1e-10));
  CHECK(divergent_tail_term(p, delta, tau, 3) < 0.0);

  int best = suggest_truncation_order(p, delta, tau, 30);
  double at_best = std::fabs(divergent_tail_term(p, delta, tau, best));
  for (int m = 1; m <= 30; ++m)
    CHECK(at_best <= std::fabs(divergent_tail_term(p, delta, tau, m)) * (1.0 + 1e-12));
}
