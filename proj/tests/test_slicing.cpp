#include <cmath>

#include "anharmonic/errors.hpp"
#include "anharmonic/model.hpp"
#include "anharmonic/oracles.hpp"
#include "anharmonic/slicing.hpp"
#include "anharmonic/specfun.hpp"
#include "doctest.h"

using namespace anharmonic;
using namespace anharmonic::slicing;

TEST_CASE("multi-index sum reproduces brute force for small N") {
  ModelParams p(0.2, 1.0, 1.0, 1.0);
  for (int N : {1, 2, 3}) {
    SliceGrid g = build_grid(p, N);
    double ref = oracles::zn_bruteforce(p, N).value;
    CHECK(zn_multisum(g, 40) == doctest::Approx(ref).epsilon(1e-9));
  }
  SliceGrid g3 = build_grid(p, 3);
  CHECK_THROWS_AS(zn_multisum(g3, -1), DomainError);
  CHECK_THROWS_AS(zn_multisum(build_grid(p, 6), 10), DomainError);
}

TEST_CASE("truncation ratio decays rapidly in the cutoff") {
  SliceGrid g = build_grid(ModelParams(0.1, 1.0, 1.0, 1.0), 4);
  double prev = 1.0;
  for (int K0 : {5, 10, 20, 40}) {
    double eps = principal_sum_epsilon(g, K0, 0, 1);
    CHECK(eps >= 0.0);
    CHECK(eps < prev);
    prev = eps;
  }
  CHECK(principal_sum_epsilon(g, 40, 0, 1) < 1e-25);
  CHECK_THROWS_AS(principal_sum_epsilon(g, -1, 0, 0), DomainError);
}

TEST_CASE("term asymptotics converge onto the exact log terms") {
  SliceGrid g = build_grid(ModelParams(0.1, 1.0, 1.0, 1.0), 8);
  auto exact = [&](long k) {
    return 2.0 * k * std::log(g.xi) - std::lgamma(2.0 * k + 1.0) +
           2.0 * std::lgamma(k + 0.5) +
           2.0 * specfun::pcf_scaled_log(static_cast<double>(k), g.z);
  };
  double r4 = std::fabs(term_log_asymptotics(10000, 0, 0, g.xi, g.z) - exact(10000)) /
              std::fabs(exact(10000));
  double r5 = std::fabs(term_log_asymptotics(100000, 0, 0, g.xi, g.z) - exact(100000)) /
              std::fabs(exact(100000));
  CHECK(r4 < 0.02);
  CHECK(r5 < 1e-3);
  CHECK(r5 < r4);
  CHECK_THROWS_AS(term_log_asymptotics(0, 0, 0, g.xi, g.z), DomainError);
}
