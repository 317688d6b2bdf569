#include <cmath>
#include <vector>

#include "anharmonic/model.hpp"
#include "anharmonic/remainders.hpp"
#include "doctest.h"

using namespace anharmonic;
using namespace anharmonic::remainders;

TEST_CASE("budget pieces are nonnegative and additive") {
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  SliceGrid g = build_grid(p, 32);
  RemainderBudget b = budget(g, 20, 2, 2);
  CHECK(b.poincare_piece >= 0.0);
  CHECK(b.tail_piece >= 0.0);
  CHECK(b.difference_piece >= 0.0);
  CHECK(b.total == doctest::Approx(b.poincare_piece + b.tail_piece +
                                   b.difference_piece).epsilon(1e-13));
  CHECK(b.N == 32);
  CHECK(b.K0 == 20);
  CHECK(b.J == 2);
  CHECK(std::isfinite(b.total));
}

TEST_CASE("individual pieces shrink on refinement") {
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  SliceGrid coarse = build_grid(p, 16), fine = build_grid(p, 64);
  // z grows like delta^{-3/2}, so every z-power bound must drop
  CHECK(bound_difference_piece(fine, 24, 2, 2) <
        bound_difference_piece(coarse, 16, 2, 2));
  CHECK(bound_tail_piece(fine, 24, 2) < bound_tail_piece(coarse, 16, 2));
}

TEST_CASE("decay certificate fits a positive excess exponent") {
  ModelParams p(0.1, 1.0, 1.0, 1.0);
  auto k0_rule = [](int n) {
    return static_cast<int>(std::ceil(4.0 * std::log2(static_cast<double>(n))));
  };
  DecayCertificate cert = certify_decay(p, {16, 32, 64}, k0_rule, 2, 2);
  REQUIRE(cert.budgets.size() == 3);
  CHECK(cert.monotone);
  CHECK(cert.theta > 0.0);
  for (const RemainderBudget& b : cert.budgets)
    CHECK(b.theta_fit == doctest::Approx(cert.theta));
}
