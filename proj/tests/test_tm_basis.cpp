#include <doctest.h>

#include "support.hpp"
#include "tmapprox/extremal.hpp"
#include "tmapprox/oracle.hpp"
#include "tmapprox/tm_basis.hpp"

using namespace tmapprox;
using tmapprox::testing::rel_err;
using tmapprox::testing::Rng;

TEST_CASE("chi examples") {
  CHECK(std::abs(chi(Complex(0.0, 2.0), ChiConvention::phased) - Complex(-1.0, 0.0)) < 1e-15);
  CHECK(chi(Complex(0.0, 1.0), ChiConvention::phased) == Complex(1.0, 0.0));
  CHECK(std::abs(chi(Complex(1.0, 1.0), ChiConvention::phased) - Complex(1.0, -2.0) / std::sqrt(5.0)) < 1e-15);
  CHECK(chi(Complex(1.0, 1.0), ChiConvention::all_ones) == Complex(1.0, 0.0));

  Rng rng(21);
  for (int i = 0; i < 100; ++i)
    CHECK(std::abs(std::abs(chi(rng.upper(5.0, 0.01, 5.0), ChiConvention::phased)) - 1.0) < 1e-15);
}

TEST_CASE("Blaschke product examples") {
  const BasisContext ctx{PoleSequence({Complex(0.0, 1.0)}), ChiConvention::all_ones};
  CHECK(eval_blaschke(ctx, 1, Complex(0.3, 7.0)) == Complex(1.0, 0.0));
  CHECK(rel_err(eval_blaschke(ctx, 2, Complex(0.0, 2.0)), Complex(1.0 / 3.0, 0.0)) < 1e-15);
  CHECK_THROWS_AS(eval_blaschke(ctx, 0, 1.0), PreconditionError);
  CHECK_THROWS_AS(eval_blaschke(ctx, 3, 1.0), PreconditionError);
  CHECK_THROWS_AS(eval_blaschke(ctx, 2, Complex(0.0, -1.0)), PoleEvaluationError);
}

TEST_CASE("Phi examples") {
  const BasisContext one{PoleSequence({Complex(0.0, 1.0)}), ChiConvention::phased};
  CHECK(rel_err(eval_phi(one, 1, 0.0), Complex(0.0, -1.0)) < 1e-15);
  CHECK(rel_err(eval_phi(one, 1, Complex(0.0, 1.0)), Complex(0.0, -0.5)) < 1e-15);
  const BasisContext two{PoleSequence({Complex(0.0, 1.0), Complex(0.0, 2.0)}), ChiConvention::all_ones};
  CHECK(std::abs(eval_phi(two, 2, Complex(0.0, 1.0))) == 0.0);
  CHECK_THROWS_AS(eval_phi(two, 3, 0.0), PreconditionError);
}

TEST_CASE("property: Blaschke products are unimodular on the real line") {
  Rng rng(22);
  const BasisContext ctx{PoleSequence(rng.poles(8, 3.0, 0.05, 3.0)), ChiConvention::phased};
  for (int i = 0; i < 1000; ++i) {
    const double t = rng.uniform(-100.0, 100.0);
    const int j = rng.integer(1, 9);
    CHECK(std::abs(std::abs(eval_blaschke(ctx, j, t)) - 1.0) < 1e-12);
  }
}

TEST_CASE("Dzhrbashyan identity: hand-evaluated case") {
  const BasisContext ctx{PoleSequence({Complex(0.0, 1.0)}), ChiConvention::phased};
  const Complex z(0.0, 1.0);
  CHECK(rel_err(dzhrbashyan_lhs(z, z), Complex(0.25, 0.0)) < 1e-15);
  CHECK(dzhrbashyan_residual(ctx, z, z, 1) < 1e-16);
}

TEST_CASE("Dzhrbashyan identity: preconditions") {
  const BasisContext ctx{PoleSequence({Complex(0.0, 1.0), Complex(1.0, 2.0)}), ChiConvention::phased};
  CHECK_THROWS_AS(dzhrbashyan_residual(ctx, Complex(0.0, 1.0), Complex(0.0, 2.0), 0), PreconditionError);
  CHECK_THROWS_AS(dzhrbashyan_residual(ctx, Complex(0.0, 1.0), Complex(0.0, 2.0), 3), PreconditionError);
  CHECK_THROWS_AS(dzhrbashyan_residual(ctx, Complex(0.5, 1.0), Complex(0.5, -1.0), 1), PreconditionError);
}

TEST_CASE("property: Dzhrbashyan residual at rounding level, both conventions") {
  Rng rng(23);
  for (ChiConvention conv : {ChiConvention::phased, ChiConvention::all_ones}) {
    const BasisContext fixed{PoleSequence({Complex(0.0, 1.0), Complex(1.0, 2.0)}), conv};
    for (int i = 0; i < 100; ++i) {
      const Complex z = rng.upper(3.0, 0.1, 3.0);
      const Complex zeta = rng.upper(3.0, 0.1, 3.0);
      const double r = dzhrbashyan_residual(fixed, z, zeta, 2);
      CHECK(r < 1e-10 * (1.0 + std::abs(dzhrbashyan_lhs(z, zeta))));
    }
    for (int i = 0; i < 100; ++i) {
      const int n = rng.integer(1, 10);
      const BasisContext ctx{PoleSequence(rng.poles(n, 3.0, 0.1, 3.0)), conv};
      const Complex z = rng.upper(3.0, 0.1, 3.0);
      const Complex zeta = rng.upper(3.0, 0.1, 3.0);
      const int m = rng.integer(1, n);
      CHECK(dzhrbashyan_residual(ctx, z, zeta, m) < 1e-10 * (1.0 + std::abs(dzhrbashyan_lhs(z, zeta))));
    }
  }
}

TEST_CASE("the identity also holds off the upper half-plane") {
  const BasisContext ctx{PoleSequence({Complex(0.2, 0.5), Complex(-1.0, 1.5)}), ChiConvention::phased};
  const Complex z(0.4, -0.3);  // lower half-plane, away from conj poles
  const Complex zeta(1.1, 0.2);
  CHECK(dzhrbashyan_residual(ctx, z, zeta, 2) < 1e-12);
}

TEST_CASE("property: orthonormality on the real line (oracle quadrature)") {
  Rng rng(24);
  for (int trial = 0; trial < 4; ++trial) {
    const int n = 2 * (trial + 1);  // 2, 4, 6, 8
    const BasisContext ctx{PoleSequence(rng.poles(n, 2.0, 0.3, 2.0)), ChiConvention::phased};
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        auto integrand = [&](double t) { return eval_phi(ctx, j, t) * std::conj(eval_phi(ctx, k, t)); };
        const Complex g = integrate_real_line(integrand).value / std::numbers::pi;
        CHECK(std::abs(g - (j == k ? 1.0 : 0.0)) < 1e-8);
      }
    }
  }
}

TEST_CASE("property: projections do not depend on the chi convention") {
  Rng rng(25);
  for (int trial = 0; trial < 3; ++trial) {
    const int n = trial + 2;
    const PoleSequence poles(rng.poles(n, 2.0, 0.4, 2.0));
    const KernelParams p(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(0.5, 2.0), rng.integer(1, 3));
    const Complex z = rng.upper(2.0, 0.2, 2.0);
    const Complex sp = oracle_partial_sum(p, {poles, ChiConvention::phased}, n, z);
    const Complex s1 = oracle_partial_sum(p, {poles, ChiConvention::all_ones}, n, z);
    CHECK(std::abs(sp - s1) < 1e-10);
    // and both agree with the closed-form partial sum
    CHECK(std::abs(sp - partial_sum_R(p, poles, z)) < 1e-8);
  }
}
