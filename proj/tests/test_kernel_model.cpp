#include <doctest.h>

#include "support.hpp"
#include "tmapprox/kernel_model.hpp"

using namespace tmapprox;
using tmapprox::testing::rel_err;
using tmapprox::testing::Rng;

TEST_CASE("eval_kernel examples") {
  CHECK(eval_kernel(KernelParams(1.0, 0.0, 1.0, 1), 0.0) == Complex(1.0, 0.0));
  CHECK(eval_kernel(KernelParams(0.0, 0.0, 2.0, 3), 5.0) == Complex(0.0, 0.0));
  CHECK(std::abs(eval_kernel(KernelParams(1.0, 1.0, 1.0, 1), 1.0) - 0.5) < 1e-15);
}

TEST_CASE("eval_kernel rejects the poles +-i lambda") {
  const KernelParams p(1.0, 0.0, 2.0, 1);
  CHECK_THROWS_AS(eval_kernel(p, Complex(0.0, 2.0)), PoleEvaluationError);
  CHECK_THROWS_AS(eval_kernel(p, Complex(0.0, -2.0)), PoleEvaluationError);
  CHECK_THROWS_AS(eval_kernel(p, Complex(1e-13, 2.0)), PoleEvaluationError);
  CHECK_NOTHROW(eval_kernel(p, Complex(1e-6, 2.0)));
}

TEST_CASE("domain types validate their invariants") {
  CHECK_THROWS_AS(KernelParams(1.0, 0.0, 0.0, 1), PreconditionError);
  CHECK_THROWS_AS(KernelParams(1.0, 0.0, -1.0, 1), PreconditionError);
  CHECK_THROWS_AS(KernelParams(1.0, 0.0, 1.0, 0), PreconditionError);
  CHECK_THROWS_AS(KernelParams(Complex(NAN, 0.0), 0.0, 1.0, 1), PreconditionError);
  CHECK_THROWS_AS(PoleSequence({}), PreconditionError);
  CHECK_THROWS_AS(PoleSequence({Complex(1.0, 0.0)}), PreconditionError);
  CHECK_THROWS_AS(PoleSequence({Complex(0.0, 1.0), Complex(1.0, -0.5)}), PreconditionError);
  CHECK_THROWS_AS(WeightSpec(0.0, PoleSequence({Complex(0.0, 1.0)})), PreconditionError);

  const PoleSequence poles({Complex(0.0, 1.0), Complex(1.0, 2.0)});
  CHECK(poles.size() == 2);
  CHECK(poles.conjugated()[1] == Complex(1.0, -2.0));
  CHECK(poles.prefix(1).size() == 1);
  CHECK_THROWS_AS(poles.prefix(3), PreconditionError);
}

TEST_CASE("eval_tau examples") {
  CHECK(eval_tau(Complex(3.0, 4.0), {}) == Complex(1.0, 0.0));
  const std::vector<Complex> one{Complex(0.0, 1.0)};
  CHECK(eval_tau(Complex(0.0, 2.0), one) == Complex(0.0, 1.0));
  const std::vector<Complex> conj_pts{Complex(0.0, -1.0), Complex(-1.0, -1.0)};
  CHECK(std::abs(eval_tau(0.0, conj_pts) - Complex(-1.0, 1.0)) < 1e-15);
}

TEST_CASE("eval_R examples") {
  const KernelParams p(1.0, 0.0, 1.0, 1);
  const PoleSequence poles({Complex(0.0, 1.0)});
  CHECK(rel_err(eval_R(p, poles, 0.0), Complex(0.0, -1.0)) < 1e-15);
  CHECK(rel_err(eval_R(p, poles, Complex(0.0, 2.0)), Complex(0.0, -1.0 / 27.0)) < 1e-15);
  CHECK(eval_R(KernelParams(0.0, 0.0, 1.0, 2), poles, Complex(0.3, 0.4)) == Complex(0.0, 0.0));
  CHECK_THROWS_AS(eval_R(p, poles, Complex(0.0, -1.0)), PoleEvaluationError);
  CHECK_THROWS_AS(eval_R(p, PoleSequence({Complex(2.0, 0.5)}), Complex(2.0, -0.5)), PoleEvaluationError);
}

TEST_CASE("mu_n examples") {
  CHECK(mu_n(1.0, PoleSequence({Complex(0.0, 1.0)})) == 4.0);
  CHECK(mu_n(1.0, PoleSequence({Complex(1.0, 2.0)})) == 10.0);
  CHECK_THROWS_AS(mu_n(0.0, PoleSequence({Complex(1.0, 2.0)})), PreconditionError);
}

TEST_CASE("ipow matches repeated multiplication") {
  const Complex z(0.3, -1.7);
  Complex acc{1.0, 0.0};
  for (int p = 0; p <= 25; ++p) {
    CHECK(rel_err(ipow(z, p), acc) < 1e-14);
    acc *= z;
  }
}

TEST_CASE("property: R * tau(conj a) reproduces the kernel") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(1, 10);
    const KernelParams p(Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)), Complex(rng.uniform(-2, 2), rng.uniform(-2, 2)),
                         rng.uniform(0.1, 10.0), rng.integer(1, 6));
    const PoleSequence poles(rng.poles(n, 5.0, 0.1, 5.0));
    const Complex z = rng.upper(5.0, 0.01, 5.0);
    const Complex lhs = eval_R(p, poles, z) * eval_tau(z, poles.conjugated());
    CHECK(rel_err(lhs, eval_kernel(p, z)) < 1e-13);
  }
}

TEST_CASE("property: mu_n equals |tau(i lambda, conj a)|^2") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = rng.integer(1, 10);
    // |a_k| <= 10, Im a_k >= 0.1
    const auto pts = rng.poles(n, 7.0, 0.1, 7.0);
    const PoleSequence poles(pts);
    const double lambda = rng.uniform(0.1, 10.0);
    const double direct = std::norm(eval_tau(Complex(0.0, lambda), poles.conjugated()));
    CHECK(std::abs(mu_n(lambda, poles) - direct) / direct < 1e-13);
  }
}

TEST_CASE("property: tau is multiplicative under concatenation") {
  Rng rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const auto P = rng.poles(rng.integer(0, 6), 3.0, -2.0, 2.0);
    const auto Q = rng.poles(rng.integer(0, 6), 3.0, -2.0, 2.0);
    std::vector<Complex> both = P;
    both.insert(both.end(), Q.begin(), Q.end());
    const Complex z = rng.upper(3.0, -3.0, 3.0);
    CHECK(rel_err(eval_tau(z, both), eval_tau(z, P) * eval_tau(z, Q)) < 1e-13);
  }
}

TEST_CASE("ComplexPolynomial evaluates by Horner") {
  const ComplexPolynomial p{{Complex(1.0, 0.0), Complex(0.0, 2.0), Complex(-3.0, 0.0)}};
  const Complex z(0.5, -1.0);
  CHECK(rel_err(p(z), 1.0 + Complex(0.0, 2.0) * z - 3.0 * z * z) < 1e-15);
  CHECK(p.degree() == 2);
  CHECK(ComplexPolynomial{}(z) == Complex(0.0, 0.0));
}
