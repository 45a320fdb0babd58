#include <doctest.h>

#include "support.hpp"
#include "tmapprox/symmetric_sums.hpp"

using namespace tmapprox;
using tmapprox::testing::rel_err;
using tmapprox::testing::Rng;

namespace {
const std::vector<Complex> kTwo{Complex(0.0, 1.0), Complex(0.0, 2.0)};
}

TEST_CASE("nu examples") {
  CHECK(nu(0, Complex(0.3, 0.1), kTwo) == Complex(1.0, 0.0));
  CHECK(rel_err(nu(1, 0.0, kTwo), Complex(0.0, 1.5)) < 1e-15);
  CHECK(rel_err(nu(2, 0.0, kTwo), Complex(-1.75, 0.0)) < 1e-15);
  CHECK_THROWS_AS(nu(2, Complex(0.0, 2.0), kTwo), PoleEvaluationError);
  CHECK_THROWS_AS(nu(-1, 0.0, kTwo), PreconditionError);
}

TEST_CASE("nu table starts at exactly one and handles an empty point list") {
  const NuTable t = nu_table(5, Complex(0.2, -0.7), kTwo);
  CHECK(t.values.front() == Complex(1.0, 0.0));
  CHECK(t.max_order() == 5);
  const NuTable empty = nu_table(3, 1.0, {});
  CHECK(empty[0] == Complex(1.0, 0.0));
  CHECK(empty[3] == Complex(0.0, 0.0));
}

TEST_CASE("nu_bruteforce examples and guard") {
  CHECK(nu_bruteforce(0, 0.0, kTwo) == Complex(1.0, 0.0));
  const Complex a(0.5, 1.2);
  const Complex z(-0.3, 0.2);
  const std::vector<Complex> single{a};
  CHECK(rel_err(nu_bruteforce(3, z, single), 1.0 / ipow(z - a, 3)) < 1e-15);
  CHECK(rel_err(nu_bruteforce(2, 0.0, kTwo), Complex(-1.75, 0.0)) < 1e-15);
  CHECK_THROWS_AS(nu_bruteforce(13, 0.0, kTwo), PreconditionError);
  CHECK_THROWS_AS(nu_bruteforce(2, 0.0, std::vector<Complex>(7, Complex(0.0, 1.0))), PreconditionError);
}

TEST_CASE("property: recurrence agrees with enumeration") {
  Rng rng(31);
  for (int n = 1; n <= 5; ++n) {
    for (int trial = 0; trial < 50; ++trial) {
      const Complex z = rng.upper(2.0, -2.0, 2.0);
      std::vector<Complex> pts;
      while (static_cast<int>(pts.size()) < n) {
        const Complex p = rng.upper(2.0, -2.0, 2.0);
        if (std::abs(z - p) >= 0.1) pts.push_back(p);
      }
      const NuTable table = nu_table(8, z, pts);
      for (int k = 0; k <= 8; ++k) {
        const Complex bf = nu_bruteforce(k, z, pts);
        CHECK(std::abs(table[k] - bf) < 1e-12 * (1.0 + std::abs(table[k])));
      }
    }
  }
}

TEST_CASE("property: generating function prod (1 - w/(z - a_j))^-1") {
  Rng rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.integer(1, 6);
    const Complex z = rng.upper(2.0, 0.0, 2.0);
    std::vector<Complex> pts;
    while (static_cast<int>(pts.size()) < n) {
      const Complex p = rng.upper(2.0, -2.0, 2.0);
      if (std::abs(z - p) >= 0.1) pts.push_back(p);
    }
    double dmin = 1e300;
    for (const Complex& p : pts) dmin = std::min(dmin, std::abs(z - p));
    const Complex w = std::polar(0.05 * dmin * rng.uniform(0.1, 1.0), rng.uniform(0.0, 6.28));

    const NuTable table = nu_table(8, z, pts);
    Complex series{0.0, 0.0};
    for (int k = 8; k >= 0; --k) series = series * w + table[k];
    Complex product{1.0, 0.0};
    for (const Complex& p : pts) product /= 1.0 - w / (z - p);
    CHECK(rel_err(series, product) < 1e-8);
  }
}

TEST_CASE("property: single point gives (z - a)^-k") {
  Rng rng(33);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex a = rng.upper(3.0, 0.1, 3.0);
    const Complex z = rng.upper(3.0, -3.0, 3.0);
    const std::vector<Complex> one{a};
    const NuTable table = nu_table(10, z, one);
    for (int k = 0; k <= 10; ++k) CHECK(rel_err(table[k], ipow(1.0 / (z - a), k)) < 1e-13);
  }
}
