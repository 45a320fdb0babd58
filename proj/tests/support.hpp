#pragma once

// Test-only helpers: seeded generators and an independent residue oracle.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "tmapprox/kernel_model.hpp"

namespace tmapprox::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

  Complex upper(double re_span, double im_lo, double im_hi) {
    return {uniform(-re_span, re_span), uniform(im_lo, im_hi)};
  }

  std::vector<Complex> poles(int n, double re_span = 2.0, double im_lo = 0.3, double im_hi = 2.0) {
    std::vector<Complex> out;
    for (int k = 0; k < n; ++k) out.push_back(upper(re_span, im_lo, im_hi));
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

inline double rel_err(Complex got, Complex want) {
  const double scale = std::abs(want);
  return scale > 0.0 ? std::abs(got - want) / scale : std::abs(got);
}

/// (1 / 2 pi i) \oint_{|t - center| = radius} f(t) dt by the trapezoidal rule,
/// which converges geometrically for functions analytic in an annulus.
template <class F>
Complex contour_integral(F&& f, Complex center, double radius, int points = 512) {
  Complex acc{0.0, 0.0};
  for (int m = 0; m < points; ++m) {
    const double theta = 2.0 * std::numbers::pi * m / points;
    const Complex w = std::polar(1.0, theta);
    acc += f(center + radius * w) * w;
  }
  return acc * radius / static_cast<double>(points);
}

/// Coefficient of (t - center)^-(l+1) in the Laurent expansion of f.
template <class F>
Complex laurent_coefficient(F&& f, Complex center, double radius, int l) {
  return contour_integral([&](Complex t) { return f(t) * std::pow(t - center, l); }, center, radius);
}

/// Residue-oracle values of the upper and lower coefficients:
///   D_l       = (-1)^l [ (t - i lambda)^-(l+1) ] (A + B t) / ((t^2 + lambda^2)^(s+1) tau(t, conj a))
///   D_lower_l = (-1)^l [ (t + i lambda)^-(l+1) ] (A + B t) / ((t^2 + lambda^2)^(s+1) tau(t, a))
struct OracleCoefficients {
  std::vector<Complex> D;
  std::vector<Complex> D_lower;
};

inline OracleCoefficients residue_oracle(Complex A, Complex B, double lambda, int s,
                                         const std::vector<Complex>& poles) {
  std::vector<Complex> abar;
  for (const Complex& a : poles) abar.push_back(std::conj(a));
  auto prod = [](Complex t, const std::vector<Complex>& pts) {
    Complex acc{1.0, 0.0};
    for (const Complex& p : pts) acc *= t - p;
    return acc;
  };
  auto R = [&](Complex t) { return (A + B * t) / (std::pow(t * t + lambda * lambda, s + 1) * prod(t, abar)); };
  auto G = [&](Complex t) { return (A + B * t) / (std::pow(t * t + lambda * lambda, s + 1) * prod(t, poles)); };
  const Complex up{0.0, lambda};
  OracleCoefficients out;
  for (int l = 0; l <= s; ++l) {
    const double sign = (l % 2 == 0) ? 1.0 : -1.0;
    out.D.push_back(sign * laurent_coefficient(R, up, 0.5 * lambda, l));
    out.D_lower.push_back(sign * laurent_coefficient(G, -up, 0.5 * lambda, l));
  }
  return out;
}

}  // namespace tmapprox::testing
