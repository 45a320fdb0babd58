#pragma once

#include <complex>
#include <span>
#include <vector>

#include "tmapprox/errors.hpp"

namespace tmapprox {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Parameters of the kernel (A + B t) / (t^2 + lambda^2)^(s+1).
///
/// Construction validates lambda > 0, s >= 1 and finiteness of A, B; the
/// fields are const so a constructed value always satisfies the invariants.
class KernelParams {
 public:
  KernelParams(Complex A, Complex B, double lambda, int s);

  Complex A() const noexcept { return A_; }
  Complex B() const noexcept { return B_; }
  double lambda() const noexcept { return lambda_; }
  int s() const noexcept { return s_; }

  /// True when both A and B have zero imaginary part.
  bool has_real_coefficients() const noexcept {
    return A_.imag() == 0.0 && B_.imag() == 0.0;
  }

 private:
  Complex A_;
  Complex B_;
  double lambda_;
  int s_;
};

/// Points a_1..a_n of the open upper half-plane. The conjugated sequence is
/// produced on demand by conjugated(); nothing else is cached.
class PoleSequence {
 public:
  explicit PoleSequence(std::vector<Complex> poles);

  std::size_t size() const noexcept { return poles_.size(); }
  const Complex& operator[](std::size_t k) const { return poles_[k]; }
  std::span<const Complex> points() const noexcept { return poles_; }

  std::vector<Complex> conjugated() const;

  /// The first n poles (n <= size(), n >= 1).
  PoleSequence prefix(std::size_t n) const;

 private:
  std::vector<Complex> poles_;
};

/// Weight rho_n(t) = rho0 * tau_n(t, a); the error is measured against 1/|rho_n|^2.
class WeightSpec {
 public:
  WeightSpec(Complex rho0, PoleSequence poles);

  Complex rho0() const noexcept { return rho0_; }
  const PoleSequence& poles() const noexcept { return poles_; }

 private:
  Complex rho0_;
  PoleSequence poles_;
};

/// Polynomial with complex coefficients stored in ascending powers.
struct ComplexPolynomial {
  std::vector<Complex> coeffs;

  Complex operator()(Complex z) const;
  int degree() const noexcept { return static_cast<int>(coeffs.size()) - 1; }
};

/// z^p for a non-negative integer exponent by repeated squaring.
Complex ipow(Complex z, int p);

Complex eval_kernel(const KernelParams& params, Complex t);

/// prod_k (z - points_k); 1 for an empty list.
Complex eval_tau(Complex z, std::span<const Complex> points);

/// (A + B z) / ((z^2 + lambda^2)^(s+1) * tau_n(z, conj(a))).
Complex eval_R(const KernelParams& params, const PoleSequence& poles, Complex z);

/// prod_k [alpha_k^2 + (beta_k + lambda)^2] = |tau_n(i lambda, conj(a))|^2.
double mu_n(double lambda, const PoleSequence& poles);

// Throws PoleEvaluationError when z lies within 1e-12 * max(1, |p|) of p.
void check_not_near(Complex z, Complex p, const char* what);

}  // namespace tmapprox
