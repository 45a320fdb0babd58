#include "tmapprox/kernel_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace tmapprox {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

KernelParams::KernelParams(Complex A, Complex B, double lambda, int s)
    : A_(A), B_(B), lambda_(lambda), s_(s) {
  if (!finite(A) || !finite(B)) throw PreconditionError("kernel coefficients must be finite");
  if (!(lambda > 0.0) || !std::isfinite(lambda))
    throw PreconditionError("lambda must be a finite positive number");
  if (s < 1) throw PreconditionError("s must be a positive integer");
}

PoleSequence::PoleSequence(std::vector<Complex> poles) : poles_(std::move(poles)) {
  if (poles_.empty()) throw PreconditionError("pole sequence must not be empty");
  for (std::size_t k = 0; k < poles_.size(); ++k) {
    if (!finite(poles_[k]))
      throw PreconditionError("pole " + std::to_string(k + 1) + " is not finite");
    if (!(poles_[k].imag() > 0.0))
      throw PreconditionError("pole " + std::to_string(k + 1) +
                              " must lie in the open upper half-plane");
  }
}

std::vector<Complex> PoleSequence::conjugated() const {
  std::vector<Complex> out(poles_.size());
  std::transform(poles_.begin(), poles_.end(), out.begin(),
                 [](Complex a) { return std::conj(a); });
  return out;
}

PoleSequence PoleSequence::prefix(std::size_t n) const {
  if (n < 1 || n > poles_.size())
    throw PreconditionError("prefix length " + std::to_string(n) + " outside [1, " +
                            std::to_string(poles_.size()) + "]");
  return PoleSequence(std::vector<Complex>(poles_.begin(), poles_.begin() + n));
}

WeightSpec::WeightSpec(Complex rho0, PoleSequence poles) : rho0_(rho0), poles_(std::move(poles)) {
  if (!finite(rho0) || !(std::abs(rho0) > 0.0))
    throw PreconditionError("rho0 must be a finite nonzero number");
}

Complex ComplexPolynomial::operator()(Complex z) const {
  Complex acc{0.0, 0.0};
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Complex ipow(Complex z, int p) {
  Complex result{1.0, 0.0};
  Complex base = z;
  while (p > 0) {
    if (p & 1) result *= base;
    p >>= 1;
    if (p) base *= base;
  }
  return result;
}

void check_not_near(Complex z, Complex p, const char* what) {
  if (std::abs(z - p) < 1e-12 * std::max(1.0, std::abs(p)))
    throw PoleEvaluationError(std::string("evaluation at a pole: ") + what);
}

namespace {

void check_kernel_poles(double lambda, Complex t) {
  const double tol = 1e-12 * std::max(1.0, lambda);
  if (std::abs(t - kI * lambda) < tol || std::abs(t + kI * lambda) < tol)
    throw PoleEvaluationError("evaluation at a kernel pole t = +-i*lambda");
}

}  // namespace

Complex eval_kernel(const KernelParams& params, Complex t) {
  check_kernel_poles(params.lambda(), t);
  const double l = params.lambda();
  return (params.A() + params.B() * t) / ipow(t * t + l * l, params.s() + 1);
}

Complex eval_tau(Complex z, std::span<const Complex> points) {
  Complex acc{1.0, 0.0};
  for (const Complex& p : points) acc *= z - p;
  return acc;
}

Complex eval_R(const KernelParams& params, const PoleSequence& poles, Complex z) {
  check_kernel_poles(params.lambda(), z);
  const auto abar = poles.conjugated();
  for (const Complex& p : abar) check_not_near(z, p, "conjugated weight pole");
  const double l = params.lambda();
  return (params.A() + params.B() * z) / (ipow(z * z + l * l, params.s() + 1) * eval_tau(z, abar));
}

double mu_n(double lambda, const PoleSequence& poles) {
  if (!(lambda > 0.0)) throw PreconditionError("lambda must be positive");
  double acc = 1.0;
  for (const Complex& a : poles.points()) {
    const double shifted = a.imag() + lambda;
    acc *= a.real() * a.real() + shifted * shifted;
  }
  return acc;
}

}  // namespace tmapprox
