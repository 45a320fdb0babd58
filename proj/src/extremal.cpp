#include "tmapprox/extremal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>

namespace tmapprox {

Remainder::Remainder(const KernelParams& params, const PoleSequence& poles)
    : params_(params), poles_(poles), coefficients_(residue_coefficients(params, poles)) {}

RemainderParts Remainder::parts(Complex z) const {
  const double lambda = params_.lambda();
  const double tol = 1e-12 * std::max(1.0, lambda);
  const Complex up = kI * lambda;
  if (std::abs(z - up) < tol || std::abs(z + up) < tol)
    throw PoleEvaluationError("remainder evaluated at +-i*lambda");

  const Complex inv_up = 1.0 / (up - z);
  const Complex inv_down = 1.0 / (-up - z);
  Complex sum_up{0.0, 0.0};
  Complex sum_down{0.0, 0.0};
  Complex pow_up = inv_up;
  Complex pow_down = inv_down;
  for (int l = 0; l <= params_.s(); ++l) {
    sum_up += coefficients_.D[l] * pow_up;
    sum_down += coefficients_.D_lower[l] * pow_down;
    pow_up *= inv_up;
    pow_down *= inv_down;
  }
  return {eval_tau(z, poles_.conjugated()) * sum_up, eval_tau(z, poles_.points()) * sum_down};
}

Complex Remainder::operator()(Complex z) const {
  const RemainderParts p = parts(z);
  return -(p.upper + p.lower);
}

RemainderParts remainder_parts(const KernelParams& params, const PoleSequence& poles, Complex z) {
  return Remainder(params, poles).parts(z);
}

Complex remainder(const KernelParams& params, const PoleSequence& poles, Complex z) {
  return Remainder(params, poles)(z);
}

double node_scale(double lambda, const PoleSequence& poles) {
  double m = std::max(1.0, lambda);
  for (const Complex& a : poles.points()) m = std::max(m, std::abs(a));
  return 2.0 * m;
}

ComplexPolynomial extremal_poly(const KernelParams& params, const PoleSequence& poles) {
  const int n = static_cast<int>(poles.size());
  const double L = node_scale(params.lambda(), poles);
  const Remainder rem(params, poles);
  auto target = [&](double t) { return eval_kernel(params, t) - rem(t); };

  Eigen::MatrixXcd V(n, n);
  Eigen::VectorXcd rhs(n);
  for (int k = 0; k < n; ++k) {
    const double x = std::cos(std::numbers::pi * (2.0 * k + 1.0) / (2.0 * n));
    Complex pw{1.0, 0.0};
    for (int j = 0; j < n; ++j) {
      V(k, j) = pw;
      pw *= x;
    }
    rhs[k] = target(L * x);
  }
  const Eigen::VectorXcd scaled = V.householderQr().solve(rhs);

  ComplexPolynomial poly;
  poly.coeffs.resize(n);
  double inv_scale = 1.0;
  for (int j = 0; j < n; ++j) {
    poly.coeffs[j] = scaled[j] * inv_scale;
    inv_scale /= L;
  }

  // Validation nodes: Chebyshev points of order 2n, disjoint from the order-n set.
  double max_value = 0.0;
  double max_residual = 0.0;
  for (int i = 0; i < 2 * n; ++i) {
    const double x = std::cos(std::numbers::pi * (2.0 * i + 1.0) / (4.0 * n));
    const Complex value = target(L * x);
    Complex approx{0.0, 0.0};
    for (int j = n - 1; j >= 0; --j) approx = approx * x + scaled[j];
    max_value = std::max(max_value, std::abs(value));
    max_residual = std::max(max_residual, std::abs(value - approx));
  }
  if (max_residual > 1e-8 * (1.0 + max_value))
    throw IllConditionedError("extremal polynomial interpolation residual too large", max_residual);
  return poly;
}

Complex partial_sum_R(const KernelParams& params, const PoleSequence& poles, Complex z) {
  const auto abar = poles.conjugated();
  for (const Complex& p : abar) check_not_near(z, p, "conjugated weight pole");
  const Remainder rem(params, poles);
  return (eval_kernel(params, z) - rem(z)) / eval_tau(z, abar);
}

}  // namespace tmapprox
