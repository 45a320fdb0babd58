#pragma once

#include <functional>

#include "tmapprox/kernel_model.hpp"
#include "tmapprox/tm_basis.hpp"

namespace tmapprox {

// Brute-force numerical checks, independent of the closed-form pipeline.

struct QuadratureSpec {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
  int max_panels = 4096;
  int nodes_per_panel = 15;

  void validate() const;
};

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;  // sum over panels of |coarse - refined|
  int panels = 0;
};

using RealLineIntegrand = std::function<Complex(double)>;

/// int_{-inf}^{inf} f(t) dt for integrands decaying at least like |t|^-2.
///
/// t = tan(theta) maps the line onto (-pi/2, pi/2); panels are bisected
/// adaptively (largest error first) and each panel is integrated with a
/// Gauss-Legendre rule, the error being the gap between the rule on the panel
/// and on its two halves. Panel contributions are summed left to right so the
/// result depends only on f and spec. Throws ConvergenceError when max_panels
/// is reached before the tolerance.
QuadratureResult integrate_real_line(const RealLineIntegrand& f, const QuadratureSpec& spec = {});

/// Gauss-Legendre nodes/weights on [-1, 1].
struct LegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
LegendreRule gauss_legendre(int count);

/// (1/pi) int R(t) conj(Phi_j(t)) dt, 1 <= j <= n.
Complex fourier_coeff(const KernelParams& params, const BasisContext& ctx, int j,
                      const QuadratureSpec& spec = {});

/// sum_{j<=m} fourier_coeff(j) * Phi_j(z), with the coefficients computed numerically.
Complex oracle_partial_sum(const KernelParams& params, const BasisContext& ctx, int m, Complex z,
                           const QuadratureSpec& spec = {});

struct LeastSquaresResult {
  ComplexPolynomial poly;
  double error = 0.0;           // sqrt of the minimal weighted squared deviation
  double error_squared = 0.0;
  double gram_condition = 0.0;  // 2-norm condition of the diagonally equilibrated Gram matrix
  double quadrature_estimate_error = 0.0;  // estimate attached to error_squared
};

/// Weighted least squares over polynomials of degree <= n-1 with weight
/// 1/|rho_n(t)|^2, using the scaled monomials (t/L)^k. Throws
/// RankDeficiencyError when the Gram condition exceeds 1e12.
LeastSquaresResult ls_best_poly(const KernelParams& params, const WeightSpec& weight,
                                const QuadratureSpec& spec = {});

/// Same weighted inner product as ls_best_poly: int f conj(g) / |rho_n|^2 dt.
Complex weighted_inner(const RealLineIntegrand& f, const RealLineIntegrand& g, const WeightSpec& weight,
                       const QuadratureSpec& spec = {});

}  // namespace tmapprox
