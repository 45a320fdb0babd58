#pragma once

#include <span>
#include <vector>

#include "tmapprox/kernel_model.hpp"

namespace tmapprox {

/// Residue coefficients of the remainder and of the error bilinear form.
///
/// D[l] belongs to the pole i*lambda, D_lower[l] to -i*lambda (computed
/// directly, so it is valid for complex A, B). G[k] is the normalized form
/// used by the real-coefficient error formula; the relation
///   D[l] * tau_n(i lambda, conj(a)) * (2 lambda)^(s+1-l) == i^l * G[l]
/// holds for any A, B.
struct ResidueCoefficients {
  std::vector<Complex> D;
  std::vector<Complex> D_lower;
  std::vector<Complex> G;
};

/// Exact binomial coefficient, k <= m <= 64.
double binom(int m, int k);

ResidueCoefficients residue_coefficients(const KernelParams& params, const PoleSequence& poles);

Complex coeff_D(const KernelParams& params, const PoleSequence& poles, int l);
Complex coeff_D_lower(const KernelParams& params, const PoleSequence& poles, int l);

/// Rejects complex A or B with PreconditionError; use error_squared_general there.
Complex coeff_G(const KernelParams& params, const PoleSequence& poles, int k);

/// sum_{k,l} binom(l+k, l) G_k conj(G_l), unreduced.
Complex bilinear_sum(std::span<const Complex> G);

/// Squared best weighted approximation error for real A, B:
///
///   4 pi / ((2 lambda)^(2s+3) mu_n |rho0|^2) * sum_{k,l} binom(l+k, l) G_k conj(G_l).
///
/// Throws ConsistencyError if the bilinear sum has a non-negligible imaginary
/// part or a negative real part.
double error_squared(const KernelParams& params, const WeightSpec& weight);

/// Squared error assembled from D, D_lower and the cross integrals; valid for
/// complex A, B.
double error_squared_general(const KernelParams& params, const WeightSpec& weight);

/// Dispatches to error_squared for real A, B and error_squared_general otherwise.
double best_error_squared(const KernelParams& params, const WeightSpec& weight);

/// int_R dt / ((i lambda - t)^(k+1) (-i lambda - t)^(j+1))
///   = (pi / lambda) (-1)^j binom(j+k, j) / (2 i lambda)^(j+k),   k + j <= 60.
Complex cross_integral(int k, int j, double lambda);

/// Gauss-Laguerre rule (weight e^{-t} on [0, inf)) from the Jacobi matrix.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussRule gauss_laguerre(int count);

/// |bilinear_sum(G) - int_0^inf e^{-t} |sum_k G_k t^k / k!|^2 dt|, the integral
/// evaluated with a (G.size())-point Gauss-Laguerre rule. G.size() <= 32.
double laguerre_identity_gap(std::span<const Complex> G);

}  // namespace tmapprox
