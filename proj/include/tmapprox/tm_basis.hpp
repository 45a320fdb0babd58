#pragma once

#include "tmapprox/kernel_model.hpp"

namespace tmapprox {

/// Phase normalization of the Blaschke factors.
///   phased:   chi_k = |1 + a_k^2| / (1 + a_k^2), and 1 when 1 + a_k^2 == 0
///   all_ones: chi_k = 1
enum class ChiConvention { phased, all_ones };

/// Takenaka-Malmquist system on the upper half-plane built from a pole sequence:
///
///   Phi_j(z) = sqrt(Im a_j) / (z - conj(a_j)) * B_j(z),
///   B_1 = 1,  B_j(z) = prod_{k<j} chi_k (z - a_k) / (z - conj(a_k)).
///
/// The Phi_j are orthonormal on the real line with respect to (1/pi) dt.
struct BasisContext {
  PoleSequence poles;
  ChiConvention chi_convention = ChiConvention::phased;

  std::size_t size() const noexcept { return poles.size(); }
};

Complex chi(Complex a, ChiConvention convention);

/// B_j(z) for 1 <= j <= n+1, evaluated factor by factor.
Complex eval_blaschke(const BasisContext& ctx, int j, Complex z);

/// Phi_j(z) for 1 <= j <= n.
Complex eval_phi(const BasisContext& ctx, int j, Complex z);

/// |LHS - RHS| of the Christoffel-Darboux type identity
///   1 / (2i(conj(zeta) - z)) = sum_{j<=m} conj(Phi_j(zeta)) Phi_j(z)
///                              + conj(B_{m+1}(zeta)) B_{m+1}(z) / (2i(conj(zeta) - z)).
/// Requires z != conj(zeta) and 1 <= m <= n.
double dzhrbashyan_residual(const BasisContext& ctx, Complex z, Complex zeta, int m);

/// The left-hand side 1 / (2i(conj(zeta) - z)) of the identity above.
Complex dzhrbashyan_lhs(Complex z, Complex zeta);

}  // namespace tmapprox
