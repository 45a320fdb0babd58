#pragma once

#include "tmapprox/closed_form.hpp"
#include "tmapprox/kernel_model.hpp"

namespace tmapprox {

/// The two residue contributions to the remainder:
///   upper = tau_n(z, conj(a)) * sum_l D_l / (i lambda - z)^(l+1)
///   lower = tau_n(z, a)       * sum_l D_lower_l / (-i lambda - z)^(l+1)
struct RemainderParts {
  Complex upper;
  Complex lower;
};

/// Closed-form remainder K(z) - p_{n-1}(z) of the best weighted approximation.
///
/// The remainder is -(upper + lower). The overall minus sign is the
/// orientation of the residue at i*lambda: the Cauchy integral of R(t)/(t - z)
/// picks up minus the principal part of R there. With the opposite sign the
/// reconstructed polynomial misses the least-squares minimizer (13/8 instead of
/// 3/8 at z = 0 for A=1, B=0, lambda=1, s=1, a={i}).
class Remainder {
 public:
  Remainder(const KernelParams& params, const PoleSequence& poles);

  RemainderParts parts(Complex z) const;
  Complex operator()(Complex z) const;

  const ResidueCoefficients& coefficients() const noexcept { return coefficients_; }

 private:
  KernelParams params_;
  PoleSequence poles_;
  ResidueCoefficients coefficients_;
};

RemainderParts remainder_parts(const KernelParams& params, const PoleSequence& poles, Complex z);
Complex remainder(const KernelParams& params, const PoleSequence& poles, Complex z);

/// Extremal polynomial of degree <= n-1, recovered by interpolating K - remainder
/// at n Chebyshev nodes on [-L, L], L = node_scale(...). Throws
/// IllConditionedError when the interpolant misses K - remainder at 2n fresh
/// points by more than 1e-8 * (1 + max |values|).
ComplexPolynomial extremal_poly(const KernelParams& params, const PoleSequence& poles);

/// L = 2 max(1, lambda, max_k |a_k|).
double node_scale(double lambda, const PoleSequence& poles);

/// (K(z) - remainder(z)) / tau_n(z, conj(a)): the n-th partial sum of R in the
/// Takenaka-Malmquist system.
Complex partial_sum_R(const KernelParams& params, const PoleSequence& poles, Complex z);

}  // namespace tmapprox
