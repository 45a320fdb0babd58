#include "tmapprox/tm_basis.hpp"

#include <cmath>
#include <string>

namespace tmapprox {

Complex chi(Complex a, ChiConvention convention) {
  if (convention == ChiConvention::all_ones) return {1.0, 0.0};
  const Complex w = 1.0 + a * a;
  const double mod = std::abs(w);
  // a = i: 0/0, any phase works.
  if (mod == 0.0) return {1.0, 0.0};
  return mod / w;
}

Complex eval_blaschke(const BasisContext& ctx, int j, Complex z) {
  const int n = static_cast<int>(ctx.size());
  if (j < 1 || j > n + 1)
    throw PreconditionError("Blaschke index " + std::to_string(j) + " outside [1, n+1]");
  Complex acc{1.0, 0.0};
  for (int k = 0; k < j - 1; ++k) {
    const Complex a = ctx.poles[k];
    check_not_near(z, std::conj(a), "Blaschke factor pole");
    acc *= chi(a, ctx.chi_convention) * (z - a) / (z - std::conj(a));
  }
  return acc;
}

Complex eval_phi(const BasisContext& ctx, int j, Complex z) {
  const int n = static_cast<int>(ctx.size());
  if (j < 1 || j > n) throw PreconditionError("basis index " + std::to_string(j) + " outside [1, n]");
  const Complex a = ctx.poles[j - 1];
  check_not_near(z, std::conj(a), "basis function pole");
  return std::sqrt(a.imag()) / (z - std::conj(a)) * eval_blaschke(ctx, j, z);
}

Complex dzhrbashyan_lhs(Complex z, Complex zeta) { return 1.0 / (2.0 * kI * (std::conj(zeta) - z)); }

double dzhrbashyan_residual(const BasisContext& ctx, Complex z, Complex zeta, int m) {
  const int n = static_cast<int>(ctx.size());
  if (m < 1 || m > n) throw PreconditionError("identity order m must satisfy 1 <= m <= n");
  if (z == std::conj(zeta)) throw PreconditionError("identity requires z != conj(zeta)");

  const Complex lhs = dzhrbashyan_lhs(z, zeta);
  Complex rhs{0.0, 0.0};
  // Factors of B_{m+1} are accumulated alongside Phi_j instead of re-evaluating
  // each Blaschke product from scratch.
  Complex bz{1.0, 0.0};
  Complex bzeta{1.0, 0.0};
  for (int j = 1; j <= m; ++j) {
    const Complex a = ctx.poles[j - 1];
    const Complex ab = std::conj(a);
    check_not_near(z, ab, "basis function pole");
    check_not_near(zeta, ab, "basis function pole");
    const double w = std::sqrt(a.imag());
    const Complex phi_z = w / (z - ab) * bz;
    const Complex phi_zeta = w / (zeta - ab) * bzeta;
    rhs += std::conj(phi_zeta) * phi_z;
    const Complex c = chi(a, ctx.chi_convention);
    bz *= c * (z - a) / (z - ab);
    bzeta *= c * (zeta - a) / (zeta - ab);
  }
  rhs += std::conj(bzeta) * bz * lhs;
  return std::abs(lhs - rhs);
}

}  // namespace tmapprox
