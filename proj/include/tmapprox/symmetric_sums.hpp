#pragma once

#include <span>
#include <vector>

#include "tmapprox/kernel_model.hpp"

namespace tmapprox {

/// nu_0..nu_K for one (z, points) pair, where
///
///   nu_k(z, p) = sum_{k_1 + ... + k_n = k} prod_j (z - p_j)^(-k_j),
///
/// i.e. the complete homogeneous symmetric polynomial h_k in x_j = 1/(z - p_j).
/// values.front() is exactly 1.
///
/// No rescaling is applied; magnitudes stay representable for orders up to ~20
/// and distances |z - p_j| >= 0.01.
struct NuTable {
  std::vector<Complex> values;

  const Complex& operator[](std::size_t k) const { return values[k]; }
  std::size_t max_order() const noexcept { return values.size() - 1; }
};

/// Newton-type recurrence on power sums: nu_k = (1/k) sum_{m=1}^k p_m nu_{k-m}.
NuTable nu_table(int max_order, Complex z, std::span<const Complex> points);

Complex nu(int k, Complex z, std::span<const Complex> points);

/// Literal enumeration of all compositions. Limited to k <= 12, n <= 6.
Complex nu_bruteforce(int k, Complex z, std::span<const Complex> points);

}  // namespace tmapprox
