#include "tmapprox/symmetric_sums.hpp"

#include <string>

namespace tmapprox {

namespace {

std::vector<Complex> reciprocals(Complex z, std::span<const Complex> points) {
  std::vector<Complex> x;
  x.reserve(points.size());
  for (const Complex& p : points) {
    check_not_near(z, p, "symmetric sum point");
    x.push_back(1.0 / (z - p));
  }
  return x;
}

void enumerate(std::span<const Complex> x, std::size_t idx, int remaining, Complex prod, Complex& acc) {
  if (idx + 1 == x.size()) {
    acc += prod * ipow(x[idx], remaining);
    return;
  }
  Complex term = prod;
  for (int kj = 0; kj <= remaining; ++kj) {
    enumerate(x, idx + 1, remaining - kj, term, acc);
    term *= x[idx];
  }
}

}  // namespace

NuTable nu_table(int max_order, Complex z, std::span<const Complex> points) {
  if (max_order < 0) throw PreconditionError("nu order must be non-negative");
  const auto x = reciprocals(z, points);

  std::vector<Complex> power_sums(static_cast<std::size_t>(max_order) + 1, Complex{0.0, 0.0});
  std::vector<Complex> powers(x.begin(), x.end());
  for (int m = 1; m <= max_order; ++m) {
    Complex sum{0.0, 0.0};
    for (std::size_t j = 0; j < x.size(); ++j) {
      sum += powers[j];
      powers[j] *= x[j];
    }
    power_sums[m] = sum;
  }

  NuTable table;
  table.values.assign(static_cast<std::size_t>(max_order) + 1, Complex{0.0, 0.0});
  table.values[0] = 1.0;
  for (int k = 1; k <= max_order; ++k) {
    Complex acc{0.0, 0.0};
    for (int m = 1; m <= k; ++m) acc += power_sums[m] * table.values[k - m];
    table.values[k] = acc / static_cast<double>(k);
  }
  return table;
}

Complex nu(int k, Complex z, std::span<const Complex> points) {
  return nu_table(k, z, points)[static_cast<std::size_t>(k)];
}

Complex nu_bruteforce(int k, Complex z, std::span<const Complex> points) {
  if (k < 0) throw PreconditionError("nu order must be non-negative");
  if (k > 12 || points.size() > 6)
    throw PreconditionError("brute-force enumeration limited to k <= 12 and n <= 6 (got k=" +
                            std::to_string(k) + ", n=" + std::to_string(points.size()) + ")");
  const auto x = reciprocals(z, points);
  if (x.empty()) return k == 0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  Complex acc{0.0, 0.0};
  enumerate(x, 0, k, Complex{1.0, 0.0}, acc);
  return acc;
}

}  // namespace tmapprox
