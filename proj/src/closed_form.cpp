#include "tmapprox/closed_form.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <string>

#include "tmapprox/symmetric_sums.hpp"

namespace tmapprox {

double binom(int m, int k) {
  if (m < 0 || k < 0 || k > m) throw PreconditionError("binomial requires 0 <= k <= m");
  if (m > 64) throw PreconditionError("binomial argument m=" + std::to_string(m) + " above cap 64");
  k = std::min(k, m - k);
  // r * (m - k + i) stays below 2^128 because r = C(m - k + i - 1, i - 1) < 2^63.
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<unsigned>(m - k + i) / static_cast<unsigned>(i);
  return static_cast<double>(static_cast<unsigned long long>(r));
}

namespace {

void check_order(const KernelParams& params, int l, const char* what) {
  if (l < 0 || l > params.s())
    throw PreconditionError(std::string(what) + " index must satisfy 0 <= l <= s");
}

// Weight of B in the residue factor, (s - j) / (s + j), from the exact integer
// ratio. It comes from A + B t - B (t + i lambda) j / (s + j) at t = i lambda;
// the Leibniz term s * B * g^(s-1) contributes C(s+j-1, s) = C(s+j, s) j / (s+j).
double b_weight(int s, int j) {
  return static_cast<double>(s - j) / static_cast<double>(s + j);
}

// Coefficients sharing one nu table at +-i lambda.
struct Workspace {
  int s;
  double lambda;
  Complex A, B;
  NuTable nu_up;     // nu_k(i lambda, conj(a))
  NuTable nu_down;   // nu_k(-i lambda, a)
  Complex tau_up;    // tau_n(i lambda, conj(a))
  Complex tau_down;  // tau_n(-i lambda, a)

  Workspace(const KernelParams& params, const PoleSequence& poles)
      : s(params.s()), lambda(params.lambda()), A(params.A()), B(params.B()) {
    const auto abar = poles.conjugated();
    const Complex up = kI * lambda;
    nu_up = nu_table(s, up, abar);
    nu_down = nu_table(s, -up, poles.points());
    tau_up = eval_tau(up, abar);
    tau_down = eval_tau(-up, poles.points());
  }

  Complex upper(int l) const {
    const double scale = std::pow(2.0 * lambda, 2 * s + 1);
    Complex acc{0.0, 0.0};
    for (int j = 0; j <= s - l; ++j) {
      const Complex factor = B * (lambda * b_weight(s, j)) - kI * A;
      acc += ipow(2.0 * kI * lambda, s - j) * binom(s + j, s) * nu_up[s - l - j] * factor;
    }
    return acc / (scale * tau_up);
  }

  Complex lower(int l) const {
    const double scale = std::pow(2.0 * lambda, 2 * s + 1);
    Complex acc{0.0, 0.0};
    for (int j = 0; j <= s - l; ++j) {
      const Complex factor = B * (lambda * b_weight(s, j)) + kI * A;
      acc += ipow(-2.0 * kI * lambda, s - j) * binom(s + j, s) * nu_down[s - l - j] * factor;
    }
    return acc / (scale * tau_down);
  }

  Complex g(int k) const {
    Complex acc{0.0, 0.0};
    for (int j = 0; j <= s - k; ++j) {
      const Complex factor = B * (lambda * b_weight(s, j)) - kI * A;
      acc += binom(s + j, s) * ipow(kI, s - k - j) * nu_up[s - k - j] * factor /
             std::pow(2.0 * lambda, k + j);
    }
    return acc;
  }
};

// Hermitian forms must come out real and non-negative up to rounding.
double checked_real(Complex sum, const char* what) {
  if (!(std::abs(sum.imag()) <= 1e-12 * std::abs(sum.real())))
    throw ConsistencyError(std::string(what) + ": imaginary part " + std::to_string(sum.imag()) +
                           " not negligible against real part " + std::to_string(sum.real()));
  if (sum.real() < 0.0)
    throw ConsistencyError(std::string(what) + ": negative squared error " + std::to_string(sum.real()));
  return sum.real();
}

}  // namespace

ResidueCoefficients residue_coefficients(const KernelParams& params, const PoleSequence& poles) {
  const Workspace ws(params, poles);
  ResidueCoefficients rc;
  for (int l = 0; l <= params.s(); ++l) {
    rc.D.push_back(ws.upper(l));
    rc.D_lower.push_back(ws.lower(l));
    rc.G.push_back(ws.g(l));
  }
  return rc;
}

Complex coeff_D(const KernelParams& params, const PoleSequence& poles, int l) {
  check_order(params, l, "D");
  return Workspace(params, poles).upper(l);
}

Complex coeff_D_lower(const KernelParams& params, const PoleSequence& poles, int l) {
  check_order(params, l, "D_lower");
  return Workspace(params, poles).lower(l);
}

Complex coeff_G(const KernelParams& params, const PoleSequence& poles, int k) {
  check_order(params, k, "G");
  if (!params.has_real_coefficients())
    throw PreconditionError("G coefficients are defined for real A and B only");
  return Workspace(params, poles).g(k);
}

Complex bilinear_sum(std::span<const Complex> G) {
  const int size = static_cast<int>(G.size());
  Complex acc{0.0, 0.0};
  for (int k = 0; k < size; ++k)
    for (int l = 0; l < size; ++l) acc += binom(l + k, l) * G[k] * std::conj(G[l]);
  return acc;
}

double error_squared(const KernelParams& params, const WeightSpec& weight) {
  if (!params.has_real_coefficients())
    throw PreconditionError("error_squared requires real A and B; use error_squared_general");
  const PoleSequence& poles = weight.poles();
  const Workspace ws(params, poles);
  std::vector<Complex> G;
  for (int k = 0; k <= params.s(); ++k) G.push_back(ws.g(k));

  const double sum = checked_real(bilinear_sum(G), "error_squared");
  const double lambda = params.lambda();
  const double rho2 = std::norm(weight.rho0());
  return 4.0 * std::numbers::pi * sum /
         (std::pow(2.0 * lambda, 2 * params.s() + 3) * mu_n(lambda, poles) * rho2);
}

double error_squared_general(const KernelParams& params, const WeightSpec& weight) {
  const auto rc = residue_coefficients(params, weight.poles());
  const int size = params.s() + 1;
  const double lambda = params.lambda();
  Complex acc{0.0, 0.0};
  for (int k = 0; k < size; ++k) {
    for (int l = 0; l < size; ++l) {
      acc += rc.D[k] * std::conj(rc.D[l]) * cross_integral(k, l, lambda);
      acc += rc.D_lower[k] * std::conj(rc.D_lower[l]) * cross_integral(l, k, lambda);
    }
  }
  return checked_real(acc, "error_squared_general") / std::norm(weight.rho0());
}

double best_error_squared(const KernelParams& params, const WeightSpec& weight) {
  return params.has_real_coefficients() ? error_squared(params, weight)
                                        : error_squared_general(params, weight);
}

Complex cross_integral(int k, int j, double lambda) {
  if (k < 0 || j < 0) throw PreconditionError("cross_integral indices must be non-negative");
  if (k + j > 60) throw PreconditionError("cross_integral requires k + j <= 60");
  if (!(lambda > 0.0)) throw PreconditionError("lambda must be positive");
  const double sign = (j % 2 == 0) ? 1.0 : -1.0;
  return (std::numbers::pi / lambda) * sign * binom(j + k, j) / ipow(2.0 * kI * lambda, j + k);
}

namespace {

// L_n(x) and L_{n-1}(x) by the three-term recurrence.
std::pair<double, double> laguerre_pair(int n, double x) {
  double prev = 1.0;
  double cur = 1.0 - x;
  if (n == 0) return {1.0, 0.0};
  for (int k = 1; k < n; ++k) {
    const double next = ((2.0 * k + 1.0 - x) * cur - k * prev) / (k + 1.0);
    prev = cur;
    cur = next;
  }
  return {cur, prev};
}

}  // namespace

GaussRule gauss_laguerre(int count) {
  if (count < 1 || count > 64) throw PreconditionError("Gauss-Laguerre rule size must be in [1, 64]");
  Eigen::VectorXd diag(count);
  Eigen::VectorXd sub(count > 1 ? count - 1 : 0);
  for (int k = 0; k < count; ++k) diag[k] = 2.0 * k + 1.0;
  for (int k = 0; k + 1 < count; ++k) sub[k] = k + 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  GaussRule rule;
  for (int i = 0; i < count; ++i) {
    // Polish with Newton on L_n; L_n'(x) = n (L_n - L_{n-1}) / x.
    double x = solver.eigenvalues()[i];
    for (int it = 0; it < 8; ++it) {
      const auto [ln, lnm1] = laguerre_pair(count, x);
      const double dx = ln / (count * (ln - lnm1) / x);
      x -= dx;
      if (std::abs(dx) <= 1e-16 * x) break;
    }
    const double lnp1 = laguerre_pair(count + 1, x).first;
    rule.nodes.push_back(x);
    rule.weights.push_back(x / ((count + 1.0) * (count + 1.0) * lnp1 * lnp1));
  }
  return rule;
}

double laguerre_identity_gap(std::span<const Complex> G) {
  if (G.empty() || G.size() > 32) throw PreconditionError("laguerre_identity_gap needs 1..32 coefficients");
  const Complex sum = bilinear_sum(G);
  const GaussRule rule = gauss_laguerre(static_cast<int>(G.size()));
  double integral = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double t = rule.nodes[i];
    Complex poly{0.0, 0.0};
    double term = 1.0;  // t^k / k!
    for (std::size_t k = 0; k < G.size(); ++k) {
      poly += G[k] * term;
      term *= t / static_cast<double>(k + 1);
    }
    integral += rule.weights[i] * std::norm(poly);
  }
  return std::abs(sum - integral);
}

}  // namespace tmapprox
