#include "tmapprox/oracle.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tmapprox/extremal.hpp"

namespace tmapprox {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) throw PreconditionError("quadrature tolerances must be positive");
  if (max_panels < 4) throw PreconditionError("max_panels must be at least 4");
  if (nodes_per_panel < 2 || nodes_per_panel > 64)
    throw PreconditionError("nodes_per_panel must be in [2, 64]");
}

LegendreRule gauss_legendre(int count) {
  if (count < 1) throw PreconditionError("Gauss-Legendre rule needs at least one node");
  LegendreRule rule;
  if (count == 1) return {{0.0}, {2.0}};
  rule.nodes.resize(count);
  rule.weights.resize(count);
  const int half = (count + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (count + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= count; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = count * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[count - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[count - 1 - i] = w;
  }
  return rule;
}

namespace {

struct Panel {
  double lo;
  double hi;
  Complex coarse;  // rule on [lo, hi]
  Complex left;    // rule on [lo, mid]
  Complex right;   // rule on [mid, hi]
  double error() const { return std::abs(coarse - (left + right)); }
};

class PanelIntegrator {
 public:
  PanelIntegrator(const RealLineIntegrand& f, const LegendreRule& rule) : f_(f), rule_(rule) {}

  Complex rule_on(double lo, double hi) const {
    const double c = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < rule_.nodes.size(); ++i) {
      const double theta = c + h * rule_.nodes[i];
      const double cs = std::cos(theta);
      acc += rule_.weights[i] * f_(std::tan(theta)) / (cs * cs);
    }
    return h * acc;
  }

  Panel make(double lo, double hi, Complex coarse) const {
    const double mid = 0.5 * (lo + hi);
    return {lo, hi, coarse, rule_on(lo, mid), rule_on(mid, hi)};
  }

 private:
  const RealLineIntegrand& f_;
  const LegendreRule& rule_;
};

}  // namespace

QuadratureResult integrate_real_line(const RealLineIntegrand& f, const QuadratureSpec& spec) {
  spec.validate();
  const LegendreRule rule = gauss_legendre(spec.nodes_per_panel);
  const PanelIntegrator integ(f, rule);

  constexpr int kInitialPanels = 4;
  const double lo = -0.5 * std::numbers::pi;
  const double width = std::numbers::pi / kInitialPanels;
  std::vector<Panel> panels;
  for (int p = 0; p < kInitialPanels; ++p) {
    const double a = lo + p * width;
    const double b = (p + 1 == kInitialPanels) ? 0.5 * std::numbers::pi : a + width;
    panels.push_back(integ.make(a, b, integ.rule_on(a, b)));
  }

  while (true) {
    Complex total{0.0, 0.0};
    double err = 0.0;
    std::size_t worst = 0;
    double worst_err = -1.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].left + panels[i].right;
      const double e = panels[i].error();
      err += e;
      if (e > worst_err) {
        worst_err = e;
        worst = i;
      }
    }
    if (err <= std::max(spec.abs_tol, spec.rel_tol * std::abs(total)))
      return {total, err, static_cast<int>(panels.size())};
    if (static_cast<int>(panels.size()) >= spec.max_panels)
      throw ConvergenceError("real-line quadrature did not converge within " +
                             std::to_string(spec.max_panels) + " panels (error estimate " +
                             std::to_string(err) + ")");
    const Panel old = panels[worst];
    const double mid = 0.5 * (old.lo + old.hi);
    panels[worst] = integ.make(old.lo, mid, old.left);
    panels.insert(panels.begin() + static_cast<std::ptrdiff_t>(worst) + 1, integ.make(mid, old.hi, old.right));
  }
}

Complex fourier_coeff(const KernelParams& params, const BasisContext& ctx, int j, const QuadratureSpec& spec) {
  const int n = static_cast<int>(ctx.size());
  if (j < 1 || j > n) throw PreconditionError("Fourier index outside [1, n]");
  auto integrand = [&](double t) {
    return eval_R(params, ctx.poles, t) * std::conj(eval_phi(ctx, j, t));
  };
  return integrate_real_line(integrand, spec).value / std::numbers::pi;
}

Complex oracle_partial_sum(const KernelParams& params, const BasisContext& ctx, int m, Complex z,
                           const QuadratureSpec& spec) {
  Complex acc{0.0, 0.0};
  for (int j = 1; j <= m; ++j) acc += fourier_coeff(params, ctx, j, spec) * eval_phi(ctx, j, z);
  return acc;
}

Complex weighted_inner(const RealLineIntegrand& f, const RealLineIntegrand& g, const WeightSpec& weight,
                       const QuadratureSpec& spec) {
  const auto poles = weight.poles().points();
  const Complex rho0 = weight.rho0();
  auto integrand = [&](double t) {
    return f(t) * std::conj(g(t)) / std::norm(rho0 * eval_tau(t, poles));
  };
  return integrate_real_line(integrand, spec).value;
}

LeastSquaresResult ls_best_poly(const KernelParams& params, const WeightSpec& weight, const QuadratureSpec& spec) {
  const PoleSequence& poles = weight.poles();
  const int n = static_cast<int>(poles.size());
  const double L = node_scale(params.lambda(), poles);
  const Complex rho0 = weight.rho0();
  auto w = [&](double t) { return 1.0 / std::norm(rho0 * eval_tau(t, poles.points())); };

  // Gram entries depend on k + l only.
  std::vector<double> moments(2 * n - 1);
  for (int m = 0; m < 2 * n - 1; ++m) {
    auto integrand = [&](double t) { return Complex{std::pow(t / L, m) * w(t), 0.0}; };
    moments[m] = integrate_real_line(integrand, spec).value.real();
  }
  Eigen::VectorXd scale(n);
  for (int k = 0; k < n; ++k) scale[k] = 1.0 / std::sqrt(moments[2 * k]);

  Eigen::MatrixXd gram(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) gram(k, l) = scale[k] * moments[k + l] * scale[l];

  Eigen::VectorXcd rhs(n);
  for (int l = 0; l < n; ++l) {
    auto integrand = [&](double t) { return eval_kernel(params, t) * std::pow(t / L, l) * w(t); };
    rhs[l] = scale[l] * integrate_real_line(integrand, spec).value;
  }

  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(gram);
  const auto& sv = svd.singularValues();
  const double condition = sv[n - 1] > 0.0 ? sv[0] / sv[n - 1] : std::numeric_limits<double>::infinity();
  if (!(condition <= 1e12))
    throw RankDeficiencyError("least-squares Gram matrix condition " + std::to_string(condition) +
                                  " exceeds 1e12",
                              condition);

  const Eigen::MatrixXcd gram_c = gram.cast<Complex>();
  const Eigen::VectorXcd y = gram_c.colPivHouseholderQr().solve(rhs);
  std::vector<Complex> scaled(n);
  for (int k = 0; k < n; ++k) scaled[k] = scale[k] * y[k];

  LeastSquaresResult result;
  result.gram_condition = condition;
  result.poly.coeffs.resize(n);
  double inv = 1.0;
  for (int k = 0; k < n; ++k) {
    result.poly.coeffs[k] = scaled[k] * inv;
    inv /= L;
  }

  auto residual = [&](double t) {
    Complex p{0.0, 0.0};
    const double x = t / L;
    for (int k = n - 1; k >= 0; --k) p = p * x + scaled[k];
    return Complex{std::norm(eval_kernel(params, t) - p) * w(t), 0.0};
  };
  const QuadratureResult e2 = integrate_real_line(residual, spec);
  result.error_squared = std::max(0.0, e2.value.real());
  result.error = std::sqrt(result.error_squared);
  result.quadrature_estimate_error = e2.error_estimate;
  return result;
}

}  // namespace tmapprox
