#include "cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <numbers>
#include <random>
#include <sstream>
#include <utility>

#include "tmapprox/closed_form.hpp"
#include "tmapprox/extremal.hpp"
#include "tmapprox/oracle.hpp"
#include "tmapprox/symmetric_sums.hpp"
#include "tmapprox/tm_basis.hpp"

namespace tmapprox::cli {

using Json = nlohmann::ordered_json;

std::string format_number(double x) { return Json(x).dump(); }

namespace {

const char* command_name(Command c) {
  switch (c) {
    case Command::error_table: return "error-table";
    case Command::extremal: return "extremal";
    case Command::verify: return "verify";
    case Command::identity_check: return "identity-check";
  }
  return "?";
}

Json complex_json(Complex z) { return Json::array({z.real(), z.imag()}); }

std::string trim_comment(std::string line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

// Built-in pole sample used by identity-check when no poles are given.
std::vector<Complex> sample_poles() {
  return {{0.0, 1.0}, {1.0, 2.0}, {-0.5, 0.7}, {2.0, 0.3}};
}

// Platform-independent uniform doubles (std::uniform_real_distribution is not).
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double operator()(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

 private:
  std::mt19937_64 engine_;
};

struct Check {
  std::string name;
  std::optional<double> value;
  double tolerance = 0.0;
  std::string status;  // pass | fail | skipped
  std::string detail;
};

class CheckList {
 public:
  void measure(std::string name, double value, double tolerance) {
    const bool ok = std::isfinite(value) && value <= tolerance;
    checks_.push_back({std::move(name), value, tolerance, ok ? "pass" : "fail", {}});
  }
  void fail(std::string name, double tolerance, std::string detail) {
    checks_.push_back({std::move(name), std::nullopt, tolerance, "fail", std::move(detail)});
  }
  void skip(std::string name, double tolerance, std::string detail) {
    checks_.push_back({std::move(name), std::nullopt, tolerance, "skipped", std::move(detail)});
  }
  bool all_passed() const {
    return std::none_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.status == "fail"; });
  }
  const std::vector<Check>& items() const { return checks_; }

 private:
  std::vector<Check> checks_;
};

double rel_gap(double reference, double value) {
  const double diff = std::abs(reference - value);
  return reference != 0.0 ? diff / std::abs(reference) : diff;
}

double rel_diff(Complex a, Complex b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale > 0.0 ? std::abs(a - b) / scale : 0.0;
}

double coefficient_gap(const ComplexPolynomial& a, const ComplexPolynomial& b) {
  double max_coeff = 0.0;
  double gap = 0.0;
  const std::size_t size = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t k = 0; k < size; ++k) {
    const Complex ca = k < a.coeffs.size() ? a.coeffs[k] : Complex{};
    const Complex cb = k < b.coeffs.size() ? b.coeffs[k] : Complex{};
    max_coeff = std::max({max_coeff, std::abs(ca), std::abs(cb)});
    gap = std::max(gap, std::abs(ca - cb));
  }
  return gap / (1.0 + max_coeff);
}

Json coefficients_json(const ComplexPolynomial& p) {
  Json arr = Json::array();
  for (const Complex& c : p.coeffs) arr.push_back(complex_json(c));
  return arr;
}

// ---- individual checks, shared by verify -----------------------------------

double dzhrbashyan_max(const PoleSequence& poles, ChiConvention conv, Uniform& rng, int draws) {
  const BasisContext ctx{poles, conv};
  const int n = static_cast<int>(poles.size());
  double worst = 0.0;
  for (int d = 0; d < draws; ++d) {
    const Complex z{rng(-3.0, 3.0), rng(0.1, 3.0)};
    const Complex zeta{rng(-3.0, 3.0), rng(0.1, 3.0)};
    const int m = 1 + (d % n);
    const double r = dzhrbashyan_residual(ctx, z, zeta, m);
    worst = std::max(worst, r / (1.0 + std::abs(dzhrbashyan_lhs(z, zeta))));
  }
  return worst;
}

double orthonormality_gap(const PoleSequence& poles, const QuadratureSpec& spec) {
  const BasisContext ctx{poles, ChiConvention::phased};
  const int n = static_cast<int>(poles.size());
  double worst = 0.0;
  for (int j = 1; j <= n; ++j) {
    for (int k = j; k <= n; ++k) {
      auto integrand = [&](double t) { return eval_phi(ctx, j, t) * std::conj(eval_phi(ctx, k, t)); };
      const Complex g = integrate_real_line(integrand, spec).value / std::numbers::pi;
      worst = std::max(worst, std::abs(g - (j == k ? 1.0 : 0.0)));
    }
  }
  return worst;
}

void verify_cell(const KernelParams& params, const WeightSpec& weight, double rel_tol, CheckList& checks,
                 Json& row) {
  const PoleSequence& poles = weight.poles();
  const int n = static_cast<int>(poles.size());
  const std::string tag = "n=" + std::to_string(n) + ".";
  const QuadratureSpec spec;
  const bool real = params.has_real_coefficients();
  const double lambda = params.lambda();
  const int s = params.s();

  const double e2 = best_error_squared(params, weight);
  row["n"] = n;
  row["E_n"] = std::sqrt(e2);
  row["E_n_squared"] = e2;

  // Closed-form pieces.
  const ResidueCoefficients rc = residue_coefficients(params, poles);
  const Complex tau_up = eval_tau(kI * lambda, poles.conjugated());
  double dg = 0.0;
  double conj_gap = 0.0;
  for (int l = 0; l <= s; ++l) {
    const Complex lhs = rc.D[l] * tau_up * std::pow(2.0 * lambda, s + 1 - l);
    dg = std::max(dg, rel_diff(lhs, ipow(kI, l) * rc.G[l]));
    conj_gap = std::max(conj_gap, rel_diff(rc.D_lower[l], std::conj(rc.D[l])));
  }
  checks.measure(tag + "D_G_relation", dg, 1e-12);
  if (real) {
    checks.measure(tag + "D_lower_conjugation", conj_gap, 1e-12);
    checks.measure(tag + "real_vs_general_form", rel_gap(e2, error_squared_general(params, weight)), 1e-12);
  } else {
    checks.skip(tag + "D_lower_conjugation", 1e-12, "complex A or B");
    checks.skip(tag + "real_vs_general_form", 1e-12, "complex A or B");
  }
  const Complex bsum = bilinear_sum(rc.G);
  checks.measure(tag + "laguerre_identity", laguerre_identity_gap(rc.G) / (1.0 + std::abs(bsum)), 1e-10);

  if (n <= 6 && s <= 12) {
    const auto abar = poles.conjugated();
    const NuTable table = nu_table(s, kI * lambda, abar);
    double worst = 0.0;
    for (int k = 0; k <= s; ++k) {
      const Complex bf = nu_bruteforce(k, kI * lambda, abar);
      worst = std::max(worst, std::abs(table[k] - bf) / (1.0 + std::abs(table[k])));
    }
    checks.measure(tag + "nu_recurrence_vs_bruteforce", worst, 1e-12);
  } else {
    checks.skip(tag + "nu_recurrence_vs_bruteforce", 1e-12, "enumeration limited to n <= 6, s <= 12");
  }

  Uniform rng(0x5eed0000ULL + static_cast<std::uint64_t>(n));
  const double dz = std::max(dzhrbashyan_max(poles, ChiConvention::phased, rng, 50),
                             dzhrbashyan_max(poles, ChiConvention::all_ones, rng, 50));
  checks.measure(tag + "dzhrbashyan_identity", dz, 1e-10);

  if (n <= 8)
    checks.measure(tag + "tm_orthonormality", orthonormality_gap(poles, spec), 1e-8);
  else
    checks.skip(tag + "tm_orthonormality", 1e-8, "checked for n <= 8");

  // Extremal polynomial against the oracle.
  std::optional<ComplexPolynomial> extremal;
  try {
    extremal = extremal_poly(params, poles);
    row["coefficients"] = coefficients_json(*extremal);
  } catch (const IllConditionedError& e) {
    checks.fail(tag + "extremal_interpolation", 1e-8, e.what());
  }

  try {
    const LeastSquaresResult ls = ls_best_poly(params, weight, spec);
    row["E_oracle"] = ls.error;
    row["E_oracle_squared"] = ls.error_squared;
    row["gram_condition"] = ls.gram_condition;
    checks.measure(tag + "closed_vs_oracle_error", rel_gap(e2, ls.error_squared), rel_tol);
    if (extremal) checks.measure(tag + "extremal_vs_oracle_coefficients", coefficient_gap(*extremal, ls.poly), rel_tol);
  } catch (const RankDeficiencyError& e) {
    checks.skip(tag + "closed_vs_oracle_error", rel_tol, e.what());
    checks.skip(tag + "extremal_vs_oracle_coefficients", rel_tol, e.what());
  }

  if (extremal) {
    const double L = node_scale(lambda, poles);
    auto resid = [&](double t) { return eval_kernel(params, t) - (*extremal)(t); };
    const double norm_r = std::sqrt(std::abs(weighted_inner(resid, resid, weight, spec)));
    double worst = 0.0;
    if (norm_r > 0.0) {
      for (int k = 0; k < n; ++k) {
        auto mono = [&](double t) { return Complex{std::pow(t / L, k), 0.0}; };
        const double norm_m = std::sqrt(std::abs(weighted_inner(mono, mono, weight, spec)));
        worst = std::max(worst, std::abs(weighted_inner(resid, mono, weight, spec)) / (norm_r * norm_m));
      }
    }
    checks.measure(tag + "residual_orthogonality", worst, 1e-8);
  }
}

// ---- commands --------------------------------------------------------------

std::vector<int> effective_n_list(const RunConfig& config) {
  if (!config.n_list.empty()) return config.n_list;
  return {static_cast<int>(config.poles.size())};
}

Json config_json(const RunConfig& config, const std::vector<Complex>& poles) {
  Json c;
  c["command"] = command_name(config.command);
  c["A"] = complex_json(config.A);
  c["B"] = complex_json(config.B);
  c["lambda"] = config.lambda;
  c["s"] = config.s;
  c["rho0"] = complex_json(config.rho0);
  Json pl = Json::array();
  for (const Complex& p : poles) pl.push_back(complex_json(p));
  c["poles"] = pl;
  Json nl = Json::array();
  if (!poles.empty())
    for (int n : config.command == Command::identity_check && config.n_list.empty()
                     ? std::vector<int>{static_cast<int>(poles.size())}
                     : effective_n_list(config))
      nl.push_back(n);
  c["n_list"] = nl;
  c["format"] = config.format == Format::json ? "json" : "csv";
  c["verify"] = config.verify;
  c["rel_tol"] = config.rel_tol;
  return c;
}

void run_error_table(const RunConfig& config, Json& results, CheckList& checks) {
  const KernelParams params(config.A, config.B, config.lambda, config.s);
  const PoleSequence all(config.poles);
  for (int n : effective_n_list(config)) {
    const WeightSpec weight(config.rho0, all.prefix(static_cast<std::size_t>(n)));
    const double e2 = best_error_squared(params, weight);
    Json row;
    row["n"] = n;
    row["E_n"] = std::sqrt(e2);
    row["E_n_squared"] = e2;
    if (config.verify) {
      const std::string name = "n=" + std::to_string(n) + ".closed_vs_oracle_error";
      try {
        const LeastSquaresResult ls = ls_best_poly(params, weight);
        const double gap = rel_gap(e2, ls.error_squared);
        row["E_oracle"] = ls.error;
        row["E_oracle_squared"] = ls.error_squared;
        row["rel_gap"] = gap;
        row["gram_condition"] = ls.gram_condition;
        checks.measure(name, gap, config.rel_tol);
      } catch (const RankDeficiencyError& e) {
        row["oracle_skipped"] = e.what();
        checks.skip(name, config.rel_tol, e.what());
      }
    }
    results.push_back(row);
  }
}

void run_extremal(const RunConfig& config, Json& results, CheckList& checks) {
  const KernelParams params(config.A, config.B, config.lambda, config.s);
  const PoleSequence all(config.poles);
  for (int n : effective_n_list(config)) {
    const PoleSequence poles = all.prefix(static_cast<std::size_t>(n));
    const WeightSpec weight(config.rho0, poles);
    Json row;
    row["n"] = n;
    const std::string tag = "n=" + std::to_string(n) + ".";
    try {
      const ComplexPolynomial p = extremal_poly(params, poles);
      row["coefficients"] = coefficients_json(p);
      if (config.verify) {
        try {
          const LeastSquaresResult ls = ls_best_poly(params, weight);
          checks.measure(tag + "extremal_vs_oracle_coefficients", coefficient_gap(p, ls.poly), config.rel_tol);
        } catch (const RankDeficiencyError& e) {
          checks.skip(tag + "extremal_vs_oracle_coefficients", config.rel_tol, e.what());
        }
      }
    } catch (const IllConditionedError& e) {
      row["coefficients"] = nullptr;
      checks.fail(tag + "extremal_interpolation", 1e-8, e.what());
    }
    row["E_n"] = std::sqrt(best_error_squared(params, weight));
    results.push_back(row);
  }
}

void run_verify(const RunConfig& config, Json& results, CheckList& checks) {
  const KernelParams params(config.A, config.B, config.lambda, config.s);
  const PoleSequence all(config.poles);
  for (int n : effective_n_list(config)) {
    const WeightSpec weight(config.rho0, all.prefix(static_cast<std::size_t>(n)));
    Json row;
    verify_cell(params, weight, config.rel_tol, checks, row);
    results.push_back(row);
  }
}

void run_identity_check(const std::vector<Complex>& pole_list, Json& results, CheckList& checks) {
  const PoleSequence poles(pole_list);
  const int n = static_cast<int>(poles.size());
  Uniform rng(0x1de27117ULL);
  for (ChiConvention conv : {ChiConvention::phased, ChiConvention::all_ones}) {
    const BasisContext ctx{poles, conv};
    double worst = 0.0;
    constexpr int kDraws = 100;
    for (int d = 0; d < kDraws; ++d) {
      const Complex z{rng(-3.0, 3.0), rng(0.1, 3.0)};
      const Complex zeta{rng(-3.0, 3.0), rng(0.1, 3.0)};
      const int m = 1 + (d % n);
      worst = std::max(worst, dzhrbashyan_residual(ctx, z, zeta, m) / (1.0 + std::abs(dzhrbashyan_lhs(z, zeta))));
    }
    const std::string conv_name = conv == ChiConvention::phased ? "phased" : "all_ones";
    Json row;
    row["kind"] = "dzhrbashyan";
    row["chi_convention"] = conv_name;
    row["draws"] = kDraws;
    row["max_normalized_residual"] = worst;
    results.push_back(row);
    checks.measure("dzhrbashyan." + conv_name, worst, 1e-10);
  }

  const QuadratureSpec spec;
  for (double lambda : {0.5, 1.0, 2.0}) {
    double worst = 0.0;
    for (int k = 0; k <= 8; ++k) {
      for (int j = 0; k + j <= 8; ++j) {
        const Complex closed = cross_integral(k, j, lambda);
        auto integrand = [&](double t) {
          return 1.0 / (ipow(kI * lambda - t, k + 1) * ipow(-kI * lambda - t, j + 1));
        };
        const Complex quad = integrate_real_line(integrand, spec).value;
        const double gap = std::abs(closed - quad) / std::abs(closed);
        worst = std::max(worst, gap);
        Json row;
        row["kind"] = "cross_integral";
        row["k"] = k;
        row["j"] = j;
        row["lambda"] = lambda;
        row["closed"] = complex_json(closed);
        row["quadrature"] = complex_json(quad);
        row["rel_gap"] = gap;
        results.push_back(row);
      }
    }
    checks.measure("cross_integral.lambda=" + format_number(lambda), worst, 1e-9);
  }
}

Json checks_json(const CheckList& checks) {
  Json arr = Json::array();
  for (const Check& c : checks.items()) {
    Json j;
    j["name"] = c.name;
    j["value"] = c.value ? Json(*c.value) : Json(nullptr);
    j["tolerance"] = c.tolerance;
    j["status"] = c.status;
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(j);
  }
  return arr;
}

std::string csv_cell(const Json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) quoted += (ch == '"') ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
  }
  return v.dump();
}

void write_csv(const RunConfig& config, const Json& results, const Json& checks, std::ostream& out) {
  switch (config.command) {
    case Command::error_table: {
      std::vector<std::string> cols{"n", "E_n", "E_n_squared"};
      if (config.verify) cols.insert(cols.end(), {"E_oracle", "E_oracle_squared", "rel_gap", "gram_condition"});
      for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
      out << '\n';
      for (const Json& row : results) {
        for (std::size_t i = 0; i < cols.size(); ++i)
          out << (i ? "," : "") << (row.contains(cols[i]) ? csv_cell(row[cols[i]]) : "");
        out << '\n';
      }
      return;
    }
    case Command::extremal: {
      out << "n,k,re,im,E_n\n";
      for (const Json& row : results) {
        const Json& coeffs = row["coefficients"];
        if (!coeffs.is_array()) continue;
        for (std::size_t k = 0; k < coeffs.size(); ++k)
          out << row["n"].dump() << ',' << k << ',' << coeffs[k][0].dump() << ',' << coeffs[k][1].dump() << ','
              << row["E_n"].dump() << '\n';
      }
      return;
    }
    case Command::verify:
    case Command::identity_check: {
      out << "name,value,tolerance,status\n";
      for (const Json& c : checks)
        out << csv_cell(c["name"]) << ',' << csv_cell(c["value"]) << ',' << csv_cell(c["tolerance"]) << ','
            << csv_cell(c["status"]) << '\n';
      return;
    }
  }
}

int parse_int_strict(const std::string& text) {
  std::size_t pos = 0;
  const int v = std::stoi(text, &pos);
  if (pos != text.size()) throw InputError("not an integer: " + text);
  return v;
}

}  // namespace

std::vector<Complex> read_pole_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open pole file: " + path);
  std::vector<Complex> poles;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(trim_comment(line));
    double re = 0.0;
    double im = 0.0;
    if (!(fields >> re)) {
      std::string rest;
      fields.clear();
      if (fields >> rest) throw InputError(path + ":" + std::to_string(lineno) + ": expected 're im'");
      continue;  // blank or comment-only
    }
    std::string extra;
    if (!(fields >> im) || (fields >> extra))
      throw InputError(path + ":" + std::to_string(lineno) + ": expected exactly two numbers 're im'");
    poles.emplace_back(re, im);
  }
  return poles;
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Best weighted polynomial approximation of (A + B t)/(t^2 + lambda^2)^(s+1)", "tmapprox"};
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<double> a_in{1.0, 0.0};
  std::vector<double> b_in{0.0, 0.0};
  std::vector<double> rho_in{1.0, 0.0};
  double lambda = 1.0;
  int s = 1;
  std::string pole_file;
  std::vector<std::pair<double, double>> pole_pairs;
  std::string n_list_text;
  std::string format = "json";
  bool verify = false;
  double rel_tol = 1e-6;
  std::string out_path;

  app.add_option("--A", a_in, "A as 're im'")->expected(2);
  app.add_option("--B", b_in, "B as 're im'")->expected(2);
  app.add_option("--lambda", lambda, "lambda > 0");
  app.add_option("--s", s, "kernel order s >= 1");
  app.add_option("--poles", pole_file, "pole file, one 're im' per line");
  app.add_option("--pole", pole_pairs, "pole 're im' (repeatable)");
  app.add_option("--n-list", n_list_text, "comma-separated pole counts, e.g. 1,2,4");
  app.add_option("--rho0", rho_in, "rho0 as 're im'")->expected(2);
  app.add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  app.add_flag("--verify", verify, "cross-check against the numerical oracle");
  app.add_option("--rel-tol", rel_tol, "closed-form vs oracle relative tolerance");
  app.add_option("--out", out_path, "write the report to this path instead of stdout");

  auto* cmd_table = app.add_subcommand("error-table", "E_n for each n in --n-list");
  auto* cmd_extremal = app.add_subcommand("extremal", "extremal polynomial coefficients");
  auto* cmd_verify = app.add_subcommand("verify", "full invariant battery");
  auto* cmd_identity = app.add_subcommand("identity-check", "basis identity and cross-integral checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw;
  } catch (const CLI::ParseError& e) {
    throw InputError(e.what());
  }

  RunConfig config;
  if (cmd_table->parsed()) config.command = Command::error_table;
  else if (cmd_extremal->parsed()) config.command = Command::extremal;
  else if (cmd_verify->parsed()) config.command = Command::verify;
  else if (cmd_identity->parsed()) config.command = Command::identity_check;

  config.A = {a_in[0], a_in[1]};
  config.B = {b_in[0], b_in[1]};
  config.rho0 = {rho_in[0], rho_in[1]};
  config.lambda = lambda;
  config.s = s;
  config.format = format == "csv" ? Format::csv : Format::json;
  config.verify = verify;
  config.rel_tol = rel_tol;
  if (!out_path.empty()) config.out_path = out_path;

  if (!pole_file.empty()) config.poles = read_pole_file(pole_file);
  for (const auto& [re, im] : pole_pairs) config.poles.emplace_back(re, im);

  if (!n_list_text.empty()) {
    std::stringstream ss(n_list_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        config.n_list.push_back(parse_int_strict(item));
      } catch (const std::logic_error&) {
        throw InputError("invalid --n-list entry: '" + item + "'");
      }
    }
  }

  // Domain validation through the library's own invariants.
  try {
    KernelParams(config.A, config.B, config.lambda, config.s);
    WeightSpec(config.rho0, PoleSequence(config.poles.empty() ? sample_poles() : config.poles));
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
  if (!(rel_tol > 0.0)) throw InputError("--rel-tol must be positive");
  if (config.poles.empty() && config.command != Command::identity_check)
    throw InputError("no poles given (use --pole re im or --poles FILE)");
  if (config.s > 32) throw InputError("s above supported maximum 32");
  for (int n : config.n_list)
    if (n < 1 || n > static_cast<int>(config.poles.size()))
      throw InputError("n-list entry " + std::to_string(n) + " outside [1, " +
                       std::to_string(config.poles.size()) + "]");
  return config;
}

int run(const RunConfig& config, std::ostream& out) {
  Json results = Json::array();
  CheckList checks;
  const std::vector<Complex> poles =
      (config.command == Command::identity_check && config.poles.empty()) ? sample_poles() : config.poles;

  switch (config.command) {
    case Command::error_table: run_error_table(config, results, checks); break;
    case Command::extremal: run_extremal(config, results, checks); break;
    case Command::verify: run_verify(config, results, checks); break;
    case Command::identity_check: run_identity_check(poles, results, checks); break;
  }

  const Json checks_arr = checks_json(checks);
  if (config.format == Format::json) {
    Json doc;
    doc["config"] = config_json(config, poles);
    doc["results"] = results;
    doc["checks"] = checks_arr;
    out << doc.dump(2) << '\n';
  } else {
    write_csv(config, results, checks_arr, out);
  }
  return checks.all_passed() ? kExitOk : kExitVerificationFailed;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  const bool color = &err == &std::cerr && std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO);
  auto diag = [&](const std::string& msg) {
    err << (color ? "\033[31merror:\033[0m " : "error: ") << msg << '\n';
  };
  RunConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << "usage: tmapprox {error-table|extremal|verify|identity-check} [--A re im] [--B re im]\n"
           "       [--lambda L] [--s S] [--poles FILE | --pole re im ...] [--n-list a,b,c]\n"
           "       [--rho0 re im] [--format json|csv] [--verify] [--rel-tol T] [--out PATH]\n";
    return kExitOk;
  } catch (const InputError& e) {
    diag(e.what());
    return kExitInvalidInput;
  }

  try {
    if (config.out_path) {
      std::ofstream file(*config.out_path);
      if (!file) {
        diag("cannot open output file: " + *config.out_path);
        return kExitInvalidInput;
      }
      return run(config, file);
    }
    return run(config, out);
  } catch (const PreconditionError& e) {
    diag(e.what());
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    diag(e.what());
    return kExitVerificationFailed;
  }
}

}  // namespace tmapprox::cli
