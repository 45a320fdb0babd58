#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tmapprox/kernel_model.hpp"

namespace tmapprox::cli {

enum class Command { error_table, extremal, verify, identity_check };
enum class Format { json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitVerificationFailed = 3;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  Command command = Command::error_table;
  Complex A{1.0, 0.0};
  Complex B{0.0, 0.0};
  double lambda = 1.0;
  int s = 1;
  std::vector<Complex> poles;
  std::vector<int> n_list;  // empty: use all poles
  Complex rho0{1.0, 0.0};
  Format format = Format::json;
  bool verify = false;
  double rel_tol = 1e-6;  // closed-form vs oracle tolerance
  std::optional<std::string> out_path;
};

/// Parses argv into a validated RunConfig. Throws InputError on any invalid
/// flag, value or domain violation (lambda <= 0, s < 1, Im a_k <= 0, n out of range).
RunConfig parse_args(int argc, const char* const* argv);

/// Poles from a text file: one "re im" pair per line, '#' starts a comment.
std::vector<Complex> read_pole_file(const std::string& path);

/// Executes the command and writes the serialized report to out. Returns the
/// process exit status (0, or 3 when a verification check failed).
int run(const RunConfig& config, std::ostream& out);

/// parse_args + run with diagnostics on err; returns 2 on invalid input.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Round-trip exact formatting shared by the JSON and CSV emitters.
std::string format_number(double x);

}  // namespace tmapprox::cli
