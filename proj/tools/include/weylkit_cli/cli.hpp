#pragma once

#include "weylkit/spinor_element.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace weylkit::cli {

inline constexpr const char* kSchemaVersion = "1.0.0";

enum class Command { Verify, Commutator, Kernel, Spectrum, Table };
enum class Format { Text, Json, Csv };

std::string command_name(Command c);

struct RunConfig {
  Command command = Command::Verify;
  int n = 1;
  std::optional<int> k;
  std::optional<int> m;
  std::optional<SpinorModel> model;
  std::optional<int> kmax;
  Format format = Format::Text;
  std::optional<std::string> out;
  std::vector<std::string> operands;  ///< commutator: the two operator names
};

/// Invalid configuration; what() names the offending flag.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Parses argv (argv[0] is the program name). Throws ConfigError. Returns
/// std::nullopt after printing help to `out`.
std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Rejects configs that parse but cannot run (missing --k, n < 1, ...).
void validate(const RunConfig& config);

struct SuiteResult {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::vector<std::string> details;   ///< one line per check or finding
  std::optional<std::string> witness; ///< first nonzero operator on failure
  nlohmann::json data = nlohmann::json::object();

  /// Records one check; on failure the first witness is kept.
  void check(bool ok, const std::string& label, const std::string& witness_text = {});
};

struct VerificationReport {
  int n = 1;
  std::vector<SuiteResult> suites;

  bool passed() const;
  nlohmann::json to_json() const;
  std::string text() const;
  std::string csv() const;
};

/// Suite names in run order.
const std::vector<std::string>& suite_names();
SuiteResult run_suite(std::string_view name, int n);
VerificationReport run_verification(int n);

/// Catalog lookup from a label such as "D_s", "F[2]" or "Y[1,2]".
WeylOperator operator_from_label(std::string_view label, int n);

struct RunOutcome {
  int exit_code = 0;
  std::string report;
};

/// Runs a validated config; the report is not yet written anywhere.
RunOutcome run(const RunConfig& config);

/// Full front end: parse, run, write (to --out or `out`). Returns 0, 1 or 2.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weylkit::cli
