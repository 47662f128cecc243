#include "weylkit_cli/cli.hpp"

#include "weylkit/catalog.hpp"
#include "weylkit/kernel.hpp"
#include "weylkit/table_diff.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace weylkit::cli {

std::string command_name(Command c) {
  switch (c) {
    case Command::Verify: return "verify";
    case Command::Commutator: return "commutator";
    case Command::Kernel: return "kernel";
    case Command::Spectrum: return "spectrum";
    case Command::Table: return "table";
  }
  return "verify";
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  return Format::Text;
}

struct RawOptions {
  int n = 1;
  int k = -1, m = -1, kmax = -1;
  std::string model;
  std::string format = "text";
  std::string out;
  std::vector<std::string> operands;
};

void common_options(CLI::App* sub, RawOptions& raw) {
  sub->add_option("--n", raw.n, "number of base pairs (n >= 1)")->check(CLI::Range(1, 64));
  sub->add_option("--format", raw.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  sub->add_option("--out", raw.out, "write the report to PATH instead of standard output");
}

}  // namespace

std::optional<RunConfig> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Exact verification of symplectic Dirac operator identities", "weylkit"};
  app.require_subcommand(1);
  RawOptions raw;

  auto* verify = app.add_subcommand("verify", "run every verification suite");
  common_options(verify, raw);

  auto* comm = app.add_subcommand("commutator", "print the normal-ordered bracket [A, B]");
  common_options(comm, raw);
  comm->add_option("operators", raw.operands, "two catalog names, e.g. D_s X_s or Y[1,2]")
      ->expected(2)
      ->required();

  auto* kernel = app.add_subcommand("kernel", "kernel dimensions of D_s, Dt_s and their joint kernel");
  common_options(kernel, raw);
  kernel->add_option("--k", raw.k, "base degree")->check(CLI::Range(0, 1000))->required();
  kernel->add_option("--m", raw.m, "spinor degree cap")->check(CLI::Range(0, 1000))->required();
  kernel->add_option("--model", raw.model, "plain | weighted")
      ->check(CLI::IsMember({"plain", "weighted"}));

  auto* spectrum = app.add_subcommand("spectrum", "Hermite operator eigenspaces");
  common_options(spectrum, raw);
  spectrum->add_option("--kmax", raw.kmax, "largest spinor degree")
      ->check(CLI::Range(0, 1000))
      ->required();

  auto* table = app.add_subcommand("table", "computed 8x8 commutator table with diff annotations");
  common_options(table, raw);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }
  for (auto* sub : app.get_subcommands()) {
    if (sub->get_help_ptr() && sub->get_help_ptr()->count() > 0) {
      out << sub->help();
      return std::nullopt;
    }
  }

  RunConfig c;
  const std::string name = app.get_subcommands().front()->get_name();
  c.command = name == "verify"       ? Command::Verify
              : name == "commutator" ? Command::Commutator
              : name == "kernel"     ? Command::Kernel
              : name == "spectrum"   ? Command::Spectrum
                                     : Command::Table;
  c.n = raw.n;
  if (raw.k >= 0) c.k = raw.k;
  if (raw.m >= 0) c.m = raw.m;
  if (raw.kmax >= 0) c.kmax = raw.kmax;
  if (!raw.model.empty()) c.model = parse_model(raw.model);
  c.format = parse_format(raw.format);
  if (!raw.out.empty()) c.out = raw.out;
  c.operands = raw.operands;
  validate(c);
  return c;
}

void validate(const RunConfig& c) {
  if (c.n < 1) throw ConfigError("--n: must be >= 1");
  if (c.k && *c.k < 0) throw ConfigError("--k: must be >= 0");
  if (c.m && *c.m < 0) throw ConfigError("--m: must be >= 0");
  if (c.kmax && *c.kmax < 0) throw ConfigError("--kmax: must be >= 0");
  switch (c.command) {
    case Command::Kernel:
      if (!c.k) throw ConfigError("--k is required for kernel");
      if (!c.m) throw ConfigError("--m is required for kernel");
      break;
    case Command::Spectrum:
      if (!c.kmax) throw ConfigError("--kmax is required for spectrum");
      break;
    case Command::Commutator:
      if (c.operands.size() != 2) throw ConfigError("operators: commutator needs exactly two names");
      for (const auto& op : c.operands) operator_from_label(op, c.n);
      break;
    default:
      break;
  }
}

WeylOperator operator_from_label(std::string_view label, int n) {
  const auto open = label.find('[');
  std::string name(label.substr(0, open));
  std::optional<IndexPair> idx;
  if (open != std::string_view::npos) {
    if (label.back() != ']') throw ConfigError("operators: malformed index in '" + std::string(label) + "'");
    const std::string inner(label.substr(open + 1, label.size() - open - 2));
    const auto comma = inner.find(',');
    try {
      const int j = std::stoi(inner.substr(0, comma));
      const int k = comma == std::string::npos ? j : std::stoi(inner.substr(comma + 1));
      idx = IndexPair{j, k};
    } catch (const std::exception&) {
      throw ConfigError("operators: malformed index in '" + std::string(label) + "'");
    }
  }
  if (!catalog_contains(name)) throw ConfigError("operators: unknown operator '" + name + "'");
  try {
    return catalog(name, n, idx);
  } catch (const std::exception& e) {
    throw ConfigError("operators: " + std::string(e.what()));
  }
}

namespace {

RunOutcome run_commutator(const RunConfig& c) {
  const WeylOperator a = operator_from_label(c.operands[0], c.n);
  const WeylOperator b = operator_from_label(c.operands[1], c.n);
  const WeylOperator r = commutator(a, b);
  RunOutcome o;
  switch (c.format) {
    case Format::Text: o.report = r.str() + "\n"; break;
    case Format::Csv:
      o.report = "a,b,n,result\n" + csv_field(c.operands[0]) + "," + csv_field(c.operands[1]) + "," +
                 std::to_string(c.n) + "," + csv_field(r.str()) + "\n";
      break;
    case Format::Json: {
      nlohmann::json j = {{"schema_version", kSchemaVersion}, {"command", "commutator"},
                          {"n", c.n},          {"status", "pass"},
                          {"a", c.operands[0]}, {"b", c.operands[1]},
                          {"result", r.str()}, {"operator", r.to_json()}};
      o.report = j.dump(2) + "\n";
    }
  }
  return o;
}

RunOutcome run_kernel(const RunConfig& c) {
  const SpinorModel model = c.model.value_or(SpinorModel::Plain);
  const KernelReport k = monogenic_dims(c.n, *c.k, *c.m, model);
  std::vector<std::pair<std::string, bool>> checks = {
      {"dim_joint <= min(dim_ker_Ds, dim_ker_DsTilde)",
       k.dim_joint <= std::min(k.dim_ker_Ds, k.dim_ker_DsTilde)},
      {"dim_joint >= holomorphic_lower_bound", k.dim_joint >= k.holomorphic_lower_bound},
  };
  bool ok = true;
  for (const auto& [label, pass] : checks) ok = ok && pass;
  RunOutcome o;
  o.exit_code = ok ? 0 : 1;
  switch (c.format) {
    case Format::Text: {
      o.report = k.text();
      for (const auto& [label, pass] : checks) o.report += "  " + label + ": " + (pass ? "ok" : "FAIL") + "\n";
      break;
    }
    case Format::Csv: o.report = KernelReport::csv_header() + "\n" + k.csv_row() + "\n"; break;
    case Format::Json: {
      nlohmann::json cj = nlohmann::json::array();
      for (const auto& [label, pass] : checks) cj.push_back({{"name", label}, {"status", pass ? "pass" : "fail"}});
      nlohmann::json j = {{"schema_version", kSchemaVersion}, {"command", "kernel"},
                          {"n", c.n}, {"status", ok ? "pass" : "fail"},
                          {"report", k.to_json()}, {"checks", cj}};
      o.report = j.dump(2) + "\n";
    }
  }
  return o;
}

RunOutcome run_spectrum(const RunConfig& c) {
  const auto levels = hermite_eigenspaces(c.n, *c.kmax);
  bool ok = true;
  for (const auto& l : levels) ok = ok && l.dimension == l.expected;
  RunOutcome o;
  o.exit_code = ok ? 0 : 1;
  std::ostringstream os;
  switch (c.format) {
    case Format::Text:
      os << "Hermite eigenspaces, n=" << c.n << ", spinor degree <= " << *c.kmax << "\n";
      for (const auto& l : levels) {
        os << "  k=" << l.k << "  eigenvalue " << l.eigenvalue.str() << "  dimension " << l.dimension
           << "  expected " << l.expected << (l.dimension == l.expected ? "" : "  FAIL") << "\n";
      }
      break;
    case Format::Csv:
      os << "n,k,eigenvalue,dimension\n";
      for (const auto& l : levels) os << c.n << ',' << l.k << ',' << l.eigenvalue.str() << ',' << l.dimension << "\n";
      break;
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& l : levels) {
        arr.push_back({{"k", l.k}, {"eigenvalue", l.eigenvalue.str()},
                       {"dimension", l.dimension}, {"expected", l.expected}});
      }
      nlohmann::json j = {{"schema_version", kSchemaVersion}, {"command", "spectrum"},
                          {"n", c.n}, {"status", ok ? "pass" : "fail"},
                          {"kmax", *c.kmax}, {"levels", arr}};
      os << j.dump(2) << "\n";
    }
  }
  o.report = os.str();
  return o;
}

RunOutcome run_table(const RunConfig& c) {
  const TableDiff t = printed_table_diff(c.n);
  const bool ok = t.computed_antisymmetric && t.computed_jacobi;
  RunOutcome o;
  o.exit_code = ok ? 0 : 1;
  switch (c.format) {
    case Format::Text: o.report = t.text(); break;
    case Format::Csv: {
      std::ostringstream os;
      os << "row,col,computed,printed,status,unit,shift,scalar\n";
      for (const auto& cell : t.cells) {
        os << kTableOperators[cell.row] << ',' << kTableOperators[cell.col] << ','
           << csv_field(cell.computed.str()) << ',' << csv_field(cell.printed.str()) << ','
           << status_name(cell.status) << ',' << (cell.unit ? cell.unit->str() : "") << ','
           << (cell.shift ? cell.shift->str() : "") << ',' << (cell.scalar ? cell.scalar->str() : "")
           << "\n";
      }
      o.report = os.str();
      break;
    }
    case Format::Json: {
      nlohmann::json j = {{"schema_version", kSchemaVersion}, {"command", "table"},
                          {"n", c.n}, {"status", ok ? "pass" : "fail"}, {"table", t.to_json()}};
      o.report = j.dump(2) + "\n";
    }
  }
  return o;
}

}  // namespace

RunOutcome run(const RunConfig& c) {
  switch (c.command) {
    case Command::Verify: {
      const VerificationReport r = run_verification(c.n);
      RunOutcome o;
      o.exit_code = r.passed() ? 0 : 1;
      o.report = c.format == Format::Json  ? r.to_json().dump(2) + "\n"
                 : c.format == Format::Csv ? r.csv()
                                           : r.text();
      return o;
    }
    case Command::Commutator: return run_commutator(c);
    case Command::Kernel: return run_kernel(c);
    case Command::Spectrum: return run_spectrum(c);
    case Command::Table: return run_table(c);
  }
  return {2, ""};
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<RunConfig> config;
  try {
    config = parse_args(argc, argv, out);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (!config) return 0;

  RunOutcome outcome;
  try {
    outcome = run(*config);
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  if (config->out) {
    std::ofstream f(*config->out, std::ios::binary);
    if (!f) {
      err << "error: --out: cannot open " << *config->out << "\n";
      return 2;
    }
    f << outcome.report;
  } else {
    out << outcome.report;
  }
  return outcome.exit_code;
}

}  // namespace weylkit::cli
