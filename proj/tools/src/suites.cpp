#include "weylkit_cli/cli.hpp"

#include "weylkit/catalog.hpp"
#include "weylkit/kernel.hpp"
#include "weylkit/lie.hpp"
#include "weylkit/table_diff.hpp"

#include <sstream>

namespace weylkit::cli {

void SuiteResult::check(bool ok, const std::string& label, const std::string& witness_text) {
  ++checks;
  details.push_back(label + (ok ? ": ok" : ": FAIL"));
  if (!ok) {
    passed = false;
    if (!witness && !witness_text.empty()) witness = witness_text;
  }
}

namespace {

using Op = WeylOperator;

const GaussianRational I = GaussianRational::i();

SuiteResult named(std::string name) {
  SuiteResult r;
  r.name = std::move(name);
  return r;
}

void identity_check(SuiteResult& r, const std::string& label, const Op& lhs, const Op& rhs) {
  const Op diff = lhs - rhs;
  r.check(diff.is_zero(), label, diff.str());
}

SuiteResult sl2_relations(int n) {
  SuiteResult r = named("sl2-relations");
  const Op en = catalog("E+n", n);
  struct Triple {
    const char *d, *x;
  };
  for (const Triple t : {Triple{"D_s", "X_s"}, Triple{"Dt_s", "Xt_s"}}) {
    const Op d = catalog(t.d, n), x = catalog(t.x, n);
    const std::string D = t.d, X = t.x;
    identity_check(r, "[E+n, " + X + "] = " + X, commutator(en, x), x);
    identity_check(r, "[E+n, " + D + "] = -" + D, commutator(en, d), -d);
    identity_check(r, "[" + D + ", " + X + "] = -i(E+n)", commutator(d, x), en * (-I));
  }
  return r;
}

void closure_family(SuiteResult& r, const std::string& label, const std::vector<Op>& gens,
                    const Op& invariant, const std::string& invariant_name, std::size_t want) {
  const ClosureResult c = span_closure(gens, false);
  r.check(c.closed, label + " closes");
  r.check(c.span.basis.size() == want,
          label + " dimension " + std::to_string(c.span.basis.size()) + " (expected " +
              std::to_string(want) + ")");
  if (!c.closed) return;
  const auto violations = jacobi_check(c.constants);
  r.check(violations.empty(), label + " Jacobi over all triples");
  r.check(c.constants.is_antisymmetric(), label + " antisymmetric constants");
  for (std::size_t a = 0; a < c.span.basis.size(); ++a) {
    const Op br = commutator(c.span.basis[a], invariant);
    if (!br.is_zero()) {
      r.check(false, label + " element " + std::to_string(a) + " commutes with " + invariant_name,
              br.str());
      return;
    }
  }
  r.check(true, invariant_name + " invariant under " + label);
  r.data[label] = c.span.basis.size();
}

SuiteResult sp_closures(int n) {
  SuiteResult r = named("sp-closures");
  const std::size_t want = static_cast<std::size_t>(n * (2 * n + 1));
  closure_family(r, "first realization", sp_realization_first(n), catalog("D_s", n), "D_s", want);
  closure_family(r, "second realization", sp_realization_second(n), catalog("Dt_s", n), "Dt_s",
                 want);
  return r;
}

SuiteResult un_invariance(int n) {
  SuiteResult r = named("un-invariance");
  const Op d = catalog("D_s", n), dt = catalog("Dt_s", n);
  const auto family = unitary_family(n);
  r.check(family.size() == static_cast<std::size_t>(n * n),
          std::to_string(family.size()) + " generators");
  for (std::size_t g = 0; g < family.size(); ++g) {
    const Op a = commutator(family[g], d), b = commutator(family[g], dt);
    r.check(a.is_zero(), "[g" + std::to_string(g) + ", D_s] = 0", a.str());
    r.check(b.is_zero(), "[g" + std::to_string(g) + ", Dt_s] = 0", b.str());
  }
  const ClosureResult c = span_closure(family, false);
  r.check(c.closed && c.span.basis.size() == static_cast<std::size_t>(n * n),
          "u(n) family closes at dimension " + std::to_string(c.span.basis.size()));
  if (c.closed) r.check(jacobi_check(c.constants).empty(), "u(n) Jacobi");
  r.data["dimension"] = c.span.basis.size();
  return r;
}

SuiteResult su12_closure(int n) {
  SuiteResult r = named("su12-closure-and-signature");
  const ClosureResult c = span_closure(su12_generators(n), true);
  r.check(c.closed, "span closes");
  if (!c.closed) return r;
  const StructureConstants q = quotient_center(c);
  r.check(q.dim() == 8, "dimension modulo center " + std::to_string(q.dim()));
  r.check(jacobi_check(q).empty(), "Jacobi over all triples");
  r.check(killing_form(q).rank() == q.dim(), "Killing form nondegenerate");
  const RescaleResult rs = real_form_rescale(q);
  r.check(rs.success, "unit rescaling to real structure constants");
  nlohmann::json scalars = nlohmann::json::array();
  for (const auto& s : rs.scalars) scalars.push_back(s.str());
  r.data["dimension"] = q.dim();
  r.data["central_adjoined"] = c.span.central_index.has_value();
  r.data["rescale"] = scalars;
  if (rs.success) {
    const Signature sig = killing_signature(rescale(q, rs.scalars));
    r.check(sig == Signature{4, 4, 0}, "Killing signature (" + std::to_string(sig.positives) + "," +
                                           std::to_string(sig.negatives) + "," +
                                           std::to_string(sig.zeros) + ")");
    r.data["signature"] = {sig.positives, sig.negatives, sig.zeros};
  }
  return r;
}

SuiteResult heisenberg_triples(int n) {
  SuiteResult r = named("heisenberg-triples");
  for (const auto& names : {std::vector<std::string>{"D_s", "Dt_s", "Delta"},
                            std::vector<std::string>{"X_s", "Xt_s", "r2"}}) {
    std::vector<Op> ops;
    for (const auto& s : names) ops.push_back(catalog(s, n));
    const std::string label = "span{" + names[0] + ", " + names[1] + ", " + names[2] + "}";
    try {
      const StructureConstants sc = structure_constants(ops);
      r.check(is_heisenberg(sc), label + " is Heisenberg");
      bool central = true;
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t k = 0; k < 3; ++k)
          if (!sc(2, a, k).is_zero()) central = false;
      r.check(central, names[2] + " central");
    } catch (const std::runtime_error& e) {
      r.check(false, label + " closes", e.what());
    }
  }
  return r;
}

SuiteResult dolbeault_identity(int n) {
  SuiteResult r = named("dolbeault-identity");
  const Op d = catalog("D_s", n), dt = catalog("Dt_s", n);
  const GaussianRational half = GaussianRational::ratio(1, 2);
  Op plus(n), minus(n);
  for (int j = 1; j <= n; ++j) {
    plus -= catalog("F", n, IndexPair{j, j}) * catalog("dz", n, IndexPair{j, j});
    minus += catalog("Fdag", n, IndexPair{j, j}) * catalog("dzbar", n, IndexPair{j, j});
  }
  identity_check(r, "1/2 (D_s + i Dt_s) = -sum F_j dz_j", (d + dt * I) * half, plus);
  identity_check(r, "1/2 (D_s - i Dt_s) = sum Fdag_j dzbar_j", (d - dt * I) * half, minus);
  identity_check(r, "D_z matches its factored form", catalog("D_z", n), plus);
  identity_check(r, "D_zdag matches its factored form", catalog("D_zdag", n), minus);
  return r;
}

SuiteResult table_diff(int n) {
  SuiteResult r = named("table-diff");
  const TableDiff t = printed_table_diff(n);
  r.check(t.cells.size() == 64, "64 cells classified");
  r.check(t.computed_antisymmetric, "computed table antisymmetric");
  r.check(t.computed_jacobi, "computed table Jacobi-consistent");
  // Disagreements with the printed page are findings, not failures.
  const int agree = 64 - t.count(CellStatus::Mismatch);
  r.details.push_back("finding: " + std::to_string(agree) +
                      " of 64 printed cells agree up to unit scalar and central shift");
  for (const auto& c : t.cells) {
    if (c.status != CellStatus::Mismatch) continue;
    std::string line = "finding: [" + std::string(kTableOperators[c.row]) + ", " +
                       kTableOperators[c.col] + "] = " + c.computed.str() +
                       ", printed " + c.printed.str();
    if (c.scalar) line += " (scalar " + c.scalar->str() + ")";
    r.details.push_back(line);
  }
  for (const auto& [a, b] : t.printed_antisymmetry_violations) {
    r.details.push_back("finding: printed entries (" + std::string(kTableOperators[a]) + "," +
                        kTableOperators[b] + ") are not antisymmetric");
  }
  nlohmann::json j = t.to_json();
  r.data["orientation"] = j["orientation"];
  r.data["status_counts"] = j["status_counts"];
  r.data["printed_antisymmetry_violations"] = j["printed_antisymmetry_violations"];
  return r;
}

SuiteResult phi_lemma(int n) {
  SuiteResult r = named("phi-lemma");
  const PhiLemmaReport p = phi_lemma_check(n);
  r.checks = 2 * p.algebra_elements + p.bracket_pairs + 2 * p.group_elements;
  r.passed = p.passed();
  r.details.push_back(std::to_string(p.algebra_elements) +
                      " u(n) basis elements in sp(2n,R) commuting with J");
  r.details.push_back(std::to_string(p.bracket_pairs) + " bracket pairs preserved");
  r.details.push_back(std::to_string(p.group_elements) + " group samples symplectic, commuting with J");
  for (const auto& f : p.failures) r.details.push_back(f + ": FAIL");
  if (!p.failures.empty()) r.witness = p.failures.front();
  return r;
}

SuiteResult oscillator(int n) {
  SuiteResult r = named("oscillator-split");
  const OscillatorSplit s = oscillator_split(n);
  r.check(s.holds, "O = sum i(x_j dy_j - y_j dx_j) + 2H", s.difference.str());
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "sl2-relations",  "sp-closures", "un-invariance", "su12-closure-and-signature",
      "heisenberg-triples", "dolbeault-identity", "table-diff", "phi-lemma", "oscillator-split"};
  return names;
}

SuiteResult run_suite(std::string_view name, int n) {
  if (name == "sl2-relations") return sl2_relations(n);
  if (name == "sp-closures") return sp_closures(n);
  if (name == "un-invariance") return un_invariance(n);
  if (name == "su12-closure-and-signature") return su12_closure(n);
  if (name == "heisenberg-triples") return heisenberg_triples(n);
  if (name == "dolbeault-identity") return dolbeault_identity(n);
  if (name == "table-diff") return table_diff(n);
  if (name == "phi-lemma") return phi_lemma(n);
  if (name == "oscillator-split") return oscillator(n);
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

VerificationReport run_verification(int n) {
  VerificationReport report;
  report.n = n;
  for (const auto& name : suite_names()) report.suites.push_back(run_suite(name, n));
  return report;
}

bool VerificationReport::passed() const {
  for (const auto& s : suites)
    if (!s.passed) return false;
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : suites) {
    arr.push_back({{"name", s.name},
                   {"status", s.passed ? "pass" : "fail"},
                   {"checks", s.checks},
                   {"details", s.details},
                   {"witness", s.witness ? nlohmann::json(*s.witness) : nlohmann::json(nullptr)},
                   {"data", s.data}});
  }
  return {{"schema_version", kSchemaVersion},
          {"command", "verify"},
          {"n", n},
          {"status", passed() ? "pass" : "fail"},
          {"suites", arr}};
}

std::string VerificationReport::text() const {
  std::ostringstream os;
  os << "verify n=" << n << "\n";
  for (const auto& s : suites) {
    os << "  " << s.name << std::string(28 - std::min<std::size_t>(27, s.name.size()), ' ')
       << (s.passed ? "pass" : "FAIL") << "  (" << s.checks << " checks)\n";
    for (const auto& d : s.details) {
      if (!s.passed || d.rfind("finding:", 0) == 0) os << "      " << d << "\n";
    }
    if (s.witness) os << "      witness: " << *s.witness << "\n";
  }
  os << "overall: " << (passed() ? "pass" : "FAIL") << "\n";
  return os.str();
}

std::string VerificationReport::csv() const {
  std::ostringstream os;
  os << "suite,status,checks\n";
  for (const auto& s : suites) os << s.name << ',' << (s.passed ? "pass" : "fail") << ',' << s.checks << "\n";
  return os.str();
}

}  // namespace weylkit::cli
