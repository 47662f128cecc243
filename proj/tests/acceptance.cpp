// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic throughout.
//
// Exit status is 0 when every criterion passes or fails only where a red is
// recorded in kKnownRed; with --strict any FAIL gives a nonzero exit.

#include "weylkit/catalog.hpp"
#include "weylkit/kernel.hpp"
#include "weylkit/lie.hpp"
#include "weylkit/spinor_element.hpp"
#include "weylkit/table_diff.hpp"
#include "weylkit_cli/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace weylkit;
using GQ = GaussianRational;

namespace {

// Criterion 4 asks every printed table cell to agree up to a unit or central
// shift; seven cells differ by a factor 2 or 4 or are printed as zero.
const std::set<int> kKnownRed = {4};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Line {
  int id;
  bool pass;
  std::string text;
  std::vector<std::string> sub;
};

std::string fmt_s(double s) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(2) << s << " s";
  return os.str();
}

Line criterion1() {
  const auto t0 = Clock::now();
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    const WeylOperator en = catalog("E+n", n);
    for (const auto& [d, x] : {std::pair{catalog("D_s", n), catalog("X_s", n)},
                               std::pair{catalog("Dt_s", n), catalog("Xt_s", n)}}) {
      ok = ok && commutator(en, x) == x;
      ok = ok && commutator(en, d) == -d;
      ok = ok && commutator(d, x) == en * (-GQ::i());
    }
  }
  const double s = seconds_since(t0);
  return {1, ok && s < 5.0, "sl(2) triples (plain and twisted), n=1..3, " + fmt_s(s) + " (limit 5 s)", {}};
}

Line criterion2() {
  bool ok = true;
  std::string dims;
  for (int n = 1; n <= 3; ++n) {
    const std::size_t want = static_cast<std::size_t>(n * (2 * n + 1));
    for (const auto& [gens, inv] : {std::pair{sp_realization_first(n), catalog("D_s", n)},
                                    std::pair{sp_realization_second(n), catalog("Dt_s", n)}}) {
      const ClosureResult r = span_closure(gens, false);
      ok = ok && r.closed && r.span.basis.size() == want && jacobi_check(r.constants).empty();
      for (const auto& b : r.span.basis) ok = ok && commutator(b, inv).is_zero();
      dims += (dims.empty() ? "" : "/") + std::to_string(r.span.basis.size());
    }
  }
  return {2, ok, "sp(2n,R) realizations close (dims " + dims + "), Jacobi exhaustive, invariants kept", {}};
}

Line criterion3() {
  bool ok = true;
  std::string dims;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& g : unitary_family(n)) {
      ok = ok && commutator(g, catalog("D_s", n)).is_zero() && commutator(g, catalog("Dt_s", n)).is_zero();
    }
    const ClosureResult r = span_closure(unitary_family(n), false);
    ok = ok && r.closed && r.span.basis.size() == static_cast<std::size_t>(n * n);
    dims += (dims.empty() ? "" : "/") + std::to_string(r.span.basis.size());
  }
  return {3, ok, "u(n) generators commute with D_s and Dt_s, closure dims " + dims, {}};
}

Line criterion4() {
  Line l{4, true, "su(1,2) identification and table diff", {}};
  bool span_ok = true;
  for (int n = 1; n <= 3; ++n) {
    const ClosureResult c = span_closure(su12_generators(n), true);
    const StructureConstants q = quotient_center(c);
    bool ok = c.closed && q.dim() == 8 && jacobi_check(q).empty() && killing_form(q).rank() == 8;
    if (ok) {
      const RescaleResult rs = real_form_rescale(q);
      ok = rs.success && killing_signature(rescale(q, rs.scalars)) == Signature{4, 4, 0};
    }
    span_ok = span_ok && ok;
  }
  l.sub.push_back(std::string("4a ") + (span_ok ? "PASS" : "FAIL") +
                  "  dim 8 mod center, Killing nondegenerate, unit rescale gives signature (4,4), n=1..3");

  bool cells_ok = true, flags_ok = true, consistent = true;
  std::vector<std::string> bad;
  for (int n = 1; n <= 2; ++n) {
    const TableDiff t = printed_table_diff(n);
    cells_ok = cells_ok && t.count(CellStatus::Mismatch) == 0;
    flags_ok = flags_ok && !t.printed_antisymmetry_violations.empty();
    consistent = consistent && t.computed_antisymmetric && t.computed_jacobi;
    if (n == 1) {
      for (const auto& c : t.cells) {
        if (c.status != CellStatus::Mismatch) continue;
        std::string s = std::string("[") + kTableOperators[c.row] + "," + kTableOperators[c.col] + "]";
        if (c.scalar) s += " x" + c.scalar->str();
        bad.push_back(s);
      }
    }
  }
  std::string list;
  for (const auto& b : bad) list += (list.empty() ? "" : " ") + b;
  l.sub.push_back(std::string("4b ") + (cells_ok ? "PASS" : "FAIL") + "  every printed cell is exact/unit/central; " +
                  std::to_string(bad.size()) + " mismatches: " + list);
  l.sub.push_back(std::string("4c ") + (flags_ok ? "PASS" : "FAIL") + "  printed antisymmetry violations flagged");
  l.sub.push_back(std::string("4d ") + (consistent ? "PASS" : "FAIL") +
                  "  computed table antisymmetric and Jacobi-consistent");
  l.pass = span_ok && cells_ok && flags_ok && consistent;
  return l;
}

Line criterion5() {
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& triple : {std::vector{catalog("D_s", n), catalog("Dt_s", n), catalog("Delta", n)},
                               std::vector{catalog("X_s", n), catalog("Xt_s", n), catalog("r2", n)}}) {
      const StructureConstants sc = structure_constants(triple);
      ok = ok && is_heisenberg(sc);
      for (int k = 0; k < 2; ++k) ok = ok && commutator(triple[2], triple[static_cast<std::size_t>(k)]).is_zero();
    }
  }
  return {5, ok, "span{D_s, Dt_s, Delta} and span{X_s, Xt_s, r2} are Heisenberg, n=1..3", {}};
}

Line criterion6() {
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    const GQ half = GQ::ratio(1, 2), I = GQ::i();
    WeylOperator plus(n), minus(n);
    for (int j = 1; j <= n; ++j) {
      plus -= catalog("F", n, IndexPair{j, j}) * catalog("dz", n, IndexPair{j, j});
      minus += catalog("Fdag", n, IndexPair{j, j}) * catalog("dzbar", n, IndexPair{j, j});
    }
    const WeylOperator d = catalog("D_s", n), dt = catalog("Dt_s", n);
    ok = ok && (d + dt * I) * half == plus && (d - dt * I) * half == minus;
  }
  return {6, ok, "1/2 (D_s +- i Dt_s) factor through F_j dz_j and Fdag_j dzbar_j, n=1..3", {}};
}

Line criterion7() {
  bool ok = true;
  for (int n = 1; n <= 3; ++n) {
    for (const auto& l : hermite_eigenspaces(n, 6)) {
      ok = ok && l.eigenvalue == -(GQ(l.k) + GQ::ratio(n, 2)) &&
           l.dimension == binomial(n + l.k - 1, l.k).get_ui();
    }
  }
  const auto ex = hermite_eigenspaces(2, 3).back();
  return {7, ok && ex.dimension == 4,
          "Hermite eigenvalue -(k+n/2), dimension C(n+k-1,k), n<=3, k<=6; (2,3) -> " +
              std::to_string(ex.dimension),
          {}};
}

Line criterion8() {
  bool ok = true;
  std::size_t probes = 0;
  for (int n = 1; n <= 2; ++n) {
    const WeylOperator d = catalog("D_s", n), dt = catalog("Dt_s", n);
    for (int deg = 0; deg <= 5; ++deg) {
      for (const auto& alpha : monomials_of_degree(n, deg)) {
        const SpinorElement h = holomorphic_element(alpha, n);
        ok = ok && apply(d, h).is_zero() && apply(dt, h).is_zero();
        ++probes;
      }
    }
    // zbar_1 = x_1 - i y_1 times the Gaussian
    SpinorElement zbar(n, SpinorModel::GaussianWeighted);
    SpinorElement::Key kx(3 * static_cast<std::size_t>(n), 0), ky = kx;
    kx[0] = 1;
    ky[static_cast<std::size_t>(n)] = 1;
    zbar.add_term(kx, 1);
    zbar.add_term(ky, -GQ::i());
    ok = ok && !apply(d, zbar).is_zero();
  }
  std::size_t runs = 0;
  for (int n = 1; n <= 2; ++n)
    for (int k = 0; k <= 4; ++k)
      for (int m = 0; m <= 4; ++m) {
        const KernelReport r = monogenic_dims(n, k, m, SpinorModel::GaussianWeighted);
        ok = ok && r.holomorphic_lower_bound == binomial(n + k - 1, k).get_ui() &&
             r.dim_joint >= r.holomorphic_lower_bound;
        ++runs;
      }
  return {8, ok,
          std::to_string(probes) + " holomorphic monomials annihilated, zbar not, joint kernel >= C(n+k-1,k) in " +
              std::to_string(runs) + " truncations",
          {}};
}

Line criterion9() {
  const PhiLemmaReport r = phi_lemma_check(2);
  return {9, r.passed(),
          "phi-level checks at n=2: " + std::to_string(r.algebra_elements) + " algebra elements, " +
              std::to_string(r.bracket_pairs) + " bracket pairs, " + std::to_string(r.group_elements) +
              " group elements",
          {}};
}

Line criterion10() {
  Line l{10, true, "performance", {}};
  auto t0 = Clock::now();
  const bool verify_ok = cli::run_verification(3).passed();
  const double tv = seconds_since(t0);
  l.sub.push_back(std::string("10a ") + (verify_ok && tv < 180 ? "PASS" : "FAIL") + "  verify --n 3: " + fmt_s(tv) +
                  " (limit 180 s)");
  bool kernels_ok = true;
  for (auto model : {SpinorModel::Plain, SpinorModel::GaussianWeighted}) {
    t0 = Clock::now();
    const KernelReport r = monogenic_dims(2, 6, 8, model);
    const double tk = seconds_since(t0);
    const bool ok = tk < 300 && r.dim_joint >= r.holomorphic_lower_bound;
    kernels_ok = kernels_ok && ok;
    l.sub.push_back(std::string("10") + (model == SpinorModel::Plain ? "b" : "c") + " " + (ok ? "PASS" : "FAIL") +
                    "  kernel (2,6,8) " + model_name(model) + ": joint " + std::to_string(r.dim_joint) + ", " +
                    fmt_s(tk) + " (limit 300 s)");
  }
  l.pass = verify_ok && tv < 180 && kernels_ok;
  return l;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance criteria 1-10"};
  bool strict = false;
  app.add_flag("--strict", strict, "nonzero exit on any FAIL, including known reds");
  CLI11_PARSE(app, argc, argv);

  std::vector<Line> lines;
  for (auto* f : {criterion1, criterion2, criterion3, criterion4, criterion5, criterion6, criterion7, criterion8,
                  criterion9, criterion10}) {
    try {
      lines.push_back(f());
    } catch (const std::exception& e) {
      lines.push_back({static_cast<int>(lines.size()) + 1, false, std::string("exception: ") + e.what(), {}});
    }
    const Line& l = lines.back();
    std::cout << "criterion " << std::setw(2) << l.id << "  " << (l.pass ? "PASS" : "FAIL") << "  " << l.text
              << "\n";
    for (const auto& s : l.sub) std::cout << "    " << s << "\n";
    std::cout.flush();
  }

  int passed = 0;
  bool unexpected = false;
  std::string reds;
  for (const auto& l : lines) {
    if (l.pass) {
      ++passed;
    } else {
      reds += (reds.empty() ? "" : ",") + std::to_string(l.id);
      if (!kKnownRed.count(l.id)) unexpected = true;
    }
  }
  std::cout << "summary: " << passed << "/10 pass";
  if (!reds.empty()) std::cout << "; failing: " << reds << (unexpected ? " (unexpected)" : " (known red)");
  std::cout << "\n";
  if (strict) return passed == 10 ? 0 : 1;
  return unexpected ? 1 : 0;
}
