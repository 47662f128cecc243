#include "weylkit/table_diff.hpp"

#include "weylkit/catalog.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace weylkit {

namespace {

constexpr int kD = 0, kDt = 1, kLap = 2, kX = 3, kE = 4, kO = 5, kXt = 6, kR2 = 7;

constexpr PrintedCell Z{0, std::nullopt};
constexpr PrintedCell cell(int c, int op) { return PrintedCell{c, op}; }

WeylOperator non_constant_part(const WeylOperator& op) {
  return op - WeylOperator::constant(op.n(), op.constant_term());
}

}  // namespace

std::string PrintedCell::str() const {
  if (!op || coefficient == 0) return "0";
  std::string name = kTableOperators[*op];
  if (coefficient == 1) return name;
  if (coefficient == -1) return "-" + name;
  return std::to_string(coefficient) + name;
}

const std::array<std::array<PrintedCell, 8>, 8>& printed_table() {
  // Columns: D_s, Dt_s, Delta, X_s, E, O, Xt_s, r2.
  static const std::array<std::array<PrintedCell, 8>, 8> table = {{
      {Z, cell(1, kLap), Z, cell(-1, kE), cell(1, kD), cell(-3, kDt), cell(-1, kO), cell(-2, kXt)},
      {cell(-1, kLap), Z, Z, cell(1, kO), cell(1, kDt), cell(3, kD), cell(-1, kE), cell(2, kX)},
      {Z, Z, Z, cell(1, kDt), cell(1, kLap), Z, cell(-2, kD), cell(1, kE)},
      {cell(1, kE), cell(-1, kO), cell(-1, kDt), Z, cell(1, kX), cell(-3, kXt), cell(-1, kR2), Z},
      {cell(-1, kD), cell(-1, kDt), cell(-1, kLap), cell(-1, kX), Z, Z, cell(-1, kXt), Z},
      {cell(3, kDt), cell(-3, kD), Z, cell(3, kXt), Z, Z, cell(-3, kX), Z},
      {cell(1, kO), cell(1, kE), cell(2, kD), cell(1, kR2), cell(1, kXt), cell(-3, kX), Z, Z},
      {cell(2, kXt), cell(-2, kX), cell(-1, kE), Z, cell(-2, kR2), Z, Z, Z},
  }};
  return table;
}

std::string status_name(CellStatus s) {
  switch (s) {
    case CellStatus::ExactMatch: return "exact-match";
    case CellStatus::UnitScalar: return "unit-scalar";
    case CellStatus::CentralShift: return "central-shift";
    case CellStatus::UnitScalarCentral: return "unit-scalar+central-shift";
    case CellStatus::Mismatch: return "mismatch";
  }
  return "mismatch";
}

CellDiff classify_cell(const WeylOperator& computed, const PrintedCell& printed,
                       const std::vector<WeylOperator>& table_ops) {
  CellDiff d{0, 0, computed, printed, CellStatus::Mismatch, {}, {}, {}};
  if (!printed.op || printed.coefficient == 0) {
    if (computed.is_zero()) {
      d.status = CellStatus::ExactMatch;
    } else if (computed.is_constant()) {
      d.status = CellStatus::CentralShift;
      d.shift = computed.constant_term();
    }
    return d;
  }
  const WeylOperator p = table_ops.at(*printed.op) * GaussianRational(printed.coefficient);
  for (const GaussianRational& u : {GaussianRational(1), GaussianRational(-1),
                                    GaussianRational::i(), -GaussianRational::i()}) {
    const WeylOperator diff = computed - p * u;
    if (!diff.is_constant()) continue;
    const bool unit = !u.is_one();
    const bool shifted = !diff.is_zero();
    if (unit) d.unit = u;
    if (shifted) d.shift = diff.constant_term();
    d.status = unit ? (shifted ? CellStatus::UnitScalarCentral : CellStatus::UnitScalar)
                    : (shifted ? CellStatus::CentralShift : CellStatus::ExactMatch);
    return d;
  }
  // Not a unit multiple: record the general scalar, if the shapes agree.
  const WeylOperator cp = non_constant_part(computed);
  const WeylOperator pp = non_constant_part(p);
  if (!cp.is_zero() && !pp.is_zero()) {
    if (auto s = proportionality(cp, pp)) {
      d.scalar = *s;
      const GaussianRational c = computed.constant_term() - p.constant_term() * *s;
      if (!c.is_zero()) d.shift = c;
    }
  }
  return d;
}

int TableDiff::count(CellStatus s) const {
  return static_cast<int>(std::count_if(cells.begin(), cells.end(),
                                        [s](const CellDiff& c) { return c.status == s; }));
}

TableDiff printed_table_diff(int n) {
  std::vector<WeylOperator> ops;
  for (const char* name : kTableOperators) ops.push_back(catalog(name, n));
  const auto& table = printed_table();

  std::vector<std::vector<WeylOperator>> computed(8, std::vector<WeylOperator>(8, WeylOperator(n)));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) computed[a][b] = commutator(ops[a], ops[b]);

  TableDiff out;
  out.n = n;
  std::vector<CellDiff> row_col, col_row;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      CellDiff rc = classify_cell(computed[a][b], table[a][b], ops);
      CellDiff cr = classify_cell(computed[b][a], table[a][b], ops);
      rc.row = cr.row = a;
      rc.col = cr.col = b;
      if (rc.status != CellStatus::Mismatch) ++out.matches_row_col;
      if (cr.status != CellStatus::Mismatch) ++out.matches_col_row;
      row_col.push_back(std::move(rc));
      col_row.push_back(std::move(cr));
    }
  }
  if (out.matches_col_row > out.matches_row_col) {
    out.orientation = Orientation::ColRow;
    out.cells = std::move(col_row);
  } else {
    out.orientation = Orientation::RowCol;
    out.cells = std::move(row_col);
  }

  for (int a = 0; a < 8; ++a) {
    for (int b = a; b < 8; ++b) {
      const PrintedCell& p = table[a][b];
      const PrintedCell& q = table[b][a];
      const bool pz = !p.op || p.coefficient == 0;
      const bool qz = !q.op || q.coefficient == 0;
      const bool ok = (pz && qz) || (!pz && !qz && p.op == q.op && p.coefficient == -q.coefficient);
      if (!ok) out.printed_antisymmetry_violations.emplace_back(a, b);
    }
  }
  out.computed_antisymmetric = true;
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      if (!(computed[a][b] + computed[b][a]).is_zero()) out.computed_antisymmetric = false;
  out.computed_jacobi = true;
  for (int a = 0; a < 8 && out.computed_jacobi; ++a)
    for (int b = a + 1; b < 8 && out.computed_jacobi; ++b)
      for (int c = b + 1; c < 8; ++c) {
        const WeylOperator cyc = commutator(ops[a], computed[b][c]) +
                                 commutator(ops[b], computed[c][a]) +
                                 commutator(ops[c], computed[a][b]);
        if (!cyc.is_zero()) {
          out.computed_jacobi = false;
          break;
        }
      }
  return out;
}

nlohmann::json TableDiff::to_json() const {
  nlohmann::json cells_json = nlohmann::json::array();
  for (const auto& c : cells) {
    nlohmann::json j = {{"row", kTableOperators[c.row]},
                        {"col", kTableOperators[c.col]},
                        {"computed", c.computed.str()},
                        {"printed", c.printed.str()},
                        {"status", status_name(c.status)}};
    j["unit"] = c.unit ? nlohmann::json(c.unit->str()) : nlohmann::json(nullptr);
    j["shift"] = c.shift ? nlohmann::json(c.shift->str()) : nlohmann::json(nullptr);
    j["scalar"] = c.scalar ? nlohmann::json(c.scalar->str()) : nlohmann::json(nullptr);
    cells_json.push_back(std::move(j));
  }
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& [a, b] : printed_antisymmetry_violations) {
    violations.push_back({kTableOperators[a], kTableOperators[b]});
  }
  nlohmann::json counts = nlohmann::json::object();
  for (CellStatus s : {CellStatus::ExactMatch, CellStatus::UnitScalar, CellStatus::CentralShift,
                       CellStatus::UnitScalarCentral, CellStatus::Mismatch}) {
    counts[status_name(s)] = count(s);
  }
  return {{"n", n},
          {"orientation", orientation == Orientation::RowCol ? "[row,col]" : "[col,row]"},
          {"matches_row_col", matches_row_col},
          {"matches_col_row", matches_col_row},
          {"status_counts", counts},
          {"printed_antisymmetry_violations", violations},
          {"computed_antisymmetric", computed_antisymmetric},
          {"computed_jacobi", computed_jacobi},
          {"cells", cells_json}};
}

namespace {

// Printed entry plus a short tag: "=" exact, "u" unit, "c" central shift,
// "s" scalar, "!" no relation.
std::string grid_cell(const CellDiff& c) {
  std::string tag;
  switch (c.status) {
    case CellStatus::ExactMatch: tag = "="; break;
    case CellStatus::UnitScalar: tag = "u=" + c.unit->str(); break;
    case CellStatus::CentralShift: tag = "c"; break;
    case CellStatus::UnitScalarCentral: tag = "u=" + c.unit->str() + ",c"; break;
    case CellStatus::Mismatch: tag = c.scalar ? "s=" + c.scalar->str() : "!"; break;
  }
  return c.printed.str() + " [" + tag + "]";
}

}  // namespace

std::string TableDiff::text() const {
  std::ostringstream os;
  os << "[.,.] under reading " << (orientation == Orientation::RowCol ? "[row,col]" : "[col,row]")
     << ", n=" << n << "\n";
  os << "printed entries tagged: [=] exact  [u=..] unit scalar  [c] central shift  "
        "[s=..] other scalar  [!] unrelated\n\n";
  constexpr int width = 16;
  os << std::left << std::setw(8) << "[.,.]";
  for (const char* name : kTableOperators) os << std::setw(width) << name;
  os << "\n";
  for (int a = 0; a < 8; ++a) {
    os << std::setw(8) << kTableOperators[a];
    for (int b = 0; b < 8; ++b) os << std::setw(width) << grid_cell(cells[a * 8 + b]);
    os << "\n";
  }
  os << "\n";
  for (const auto& c : cells) {
    os << "[" << kTableOperators[c.row] << ", " << kTableOperators[c.col] << "] = "
       << c.computed.str() << "    printed: " << c.printed.str() << "    "
       << status_name(c.status);
    if (c.unit) os << " u=" << c.unit->str();
    if (c.scalar) os << " s=" << c.scalar->str();
    if (c.shift) os << " shift=" << c.shift->str();
    os << "\n";
  }
  os << "printed antisymmetry violations:";
  if (printed_antisymmetry_violations.empty()) os << " none";
  for (const auto& [a, b] : printed_antisymmetry_violations) {
    os << " (" << kTableOperators[a] << "," << kTableOperators[b] << ")";
  }
  os << "\ncomputed table antisymmetric: " << (computed_antisymmetric ? "yes" : "no") << "\n";
  os << "computed table Jacobi-consistent: " << (computed_jacobi ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace weylkit
