#include "weylkit/catalog.hpp"
#include "weylkit/table_diff.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <set>

using namespace weylkit;
using GQ = GaussianRational;

namespace {

int idx(const char* name) {
  const auto it = std::find_if(kTableOperators.begin(), kTableOperators.end(),
                               [&](const char* s) { return std::string(s) == name; });
  return static_cast<int>(it - kTableOperators.begin());
}

const CellDiff& cell(const TableDiff& t, const char* row, const char* col) {
  return t.cells[static_cast<std::size_t>(idx(row) * 8 + idx(col))];
}

}  // namespace

TEST(TableDiff, ComputedCellsAreBrackets) {
  for (int n = 1; n <= 2; ++n) {
    const TableDiff t = printed_table_diff(n);
    ASSERT_EQ(t.cells.size(), 64u);
    for (const auto& c : t.cells) {
      const WeylOperator a = catalog(kTableOperators[c.row], n), b = catalog(kTableOperators[c.col], n);
      EXPECT_EQ(c.computed, commutator(a, b));
    }
  }
}

TEST(TableDiff, KnownCells) {
  const TableDiff t = printed_table_diff(1);
  EXPECT_EQ(cell(t, "E", "O").status, CellStatus::ExactMatch);
  EXPECT_EQ(cell(t, "D_s", "Dt_s").status, CellStatus::UnitScalar);
  EXPECT_EQ(cell(t, "D_s", "Dt_s").unit, -GQ::i());
  EXPECT_EQ(cell(t, "E", "X_s").status, CellStatus::UnitScalar);
  EXPECT_EQ(cell(t, "E", "X_s").unit, GQ(-1));
  // E scales Delta by -2, which no unit or central shift can absorb.
  EXPECT_EQ(cell(t, "E", "Delta").status, CellStatus::Mismatch);
  EXPECT_EQ(cell(t, "E", "Delta").computed, catalog("Delta", 1) * GQ(-2));
}

TEST(TableDiff, StatusCounts) {
  for (int n = 1; n <= 2; ++n) {
    const TableDiff t = printed_table_diff(n);
    EXPECT_EQ(t.orientation, Orientation::RowCol);
    EXPECT_EQ(t.count(CellStatus::ExactMatch), 37);
    EXPECT_EQ(t.count(CellStatus::UnitScalar), 16);
    EXPECT_EQ(t.count(CellStatus::CentralShift), 0);
    EXPECT_EQ(t.count(CellStatus::UnitScalarCentral), 4);
    EXPECT_EQ(t.count(CellStatus::Mismatch), 7);
    EXPECT_EQ(t.matches_row_col, 57);
    EXPECT_GE(t.matches_row_col, t.matches_col_row);
  }
}

TEST(TableDiff, PrintedAntisymmetryViolations) {
  const TableDiff t = printed_table_diff(1);
  const std::set<std::pair<int, int>> got(t.printed_antisymmetry_violations.begin(),
                                          t.printed_antisymmetry_violations.end());
  const std::set<std::pair<int, int>> want{{idx("E"), idx("r2")}, {idx("O"), idx("Xt_s")}};
  EXPECT_EQ(got, want);
}

TEST(TableDiff, ComputedTableIsConsistent) {
  for (int n = 1; n <= 2; ++n) {
    const TableDiff t = printed_table_diff(n);
    EXPECT_TRUE(t.computed_antisymmetric);
    EXPECT_TRUE(t.computed_jacobi);
  }
}

TEST(TableDiff, ClassifyCellDirectly) {
  std::vector<WeylOperator> ops;
  for (const char* s : kTableOperators) ops.push_back(catalog(s, 1));
  PrintedCell p;
  p.coefficient = 1;
  p.op = idx("X_s");
  EXPECT_EQ(classify_cell(ops[static_cast<std::size_t>(idx("X_s"))], p, ops).status, CellStatus::ExactMatch);
  EXPECT_EQ(classify_cell(ops[static_cast<std::size_t>(idx("X_s"))] * GQ::i(), p, ops).status, CellStatus::UnitScalar);
  EXPECT_EQ(classify_cell(ops[static_cast<std::size_t>(idx("X_s"))] + WeylOperator::constant(1, 3), p, ops).status,
            CellStatus::CentralShift);
  EXPECT_EQ(classify_cell(ops[static_cast<std::size_t>(idx("X_s"))] * GQ(2), p, ops).status, CellStatus::Mismatch);
  PrintedCell zero;
  EXPECT_EQ(classify_cell(WeylOperator(1), zero, ops).status, CellStatus::ExactMatch);
}

TEST(TableDiff, JsonAndTextRender) {
  const TableDiff t = printed_table_diff(1);
  const nlohmann::json j = t.to_json();
  EXPECT_EQ(j.at("cells").size(), 64u);
  EXPECT_TRUE(j.at("computed_jacobi").get<bool>());
  const std::string text = t.text();
  EXPECT_NE(text.find("Dt_s"), std::string::npos);
  EXPECT_NE(text.find("[!]"), std::string::npos);
}
