#pragma once

#include "weylkit/weyl_operator.hpp"

#include <nlohmann/json_fwd.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace weylkit {

/// The eight operators heading the printed su(1,2) commutator table, in order.
inline constexpr std::array<const char*, 8> kTableOperators = {
    "D_s", "Dt_s", "Delta", "X_s", "E", "O", "Xt_s", "r2"};

/// A printed cell: `coefficient * operator` (operator index into
/// kTableOperators), or the zero operator when `op` is empty.
struct PrintedCell {
  int coefficient = 0;
  std::optional<int> op;
  std::string str() const;
};

/// The table exactly as printed, row-major.
const std::array<std::array<PrintedCell, 8>, 8>& printed_table();

enum class CellStatus {
  ExactMatch,
  UnitScalar,         ///< computed = u · printed, u ∈ {-1, i, -i}
  CentralShift,       ///< computed = printed + c · 1
  UnitScalarCentral,  ///< computed = u · printed + c · 1
  Mismatch,
};

std::string status_name(CellStatus s);

struct CellDiff {
  int row = 0;
  int col = 0;
  WeylOperator computed;
  PrintedCell printed;
  CellStatus status = CellStatus::Mismatch;
  std::optional<GaussianRational> unit;   ///< u when a unit scalar applies
  std::optional<GaussianRational> shift;  ///< c when a central shift applies
  /// For mismatches: the scalar s with computed = s · printed (+ c), if any.
  std::optional<GaussianRational> scalar;
};

enum class Orientation { RowCol, ColRow };

struct TableDiff {
  int n = 1;
  Orientation orientation = Orientation::RowCol;  ///< the better-matching reading
  std::vector<CellDiff> cells;                    ///< 64 cells, row-major
  int matches_row_col = 0;  ///< cells not in Mismatch under [row, col]
  int matches_col_row = 0;  ///< cells not in Mismatch under [col, row]
  /// Printed pairs (a, b) with a < b whose entries are not negatives of each other.
  std::vector<std::pair<int, int>> printed_antisymmetry_violations;
  bool computed_antisymmetric = false;
  /// [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0 for every triple of table operators.
  bool computed_jacobi = false;

  int count(CellStatus s) const;
  nlohmann::json to_json() const;
  /// 8x8 grid in the printed layout (printed entry plus status tag), then one
  /// line per cell with the computed bracket.
  std::string text() const;
};

/// Compares the computed value of one cell against the printed entry.
CellDiff classify_cell(const WeylOperator& computed, const PrintedCell& printed,
                       const std::vector<WeylOperator>& table_ops);

TableDiff printed_table_diff(int n);

}  // namespace weylkit
