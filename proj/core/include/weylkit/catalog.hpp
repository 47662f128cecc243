#pragma once

#include "weylkit/weyl_operator.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weylkit {

/// Index pair for the indexed families (1-based).
struct IndexPair {
  int j;
  int k;
};

class UnknownOperator : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Named operators of the hermitian symplectic Clifford setting.
///
/// Unindexed: D_s X_s Dt_s Xt_s E E+n Delta r2 O H D_z D_zdag Rot one
/// Single index (j):  F Fdag dz dzbar x y q dx dy dq
/// Pair index (j,k):
///   X, Xt           any 1 <= j, k <= n
///   Y, Z, Yt, Zt    j <= k (j == k selects the diagonal formula)
///   A, C            j < k
///   B               j == k
///
/// Aliases: "~D_s" = "Dt_s", "~X_s" = "Xt_s", "Δ" = "Delta", "r^2" = "r2",
/// "E_n" = "E+n", "D_z^dag" = "D_zdag".
WeylOperator catalog(std::string_view name, int n, std::optional<IndexPair> indices = std::nullopt);

/// True when `name` (or an alias) is in the catalog.
bool catalog_contains(std::string_view name);

/// How many indices the family takes: 0, 1 or 2.
int catalog_arity(std::string_view name);

/// Canonical spelling of a name or alias.
std::string canonical_name(std::string_view name);

/// Every catalog entry for dimension n, with all valid index choices, as
/// (label, operator) pairs. Labels look like "D_s", "F[2]", "Y[1,2]".
std::vector<std::pair<std::string, WeylOperator>> catalog_instances(int n);

// Generator families used by the closure checks.
std::vector<WeylOperator> sp_realization_first(int n);   ///< X_jk (j<=k), Y_jk, Z_jk
std::vector<WeylOperator> sp_realization_second(int n);  ///< tilded variants
std::vector<WeylOperator> unitary_family(int n);         ///< A_jk, B_jj, C_jk
/// D_s, Dt_s, Delta, X_s, E+n, O, Xt_s, r2 in that order.
std::vector<WeylOperator> su12_generators(int n);
std::vector<std::string> su12_generator_names();

}  // namespace weylkit
