#pragma once

#include "weylkit/gaussian_rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace weylkit {

/// Sparse vector over Q(i) keyed by small exponent/index tuples. Both
/// WeylOperator term maps and flattened matrices fit this shape.
using SparseVector = std::map<std::vector<std::uint16_t>, GaussianRational>;

/// Incrementally maintained basis of a subspace of a sparse vector space.
///
/// The rows are kept in reduced echelon form (pivot coefficient 1, pivot keys
/// absent from every other row), together with each row's expression in terms
/// of the inserted basis vectors, so membership tests also produce coordinates.
class LinearSpan {
 public:
  std::size_t dim() const { return combos_.size(); }

  /// Coordinates of v in the inserted basis, or nullopt when v is outside the span.
  std::optional<std::vector<GaussianRational>> coordinates(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return coordinates(v).has_value(); }
  /// Appends v as the next basis vector if it is independent. Returns true if added.
  bool insert(const SparseVector& v);

 private:
  struct Reduction {
    SparseVector remainder;
    std::vector<GaussianRational> coords;
  };
  Reduction reduce(const SparseVector& v) const;

  std::vector<SparseVector> rows_;
  std::vector<std::vector<GaussianRational>> combos_;
  std::map<std::vector<std::uint16_t>, std::size_t> pivot_row_;
};

}  // namespace weylkit
