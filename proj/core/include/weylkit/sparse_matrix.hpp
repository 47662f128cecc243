#pragma once

#include "weylkit/gaussian_rational.hpp"

#include <map>
#include <vector>

namespace weylkit {

struct MatrixEntry {
  std::size_t row;
  std::size_t col;
  GaussianRational value;
};

/// Row-sparse matrix over Q(i). One entry per (row, col); zeros are never stored.
class SparseRationalMatrix {
 public:
  SparseRationalMatrix(std::size_t rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;

  void add(std::size_t r, std::size_t c, const GaussianRational& v);
  GaussianRational at(std::size_t r, std::size_t c) const;
  const std::map<std::size_t, GaussianRational>& row(std::size_t r) const { return data_[r]; }
  std::vector<MatrixEntry> entries() const;

  /// [this; other] (same column count).
  SparseRationalMatrix stacked(const SparseRationalMatrix& other) const;

  friend bool operator==(const SparseRationalMatrix& a, const SparseRationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::map<std::size_t, GaussianRational>> data_;
};

/// Exact rank. Rows are scaled to Gaussian integers and eliminated
/// fraction-free (r <- p*r - a*pivot_row, then divided by the integer
/// content), block by block over the connected components of the
/// row/column incidence graph. Pivots are chosen by a deterministic
/// Markowitz rule, so repeated runs do identical work.
std::size_t rank(const SparseRationalMatrix& m);

/// Exact nullspace basis (dim = cols - rank), from Bareiss fraction-free
/// elimination over Z[i] followed by back substitution.
std::vector<std::vector<GaussianRational>> nullspace(const SparseRationalMatrix& m);

}  // namespace weylkit
