#pragma once

#include "weylkit/gaussian_rational.hpp"
#include "weylkit/linear_span.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace weylkit {

/// Dense matrix over Q(i).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows);

  static ComplexMatrix identity(std::size_t n);
  /// [[a, b], [c, d]] from four equally sized square blocks.
  static ComplexMatrix block(const ComplexMatrix& a, const ComplexMatrix& b,
                             const ComplexMatrix& c, const ComplexMatrix& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  GaussianRational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussianRational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  ComplexMatrix transpose() const;
  ComplexMatrix adjoint() const;  ///< conjugate transpose
  GaussianRational trace() const;
  bool is_zero() const;
  bool is_real() const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(const GaussianRational& s);
  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, const GaussianRational& s) { return a *= s; }
  friend ComplexMatrix operator*(const GaussianRational& s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
  ComplexMatrix operator-() const { return *this * GaussianRational(-1); }
  friend bool operator==(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Exact rank by Gaussian elimination over Q(i).
  std::size_t rank() const;
  /// Flattened sparse form keyed by (row, col).
  SparseVector to_sparse() const;
  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussianRational> data_;
};

ComplexMatrix matrix_commutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ω₀ = [[0, I], [-I, 0]] of size 2n.
ComplexMatrix symplectic_form(std::size_t n);
/// 𝕁 = [[0, -I], [I, 0]] of size 2n.
ComplexMatrix complex_structure(std::size_t n);

/// U = A + iB ↦ M = [[A, B], [-B, A]]. A and B must be real n×n.
ComplexMatrix phi_map(const ComplexMatrix& a, const ComplexMatrix& b);
/// Splits a complex n×n matrix into its real and imaginary parts and applies phi_map.
ComplexMatrix phi_map(const ComplexMatrix& u);

enum class MatrixPredicate { SymplecticGroup, SymplecticAlgebra, CommutesWithJ, Unitary, Su12 };

/// Exact predicate evaluation. Throws std::invalid_argument on shapes that do
/// not fit the predicate (odd size for the symplectic ones, non-3x3 for su12).
bool membership(const ComplexMatrix& m, MatrixPredicate predicate);

}  // namespace weylkit
