#include "weylkit/complex_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace weylkit {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<GaussianRational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ComplexMatrix ComplexMatrix::block(const ComplexMatrix& a, const ComplexMatrix& b,
                                   const ComplexMatrix& c, const ComplexMatrix& d) {
  const std::size_t n = a.rows();
  for (const ComplexMatrix* m : {&a, &b, &c, &d}) {
    if (m->rows() != n || m->cols() != n) throw std::invalid_argument("block size mismatch");
  }
  ComplexMatrix out(2 * n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t col = 0; col < n; ++col) {
      out(r, col) = a(r, col);
      out(r, n + col) = b(r, col);
      out(n + r, col) = c(r, col);
      out(n + r, n + col) = d(r, col);
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c).conj();
  return t;
}

GaussianRational ComplexMatrix::trace() const {
  GaussianRational t;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

bool ComplexMatrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

bool ComplexMatrix::is_real() const {
  for (const auto& v : data_)
    if (!v.is_real()) return false;
  return true;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix size mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(const GaussianRational& s) {
  for (auto& v : data_) v *= s;
  return *this;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix size mismatch");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k).is_zero()) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (!b(k, c).is_zero()) out(r, c) += a(r, k) * b(k, c);
      }
    }
  }
  return out;
}

std::size_t ComplexMatrix::rank() const {
  ComplexMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t p = rank;
    while (p < rows_ && m(p, c).is_zero()) ++p;
    if (p == rows_) continue;
    if (p != rank)
      for (std::size_t k = 0; k < cols_; ++k) std::swap(m(p, k), m(rank, k));
    const GaussianRational inv = m(rank, c).inv();
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m(r, c).is_zero()) continue;
      const GaussianRational f = m(r, c) * inv;
      for (std::size_t k = c; k < cols_; ++k) m(r, k) -= f * m(rank, k);
    }
    ++rank;
  }
  return rank;
}

SparseVector ComplexMatrix::to_sparse() const {
  SparseVector v;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero())
        v.emplace(std::vector<std::uint16_t>{static_cast<std::uint16_t>(r),
                                             static_cast<std::uint16_t>(c)},
                  (*this)(r, c));
  return v;
}

std::string ComplexMatrix::str() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    os << "[";
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << "]\n";
  }
  return os.str();
}

ComplexMatrix matrix_commutator(const ComplexMatrix& a, const ComplexMatrix& b) {
  return a * b - b * a;
}

ComplexMatrix symplectic_form(std::size_t n) {
  ComplexMatrix z(n, n), id = ComplexMatrix::identity(n);
  return ComplexMatrix::block(z, id, -id, z);
}

ComplexMatrix complex_structure(std::size_t n) {
  ComplexMatrix z(n, n), id = ComplexMatrix::identity(n);
  return ComplexMatrix::block(z, -id, id, z);
}

ComplexMatrix phi_map(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows()) {
    throw std::invalid_argument("phi_map: A and B must be square of equal size");
  }
  if (!a.is_real() || !b.is_real()) throw std::invalid_argument("phi_map: A and B must be real");
  return ComplexMatrix::block(a, b, -b, a);
}

ComplexMatrix phi_map(const ComplexMatrix& u) {
  ComplexMatrix a(u.rows(), u.cols()), b(u.rows(), u.cols());
  for (std::size_t r = 0; r < u.rows(); ++r) {
    for (std::size_t c = 0; c < u.cols(); ++c) {
      a(r, c) = u(r, c).re();
      b(r, c) = u(r, c).im();
    }
  }
  return phi_map(a, b);
}

bool membership(const ComplexMatrix& m, MatrixPredicate predicate) {
  if (!m.is_square()) throw std::invalid_argument("membership: matrix must be square");
  const std::size_t size = m.rows();
  switch (predicate) {
    case MatrixPredicate::SymplecticGroup:
    case MatrixPredicate::SymplecticAlgebra:
    case MatrixPredicate::CommutesWithJ: {
      if (size == 0 || size % 2 != 0) throw std::invalid_argument("membership: size must be 2n");
      const std::size_t n = size / 2;
      if (predicate == MatrixPredicate::CommutesWithJ) {
        const ComplexMatrix j = complex_structure(n);
        return m * j == j * m;
      }
      const ComplexMatrix omega = symplectic_form(n);
      if (predicate == MatrixPredicate::SymplecticGroup) {
        return m.transpose() * omega * m == omega;
      }
      return (m.transpose() * omega + omega * m).is_zero();
    }
    case MatrixPredicate::Unitary:
      return m.adjoint() * m == ComplexMatrix::identity(size);
    case MatrixPredicate::Su12: {
      if (size != 3) throw std::invalid_argument("membership: su12 needs a 3x3 matrix");
      ComplexMatrix eta(3, 3);
      eta(0, 2) = 1;
      eta(1, 1) = 1;
      eta(2, 0) = 1;
      return (m.adjoint() * eta + eta * m).is_zero() && m.trace().is_zero();
    }
  }
  return false;
}

}  // namespace weylkit
