#pragma once

#include "weylkit/sparse_matrix.hpp"
#include "weylkit/spinor_element.hpp"

#include <nlohmann/json_fwd.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylkit {

/// Monomials x^a y^b q^g with |a|+|b| = k and |g| <= m, ordered
/// lexicographically on the (x, y, q) exponent tuple.
class GradedBasis {
 public:
  using Key = SpinorElement::Key;

  GradedBasis(int n, int k, int m);

  int n() const { return n_; }
  int k() const { return k_; }
  int m() const { return m_; }
  std::size_t size() const { return monomials_.size(); }
  const std::vector<Key>& monomials() const { return monomials_; }
  std::optional<std::size_t> index_of(const Key& key) const;

  /// C(k+2n-1, k) * sum_{j<=m} C(n+j-1, j).
  static std::size_t expected_size(int n, int k, int m);

 private:
  int n_, k_, m_;
  std::vector<Key> monomials_;
  std::map<Key, std::size_t> index_;
};

BigInteger binomial(int top, int bottom);

/// Kernel use needs a single base-degree shift; spectrum use keeps the
/// source basis as codomain.
enum class MatrixUse { Kernel, Spectrum };

struct NotGraded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Shift of |x|+|y| under the operator, if every term agrees.
std::optional<int> base_degree_shift(const WeylOperator& a);

/// Codomain for kernel use: base degree k + shift, spinor cap m plus the
/// largest spinor raise of the (model-conjugated) operator.
GradedBasis kernel_codomain(const WeylOperator& a, const GradedBasis& src, SpinorModel model);

/// Column j holds the coordinates of apply(a, monomial_j). Throws NotGraded
/// for kernel use of a mixed-degree operator, and std::domain_error for
/// spectrum use when an image leaves the source basis.
SparseRationalMatrix operator_matrix(const WeylOperator& a, const GradedBasis& src,
                                     SpinorModel model, MatrixUse use = MatrixUse::Kernel);

struct KernelReport {
  int n = 1, k = 0, m = 0;
  SpinorModel model = SpinorModel::Plain;
  std::size_t basis_size = 0;
  std::size_t dim_ker_Ds = 0;
  std::size_t dim_ker_DsTilde = 0;
  std::size_t dim_joint = 0;
  std::size_t holomorphic_lower_bound = 0;  ///< C(n+k-1, k) weighted, 0 plain

  nlohmann::json to_json() const;
  static std::string csv_header();
  std::string csv_row() const;
  std::string text() const;
};

KernelReport monogenic_dims(int n, int k, int m, SpinorModel model);

struct HermiteLevel {
  int k = 0;
  GaussianRational eigenvalue;  ///< -(k + n/2)
  std::size_t dimension = 0;    ///< from the exact nullspace of H - eigenvalue
  std::size_t expected = 0;     ///< C(n+k-1, k)
};

/// Eigenspaces of H on spinor polynomials of degree <= kmax, weighted model.
std::vector<HermiteLevel> hermite_eigenspaces(int n, int kmax);

struct OscillatorSplit {
  int n = 1;
  bool holds = false;
  WeylOperator difference = WeylOperator(1);  ///< O - (Rot + 2H)
};

/// Checks O = sum_j i(x_j dy_j - y_j dx_j) + 2H. `hermite` replaces H when given.
OscillatorSplit oscillator_split(int n, const std::optional<WeylOperator>& hermite = std::nullopt);

}  // namespace weylkit
