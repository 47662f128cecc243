#pragma once

#include "weylkit/gaussian_rational.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weylkit {

/// The three variable groups: base coordinates x, y and the spinor variable q.
enum class Var : std::uint8_t { X = 0, Y = 1, Q = 2 };

/// Exponents of one variable group, one entry per base pair (length n).
using MultiIndex = std::vector<std::uint16_t>;

class DimensionMismatch : public std::invalid_argument {
 public:
  DimensionMismatch(int a, int b);
};

/// coeff * x^xpow y^ypow q^qpow dx^dxpow dy^dypow dq^dqpow, variables to the
/// left of derivatives.
struct WeylTerm {
  GaussianRational coeff;
  MultiIndex xpow, ypow, qpow;
  MultiIndex dxpow, dypow, dqpow;
};

/// A polynomial-coefficient differential operator in x_1..x_n, y_1..y_n,
/// q_1..q_n, stored in normal order.
///
/// Terms are keyed by the concatenated exponent tuple
///   (x_1..x_n, y_1..y_n, q_1..q_n, dx_1..dx_n, dy_1..dy_n, dq_1..dq_n)
/// in a std::map, so the term order is lexicographic and two operators are
/// equal iff their term maps are equal. Zero coefficients are never stored.
class WeylOperator {
 public:
  using Key = std::vector<std::uint16_t>;
  using TermMap = std::map<Key, GaussianRational>;

  explicit WeylOperator(int n);

  static WeylOperator zero(int n) { return WeylOperator(n); }
  static WeylOperator constant(int n, const GaussianRational& c);
  /// Multiplication by the j-th variable of group v (j is 1-based).
  static WeylOperator variable(int n, Var v, int j);
  /// The partial derivative in the j-th variable of group v (j is 1-based).
  static WeylOperator derivative(int n, Var v, int j);
  static WeylOperator from_terms(int n, const std::vector<WeylTerm>& terms);

  int n() const { return n_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// True when the operator is c * 1 for some (possibly zero) scalar c.
  bool is_constant() const;
  /// Coefficient of the degree-zero term.
  GaussianRational constant_term() const;
  std::vector<WeylTerm> term_list() const;

  /// Adds c to the coefficient at `key`, pruning the entry if it cancels.
  void add_term(const Key& key, const GaussianRational& c);

  WeylOperator& operator+=(const WeylOperator& o);
  WeylOperator& operator-=(const WeylOperator& o);
  WeylOperator& operator*=(const GaussianRational& c);

  friend WeylOperator operator+(WeylOperator a, const WeylOperator& b) { return a += b; }
  friend WeylOperator operator-(WeylOperator a, const WeylOperator& b) { return a -= b; }
  friend WeylOperator operator*(WeylOperator a, const GaussianRational& c) { return a *= c; }
  friend WeylOperator operator*(const GaussianRational& c, WeylOperator a) { return a *= c; }
  /// Composition a ∘ b, normal ordered.
  friend WeylOperator operator*(const WeylOperator& a, const WeylOperator& b);
  WeylOperator operator-() const { return *this * GaussianRational(-1); }

  friend bool operator==(const WeylOperator& a, const WeylOperator& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  /// Readable form, e.g. "i q1 dy1 - dq1 dx1"; indices are dropped when n == 1
  /// and a common unit factor is pulled out, e.g. "-i (x dx + y dy + 1)".
  std::string str() const;
  nlohmann::json to_json() const;
  static WeylOperator from_json(const nlohmann::json& j);

  // Key layout helpers.
  std::size_t var_slot(Var v, int j) const { return static_cast<std::size_t>(v) * n_ + (j - 1); }
  std::size_t der_slot(Var v, int j) const { return 3 * static_cast<std::size_t>(n_) + var_slot(v, j); }

 private:
  int n_;
  TermMap terms_;
};

enum class LinearKind { Add, Scale };

/// add: a + b (scalar ignored); scale: scalar * a (b ignored).
WeylOperator op_linear(const WeylOperator& a, const WeylOperator& b,
                       const GaussianRational& scalar, LinearKind kind);
WeylOperator normal_order_compose(const WeylOperator& a, const WeylOperator& b);
/// [a, b] = a∘b - b∘a.
WeylOperator commutator(const WeylOperator& a, const WeylOperator& b);
/// Term-wise adjoint for the factorial pairing: c X^α ∂^β ↦ conj(c) X^β ∂^α.
WeylOperator fischer_adjoint(const WeylOperator& a);

/// e^{|q|²/2} ∘ a ∘ e^{-|q|²/2}, i.e. every ∂_{q_j} replaced by (∂_{q_j} - q_j).
WeylOperator gaussian_conjugate(const WeylOperator& a);

/// Power a^k under composition (k >= 0).
WeylOperator power(const WeylOperator& a, int k);

/// If a == s * b for some scalar s, returns s. Both must be nonzero.
std::optional<GaussianRational> proportionality(const WeylOperator& a, const WeylOperator& b);

}  // namespace weylkit
