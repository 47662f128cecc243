#pragma once

#include "weylkit/weyl_operator.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace weylkit {

/// plain: the stored polynomial is the element itself.
/// gaussian-weighted: the stored polynomial p denotes p · e^{-|q|²/2}.
enum class SpinorModel { Plain, GaussianWeighted };

std::string model_name(SpinorModel m);  ///< "plain" / "weighted"
SpinorModel parse_model(std::string_view s);

/// A polynomial in x, y, q, optionally carrying the Gaussian weight in q.
///
/// Keys are exponent tuples (x_1..x_n, y_1..y_n, q_1..q_n).
class SpinorElement {
 public:
  using Key = std::vector<std::uint16_t>;
  using CoeffMap = std::map<Key, GaussianRational>;

  SpinorElement(int n, SpinorModel model);
  static SpinorElement monomial(int n, SpinorModel model, const Key& key,
                                const GaussianRational& c = 1);

  int n() const { return n_; }
  SpinorModel model() const { return model_; }
  const CoeffMap& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  GaussianRational coeff(const Key& key) const;

  void add_term(const Key& key, const GaussianRational& c);

  SpinorElement& operator+=(const SpinorElement& o);
  SpinorElement& operator-=(const SpinorElement& o);
  SpinorElement& operator*=(const GaussianRational& c);
  friend SpinorElement operator+(SpinorElement a, const SpinorElement& b) { return a += b; }
  friend SpinorElement operator-(SpinorElement a, const SpinorElement& b) { return a -= b; }
  friend SpinorElement operator*(const GaussianRational& c, SpinorElement a) { return a *= c; }
  friend bool operator==(const SpinorElement& a, const SpinorElement& b) {
    return a.n_ == b.n_ && a.model_ == b.model_ && a.coeffs_ == b.coeffs_;
  }

  static int base_degree(const Key& key, int n);
  static int spinor_degree(const Key& key, int n);

  std::string str() const;
  nlohmann::json to_json() const;
  static SpinorElement from_json(const nlohmann::json& j);

 private:
  int n_;
  SpinorModel model_;
  CoeffMap coeffs_;
};

/// All exponent tuples of `vars` variables with total degree `degree`, in
/// lexicographic order.
std::vector<std::vector<std::uint16_t>> monomials_of_degree(int vars, int degree);

/// Action of a differential operator. In the weighted model the operator is
/// first conjugated through the Gaussian (∂_q ↦ ∂_q - q).
SpinorElement apply(const WeylOperator& a, const SpinorElement& f);
/// Plain polynomial action, no conjugation regardless of f's model tag.
SpinorElement apply_plain(const WeylOperator& a, const SpinorElement& f);

/// Factorial pairing ⟨x^a y^b q^g, x^a' y^b' q^g'⟩ = δ·a!b!g!, conjugate-linear
/// in the first argument.
GaussianRational fischer_pair(const SpinorElement& f, const SpinorElement& g);

/// Π_j (x_j + i y_j)^{alpha_j} in the weighted model.
SpinorElement holomorphic_element(const MultiIndex& alpha, int n);

struct AdjointProbeResult {
  std::optional<GaussianRational> scalar;  ///< the unique consistent c, if any
  std::size_t pairs_checked = 0;
  std::size_t nonzero_pairs = 0;
};

/// Tests ⟨a f, g⟩ = c ⟨f, b g⟩ over all plain monomials f, g of total degree
/// <= degree_cap and returns the unique consistent c, if one exists.
AdjointProbeResult adjointness_probe(const WeylOperator& a, const WeylOperator& b, int degree_cap);

}  // namespace weylkit
