#pragma once

#include "weylkit/complex_matrix.hpp"
#include "weylkit/weyl_operator.hpp"

#include <optional>
#include <string>
#include <vector>

namespace weylkit {

/// [e_a, e_b] = Σ_k c(a, b, k) e_k for a basis e_0..e_{dim-1}.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim) : dim_(dim), c_(dim * dim * dim) {}

  std::size_t dim() const { return dim_; }
  GaussianRational& operator()(std::size_t a, std::size_t b, std::size_t k) {
    return c_[(a * dim_ + b) * dim_ + k];
  }
  const GaussianRational& operator()(std::size_t a, std::size_t b, std::size_t k) const {
    return c_[(a * dim_ + b) * dim_ + k];
  }
  bool is_real() const;
  bool is_antisymmetric() const;
  /// Copy with basis element `index` removed (valid when it is central and
  /// no bracket outside it needs to be tracked, e.g. the constant operator).
  StructureConstants without(std::size_t index) const;
  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<GaussianRational> c_;
};

enum class SpanField { Complex, Real };

/// A finite Lie span of operators together with its bracket table.
struct LieSpan {
  std::vector<WeylOperator> basis;
  SpanField field = SpanField::Complex;
  /// Position of the constant operator 1 in `basis`, if it was adjoined.
  std::optional<std::size_t> central_index;
};

struct ClosureResult {
  LieSpan span;
  StructureConstants constants;
  bool closed = false;
  int rounds = 0;
};

/// Repeatedly brackets basis pairs and extends the span until nothing new
/// appears or the basis reaches `max_dim`. With constants_allowed, the
/// constant operator 1 is adjoined as its own basis element the first time a
/// bracket needs it.
ClosureResult span_closure(const std::vector<WeylOperator>& generators, bool constants_allowed,
                           std::size_t max_dim = 64);

/// The quotient by the adjoined constant (when present).
StructureConstants quotient_center(const ClosureResult& closure);

/// Structure constants of a basis of operators assumed closed under brackets.
/// Throws std::runtime_error naming the pair when a bracket leaves the span.
StructureConstants structure_constants(const std::vector<WeylOperator>& basis);
StructureConstants structure_constants(const std::vector<ComplexMatrix>& basis);

struct JacobiViolation {
  std::size_t a, b, c, k;
  GaussianRational value;
};

/// Exhaustive Jacobi check over all basis triples; empty means it holds exactly.
std::vector<JacobiViolation> jacobi_check(const StructureConstants& sc);

/// K(a, b) = tr(ad a ∘ ad b), as a dim × dim matrix.
ComplexMatrix killing_form(const StructureConstants& sc);

struct Signature {
  int positives = 0;
  int negatives = 0;
  int zeros = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};

/// Signature of a real symmetric matrix by exact congruence diagonalization.
Signature symmetric_signature(const ComplexMatrix& m);

/// Killing signature; throws std::invalid_argument for non-real constants.
Signature killing_signature(const StructureConstants& sc);

struct RescaleResult {
  std::vector<GaussianRational> scalars;
  bool success = false;
};

/// Searches per-element unit scalings that make every structure constant real.
/// Signs never matter, so only 1 and i are tried, depth-first with pruning on
/// the leading block.
RescaleResult real_form_rescale(const StructureConstants& sc);

/// Constants of the basis s_a e_a.
StructureConstants rescale(const StructureConstants& sc, const std::vector<GaussianRational>& s);

/// True when sc is 3-dimensional, its derived algebra is one-dimensional and
/// every double bracket vanishes (the Heisenberg algebra h_3).
bool is_heisenberg(const StructureConstants& sc);

/// Real basis of u(n) as complex matrices: A skew (E_jk - E_kj, j < k), then
/// iB with B symmetric (E_jk + E_kj, j < k, and E_jj).
std::vector<ComplexMatrix> unitary_algebra_basis(int n);

/// Named 2n x 2n group elements that should be symplectic and commute with J:
/// the identity, Omega_0, phi of every signed permutation, phi of a rational
/// diagonal unitary.
std::vector<std::pair<std::string, ComplexMatrix>> unitary_group_samples(int n);

struct PhiLemmaReport {
  int n = 1;
  std::size_t algebra_elements = 0;
  std::size_t bracket_pairs = 0;
  std::size_t group_elements = 0;
  std::vector<std::string> failures;  ///< one line per failed check
  bool passed() const { return failures.empty(); }
};

/// phi(u(n)) lies in sp(2n, R) and commutes with J, phi preserves brackets on
/// the basis, and every group sample satisfies M^T Omega_0 M = Omega_0, MJ = JM.
PhiLemmaReport phi_lemma_check(int n);

}  // namespace weylkit
