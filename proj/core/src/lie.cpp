#include "weylkit/lie.hpp"

#include "weylkit/linear_span.hpp"

#include <algorithm>
#include <stdexcept>

namespace weylkit {

bool StructureConstants::is_real() const {
  for (const auto& v : c_)
    if (!v.is_real()) return false;
  return true;
}

bool StructureConstants::is_antisymmetric() const {
  for (std::size_t a = 0; a < dim_; ++a)
    for (std::size_t b = 0; b < dim_; ++b)
      for (std::size_t k = 0; k < dim_; ++k)
        if (!((*this)(a, b, k) + (*this)(b, a, k)).is_zero()) return false;
  return true;
}

StructureConstants StructureConstants::without(std::size_t index) const {
  StructureConstants out(dim_ - 1);
  auto map = [index](std::size_t i) { return i < index ? i : i - 1; };
  for (std::size_t a = 0; a < dim_; ++a) {
    if (a == index) continue;
    for (std::size_t b = 0; b < dim_; ++b) {
      if (b == index) continue;
      for (std::size_t k = 0; k < dim_; ++k) {
        if (k == index) continue;
        out(map(a), map(b), map(k)) = (*this)(a, b, k);
      }
    }
  }
  return out;
}

namespace {

SparseVector as_vector(const WeylOperator& op) {
  return SparseVector(op.terms().begin(), op.terms().end());
}

template <class Elem, class Bracket, class ToVec>
StructureConstants constants_for(const std::vector<Elem>& basis, Bracket bracket, ToVec to_vec) {
  LinearSpan span;
  for (const auto& e : basis) {
    if (!span.insert(to_vec(e))) throw std::runtime_error("basis is linearly dependent");
  }
  const std::size_t d = basis.size();
  StructureConstants sc(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      auto coords = span.coordinates(to_vec(bracket(basis[a], basis[b])));
      if (!coords) {
        throw std::runtime_error("bracket of basis elements " + std::to_string(a) + " and " +
                                 std::to_string(b) + " leaves the span");
      }
      for (std::size_t k = 0; k < d; ++k) {
        sc(a, b, k) = (*coords)[k];
        sc(b, a, k) = -(*coords)[k];
      }
    }
  }
  return sc;
}

}  // namespace

StructureConstants structure_constants(const std::vector<WeylOperator>& basis) {
  return constants_for(basis, commutator, as_vector);
}

StructureConstants structure_constants(const std::vector<ComplexMatrix>& basis) {
  return constants_for(basis, matrix_commutator,
                       [](const ComplexMatrix& m) { return m.to_sparse(); });
}

ClosureResult span_closure(const std::vector<WeylOperator>& generators, bool constants_allowed,
                           std::size_t max_dim) {
  if (generators.empty()) throw std::invalid_argument("span_closure: no generators");
  const int n = generators.front().n();
  ClosureResult result;
  LinearSpan span;
  auto& basis = result.span.basis;
  const WeylOperator one = WeylOperator::constant(n, 1);

  auto try_add = [&](const WeylOperator& op) {
    if (op.n() != n) throw DimensionMismatch(op.n(), n);
    if (span.contains(as_vector(op))) return;
    if (constants_allowed && !result.span.central_index && !op.constant_term().is_zero()) {
      // Adjoin 1 first if that alone brings op into the span.
      LinearSpan trial = span;
      trial.insert(as_vector(one));
      if (trial.contains(as_vector(op))) {
        span = std::move(trial);
        result.span.central_index = basis.size();
        basis.push_back(one);
        return;
      }
    }
    span.insert(as_vector(op));
    basis.push_back(op);
  };

  for (const auto& g : generators) try_add(g);

  // Pairs (a, b) with b < done are already bracketed.
  std::size_t done = 0;
  while (done < basis.size()) {
    ++result.rounds;
    const std::size_t frontier = basis.size();
    for (std::size_t b = done; b < frontier; ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        try_add(commutator(basis[a], basis[b]));
        if (basis.size() > max_dim) {
          result.closed = false;
          return result;
        }
      }
    }
    done = frontier;
  }
  result.closed = true;
  result.constants = structure_constants(basis);
  return result;
}

StructureConstants quotient_center(const ClosureResult& closure) {
  if (!closure.span.central_index) return closure.constants;
  return closure.constants.without(*closure.span.central_index);
}

std::vector<JacobiViolation> jacobi_check(const StructureConstants& sc) {
  std::vector<JacobiViolation> out;
  const std::size_t d = sc.dim();
  // [e_a,[e_b,e_c]] = Σ_m c(b,c,m) Σ_k c(a,m,k) e_k, summed cyclically.
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      for (std::size_t c = b + 1; c < d; ++c) {
        for (std::size_t k = 0; k < d; ++k) {
          GaussianRational total;
          for (std::size_t m = 0; m < d; ++m) {
            if (!sc(b, c, m).is_zero() && !sc(a, m, k).is_zero()) total += sc(b, c, m) * sc(a, m, k);
            if (!sc(c, a, m).is_zero() && !sc(b, m, k).is_zero()) total += sc(c, a, m) * sc(b, m, k);
            if (!sc(a, b, m).is_zero() && !sc(c, m, k).is_zero()) total += sc(a, b, m) * sc(c, m, k);
          }
          if (!total.is_zero()) out.push_back({a, b, c, k, total});
        }
      }
    }
  }
  return out;
}

ComplexMatrix killing_form(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  ComplexMatrix k(d, d);
  // (ad a)_{k,m} = c(a, m, k), so tr(ad a ad b) = Σ_{m,k} c(a,m,k) c(b,k,m).
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      GaussianRational t;
      for (std::size_t m = 0; m < d; ++m)
        for (std::size_t kk = 0; kk < d; ++kk)
          if (!sc(a, m, kk).is_zero() && !sc(b, kk, m).is_zero()) t += sc(a, m, kk) * sc(b, kk, m);
      k(a, b) = t;
      k(b, a) = t;
    }
  }
  return k;
}

Signature symmetric_signature(const ComplexMatrix& input) {
  if (!input.is_square() || !input.is_real() || !(input == input.transpose())) {
    throw std::invalid_argument("symmetric_signature: need a real symmetric matrix");
  }
  ComplexMatrix m = input;
  std::size_t size = m.rows();
  std::vector<bool> alive(size, true);
  Signature sig;
  std::size_t remaining = size;
  while (remaining > 0) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < size && !pivot; ++i)
      if (alive[i] && !m(i, i).is_zero()) pivot = i;
    if (!pivot) {
      // Zero diagonal: fold a column with an off-diagonal entry into another.
      std::optional<std::pair<std::size_t, std::size_t>> off;
      for (std::size_t i = 0; i < size && !off; ++i)
        for (std::size_t j = i + 1; j < size && !off; ++j)
          if (alive[i] && alive[j] && !m(i, j).is_zero()) off = {i, j};
      if (!off) break;
      const auto [i, j] = *off;
      for (std::size_t k = 0; k < size; ++k) m(i, k) += m(j, k);
      for (std::size_t k = 0; k < size; ++k) m(k, i) += m(k, j);
      continue;
    }
    const std::size_t p = *pivot;
    const GaussianRational d = m(p, p);
    (sgn(d.re()) > 0 ? sig.positives : sig.negatives)++;
    const GaussianRational inv = d.inv();
    for (std::size_t r = 0; r < size; ++r) {
      if (!alive[r] || r == p || m(r, p).is_zero()) continue;
      const GaussianRational f = m(r, p) * inv;
      for (std::size_t c = 0; c < size; ++c) {
        if (alive[c]) m(r, c) -= f * m(p, c);
      }
    }
    for (std::size_t c = 0; c < size; ++c) m(p, c) = 0;
    for (std::size_t r = 0; r < size; ++r) m(r, p) = 0;
    alive[p] = false;
    --remaining;
  }
  sig.zeros = static_cast<int>(size) - sig.positives - sig.negatives;
  return sig;
}

Signature killing_signature(const StructureConstants& sc) {
  if (!sc.is_real()) throw std::invalid_argument("killing_signature: structure constants not real");
  return symmetric_signature(killing_form(sc));
}

StructureConstants rescale(const StructureConstants& sc, const std::vector<GaussianRational>& s) {
  const std::size_t d = sc.dim();
  if (s.size() != d) throw std::invalid_argument("rescale: wrong number of scalars");
  StructureConstants out(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t k = 0; k < d; ++k)
        if (!sc(a, b, k).is_zero()) out(a, b, k) = s[a] * s[b] / s[k] * sc(a, b, k);
  return out;
}

RescaleResult real_form_rescale(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  // A sign never changes realness, so 1 and i cover all four units.
  const std::vector<GaussianRational> units = {GaussianRational(1), GaussianRational::i()};
  std::vector<GaussianRational> s(d, GaussianRational(1));

  auto real_at = [&](std::size_t a, std::size_t b, std::size_t k) {
    const GaussianRational& v = sc(a, b, k);
    return v.is_zero() || (s[a] * s[b] / s[k] * v).is_real();
  };
  // Checks every constant whose largest index is t.
  auto block_ok = [&](std::size_t t) {
    for (std::size_t a = 0; a <= t; ++a)
      for (std::size_t b = 0; b <= t; ++b)
        for (std::size_t k = 0; k <= t; ++k)
          if ((a == t || b == t || k == t) && !real_at(a, b, k)) return false;
    return true;
  };
  auto search = [&](auto&& self, std::size_t t) -> bool {
    if (t == d) return true;
    for (const auto& u : units) {
      s[t] = u;
      if (block_ok(t) && self(self, t + 1)) return true;
    }
    return false;
  };
  RescaleResult r;
  r.success = search(search, 0);
  r.scalars = r.success ? s : std::vector<GaussianRational>{};
  return r;
}

bool is_heisenberg(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  if (d != 3) return false;
  LinearSpan derived;
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      SparseVector v;
      for (std::size_t k = 0; k < d; ++k)
        if (!sc(a, b, k).is_zero()) v[{static_cast<std::uint16_t>(k)}] = sc(a, b, k);
      if (!v.empty()) derived.insert(v);
    }
  }
  if (derived.dim() != 1) return false;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c)
        for (std::size_t k = 0; k < d; ++k) {
          GaussianRational t;
          for (std::size_t m = 0; m < d; ++m) t += sc(b, c, m) * sc(a, m, k);
          if (!t.is_zero()) return false;
        }
  return true;
}

std::vector<ComplexMatrix> unitary_algebra_basis(int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<ComplexMatrix> out;
  for (std::size_t j = 0; j < un; ++j)
    for (std::size_t k = j + 1; k < un; ++k) {
      ComplexMatrix m(un, un);
      m(j, k) = 1;
      m(k, j) = -1;
      out.push_back(m);
    }
  for (std::size_t j = 0; j < un; ++j)
    for (std::size_t k = j; k < un; ++k) {
      ComplexMatrix m(un, un);
      m(j, k) = GaussianRational::i();
      m(k, j) = GaussianRational::i();
      out.push_back(m);
    }
  return out;
}

std::vector<std::pair<std::string, ComplexMatrix>> unitary_group_samples(int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::pair<std::string, ComplexMatrix>> out;
  out.emplace_back("identity", ComplexMatrix::identity(2 * un));
  out.emplace_back("omega0", symplectic_form(un));
  std::vector<std::size_t> perm(un);
  for (std::size_t j = 0; j < un; ++j) perm[j] = j;
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << un); ++mask) {
      ComplexMatrix p(un, un);
      std::string label = "signed-perm[";
      for (std::size_t j = 0; j < un; ++j) {
        const bool neg = (mask >> j) & 1U;
        p(j, perm[j]) = neg ? -1 : 1;
        label += (j ? "," : "") + std::string(neg ? "-" : "") + std::to_string(perm[j] + 1);
      }
      out.emplace_back(label + "]", phi_map(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  ComplexMatrix d(un, un);
  for (std::size_t j = 0; j < un; ++j) d(j, j) = GaussianRational(make_rational(3, 5), make_rational(4, 5));
  out.emplace_back("diag(3/5 + 4/5 i)", phi_map(d));
  return out;
}

PhiLemmaReport phi_lemma_check(int n) {
  PhiLemmaReport r;
  r.n = n;
  const auto basis = unitary_algebra_basis(n);
  std::vector<ComplexMatrix> images;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    images.push_back(phi_map(basis[a]));
    ++r.algebra_elements;
    if (!membership(images.back(), MatrixPredicate::SymplecticAlgebra))
      r.failures.push_back("phi(u_" + std::to_string(a) + ") not in sp(2n,R)");
    if (!membership(images.back(), MatrixPredicate::CommutesWithJ))
      r.failures.push_back("phi(u_" + std::to_string(a) + ") does not commute with J");
  }
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      ++r.bracket_pairs;
      if (!(phi_map(matrix_commutator(basis[a], basis[b])) == matrix_commutator(images[a], images[b])))
        r.failures.push_back("phi fails to preserve [u_" + std::to_string(a) + ", u_" +
                             std::to_string(b) + "]");
    }
  for (const auto& [label, m] : unitary_group_samples(n)) {
    ++r.group_elements;
    if (!membership(m, MatrixPredicate::SymplecticGroup)) r.failures.push_back(label + " not symplectic");
    if (!membership(m, MatrixPredicate::CommutesWithJ))
      r.failures.push_back(label + " does not commute with J");
  }
  return r;
}

}  // namespace weylkit
