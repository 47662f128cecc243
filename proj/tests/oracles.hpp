#pragma once

// Independent reference implementations used only by the tests. None of them
// call into the library code they are checking.

#include "weylkit/complex_matrix.hpp"
#include "weylkit/weyl_operator.hpp"

#include <map>
#include <random>
#include <vector>

namespace oracle {

using weylkit::GaussianRational;
using GQ = GaussianRational;

/// Polynomial in 3n variables (x.., y.., q..), exponent vector -> coefficient.
using Poly = std::map<std::vector<int>, GQ>;

inline void add_to(Poly& p, const std::vector<int>& key, const GQ& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = p.emplace(key, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

/// d/dv, one variable at a time.
inline Poly diff(const Poly& p, std::size_t v) {
  Poly out;
  for (const auto& [k, c] : p) {
    if (k[v] == 0) continue;
    auto kk = k;
    kk[v] -= 1;
    add_to(out, kk, c * GQ(k[v]));
  }
  return out;
}

inline Poly times_var(const Poly& p, std::size_t v) {
  Poly out;
  for (const auto& [k, c] : p) {
    auto kk = k;
    kk[v] += 1;
    add_to(out, kk, c);
  }
  return out;
}

/// p represents p * exp(-|q|^2/2); d/dq_j maps p to dp/dq_j - q_j p.
inline Poly diff_weighted(const Poly& p, std::size_t v, std::size_t n) {
  Poly out = diff(p, v);
  if (v >= 2 * n) {
    for (const auto& [k, c] : times_var(p, v)) add_to(out, k, -c);
  }
  return out;
}

/// Applies an operator term by term: derivatives (one step at a time), then
/// multiplication. Operator keys are (vars[3n], ders[3n]).
inline Poly act(const weylkit::WeylOperator& a, const Poly& p, bool weighted = false) {
  const std::size_t s = 3 * static_cast<std::size_t>(a.n());
  Poly out;
  for (const auto& [key, c] : a.terms()) {
    Poly cur = p;
    for (std::size_t v = 0; v < s; ++v)
      for (int t = 0; t < key[s + v]; ++t)
        cur = weighted ? diff_weighted(cur, v, s / 3) : diff(cur, v);
    for (std::size_t v = 0; v < s; ++v)
      for (int t = 0; t < key[v]; ++t) cur = times_var(cur, v);
    for (const auto& [k, cc] : cur) add_to(out, k, c * cc);
  }
  return out;
}

/// All monomials in `vars` variables of total degree <= deg.
inline std::vector<std::vector<int>> monomials_up_to(std::size_t vars, int deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(vars, 0);
  auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
    if (pos == vars) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = e;
      self(self, pos + 1, left - e);
    }
    cur[pos] = 0;
  };
  rec(rec, 0, deg);
  return out;
}

/// Dense reduced row echelon form over Q(i); returns the rank.
inline std::size_t rref_rank(std::vector<std::vector<GQ>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const GQ inv = GQ(1) / a[r][c];
    for (auto& v : a[r]) v *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const GQ f = a[i][c];
      for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  int small(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }
  GQ rational() {
    int den = small(1, 9);
    return GQ(weylkit::make_rational(small(-20, 20), den), weylkit::make_rational(small(-20, 20), small(1, 9)));
  }
  GQ sparse_rational(int zero_pct) { return small(1, 100) <= zero_pct ? GQ() : rational(); }
};

/// Killing form of sl(3) restricted to a basis of 3x3 matrices: 6 tr(XY).
inline weylkit::ComplexMatrix sl3_killing(const std::vector<weylkit::ComplexMatrix>& basis) {
  weylkit::ComplexMatrix k(basis.size(), basis.size());
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = 0; b < basis.size(); ++b) k(a, b) = GQ(6) * (basis[a] * basis[b]).trace();
  return k;
}

}  // namespace oracle
