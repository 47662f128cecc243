#include "oracles.hpp"

#include "weylkit/catalog.hpp"
#include "weylkit/weyl_operator.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

using namespace weylkit;
using GQ = GaussianRational;

namespace {

WeylOperator x(int n, int j) { return WeylOperator::variable(n, Var::X, j); }
WeylOperator y(int n, int j) { return WeylOperator::variable(n, Var::Y, j); }
WeylOperator q(int n, int j) { return WeylOperator::variable(n, Var::Q, j); }
WeylOperator dx(int n, int j) { return WeylOperator::derivative(n, Var::X, j); }
WeylOperator dy(int n, int j) { return WeylOperator::derivative(n, Var::Y, j); }
WeylOperator dq(int n, int j) { return WeylOperator::derivative(n, Var::Q, j); }

// Normal ordering by repeated use of dq q = q dq + 1 on a single variable pair,
// written out with explicit words so it shares nothing with the library.
std::map<std::pair<int, int>, long> rewrite_word(std::string word) {
  // word over {'q','d'}, 'd' standing for dq; returns (q-power, d-power) -> coefficient
  std::map<std::string, long> pending{{word, 1}};
  std::map<std::pair<int, int>, long> done;
  while (!pending.empty()) {
    auto [w, coef] = *pending.begin();
    pending.erase(pending.begin());
    const auto pos = w.find("dq");
    if (pos == std::string::npos) {
      int qs = 0, ds = 0;
      for (char ch : w) (ch == 'q' ? qs : ds)++;
      done[{qs, ds}] += coef;
      continue;
    }
    std::string swapped = w.substr(0, pos) + "qd" + w.substr(pos + 2);
    std::string dropped = w.substr(0, pos) + w.substr(pos + 2);
    pending[swapped] += coef;
    pending[dropped] += coef;
  }
  return done;
}

WeylOperator random_operator(oracle::Rng& rng, int n, int terms, int max_pow) {
  WeylOperator out(n);
  for (int t = 0; t < terms; ++t) {
    WeylOperator::Key key(6 * static_cast<std::size_t>(n));
    for (auto& e : key) e = static_cast<std::uint16_t>(rng.small(0, 8) == 0 ? rng.small(1, max_pow) : 0);
    out.add_term(key, rng.rational());
  }
  return out;
}

}  // namespace

TEST(WeylOperator, SquaredDerivativeThroughSquare) {
  // dq^2 q^2 = q^2 dq^2 + 4 q dq + 2
  const WeylOperator lhs = power(dq(1, 1), 2) * power(q(1, 1), 2);
  const WeylOperator rhs = power(q(1, 1), 2) * power(dq(1, 1), 2) + q(1, 1) * dq(1, 1) * GQ(4) +
                           WeylOperator::constant(1, 2);
  EXPECT_EQ(lhs, rhs);
}

TEST(WeylOperator, CompositionMatchesWordRewriting) {
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      const WeylOperator got = power(dq(1, 1), a) * power(q(1, 1), b);
      WeylOperator want(1);
      for (const auto& [pw, coef] : rewrite_word(std::string(a, 'd') + std::string(b, 'q'))) {
        want += power(q(1, 1), pw.first) * power(dq(1, 1), pw.second) * GQ(coef);
      }
      EXPECT_EQ(got, want) << "a=" << a << " b=" << b;
    }
  }
}

TEST(WeylOperator, CanonicalRelations) {
  for (int n = 1; n <= 3; ++n) {
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) {
        const WeylOperator delta = j == k ? WeylOperator::constant(n, 1) : WeylOperator(n);
        EXPECT_EQ(commutator(dq(n, j), q(n, k)), delta);
        EXPECT_EQ(commutator(dx(n, j), x(n, k)), delta);
        EXPECT_EQ(commutator(dy(n, j), y(n, k)), delta);
        EXPECT_TRUE(commutator(dx(n, j), y(n, k)).is_zero());
        EXPECT_TRUE(commutator(q(n, j), x(n, k)).is_zero());
      }
    }
  }
}

TEST(WeylOperator, ZeroCoefficientsArePruned) {
  WeylOperator a = x(1, 1) + y(1, 1);
  a -= x(1, 1);
  EXPECT_EQ(a.size(), 1u);
  EXPECT_EQ(a, y(1, 1));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_TRUE((a * GQ()).is_zero());
}

TEST(WeylOperator, LinearHelpers) {
  const WeylOperator a = x(2, 1), b = dy(2, 2);
  EXPECT_EQ(op_linear(a, b, GQ(), LinearKind::Add), a + b);
  EXPECT_EQ(op_linear(a, b, GQ::i(), LinearKind::Scale), a * GQ::i());
  EXPECT_EQ(normal_order_compose(a, b), a * b);
}

TEST(WeylOperator, DimensionMismatchRejected) {
  EXPECT_THROW(x(1, 1) + x(2, 1), DimensionMismatch);
  EXPECT_THROW(x(1, 1) * x(2, 1), DimensionMismatch);
  EXPECT_THROW(commutator(x(1, 1), x(3, 1)), DimensionMismatch);
}

TEST(WeylOperator, PrettyPrinting) {
  EXPECT_EQ(commutator(catalog("D_s", 1), catalog("X_s", 1)).str(), "-i (x dx + y dy + 1)");
  EXPECT_EQ(WeylOperator(2).str(), "0");
  EXPECT_EQ(WeylOperator::constant(1, GQ::ratio(-1, 2)).str(), "-1/2");
  EXPECT_EQ((x(2, 1) * dq(2, 2)).str(), "x1 dq2");
  EXPECT_EQ(power(q(1, 1), 3).str(), "q^3");
}

TEST(WeylOperator, JsonRoundTrip) {
  oracle::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = rng.small(1, 3);
    const WeylOperator a = random_operator(rng, n, rng.small(0, 6), 3);
    EXPECT_EQ(WeylOperator::from_json(a.to_json()), a);
  }
  const auto j = nlohmann::json::parse(R"({"n":1,"terms":[{"coeff":"1/2 i","x":[1],"y":[0],"q":[0],"dx":[0],"dy":[1],"dq":[0]}]})");
  EXPECT_EQ(WeylOperator::from_json(j), x(1, 1) * dy(1, 1) * (GQ::ratio(1, 2) * GQ::i()));
}

TEST(WeylOperatorProperty, CompositionAgreesWithAction) {
  // (a b) p = a (b p) using the step-by-step differentiation oracle.
  oracle::Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = rng.small(1, 2);
    const WeylOperator a = random_operator(rng, n, 3, 2), b = random_operator(rng, n, 3, 2);
    for (const auto& mono : oracle::monomials_up_to(3 * n, 2)) {
      oracle::Poly p;
      p[mono] = rng.rational();
      EXPECT_EQ(oracle::act(a * b, p), oracle::act(a, oracle::act(b, p)));
    }
  }
}

TEST(WeylOperatorProperty, AssociativityAndBilinearity) {
  oracle::Rng rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = rng.small(1, 2);
    const WeylOperator a = random_operator(rng, n, 3, 2), b = random_operator(rng, n, 3, 2),
                       c = random_operator(rng, n, 3, 2);
    const GQ s = rng.rational();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a + b) * c, a * c + b * c);
    EXPECT_EQ((a * s) * b, a * (b * s));
    EXPECT_EQ(commutator(a, b), -commutator(b, a));
  }
}

TEST(WeylOperatorProperty, JacobiOverCatalogTriples) {
  for (int n = 1; n <= 2; ++n) {
    const auto inst = catalog_instances(n);
    oracle::Rng rng(17 + n);
    for (int trial = 0; trial < 400; ++trial) {
      const auto& a = inst[rng.small(0, static_cast<int>(inst.size()) - 1)];
      const auto& b = inst[rng.small(0, static_cast<int>(inst.size()) - 1)];
      const auto& c = inst[rng.small(0, static_cast<int>(inst.size()) - 1)];
      const WeylOperator j = commutator(a.second, commutator(b.second, c.second)) +
                             commutator(b.second, commutator(c.second, a.second)) +
                             commutator(c.second, commutator(a.second, b.second));
      EXPECT_TRUE(j.is_zero()) << a.first << " " << b.first << " " << c.first;
    }
  }
}

TEST(WeylOperator, GaussianConjugateMatchesWeightedAction) {
  // e^{|q|^2/2} a (e^{-|q|^2/2} p) computed with the weighted-derivative oracle.
  oracle::Rng rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = rng.small(1, 2);
    const WeylOperator a = random_operator(rng, n, 3, 2);
    const WeylOperator conj = gaussian_conjugate(a);
    for (const auto& mono : oracle::monomials_up_to(3 * n, 2)) {
      oracle::Poly p;
      p[mono] = 1;
      EXPECT_EQ(oracle::act(conj, p), oracle::act(a, p, true));
    }
  }
}

TEST(WeylOperator, FischerAdjointByHand) {
  // D_s = sum i q dy - dq dx  ->  sum -i y dq - x q
  const WeylOperator want = -(x(1, 1) * q(1, 1)) - y(1, 1) * dq(1, 1) * GQ::i();
  EXPECT_EQ(fischer_adjoint(catalog("D_s", 1)), want);
  EXPECT_EQ(fischer_adjoint(fischer_adjoint(catalog("O", 2))), catalog("O", 2));
}

TEST(WeylOperator, Proportionality) {
  const WeylOperator a = catalog("X_s", 2);
  EXPECT_EQ(proportionality(a * GQ(3), a), GQ(3));
  EXPECT_FALSE(proportionality(a, catalog("D_s", 2)).has_value());
  EXPECT_FALSE(proportionality(a, WeylOperator(2)).has_value());
}

TEST(WeylOperator, Power) {
  EXPECT_EQ(power(x(1, 1), 0), WeylOperator::constant(1, 1));
  EXPECT_EQ(power(dx(1, 1) + x(1, 1), 2),
            (dx(1, 1) + x(1, 1)) * (dx(1, 1) + x(1, 1)));
}
