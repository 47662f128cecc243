#include "weylkit/weyl_operator.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace weylkit {

DimensionMismatch::DimensionMismatch(int a, int b)
    : std::invalid_argument("dimension mismatch: n=" + std::to_string(a) + " vs n=" +
                            std::to_string(b)) {}

namespace {

void check_same_n(const WeylOperator& a, const WeylOperator& b) {
  if (a.n() != b.n()) throw DimensionMismatch(a.n(), b.n());
}

void check_index(int n, int j) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (j < 1 || j > n) {
    throw std::out_of_range("index " + std::to_string(j) + " outside 1.." + std::to_string(n));
  }
}

// C(b, j) * C(g, j) * j!, the weight of the j-th term in ∂^b ∘ u^g.
BigInteger reorder_weight(unsigned b, unsigned g, unsigned j) {
  BigInteger cb, cg, fj;
  mpz_bin_uiui(cb.get_mpz_t(), b, j);
  mpz_bin_uiui(cg.get_mpz_t(), g, j);
  mpz_fac_ui(fj.get_mpz_t(), j);
  return cb * cg * fj;
}

const char* kGroupName[3] = {"x", "y", "q"};

}  // namespace

WeylOperator::WeylOperator(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
}

WeylOperator WeylOperator::constant(int n, const GaussianRational& c) {
  WeylOperator op(n);
  op.add_term(Key(6 * static_cast<std::size_t>(n), 0), c);
  return op;
}

WeylOperator WeylOperator::variable(int n, Var v, int j) {
  check_index(n, j);
  WeylOperator op(n);
  Key k(6 * static_cast<std::size_t>(n), 0);
  k[op.var_slot(v, j)] = 1;
  op.add_term(k, 1);
  return op;
}

WeylOperator WeylOperator::derivative(int n, Var v, int j) {
  check_index(n, j);
  WeylOperator op(n);
  Key k(6 * static_cast<std::size_t>(n), 0);
  k[op.der_slot(v, j)] = 1;
  op.add_term(k, 1);
  return op;
}

WeylOperator WeylOperator::from_terms(int n, const std::vector<WeylTerm>& terms) {
  WeylOperator op(n);
  const auto un = static_cast<std::size_t>(n);
  for (const auto& t : terms) {
    const MultiIndex* parts[6] = {&t.xpow, &t.ypow, &t.qpow, &t.dxpow, &t.dypow, &t.dqpow};
    Key k;
    k.reserve(6 * un);
    for (const MultiIndex* p : parts) {
      if (p->size() != un) throw DimensionMismatch(static_cast<int>(p->size()), n);
      k.insert(k.end(), p->begin(), p->end());
    }
    op.add_term(k, t.coeff);
  }
  return op;
}

bool WeylOperator::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const Key& k = terms_.begin()->first;
  return std::all_of(k.begin(), k.end(), [](auto e) { return e == 0; });
}

GaussianRational WeylOperator::constant_term() const {
  auto it = terms_.find(Key(6 * static_cast<std::size_t>(n_), 0));
  return it == terms_.end() ? GaussianRational() : it->second;
}

std::vector<WeylTerm> WeylOperator::term_list() const {
  std::vector<WeylTerm> out;
  out.reserve(terms_.size());
  const auto un = static_cast<std::size_t>(n_);
  for (const auto& [k, c] : terms_) {
    WeylTerm t{c, {}, {}, {}, {}, {}, {}};
    MultiIndex* parts[6] = {&t.xpow, &t.ypow, &t.qpow, &t.dxpow, &t.dypow, &t.dqpow};
    for (std::size_t g = 0; g < 6; ++g) {
      parts[g]->assign(k.begin() + g * un, k.begin() + (g + 1) * un);
    }
    out.push_back(std::move(t));
  }
  return out;
}

void WeylOperator::add_term(const Key& key, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

WeylOperator& WeylOperator::operator+=(const WeylOperator& o) {
  check_same_n(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

WeylOperator& WeylOperator::operator-=(const WeylOperator& o) {
  check_same_n(*this, o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

WeylOperator& WeylOperator::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

WeylOperator operator*(const WeylOperator& a, const WeylOperator& b) {
  check_same_n(a, b);
  const std::size_t slots = 3 * static_cast<std::size_t>(a.n());
  WeylOperator out(a.n());

  struct Choice {
    std::uint16_t var_exp;
    std::uint16_t der_exp;
    BigInteger weight;
  };
  std::vector<std::size_t> overlap;
  std::vector<std::vector<Choice>> options;
  std::vector<std::size_t> pick;
  WeylOperator::Key key(2 * slots);

  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      overlap.clear();
      options.clear();
      for (std::size_t p = 0; p < slots; ++p) {
        const unsigned der = ka[slots + p];
        const unsigned var = kb[p];
        key[p] = static_cast<std::uint16_t>(ka[p] + var);
        key[slots + p] = static_cast<std::uint16_t>(der + kb[slots + p]);
        if (der > 0 && var > 0) {
          overlap.push_back(p);
          std::vector<Choice> opts;
          for (unsigned j = 0; j <= std::min(der, var); ++j) {
            opts.push_back({static_cast<std::uint16_t>(ka[p] + var - j),
                            static_cast<std::uint16_t>(der - j + kb[slots + p]),
                            reorder_weight(der, var, j)});
          }
          options.push_back(std::move(opts));
        }
      }
      const GaussianRational coeff = ca * cb;
      if (overlap.empty()) {
        out.add_term(key, coeff);
        continue;
      }
      // Odometer over the per-variable expansions ∂^b u^g = Σ_j w_j u^{g-j} ∂^{b-j}.
      pick.assign(overlap.size(), 0);
      while (true) {
        BigInteger w = 1;
        for (std::size_t s = 0; s < overlap.size(); ++s) {
          const Choice& ch = options[s][pick[s]];
          key[overlap[s]] = ch.var_exp;
          key[slots + overlap[s]] = ch.der_exp;
          w *= ch.weight;
        }
        out.add_term(key, coeff * GaussianRational(BigRational(w)));
        std::size_t s = 0;
        while (s < overlap.size() && ++pick[s] == options[s].size()) pick[s++] = 0;
        if (s == overlap.size()) break;
      }
    }
  }
  return out;
}

namespace {

std::string factor_name(const char* base, int j, int n) {
  return n == 1 ? std::string(base) : std::string(base) + std::to_string(j);
}

std::string monomial_str(const WeylOperator::Key& k, int n) {
  const auto un = static_cast<std::size_t>(n);
  std::vector<std::string> parts;
  auto emit = [&](std::size_t slot, const std::string& prefix, std::size_t group) {
    for (std::size_t j = 0; j < un; ++j) {
      const unsigned e = k[slot + j];
      if (e == 0) continue;
      std::string s = factor_name((prefix + kGroupName[group]).c_str(), static_cast<int>(j + 1), n);
      if (e > 1) s += "^" + std::to_string(e);
      parts.push_back(std::move(s));
    }
  };
  for (std::size_t g = 0; g < 3; ++g) emit(g * un, "", g);
  // Derivatives print as dq, dx, dy (they commute; this matches the usual
  // "dq dx" reading of the Dirac operators).
  emit(3 * un + 2 * un, "d", 2);
  emit(3 * un, "d", 0);
  emit(3 * un + un, "d", 1);
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ' ';
    out += parts[i];
  }
  return out;
}

bool leads_negative(const GaussianRational& c) {
  return sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
}

// Renders c*m for a coefficient that does not lead negative.
std::string scaled(const GaussianRational& c, const std::string& m) {
  if (m.empty()) return c.is_real() || c.is_imaginary() ? c.str() : "(" + c.str() + ")";
  if (c.is_one()) return m;
  if (c.is_real() || c.is_imaginary()) return c.str() + " " + m;
  return "(" + c.str() + ") " + m;
}

std::string sum_str(const std::vector<std::pair<GaussianRational, std::string>>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& [c, m] = items[i];
    const bool neg = leads_negative(c);
    const std::string body = scaled(neg ? -c : c, m);
    if (i == 0) {
      out += neg ? "-" + body : body;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

}  // namespace

std::string WeylOperator::str() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<GaussianRational, std::string>> items;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    items.emplace_back(it->second, monomial_str(it->first, n_));
  }
  if (items.size() > 1) {
    // Pull out a unit u != 1 when every coefficient / u is real and the first is positive.
    for (const GaussianRational& u :
         {GaussianRational(-1), GaussianRational::i(), -GaussianRational::i()}) {
      const GaussianRational uinv = u.inv();
      bool ok = true;
      for (const auto& [c, m] : items) {
        if (!(c * uinv).is_real()) {
          ok = false;
          break;
        }
      }
      if (!ok || sgn((items.front().first * uinv).re()) <= 0) continue;
      for (auto& [c, m] : items) c *= uinv;
      const std::string prefix = u == GaussianRational(-1) ? "-" : u.str() + " ";
      return prefix + "(" + sum_str(items) + ")";
    }
  }
  return sum_str(items);
}

nlohmann::json WeylOperator::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const WeylTerm& t : term_list()) {
    terms.push_back({{"coeff", t.coeff.str()},
                     {"x", t.xpow},
                     {"y", t.ypow},
                     {"q", t.qpow},
                     {"dx", t.dxpow},
                     {"dy", t.dypow},
                     {"dq", t.dqpow}});
  }
  return {{"n", n_}, {"terms", terms}};
}

WeylOperator WeylOperator::from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  std::vector<WeylTerm> terms;
  for (const auto& t : j.at("terms")) {
    terms.push_back({GaussianRational::parse(t.at("coeff").get<std::string>()),
                     t.at("x").get<MultiIndex>(), t.at("y").get<MultiIndex>(),
                     t.at("q").get<MultiIndex>(), t.at("dx").get<MultiIndex>(),
                     t.at("dy").get<MultiIndex>(), t.at("dq").get<MultiIndex>()});
  }
  return from_terms(n, terms);
}

WeylOperator op_linear(const WeylOperator& a, const WeylOperator& b,
                       const GaussianRational& scalar, LinearKind kind) {
  if (kind == LinearKind::Add) return a + b;
  return a * scalar;
}

WeylOperator normal_order_compose(const WeylOperator& a, const WeylOperator& b) { return a * b; }

WeylOperator commutator(const WeylOperator& a, const WeylOperator& b) { return a * b - b * a; }

WeylOperator fischer_adjoint(const WeylOperator& a) {
  const std::size_t slots = 3 * static_cast<std::size_t>(a.n());
  WeylOperator out(a.n());
  WeylOperator::Key swapped(2 * slots);
  for (const auto& [k, c] : a.terms()) {
    for (std::size_t p = 0; p < slots; ++p) {
      swapped[p] = k[slots + p];
      swapped[slots + p] = k[p];
    }
    out.add_term(swapped, c.conj());
  }
  return out;
}

WeylOperator power(const WeylOperator& a, int k) {
  WeylOperator out = WeylOperator::constant(a.n(), 1);
  for (int i = 0; i < k; ++i) out = out * a;
  return out;
}

WeylOperator gaussian_conjugate(const WeylOperator& a) {
  const int n = a.n();
  const std::size_t un = static_cast<std::size_t>(n);
  // shifted[j][e] = (∂_{q_j} - q_j)^e
  std::vector<std::vector<WeylOperator>> shifted(un);
  WeylOperator out(n);
  for (const auto& [k, c] : a.terms()) {
    WeylOperator::Key head = k;
    std::vector<std::uint16_t> dq(un);
    for (std::size_t j = 0; j < un; ++j) {
      dq[j] = k[3 * un + 2 * un + j];
      head[3 * un + 2 * un + j] = 0;
    }
    WeylOperator term(n);
    term.add_term(head, c);
    for (std::size_t j = 0; j < un; ++j) {
      if (dq[j] == 0) continue;
      auto& cache = shifted[j];
      if (cache.empty()) cache.push_back(WeylOperator::constant(n, 1));
      const int jj = static_cast<int>(j + 1);
      const WeylOperator step =
          WeylOperator::derivative(n, Var::Q, jj) - WeylOperator::variable(n, Var::Q, jj);
      while (cache.size() <= dq[j]) cache.push_back(cache.back() * step);
      term = term * cache[dq[j]];
    }
    out += term;
  }
  return out;
}

std::optional<GaussianRational> proportionality(const WeylOperator& a, const WeylOperator& b) {
  if (a.n() != b.n() || a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  const GaussianRational s = a.terms().begin()->second / b.terms().begin()->second;
  if (a == b * s) return s;
  return std::nullopt;
}

}  // namespace weylkit
