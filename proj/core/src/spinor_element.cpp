#include "weylkit/spinor_element.hpp"

#include <nlohmann/json.hpp>

namespace weylkit {

std::string model_name(SpinorModel m) {
  return m == SpinorModel::Plain ? "plain" : "weighted";
}

SpinorModel parse_model(std::string_view s) {
  if (s == "plain") return SpinorModel::Plain;
  if (s == "weighted" || s == "gaussian-weighted") return SpinorModel::GaussianWeighted;
  throw ParseError("unknown spinor model: " + std::string(s));
}

SpinorElement::SpinorElement(int n, SpinorModel model) : n_(n), model_(model) {
  if (n < 1) throw std::invalid_argument("n must be positive");
}

SpinorElement SpinorElement::monomial(int n, SpinorModel model, const Key& key,
                                      const GaussianRational& c) {
  if (key.size() != 3 * static_cast<std::size_t>(n)) {
    throw DimensionMismatch(static_cast<int>(key.size() / 3), n);
  }
  SpinorElement f(n, model);
  f.add_term(key, c);
  return f;
}

GaussianRational SpinorElement::coeff(const Key& key) const {
  auto it = coeffs_.find(key);
  return it == coeffs_.end() ? GaussianRational() : it->second;
}

void SpinorElement::add_term(const Key& key, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

namespace {

void check_compatible(const SpinorElement& a, const SpinorElement& b) {
  if (a.n() != b.n()) throw DimensionMismatch(a.n(), b.n());
  if (a.model() != b.model()) throw std::invalid_argument("spinor model mismatch");
}

}  // namespace

SpinorElement& SpinorElement::operator+=(const SpinorElement& o) {
  check_compatible(*this, o);
  for (const auto& [k, c] : o.coeffs_) add_term(k, c);
  return *this;
}

SpinorElement& SpinorElement::operator-=(const SpinorElement& o) {
  check_compatible(*this, o);
  for (const auto& [k, c] : o.coeffs_) add_term(k, -c);
  return *this;
}

SpinorElement& SpinorElement::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [k, v] : coeffs_) v *= c;
  return *this;
}

int SpinorElement::base_degree(const Key& key, int n) {
  int d = 0;
  for (int p = 0; p < 2 * n; ++p) d += key[p];
  return d;
}

int SpinorElement::spinor_degree(const Key& key, int n) {
  int d = 0;
  for (int p = 2 * n; p < 3 * n; ++p) d += key[p];
  return d;
}

std::string SpinorElement::str() const {
  if (coeffs_.empty()) return "0";
  static const char* names[3] = {"x", "y", "q"};
  std::string out;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string mono;
    for (int g = 0; g < 3; ++g) {
      for (int j = 0; j < n_; ++j) {
        const unsigned e = k[g * n_ + j];
        if (e == 0) continue;
        if (!mono.empty()) mono += ' ';
        mono += names[g];
        if (n_ > 1) mono += std::to_string(j + 1);
        if (e > 1) mono += "^" + std::to_string(e);
      }
    }
    const bool neg = sgn(c.re()) < 0 || (sgn(c.re()) == 0 && sgn(c.im()) < 0);
    const GaussianRational mag = neg ? -c : c;
    std::string body;
    if (mono.empty()) {
      body = mag.is_real() || mag.is_imaginary() ? mag.str() : "(" + mag.str() + ")";
    } else if (mag.is_one()) {
      body = mono;
    } else if (mag.is_real() || mag.is_imaginary()) {
      body = mag.str() + " " + mono;
    } else {
      body = "(" + mag.str() + ") " + mono;
    }
    if (first) {
      out = neg ? "-" + body : body;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += body;
    }
  }
  return out;
}

nlohmann::json SpinorElement::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  const auto un = static_cast<std::size_t>(n_);
  for (const auto& [k, c] : coeffs_) {
    terms.push_back({{"coeff", c.str()},
                     {"x", MultiIndex(k.begin(), k.begin() + un)},
                     {"y", MultiIndex(k.begin() + un, k.begin() + 2 * un)},
                     {"q", MultiIndex(k.begin() + 2 * un, k.end())}});
  }
  return {{"n", n_}, {"model", model_name(model_)}, {"terms", terms}};
}

SpinorElement SpinorElement::from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  SpinorElement f(n, parse_model(j.at("model").get<std::string>()));
  for (const auto& t : j.at("terms")) {
    Key k;
    for (const char* g : {"x", "y", "q"}) {
      const auto part = t.at(g).get<MultiIndex>();
      if (part.size() != static_cast<std::size_t>(n)) {
        throw DimensionMismatch(static_cast<int>(part.size()), n);
      }
      k.insert(k.end(), part.begin(), part.end());
    }
    f.add_term(k, GaussianRational::parse(t.at("coeff").get<std::string>()));
  }
  return f;
}

std::vector<std::vector<std::uint16_t>> monomials_of_degree(int vars, int degree) {
  std::vector<std::vector<std::uint16_t>> out;
  std::vector<std::uint16_t> cur(static_cast<std::size_t>(vars), 0);
  // Recursive fill of the remaining degree, highest exponent in front first,
  // then reversed so the list is ascending lexicographically.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == vars - 1) {
      cur[pos] = static_cast<std::uint16_t>(left);
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[pos] = static_cast<std::uint16_t>(e);
      self(self, pos + 1, left - e);
    }
  };
  if (vars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

SpinorElement apply_plain(const WeylOperator& a, const SpinorElement& f) {
  if (a.n() != f.n()) throw DimensionMismatch(a.n(), f.n());
  const std::size_t slots = 3 * static_cast<std::size_t>(f.n());
  SpinorElement out(f.n(), f.model());
  SpinorElement::Key key(slots);
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kf, cf] : f.coeffs()) {
      BigInteger weight = 1;
      bool killed = false;
      for (std::size_t p = 0; p < slots; ++p) {
        const unsigned der = ka[slots + p];
        const unsigned have = kf[p];
        if (der > have) {
          killed = true;
          break;
        }
        for (unsigned t = 0; t < der; ++t) weight *= (have - t);
        key[p] = static_cast<std::uint16_t>(have - der + ka[p]);
      }
      if (killed) continue;
      out.add_term(key, ca * cf * GaussianRational(BigRational(weight)));
    }
  }
  return out;
}

SpinorElement apply(const WeylOperator& a, const SpinorElement& f) {
  if (f.model() == SpinorModel::Plain) return apply_plain(a, f);
  return apply_plain(gaussian_conjugate(a), f);
}

GaussianRational fischer_pair(const SpinorElement& f, const SpinorElement& g) {
  check_compatible(f, g);
  GaussianRational total;
  for (const auto& [k, cf] : f.coeffs()) {
    auto it = g.coeffs().find(k);
    if (it == g.coeffs().end()) continue;
    BigInteger w = 1;
    for (auto e : k) {
      BigInteger fe;
      mpz_fac_ui(fe.get_mpz_t(), e);
      w *= fe;
    }
    total += cf.conj() * it->second * GaussianRational(BigRational(w));
  }
  return total;
}

SpinorElement holomorphic_element(const MultiIndex& alpha, int n) {
  if (alpha.size() != static_cast<std::size_t>(n)) {
    throw DimensionMismatch(static_cast<int>(alpha.size()), n);
  }
  const auto un = static_cast<std::size_t>(n);
  SpinorElement out = SpinorElement::monomial(n, SpinorModel::GaussianWeighted, SpinorElement::Key(3 * un, 0));
  for (std::size_t j = 0; j < un; ++j) {
    for (unsigned e = 0; e < alpha[j]; ++e) {
      // multiply by z_j = x_j + i y_j
      SpinorElement next(n, SpinorModel::GaussianWeighted);
      for (const auto& [k, c] : out.coeffs()) {
        SpinorElement::Key kx = k, ky = k;
        ++kx[j];
        ++ky[un + j];
        next.add_term(kx, c);
        next.add_term(ky, c * GaussianRational::i());
      }
      out = std::move(next);
    }
  }
  return out;
}

AdjointProbeResult adjointness_probe(const WeylOperator& a, const WeylOperator& b, int degree_cap) {
  if (a.n() != b.n()) throw DimensionMismatch(a.n(), b.n());
  if (degree_cap < 1) throw std::invalid_argument("degree_cap must be >= 1");
  const int n = a.n();
  std::vector<SpinorElement> basis;
  for (int d = 0; d <= degree_cap; ++d) {
    for (const auto& k : monomials_of_degree(3 * n, d)) {
      basis.push_back(SpinorElement::monomial(n, SpinorModel::Plain, k));
    }
  }
  std::vector<SpinorElement> a_images, b_images;
  for (const auto& f : basis) {
    a_images.push_back(apply_plain(a, f));
    b_images.push_back(apply_plain(b, f));
  }
  AdjointProbeResult result;
  std::optional<GaussianRational> c;
  bool consistent = true;
  for (std::size_t fi = 0; fi < basis.size() && consistent; ++fi) {
    for (std::size_t gi = 0; gi < basis.size(); ++gi) {
      ++result.pairs_checked;
      const GaussianRational lhs = fischer_pair(a_images[fi], basis[gi]);
      const GaussianRational rhs = fischer_pair(basis[fi], b_images[gi]);
      if (lhs.is_zero() && rhs.is_zero()) continue;
      ++result.nonzero_pairs;
      if (rhs.is_zero()) {
        consistent = false;
        break;
      }
      const GaussianRational ratio = lhs / rhs;
      if (!c) {
        c = ratio;
      } else if (!(*c == ratio)) {
        consistent = false;
        break;
      }
    }
  }
  if (consistent) result.scalar = c;
  return result;
}

}  // namespace weylkit
