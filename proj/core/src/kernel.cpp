#include "weylkit/kernel.hpp"

#include "weylkit/catalog.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace weylkit {

BigInteger binomial(int top, int bottom) {
  if (bottom < 0 || top < 0 || bottom > top) return 0;
  BigInteger out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
  return out;
}

GradedBasis::GradedBasis(int n, int k, int m) : n_(n), k_(k), m_(m) {
  if (n < 1) throw std::invalid_argument("GradedBasis: n must be >= 1");
  if (k < 0 || m < 0) return;
  const auto base = monomials_of_degree(2 * n, k);
  std::vector<Key> spin;
  for (int d = 0; d <= m; ++d)
    for (auto& s : monomials_of_degree(n, d)) spin.push_back(std::move(s));
  monomials_.reserve(base.size() * spin.size());
  for (const auto& b : base) {
    for (const auto& s : spin) {
      Key key = b;
      key.insert(key.end(), s.begin(), s.end());
      monomials_.push_back(std::move(key));
    }
  }
  std::sort(monomials_.begin(), monomials_.end());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::optional<std::size_t> GradedBasis::index_of(const Key& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GradedBasis::expected_size(int n, int k, int m) {
  if (k < 0 || m < 0) return 0;
  BigInteger spin = 0;
  for (int j = 0; j <= m; ++j) spin += binomial(n + j - 1, j);
  BigInteger total = binomial(k + 2 * n - 1, k) * spin;
  return total.get_ui();
}

namespace {

struct Shifts {
  std::optional<int> base;  // empty when terms disagree
  int spinor_max = 0;
};

Shifts shifts_of(const WeylOperator& a) {
  const std::size_t n = static_cast<std::size_t>(a.n());
  Shifts s;
  bool first = true;
  bool mixed = false;
  for (const auto& [key, c] : a.terms()) {
    int base = 0, spin = 0;
    for (std::size_t j = 0; j < 2 * n; ++j) base += int(key[j]) - int(key[3 * n + j]);
    for (std::size_t j = 2 * n; j < 3 * n; ++j) spin += int(key[j]) - int(key[3 * n + j]);
    if (first) {
      s.base = base;
      s.spinor_max = spin;
      first = false;
    } else {
      if (s.base != base) mixed = true;
      s.spinor_max = std::max(s.spinor_max, spin);
    }
  }
  if (mixed) s.base.reset();
  if (first) s.base = 0;
  return s;
}

WeylOperator model_operator(const WeylOperator& a, SpinorModel model) {
  return model == SpinorModel::GaussianWeighted ? gaussian_conjugate(a) : a;
}

}  // namespace

std::optional<int> base_degree_shift(const WeylOperator& a) { return shifts_of(a).base; }

GradedBasis kernel_codomain(const WeylOperator& a, const GradedBasis& src, SpinorModel model) {
  const Shifts s = shifts_of(model_operator(a, model));
  if (!s.base) throw NotGraded("operator mixes base-degree shifts");
  return GradedBasis(src.n(), src.k() + *s.base, src.m() + std::max(0, s.spinor_max));
}

SparseRationalMatrix operator_matrix(const WeylOperator& a, const GradedBasis& src,
                                     SpinorModel model, MatrixUse use) {
  if (a.n() != src.n()) throw DimensionMismatch(a.n(), src.n());
  const WeylOperator op = model_operator(a, model);
  std::optional<GradedBasis> codomain;
  if (use == MatrixUse::Kernel) codomain = kernel_codomain(a, src, model);
  const GradedBasis& target = codomain ? *codomain : src;

  SparseRationalMatrix out(target.size(), src.size());
  for (std::size_t col = 0; col < src.size(); ++col) {
    const SpinorElement image =
        apply_plain(op, SpinorElement::monomial(src.n(), SpinorModel::Plain, src.monomials()[col]));
    for (const auto& [key, c] : image.coeffs()) {
      auto row = target.index_of(key);
      if (!row) {
        throw std::domain_error("operator_matrix: image leaves the codomain basis");
      }
      out.add(*row, col, c);
    }
  }
  return out;
}

KernelReport monogenic_dims(int n, int k, int m, SpinorModel model) {
  if (n < 1 || k < 0 || m < 0) throw std::invalid_argument("monogenic_dims: need n >= 1, k, m >= 0");
  const GradedBasis src(n, k, m);
  const SparseRationalMatrix ds = operator_matrix(catalog("D_s", n), src, model);
  const SparseRationalMatrix dt = operator_matrix(catalog("Dt_s", n), src, model);
  KernelReport r;
  r.n = n;
  r.k = k;
  r.m = m;
  r.model = model;
  r.basis_size = src.size();
  r.dim_ker_Ds = src.size() - rank(ds);
  r.dim_ker_DsTilde = src.size() - rank(dt);
  r.dim_joint = src.size() - rank(ds.stacked(dt));
  r.holomorphic_lower_bound =
      model == SpinorModel::GaussianWeighted ? binomial(n + k - 1, k).get_ui() : 0;
  return r;
}

nlohmann::json KernelReport::to_json() const {
  return {{"n", n},
          {"k", k},
          {"m", m},
          {"model", model_name(model)},
          {"basis_size", basis_size},
          {"dim_ker_Ds", dim_ker_Ds},
          {"dim_ker_DsTilde", dim_ker_DsTilde},
          {"dim_joint", dim_joint},
          {"holomorphic_lower_bound", holomorphic_lower_bound}};
}

std::string KernelReport::csv_header() {
  return "n,k,m,model,basis_size,dim_ker_Ds,dim_ker_DsTilde,dim_joint,holomorphic_lower_bound";
}

std::string KernelReport::csv_row() const {
  std::ostringstream os;
  os << n << ',' << k << ',' << m << ',' << model_name(model) << ',' << basis_size << ','
     << dim_ker_Ds << ',' << dim_ker_DsTilde << ',' << dim_joint << ',' << holomorphic_lower_bound;
  return os.str();
}

std::string KernelReport::text() const {
  std::ostringstream os;
  os << "n=" << n << " k=" << k << " m=" << m << " model=" << model_name(model) << "\n"
     << "  basis size       " << basis_size << "\n"
     << "  dim ker D_s      " << dim_ker_Ds << "\n"
     << "  dim ker Dt_s     " << dim_ker_DsTilde << "\n"
     << "  dim joint kernel " << dim_joint << "\n"
     << "  holomorphic bound " << holomorphic_lower_bound << "\n";
  return os.str();
}

std::vector<HermiteLevel> hermite_eigenspaces(int n, int kmax) {
  if (n < 1 || kmax < 0) throw std::invalid_argument("hermite_eigenspaces: need n >= 1, kmax >= 0");
  const GradedBasis basis(n, 0, kmax);
  const SparseRationalMatrix h =
      operator_matrix(catalog("H", n), basis, SpinorModel::GaussianWeighted, MatrixUse::Spectrum);
  std::vector<HermiteLevel> out;
  for (int k = 0; k <= kmax; ++k) {
    HermiteLevel level;
    level.k = k;
    level.eigenvalue = -(GaussianRational(k) + GaussianRational::ratio(n, 2));
    SparseRationalMatrix shifted = h;
    for (std::size_t i = 0; i < basis.size(); ++i) shifted.add(i, i, -level.eigenvalue);
    level.dimension = nullspace(shifted).size();
    level.expected = binomial(n + k - 1, k).get_ui();
    out.push_back(level);
  }
  return out;
}

OscillatorSplit oscillator_split(int n, const std::optional<WeylOperator>& hermite) {
  const WeylOperator h = hermite ? *hermite : catalog("H", n);
  OscillatorSplit r;
  r.n = n;
  r.difference = catalog("O", n) - (catalog("Rot", n) + h * GaussianRational(2));
  r.holds = r.difference.is_zero();
  return r;
}

}  // namespace weylkit
