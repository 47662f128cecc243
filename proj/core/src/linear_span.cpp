#include "weylkit/linear_span.hpp"

namespace weylkit {

namespace {

void axpy(SparseVector& y, const GaussianRational& a, const SparseVector& x) {
  for (const auto& [k, v] : x) {
    auto [it, inserted] = y.try_emplace(k, a * v);
    if (!inserted) {
      it->second += a * v;
      if (it->second.is_zero()) y.erase(it);
    }
  }
}

void axpy(std::vector<GaussianRational>& y, const GaussianRational& a,
          const std::vector<GaussianRational>& x) {
  if (y.size() < x.size()) y.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

}  // namespace

LinearSpan::Reduction LinearSpan::reduce(const SparseVector& v) const {
  Reduction r{v, std::vector<GaussianRational>(dim())};
  for (const auto& [key, coeff] : v) {
    auto it = pivot_row_.find(key);
    if (it == pivot_row_.end()) continue;
    // Rows carry no other pivot keys, so v's pivot coefficients stay intact.
    const GaussianRational c = coeff;
    axpy(r.remainder, -c, rows_[it->second]);
    axpy(r.coords, c, combos_[it->second]);
  }
  return r;
}

std::optional<std::vector<GaussianRational>> LinearSpan::coordinates(const SparseVector& v) const {
  Reduction r = reduce(v);
  if (!r.remainder.empty()) return std::nullopt;
  return std::move(r.coords);
}

bool LinearSpan::insert(const SparseVector& v) {
  Reduction r = reduce(v);
  if (r.remainder.empty()) return false;
  const std::size_t d = dim();
  // remainder = e_d - Σ coords_i e_i
  std::vector<GaussianRational> combo(d + 1);
  for (std::size_t i = 0; i < d; ++i) combo[i] = -r.coords[i];
  combo[d] = 1;

  const auto pivot = r.remainder.begin()->first;
  const GaussianRational scale = r.remainder.begin()->second.inv();
  for (auto& [k, c] : r.remainder) c *= scale;
  for (auto& c : combo) c *= scale;

  for (std::size_t row = 0; row < rows_.size(); ++row) {
    auto it = rows_[row].find(pivot);
    if (it == rows_[row].end()) continue;
    const GaussianRational t = it->second;
    axpy(rows_[row], -t, r.remainder);
    axpy(combos_[row], -t, combo);
  }
  for (auto& c : combos_) c.resize(d + 1);
  pivot_row_.emplace(pivot, rows_.size());
  rows_.push_back(std::move(r.remainder));
  combos_.push_back(std::move(combo));
  return true;
}

}  // namespace weylkit
