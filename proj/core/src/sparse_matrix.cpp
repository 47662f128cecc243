#include "weylkit/sparse_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace weylkit {

SparseRationalMatrix::SparseRationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows) {}

std::size_t SparseRationalMatrix::nonzeros() const {
  std::size_t total = 0;
  for (const auto& r : data_) total += r.size();
  return total;
}

void SparseRationalMatrix::add(std::size_t r, std::size_t c, const GaussianRational& v) {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("sparse matrix index out of range");
  if (v.is_zero()) return;
  auto [it, inserted] = data_[r].try_emplace(c, v);
  if (!inserted) {
    it->second += v;
    if (it->second.is_zero()) data_[r].erase(it);
  }
}

GaussianRational SparseRationalMatrix::at(std::size_t r, std::size_t c) const {
  auto it = data_.at(r).find(c);
  return it == data_[r].end() ? GaussianRational() : it->second;
}

std::vector<MatrixEntry> SparseRationalMatrix::entries() const {
  std::vector<MatrixEntry> out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) out.push_back({r, c, v});
  return out;
}

SparseRationalMatrix SparseRationalMatrix::stacked(const SparseRationalMatrix& other) const {
  if (other.cols_ != cols_) throw std::invalid_argument("stacked: column count mismatch");
  SparseRationalMatrix out(rows_ + other.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + rows_);
  return out;
}

namespace {

struct GaussInt {
  BigInteger re, im;
  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

using IntRow = std::vector<std::pair<std::size_t, GaussInt>>;

IntRow to_integer_row(const std::map<std::size_t, GaussianRational>& row) {
  BigInteger l = 1;
  for (const auto& [c, v] : row) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.re().get_den_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.im().get_den_mpz_t());
  }
  IntRow out;
  out.reserve(row.size());
  for (const auto& [c, v] : row) {
    BigRational re = v.re() * l, im = v.im() * l;
    out.push_back({c, {re.get_num(), im.get_num()}});
  }
  return out;
}

void remove_content(IntRow& row) {
  BigInteger g = 0;
  for (const auto& [c, v] : row) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.re.get_mpz_t());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.im.get_mpz_t());
    if (g == 1) return;
  }
  if (sgn(g) == 0 || g == 1) return;
  for (auto& [c, v] : row) {
    mpz_divexact(v.re.get_mpz_t(), v.re.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(v.im.get_mpz_t(), v.im.get_mpz_t(), g.get_mpz_t());
  }
}

// p*target - a*pivot, merged over sorted columns.
IntRow combine(const IntRow& target, const GaussInt& p, const IntRow& pivot, const GaussInt& a) {
  IntRow out;
  out.reserve(target.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < target.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < target.size() && target[i].first < pivot[j].first)) {
      out.push_back({target[i].first, mul(p, target[i].second)});
      ++i;
    } else if (i == target.size() || pivot[j].first < target[i].first) {
      GaussInt v = mul(a, pivot[j].second);
      out.push_back({pivot[j].first, {-v.re, -v.im}});
      ++j;
    } else {
      GaussInt x = mul(p, target[i].second);
      GaussInt y = mul(a, pivot[j].second);
      GaussInt v{x.re - y.re, x.im - y.im};
      if (!v.is_zero()) out.push_back({target[i].first, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}

const GaussInt* find_col(const IntRow& row, std::size_t col) {
  auto it = std::lower_bound(row.begin(), row.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  return (it != row.end() && it->first == col) ? &it->second : nullptr;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

// Rank of one connected block; rows are consumed.
std::size_t eliminate_block(std::vector<IntRow> rows) {
  std::map<std::size_t, std::set<std::size_t>> col_rows;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);

  std::size_t rank = 0;
  while (true) {
    // Markowitz-style choice: sparsest column, then sparsest row in it.
    std::size_t best_col = 0, best_count = 0;
    for (auto it = col_rows.begin(); it != col_rows.end();) {
      if (it->second.empty()) {
        it = col_rows.erase(it);
        continue;
      }
      if (best_count == 0 || it->second.size() < best_count) {
        best_col = it->first;
        best_count = it->second.size();
        if (best_count == 1) break;
      }
      ++it;
    }
    if (best_count == 0) break;

    const std::set<std::size_t> members = col_rows[best_col];
    std::size_t prow = *members.begin();
    for (std::size_t r : members)
      if (rows[r].size() < rows[prow].size()) prow = r;

    const GaussInt p = *find_col(rows[prow], best_col);
    for (std::size_t r : members) {
      if (r == prow) continue;
      const GaussInt a = *find_col(rows[r], best_col);
      for (const auto& [c, v] : rows[r]) col_rows[c].erase(r);
      rows[r] = combine(rows[r], p, rows[prow], a);
      remove_content(rows[r]);
      for (const auto& [c, v] : rows[r]) col_rows[c].insert(r);
    }
    for (const auto& [c, v] : rows[prow]) col_rows[c].erase(prow);
    rows[prow].clear();
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t rank(const SparseRationalMatrix& m) {
  // Union columns that share a row; each component is an independent block.
  std::vector<std::size_t> parent(m.cols());
  std::iota(parent.begin(), parent.end(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    if (row.empty()) continue;
    const std::size_t first = find_root(parent, row.begin()->first);
    for (const auto& [c, v] : row) parent[find_root(parent, c)] = first;
  }
  std::map<std::size_t, std::vector<IntRow>> blocks;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const auto& row = m.row(r);
    if (row.empty()) continue;
    IntRow ir = to_integer_row(row);
    remove_content(ir);
    blocks[find_root(parent, row.begin()->first)].push_back(std::move(ir));
  }
  std::size_t total = 0;
  for (auto& [root, rows] : blocks) total += eliminate_block(std::move(rows));
  return total;
}

std::vector<std::vector<GaussianRational>> nullspace(const SparseRationalMatrix& m) {
  const std::size_t R = m.rows(), C = m.cols();
  // Dense copy scaled to Gaussian integers row by row.
  std::vector<std::vector<GaussianRational>> a(R, std::vector<GaussianRational>(C));
  for (std::size_t r = 0; r < R; ++r) {
    IntRow ir = to_integer_row(m.row(r));
    for (auto& [c, v] : ir) a[r][c] = GaussianRational(BigRational(v.re), BigRational(v.im));
  }
  // Bareiss: a[i][j] <- (a[k][k] a[i][j] - a[i][k] a[k][j]) / previous pivot, exact in Z[i].
  std::vector<std::size_t> pivot_cols;
  GaussianRational prev = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < C && row < R; ++col) {
    std::size_t p = row;
    while (p < R && a[p][col].is_zero()) ++p;
    if (p == R) continue;
    std::swap(a[p], a[row]);
    const GaussianRational piv = a[row][col];
    for (std::size_t i = row + 1; i < R; ++i) {
      for (std::size_t j = col + 1; j < C; ++j) {
        a[i][j] = (piv * a[i][j] - a[i][col] * a[row][j]) / prev;
      }
      a[i][col] = 0;
    }
    prev = piv;
    pivot_cols.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(C, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<GaussianRational>> basis;
  for (std::size_t free = 0; free < C; ++free) {
    if (is_pivot[free]) continue;
    std::vector<GaussianRational> x(C);
    x[free] = 1;
    for (std::size_t r = pivot_cols.size(); r-- > 0;) {
      const std::size_t pc = pivot_cols[r];
      GaussianRational s;
      for (std::size_t c = pc + 1; c < C; ++c)
        if (!a[r][c].is_zero() && !x[c].is_zero()) s += a[r][c] * x[c];
      x[pc] = -s / a[r][pc];
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace weylkit
