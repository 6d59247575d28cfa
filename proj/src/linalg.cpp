#include "strathom/linalg.hpp"

#include <algorithm>
#include <unordered_map>

namespace strathom {

void SparseMatQ::require_finalized() const {
  if (!finalized_) throw std::logic_error("SparseMatQ used before finalize()");
}

SparseMatQ SparseMatQ::identity(int n) {
  SparseMatQ m(n, n);
  for (int i = 0; i < n; ++i) m.col_[i].push_back({i, Q(1)});
  return m;
}

void SparseMatQ::add(int r, int c, Q v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("SparseMatQ::add");
  if (v == 0) return;
  col_[c].push_back({r, std::move(v)});
  finalized_ = false;
}

void SparseMatQ::finalize() {
  for (auto& c : col_) {
    std::sort(c.begin(), c.end(), [](const Entry& a, const Entry& b) { return a.row < b.row; });
    Column out;
    out.reserve(c.size());
    for (auto& e : c) {
      if (!out.empty() && out.back().row == e.row)
        out.back().val += e.val;
      else
        out.push_back(std::move(e));
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const Entry& e) { return e.val == 0; }), out.end());
    c = std::move(out);
  }
  finalized_ = true;
}

Q SparseMatQ::at(int r, int c) const {
  require_finalized();
  const auto& cc = col_[c];
  auto it = std::lower_bound(cc.begin(), cc.end(), r,
                             [](const Entry& e, int row) { return e.row < row; });
  if (it != cc.end() && it->row == r) return it->val;
  return Q(0);
}

std::size_t SparseMatQ::nnz() const {
  std::size_t n = 0;
  for (const auto& c : col_) n += c.size();
  return n;
}

bool SparseMatQ::is_zero() const {
  for (const auto& c : col_)
    if (!c.empty()) return false;
  return true;
}

SparseMatQ SparseMatQ::transpose() const {
  require_finalized();
  SparseMatQ t(cols_, rows_);
  for (int c = 0; c < cols_; ++c)
    for (const auto& e : col_[c]) t.col_[e.row].push_back({c, e.val});
  // Columns of t were filled in increasing row order already.
  return t;
}

namespace {
// dst += a * src, both sorted sparse columns.
SparseMatQ::Column axpy(const SparseMatQ::Column& dst, const Q& a, const SparseMatQ::Column& src) {
  SparseMatQ::Column out;
  out.reserve(dst.size() + src.size());
  std::size_t i = 0, j = 0;
  while (i < dst.size() || j < src.size()) {
    if (j == src.size() || (i < dst.size() && dst[i].row < src[j].row)) {
      out.push_back(dst[i++]);
    } else if (i == dst.size() || src[j].row < dst[i].row) {
      Q v = a * src[j].val;
      if (v != 0) out.push_back({src[j].row, std::move(v)});
      ++j;
    } else {
      Q v = dst[i].val + a * src[j].val;
      if (v != 0) out.push_back({dst[i].row, std::move(v)});
      ++i;
      ++j;
    }
  }
  return out;
}
}  // namespace

SparseMatQ SparseMatQ::operator*(const SparseMatQ& rhs) const {
  require_finalized();
  rhs.require_finalized();
  if (cols_ != rhs.rows_) throw std::invalid_argument("SparseMatQ::operator*: shape");
  SparseMatQ out(rows_, rhs.cols_);
  for (int c = 0; c < rhs.cols_; ++c) {
    Column acc;
    for (const auto& e : rhs.col_[c]) acc = axpy(acc, e.val, col_[e.row]);
    out.col_[c] = std::move(acc);
  }
  return out;
}

SparseMatQ SparseMatQ::operator+(const SparseMatQ& rhs) const {
  require_finalized();
  rhs.require_finalized();
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("SparseMatQ::operator+: shape");
  SparseMatQ out(rows_, cols_);
  for (int c = 0; c < cols_; ++c) out.col_[c] = axpy(col_[c], Q(1), rhs.col_[c]);
  return out;
}

SparseMatQ SparseMatQ::operator-(const SparseMatQ& rhs) const {
  require_finalized();
  rhs.require_finalized();
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw std::invalid_argument("SparseMatQ::operator-: shape");
  SparseMatQ out(rows_, cols_);
  for (int c = 0; c < cols_; ++c) out.col_[c] = axpy(col_[c], Q(-1), rhs.col_[c]);
  return out;
}

SparseMatQ SparseMatQ::scaled(const Q& a) const {
  require_finalized();
  SparseMatQ out(rows_, cols_);
  if (a == 0) return out;
  for (int c = 0; c < cols_; ++c) {
    out.col_[c] = col_[c];
    for (auto& e : out.col_[c]) e.val *= a;
  }
  return out;
}

bool SparseMatQ::operator==(const SparseMatQ& rhs) const {
  require_finalized();
  rhs.require_finalized();
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) return false;
  for (int c = 0; c < cols_; ++c) {
    if (col_[c].size() != rhs.col_[c].size()) return false;
    for (std::size_t i = 0; i < col_[c].size(); ++i)
      if (col_[c][i].row != rhs.col_[c][i].row || col_[c][i].val != rhs.col_[c][i].val) return false;
  }
  return true;
}

SparseMatQ SparseMatQ::hcat(const SparseMatQ& rhs) const {
  require_finalized();
  rhs.require_finalized();
  if (rows_ != rhs.rows_) throw std::invalid_argument("SparseMatQ::hcat: rows");
  SparseMatQ out(rows_, cols_ + rhs.cols_);
  for (int c = 0; c < cols_; ++c) out.col_[c] = col_[c];
  for (int c = 0; c < rhs.cols_; ++c) out.col_[cols_ + c] = rhs.col_[c];
  return out;
}

SparseMatQ SparseMatQ::vcat(const SparseMatQ& rhs) const {
  require_finalized();
  rhs.require_finalized();
  if (cols_ != rhs.cols_) throw std::invalid_argument("SparseMatQ::vcat: cols");
  SparseMatQ out(rows_ + rhs.rows_, cols_);
  for (int c = 0; c < cols_; ++c) {
    out.col_[c] = col_[c];
    for (const auto& e : rhs.col_[c]) out.col_[c].push_back({rows_ + e.row, e.val});
  }
  return out;
}

SparseMatQ SparseMatQ::select_columns(const std::vector<int>& idx) const {
  require_finalized();
  SparseMatQ out(rows_, static_cast<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out.col_[i] = col_[idx[i]];
  return out;
}

SparseMatQ SparseMatQ::select_rows(const std::vector<int>& idx) const {
  require_finalized();
  std::vector<int> newrow(rows_, -1);
  for (std::size_t i = 0; i < idx.size(); ++i) newrow[idx[i]] = static_cast<int>(i);
  SparseMatQ out(static_cast<int>(idx.size()), cols_);
  for (int c = 0; c < cols_; ++c) {
    for (const auto& e : col_[c])
      if (newrow[e.row] >= 0) out.col_[c].push_back({newrow[e.row], e.val});
    std::sort(out.col_[c].begin(), out.col_[c].end(),
              [](const Entry& a, const Entry& b) { return a.row < b.row; });
  }
  return out;
}

std::vector<Q> SparseMatQ::apply(const std::vector<Q>& x) const {
  require_finalized();
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("SparseMatQ::apply: shape");
  std::vector<Q> y(rows_, Q(0));
  for (int c = 0; c < cols_; ++c) {
    if (x[c] == 0) continue;
    for (const auto& e : col_[c]) y[e.row] += e.val * x[c];
  }
  return y;
}

namespace {
// Shared column-reduction core (persistence-style: pivot on the largest row).
// If kernel != nullptr, combination vectors over the original columns are
// tracked and zero-reductions are emitted as kernel basis columns.
int reduce_columns(const SparseMatQ& m, std::vector<SparseMatQ::Column>* kernel) {
  using Column = SparseMatQ::Column;
  std::unordered_map<int, int> pivot_of_row;  // low row -> index in stored
  std::vector<Column> stored;
  std::vector<Column> stored_comb;
  int rank = 0;
  for (int j = 0; j < m.cols(); ++j) {
    Column cur = m.column(j);
    Column comb;
    if (kernel) comb.push_back({j, Q(1)});
    while (!cur.empty()) {
      int low = cur.back().row;
      auto it = pivot_of_row.find(low);
      if (it == pivot_of_row.end()) break;
      const Column& piv = stored[it->second];
      Q factor = -cur.back().val / piv.back().val;
      cur = axpy(cur, factor, piv);
      if (kernel) comb = axpy(comb, factor, stored_comb[it->second]);
    }
    if (cur.empty()) {
      if (kernel) kernel->push_back(std::move(comb));
    } else {
      pivot_of_row[cur.back().row] = static_cast<int>(stored.size());
      stored.push_back(std::move(cur));
      if (kernel) stored_comb.push_back(std::move(comb));
      ++rank;
    }
  }
  return rank;
}
}  // namespace

int SparseMatQ::rank() const {
  require_finalized();
  return reduce_columns(*this, nullptr);
}

SparseMatQ SparseMatQ::kernel_basis(std::vector<int>* free_cols) const {
  require_finalized();
  std::vector<Column> ker;
  reduce_columns(*this, &ker);
  SparseMatQ out(cols_, static_cast<int>(ker.size()));
  if (free_cols) free_cols->clear();
  for (std::size_t i = 0; i < ker.size(); ++i) {
    if (free_cols) free_cols->push_back(ker[i].back().row);  // the generating column
    out.col_[i] = std::move(ker[i]);
  }
  return out;
}

DenseMatQ DenseMatQ::identity(int n) {
  DenseMatQ m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = Q(1);
  return m;
}

DenseMatQ DenseMatQ::from_sparse(const SparseMatQ& m) {
  DenseMatQ d(m.rows(), m.cols());
  for (int c = 0; c < m.cols(); ++c)
    for (const auto& e : m.column(c)) d(e.row, c) = e.val;
  return d;
}

DenseMatQ DenseMatQ::operator*(const DenseMatQ& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("DenseMatQ::operator*: shape");
  DenseMatQ out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Q& v = (*this)(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) {
        if (rhs(k, j) == 0) continue;
        out(i, j) += v * rhs(k, j);
      }
    }
  return out;
}

DenseMatQ DenseMatQ::hcat(const DenseMatQ& rhs) const {
  if (rows_ != rhs.rows_) throw std::invalid_argument("DenseMatQ::hcat: rows");
  DenseMatQ out(rows_, cols_ + rhs.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (int j = 0; j < rhs.cols_; ++j) out(i, cols_ + j) = rhs(i, j);
  }
  return out;
}

bool DenseMatQ::operator==(const DenseMatQ& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

std::vector<std::pair<int, int>> DenseMatQ::echelon(DenseMatQ& m) {
  std::vector<std::pair<int, int>> pivots;
  int r = 0;
  for (int c = 0; c < m.cols_ && r < m.rows_; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows_; ++i)
      if (m(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols_; ++j) std::swap(m(pr, j), m(r, j));
    Q inv = Q(1) / m(r, c);
    for (int j = c; j < m.cols_; ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows_; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Q f = m(i, c);
      for (int j = c; j < m.cols_; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  return pivots;
}

int DenseMatQ::rank() const {
  DenseMatQ w(*this);
  return static_cast<int>(echelon(w).size());
}

std::vector<int> DenseMatQ::pivot_columns() const {
  DenseMatQ w(*this);
  auto p = echelon(w);
  std::vector<int> out;
  out.reserve(p.size());
  for (auto& pc : p) out.push_back(pc.second);
  return out;
}

DenseMatQ DenseMatQ::kernel_basis() const {
  DenseMatQ w(*this);
  auto pivots = echelon(w);
  std::vector<bool> is_pivot(cols_, false);
  for (auto& p : pivots) is_pivot[p.second] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  DenseMatQ k(cols_, static_cast<int>(free_cols.size()));
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    int fc = free_cols[fi];
    k(fc, static_cast<int>(fi)) = Q(1);
    for (auto& p : pivots) k(p.second, static_cast<int>(fi)) = -w(p.first, fc);
  }
  return k;
}

std::optional<std::vector<Q>> DenseMatQ::solve(const std::vector<Q>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw std::invalid_argument("DenseMatQ::solve: shape");
  DenseMatQ aug(rows_, cols_ + 1);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
    aug(i, cols_) = b[i];
  }
  auto pivots = echelon(aug);
  std::vector<Q> x(cols_, Q(0));
  for (auto& p : pivots) {
    if (p.second == cols_) return std::nullopt;  // pivot in the rhs column
    x[p.second] = aug(p.first, cols_);
  }
  return x;
}

std::optional<DenseMatQ> DenseMatQ::solve(const DenseMatQ& b) const {
  if (b.rows() != rows_) throw std::invalid_argument("DenseMatQ::solve: shape");
  DenseMatQ x(cols_, b.cols());
  for (int j = 0; j < b.cols(); ++j) {
    auto xx = solve(b.column_vec(j));
    if (!xx) return std::nullopt;
    for (int i = 0; i < cols_; ++i) x(i, j) = (*xx)[i];
  }
  return x;
}

std::vector<Q> DenseMatQ::column_vec(int c) const {
  std::vector<Q> v(rows_);
  for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

}  // namespace strathom
