#include "rhc/sparse_matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace rhc {

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.data_[i].emplace_back(i, Rational(1));
  return m;
}

void SparseMatrix::set(int r, int c, const Rational& v) {
  auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) {
    if (v.is_zero()) row.erase(it);
    else it->second = v;
  } else if (!v.is_zero()) {
    row.insert(it, {c, v});
  }
}

Rational SparseMatrix::get(int r, int c) const {
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c,
                             [](const auto& e, int col) { return e.first < col; });
  if (it != row.end() && it->first == c) return it->second;
  return Rational(0);
}

int SparseMatrix::nnz() const {
  int total = 0;
  for (const auto& row : data_) total += static_cast<int>(row.size());
  return total;
}

bool SparseMatrix::is_zero() const { return nnz() == 0; }

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c].emplace_back(r, v);
  return t;  // columns visited in increasing r, so each row stays sorted
}

// a + b_scale * b, both sorted.
SparseRow add_rows(const SparseRow& a, const SparseRow& b, const Rational& b_scale) {
  SparseRow out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Rational v = b_scale * b[j].second;
      if (!v.is_zero()) out.emplace_back(b[j].first, v);
      ++j;
    } else {
      Rational v = a[i].second + b_scale * b[j].second;
      if (!v.is_zero()) out.emplace_back(a[i].first, v);
      ++i, ++j;
    }
  }
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("SparseMatrix: dimension mismatch in product");
  SparseMatrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r) {
    SparseRow acc;
    for (const auto& [k, v] : data_[r]) acc = add_rows(acc, o.data_[k], v);
    out.data_[r] = std::move(acc);
  }
  return out;
}

SparseMatrix SparseMatrix::operator+(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("SparseMatrix: dimension mismatch in sum");
  SparseMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r) out.data_[r] = add_rows(data_[r], o.data_[r], Rational(1));
  return out;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("SparseMatrix: dimension mismatch in difference");
  SparseMatrix out(rows_, cols_);
  for (int r = 0; r < rows_; ++r) out.data_[r] = add_rows(data_[r], o.data_[r], Rational(-1));
  return out;
}

SparseMatrix SparseMatrix::scaled(const Rational& c) const {
  SparseMatrix out(rows_, cols_);
  if (c.is_zero()) return out;
  for (int r = 0; r < rows_; ++r) {
    out.data_[r] = data_[r];
    for (auto& e : out.data_[r]) e.second *= c;
  }
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

SparseMatrix SparseMatrix::direct_sum(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r) out.data_[r] = a.data_[r];
  for (int r = 0; r < b.rows_; ++r) {
    out.data_[a.rows_ + r] = b.data_[r];
    for (auto& e : out.data_[a.rows_ + r]) e.first += a.cols_;
  }
  return out;
}

SparseMatrix SparseMatrix::vstack(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.cols_) throw std::invalid_argument("SparseMatrix: vstack column mismatch");
  SparseMatrix out(a.rows_ + b.rows_, a.cols_);
  for (int r = 0; r < a.rows_; ++r) out.data_[r] = a.data_[r];
  for (int r = 0; r < b.rows_; ++r) out.data_[a.rows_ + r] = b.data_[r];
  return out;
}

SparseMatrix SparseMatrix::hstack(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_) throw std::invalid_argument("SparseMatrix: hstack row mismatch");
  SparseMatrix out(a.rows_, a.cols_ + b.cols_);
  for (int r = 0; r < a.rows_; ++r) {
    out.data_[r] = a.data_[r];
    for (const auto& [c, v] : b.data_[r]) out.data_[r].emplace_back(c + a.cols_, v);
  }
  return out;
}

void SparseMatrix::insert_block(int r0, int c0, const SparseMatrix& block) {
  for (int r = 0; r < block.rows_; ++r)
    for (const auto& [c, v] : block.data_[r]) set(r0 + r, c0 + c, v);
}

std::vector<Rational> SparseMatrix::apply(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != cols_)
    throw std::invalid_argument("SparseMatrix: apply dimension mismatch");
  std::vector<Rational> y(rows_, Rational(0));
  for (int r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
  return y;
}

Echelon SparseMatrix::echelon() const {
  // forward phase: reduce each row against the pivot rows found so far
  std::vector<SparseRow> reduced;
  std::vector<int> row_of_pivot(cols_, -1);
  for (const SparseRow& src : data_) {
    SparseRow v = src;
    while (!v.empty()) {
      int p = v.front().first;
      int idx = row_of_pivot[p];
      if (idx < 0) break;
      v = add_rows(v, reduced[idx], -v.front().second);
    }
    if (v.empty()) continue;
    Rational inv = Rational(1) / v.front().second;
    for (auto& e : v) e.second *= inv;
    row_of_pivot[v.front().first] = static_cast<int>(reduced.size());
    reduced.push_back(std::move(v));
  }

  std::vector<int> pivots;
  for (int c = 0; c < cols_; ++c)
    if (row_of_pivot[c] >= 0) pivots.push_back(c);

  // back substitution, largest pivot first; finished rows hold no other
  // pivot column, so one pass over each row's tail suffices
  for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
    SparseRow& row = reduced[row_of_pivot[pivots[k]]];
    SparseRow tail_pivots;
    for (size_t i = 1; i < row.size(); ++i)
      if (row_of_pivot[row[i].first] >= 0) tail_pivots.push_back(row[i]);
    for (const auto& [c, v] : tail_pivots)
      row = add_rows(row, reduced[row_of_pivot[c]], -v);
  }

  SparseMatrix rref(rows_, cols_);
  for (size_t k = 0; k < pivots.size(); ++k)
    rref.data_[k] = std::move(reduced[row_of_pivot[pivots[k]]]);
  return {std::move(rref), std::move(pivots)};
}

int SparseMatrix::rank() const { return static_cast<int>(echelon().pivot_cols.size()); }

SparseMatrix SparseMatrix::kernel_basis() const {
  Echelon e = echelon();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : e.pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  std::vector<int> coord_of(cols_, -1);
  for (size_t k = 0; k < free_cols.size(); ++k) coord_of[free_cols[k]] = static_cast<int>(k);

  // pivot-variable coordinates: x_{p_i} = -rref[i][f]; gather by scanning
  // the echelon rows once
  SparseMatrix basis(static_cast<int>(free_cols.size()), cols_);
  std::vector<SparseRow> vecs(free_cols.size());
  for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
    for (const auto& [c, v] : e.rref.row(static_cast<int>(i))) {
      if (coord_of[c] >= 0) vecs[coord_of[c]].emplace_back(e.pivot_cols[i], -v);
    }
  }
  for (size_t k = 0; k < free_cols.size(); ++k) {
    SparseRow& vec = vecs[k];
    vec.emplace_back(free_cols[k], Rational(1));
    std::sort(vec.begin(), vec.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.data_[k] = std::move(vec);
  }
  return basis;
}

SparseMatrix SparseMatrix::image_basis() const {
  Echelon e = transpose().echelon();
  int r = static_cast<int>(e.pivot_cols.size());
  SparseMatrix out(r, rows_);
  for (int i = 0; i < r; ++i) out.data_[i] = e.rref.data_[i];
  return out;
}

std::optional<std::vector<Rational>> SparseMatrix::solve(const std::vector<Rational>& b) const {
  if (static_cast<int>(b.size()) != rows_)
    throw std::invalid_argument("SparseMatrix: solve dimension mismatch");
  SparseMatrix rhs(rows_, 1);
  for (int r = 0; r < rows_; ++r) rhs.set(r, 0, b[r]);
  Echelon e = hstack(*this, rhs).echelon();
  std::vector<Rational> x(cols_, Rational(0));
  for (size_t i = 0; i < e.pivot_cols.size(); ++i) {
    if (e.pivot_cols[i] == cols_) return std::nullopt;  // pivot in the RHS column
    x[e.pivot_cols[i]] = e.rref.get(static_cast<int>(i), cols_);
  }
  return x;
}

}  // namespace rhc
