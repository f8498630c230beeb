#include "bhh/exactlin/matrix.hpp"

#include <algorithm>

namespace bhh {

Vec zero_vec(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i) {
  Vec v = zero_vec(f, n);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec scaled(const Vec& v, const Scalar& s) {
  Vec r = v;
  for (auto& x : r) x *= s;
  return r;
}

void axpy(Vec& y, const Scalar& a, const Vec& x) {
  if (y.size() != x.size()) throw DimensionMismatch("vector sizes differ");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.push_back({i, v[i]});
  return s;
}

Vec to_dense(const SparseVec& v, const FieldSpec& f, std::size_t n) {
  Vec d = zero_vec(f, n);
  for (const auto& e : v) d.at(e.index) = e.value;
  return d;
}

SparseVec sparse_axpy(const SparseVec& x, const Scalar& a, const SparseVec& y) {
  SparseVec r;
  r.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].index < y[j].index)) {
      r.push_back(x[i++]);
    } else if (i == x.size() || y[j].index < x[i].index) {
      r.push_back({y[j].index, a * y[j].value});
      ++j;
    } else {
      Scalar s = x[i].value + a * y[j].value;
      if (!s.is_zero()) r.push_back({x[i].index, std::move(s)});
      ++i;
      ++j;
    }
  }
  return r;
}

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), cols_data_(cols) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.cols_data_[i].push_back({i, Scalar::one(f)});
  return m;
}

Matrix Matrix::from_triplets(const FieldSpec& f, std::size_t rows, std::size_t cols, std::vector<Triplet> entries) {
  Matrix m(f, rows, cols);
  std::sort(entries.begin(), entries.end(), [](const Triplet& a, const Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
  });
  for (std::size_t k = 0; k < entries.size();) {
    std::size_t r = entries[k].row, c = entries[k].col;
    if (r >= rows || c >= cols) throw DimensionMismatch("triplet out of range");
    Scalar s = entries[k].value;
    ++k;
    while (k < entries.size() && entries[k].row == r && entries[k].col == c) s += entries[k++].value;
    if (!s.is_zero()) m.cols_data_[c].push_back({r, std::move(s)});
  }
  return m;
}

Matrix Matrix::from_columns(const FieldSpec& f, std::size_t rows, std::vector<SparseVec> cols) {
  Matrix m(f, rows, cols.size());
  for (auto& c : cols)
    if (!c.empty() && c.back().index >= rows) throw DimensionMismatch("column entry out of range");
  m.cols_data_ = std::move(cols);
  return m;
}

Matrix Matrix::from_dense_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vec>& cols) {
  std::vector<SparseVec> s;
  s.reserve(cols.size());
  for (const auto& c : cols) {
    if (c.size() != rows) throw DimensionMismatch("column length mismatch");
    s.push_back(to_sparse(c));
  }
  return from_columns(f, rows, std::move(s));
}

Matrix Matrix::from_ints(const FieldSpec& f, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  std::vector<Triplet> t;
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) {
      if (v != 0) t.push_back({i, j, Scalar(f, v)});
      ++j;
    }
    ++i;
  }
  return from_triplets(f, r, c, std::move(t));
}

Matrix Matrix::column_vector(const Vec& v) {
  FieldSpec f = v.empty() ? FieldSpec() : v.front().field();
  return from_columns(f, v.size(), {to_sparse(v)});
}

Matrix Matrix::row_vector(const Vec& v) { return column_vector(v).transpose(); }

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_data_) n += c.size();
  return n;
}

Vec Matrix::dense_column(std::size_t j) const { return to_dense(cols_data_.at(j), field_, rows_); }

Scalar Matrix::at(std::size_t i, std::size_t j) const {
  const auto& c = cols_data_.at(j);
  auto it = std::lower_bound(c.begin(), c.end(), i, [](const SparseEntry& e, std::size_t k) { return e.index < k; });
  if (it != c.end() && it->index == i) return it->value;
  return Scalar::zero(field_);
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("apply: vector length " + std::to_string(v.size()) + " vs " + std::to_string(cols_));
  Vec r = zero_vec(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (const auto& e : cols_data_[j]) r[e.index] += e.value * v[j];
  }
  return r;
}

SparseVec Matrix::apply(const SparseVec& v) const {
  Vec r = zero_vec(field_, rows_);
  for (const auto& x : v)
    for (const auto& e : cols_data_.at(x.index)) r[e.index] += e.value * x.value;
  return to_sparse(r);
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : cols_data_[j]) t.cols_data_[e.index].push_back({j, e.value});
  return t;
}

std::vector<SparseVec> Matrix::sparse_rows() const { return transpose().cols_data_; }

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape mismatch");
  if (!(field_ == o.field_)) throw FieldMismatch();
  for (std::size_t j = 0; j < cols_; ++j) cols_data_[j] = sparse_axpy(cols_data_[j], Scalar::one(field_), o.cols_data_[j]);
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix difference shape mismatch");
  if (!(field_ == o.field_)) throw FieldMismatch();
  for (std::size_t j = 0; j < cols_; ++j) cols_data_[j] = sparse_axpy(cols_data_[j], Scalar(field_, -1), o.cols_data_[j]);
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("matrix product " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) + " * " +
                            std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  if (!(a.field_ == b.field_)) throw FieldMismatch();
  Matrix r(a.field_, a.rows_, b.cols_);
  Vec acc = zero_vec(a.field_, a.rows_);
  std::vector<char> touched(a.rows_, 0);
  std::vector<std::size_t> list;
  for (std::size_t j = 0; j < b.cols_; ++j) {
    list.clear();
    for (const auto& bk : b.cols_data_[j]) {
      for (const auto& ai : a.cols_data_[bk.index]) {
        if (!touched[ai.index]) {
          touched[ai.index] = 1;
          list.push_back(ai.index);
          acc[ai.index] = ai.value * bk.value;
        } else {
          acc[ai.index] += ai.value * bk.value;
        }
      }
    }
    std::sort(list.begin(), list.end());
    auto& col = r.cols_data_[j];
    for (std::size_t i : list) {
      if (!acc[i].is_zero()) col.push_back({i, acc[i]});
      touched[i] = 0;
    }
  }
  return r;
}

Matrix operator*(const Scalar& s, const Matrix& m) {
  Matrix r(m.field_, m.rows_, m.cols_);
  if (s.is_zero()) return r;
  for (std::size_t j = 0; j < m.cols_; ++j) {
    r.cols_data_[j] = m.cols_data_[j];
    for (auto& e : r.cols_data_[j]) e.value *= s;
  }
  return r;
}

bool operator==(const Matrix& a, const Matrix& b) {
  auto d = a.first_difference(b);
  return d.first == a.rows_ && d.second == a.cols_;
}

std::pair<std::size_t, std::size_t> Matrix::first_difference(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return {0, 0};
  for (std::size_t j = 0; j < cols_; ++j) {
    const auto& x = cols_data_[j];
    const auto& y = o.cols_data_[j];
    std::size_t n = std::min(x.size(), y.size());
    for (std::size_t k = 0; k < n; ++k) {
      if (x[k].index != y[k].index) return {std::min(x[k].index, y[k].index), j};
      if (!(x[k].value == y[k].value)) return {x[k].index, j};
    }
    if (x.size() > n) return {x[n].index, j};
    if (y.size() > n) return {y[n].index, j};
  }
  return {rows_, cols_};
}

Matrix kron(const Matrix& f, const Matrix& g) {
  if (!(f.field() == g.field())) throw FieldMismatch();
  Matrix r(f.field(), f.rows() * g.rows(), f.cols() * g.cols());
  std::vector<SparseVec> cols(r.cols());
  for (std::size_t j1 = 0; j1 < f.cols(); ++j1) {
    for (std::size_t j2 = 0; j2 < g.cols(); ++j2) {
      auto& c = cols[j1 * g.cols() + j2];
      c.reserve(f.column(j1).size() * g.column(j2).size());
      for (const auto& a : f.column(j1))
        for (const auto& b : g.column(j2)) c.push_back({a.index * g.rows() + b.index, a.value * b.value});
    }
  }
  return Matrix::from_columns(f.field(), r.rows(), std::move(cols));
}

Matrix kron_all(const std::vector<const Matrix*>& factors) {
  if (factors.empty()) throw DimensionMismatch("kron_all of nothing");
  Matrix r = *factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) r = kron(r, *factors[i]);
  return r;
}

Matrix flip(const FieldSpec& f, std::size_t dim_v, std::size_t dim_w) {
  std::vector<Triplet> t;
  t.reserve(dim_v * dim_w);
  for (std::size_t v = 0; v < dim_v; ++v)
    for (std::size_t w = 0; w < dim_w; ++w) t.push_back({w * dim_v + v, v * dim_w + w, Scalar::one(f)});
  return Matrix::from_triplets(f, dim_v * dim_w, dim_v * dim_w, std::move(t));
}

Matrix permute_factors(const FieldSpec& f, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
  std::size_t k = dims.size();
  if (perm.size() != k) throw DimensionMismatch("permutation length");
  std::size_t total = 1;
  for (auto d : dims) total *= d;
  // stride of each input factor
  std::vector<std::size_t> stride(k, 1);
  for (std::size_t i = k; i-- > 1;) stride[i - 1] = stride[i] * dims[i];
  std::vector<std::size_t> out_dims(k);
  for (std::size_t t = 0; t < k; ++t) out_dims[t] = dims[perm[t]];
  std::vector<SparseVec> cols(total);
  std::vector<std::size_t> digit(k, 0);
  for (std::size_t out = 0; out < total; ++out) {
    std::size_t in = 0;
    for (std::size_t t = 0; t < k; ++t) in += digit[t] * stride[perm[t]];
    cols[in].push_back({out, Scalar::one(f)});
    for (std::size_t t = k; t-- > 0;) {
      if (++digit[t] < out_dims[t]) break;
      digit[t] = 0;
    }
  }
  return Matrix::from_columns(f, total, std::move(cols));
}

Vec kron_vec(const Vec& a, const Vec& b) {
  Vec r;
  r.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) r.push_back(x * y);
  return r;
}

std::vector<std::size_t> multi_index(std::size_t idx, std::size_t base, std::size_t n) {
  std::vector<std::size_t> d(n);
  for (std::size_t i = n; i-- > 0;) {
    d[i] = idx % base;
    idx /= base;
  }
  return d;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw DimensionMismatch("hstack of nothing");
  std::vector<SparseVec> cols;
  for (const auto& b : blocks) {
    if (b.rows() != blocks.front().rows()) throw DimensionMismatch("hstack row mismatch");
    for (std::size_t j = 0; j < b.cols(); ++j) cols.push_back(b.column(j));
  }
  return Matrix::from_columns(blocks.front().field(), blocks.front().rows(), std::move(cols));
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  std::vector<Matrix> t;
  t.reserve(blocks.size());
  for (const auto& b : blocks) t.push_back(b.transpose());
  return hstack(t).transpose();
}

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) throw ResourceCap("dimension " + std::to_string(base) + "^" + std::to_string(exp) + " exceeds cap");
    r *= base;
  }
  return r;
}

}  // namespace bhh
