#include "bhh/exactlin/linalg.hpp"

#include <algorithm>
#include <numeric>

namespace bhh {

EchelonBasis::EchelonBasis(const FieldSpec& f, std::size_t dim, bool track)
    : field_(f), dim_(dim), track_(track), row_of_pivot_(dim, -1) {}

EchelonBasis::Reduction EchelonBasis::reduce(const SparseVec& v) const {
  Reduction r{v, {}};
  std::size_t k = 0;
  while (k < r.residual.size()) {
    std::size_t idx = r.residual[k].index;
    if (idx >= dim_) throw DimensionMismatch("echelon: index out of range");
    long row = row_of_pivot_[idx];
    if (row < 0) {
      ++k;
      continue;
    }
    Scalar c = r.residual[k].value;
    r.residual = sparse_axpy(r.residual, -c, rows_[row]);
    if (track_) r.coeffs = sparse_axpy(r.coeffs, c, combo_[row]);
    // entries before k are untouched since rows_[row] starts at idx
  }
  return r;
}

bool EchelonBasis::insert(const SparseVec& v) {
  std::size_t id = next_id_++;
  Reduction r = reduce(v);
  if (r.residual.empty()) return false;
  Scalar inv = r.residual.front().value.inverse();
  for (auto& e : r.residual) e.value *= inv;
  if (track_) {
    // residual = v - coeffs.origins  =>  row = inv * (e_id - coeffs)
    SparseVec c = sparse_axpy(SparseVec{{id, Scalar::one(field_)}}, Scalar(field_, -1), r.coeffs);
    for (auto& e : c) e.value *= inv;
    combo_.push_back(std::move(c));
  }
  std::size_t piv = r.residual.front().index;
  row_of_pivot_[piv] = static_cast<long>(rows_.size());
  pivots_.push_back(piv);
  rows_.push_back(std::move(r.residual));
  return true;
}

std::vector<SparseVec> EchelonBasis::reduced_rows() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return pivots_[a] > pivots_[b]; });
  std::vector<SparseVec> out(rows_.size());
  std::vector<long> done(dim_, -1);
  for (std::size_t r : order) {
    SparseVec v = rows_[r];
    for (std::size_t k = 1; k < v.size();) {
      long d = done[v[k].index];
      if (d < 0) {
        ++k;
        continue;
      }
      Scalar c = v[k].value;
      v = sparse_axpy(v, -c, out[d]);
    }
    done[pivots_[r]] = static_cast<long>(r);
    out[r] = std::move(v);
  }
  return out;
}

LinalgOptions& linalg_options() {
  static LinalgOptions opts;
  return opts;
}

namespace {

// Turns RREF rows (leading coefficient 1) into the canonical kernel basis.
Matrix kernel_from_rref(const FieldSpec& f, std::size_t n, const std::vector<SparseVec>& rref) {
  std::vector<char> is_pivot(n, 0);
  for (const auto& r : rref) is_pivot[r.front().index] = 1;
  std::vector<long> slot(n, -1);
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    slot[j] = static_cast<long>(cols.size());
    cols.push_back({{j, Scalar::one(f)}});
  }
  for (const auto& r : rref) {
    std::size_t p = r.front().index;
    for (std::size_t k = 1; k < r.size(); ++k) cols[slot[r[k].index]].push_back({p, -r[k].value});
  }
  for (auto& c : cols)
    std::sort(c.begin(), c.end(), [](const SparseEntry& a, const SparseEntry& b) { return a.index < b.index; });
  return Matrix::from_columns(f, n, std::move(cols));
}

// Dense Gauss-Jordan; returns the nonzero rows of the RREF.
std::vector<Vec> dense_rref(std::vector<Vec> rows, std::size_t n) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    Scalar inv = rows[r][c].inverse();
    for (std::size_t j = c; j < n; ++j)
      if (!rows[r][j].is_zero()) rows[r][j] *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar m = rows[i][c];
      for (std::size_t j = c; j < n; ++j)
        if (!rows[r][j].is_zero()) rows[i][j] -= m * rows[r][j];
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

}  // namespace

Matrix kernel_basis_dense(const Matrix& a) {
  std::vector<Vec> rows(a.rows(), zero_vec(a.field(), a.cols()));
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (const auto& e : a.column(j)) rows[e.index][j] = e.value;
  std::vector<SparseVec> rref;
  for (const auto& r : dense_rref(std::move(rows), a.cols())) rref.push_back(to_sparse(r));
  return kernel_from_rref(a.field(), a.cols(), rref);
}

Matrix kernel_basis_sparse(const Matrix& a) {
  EchelonBasis ech(a.field(), a.cols());
  auto rows = a.sparse_rows();
  // short rows first keeps fill-in down
  std::stable_sort(rows.begin(), rows.end(), [](const SparseVec& x, const SparseVec& y) { return x.size() < y.size(); });
  for (const auto& r : rows) {
    if (r.empty()) continue;
    ech.insert(r);
    if (ech.rank() == a.cols()) break;
  }
  return kernel_from_rref(a.field(), a.cols(), ech.reduced_rows());
}

Matrix kernel_basis(const Matrix& a) {
  if (a.cols() <= linalg_options().dense_threshold && a.rows() <= 4 * linalg_options().dense_threshold)
    return kernel_basis_dense(a);
  return kernel_basis_sparse(a);
}

std::size_t rank(const Matrix& a) {
  EchelonBasis ech(a.field(), a.rows());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    ech.insert(a.column(j));
    if (ech.rank() == a.rows()) break;
  }
  return ech.rank();
}

Matrix column_space_basis(const Matrix& a) {
  EchelonBasis ech(a.field(), a.rows());
  std::vector<SparseVec> keep;
  for (std::size_t j = 0; j < a.cols(); ++j)
    if (ech.insert(a.column(j))) keep.push_back(a.column(j));
  return Matrix::from_columns(a.field(), a.rows(), std::move(keep));
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: rhs length");
  EchelonBasis ech(a.field(), a.rows(), true);
  for (std::size_t j = 0; j < a.cols(); ++j) ech.insert(a.column(j));
  auto r = ech.reduce(to_sparse(b));
  if (!r.residual.empty()) return std::nullopt;
  return to_dense(r.coeffs, a.field(), a.cols());
}

std::optional<Matrix> coordinates_in(const Matrix& basis, const Matrix& vectors) {
  if (basis.rows() != vectors.rows()) throw DimensionMismatch("coordinates_in: ambient dimensions differ");
  EchelonBasis ech(basis.field(), basis.rows(), true);
  for (std::size_t j = 0; j < basis.cols(); ++j)
    if (!ech.insert(basis.column(j))) throw Error("coordinates_in: basis columns are dependent");
  std::vector<SparseVec> cols;
  for (std::size_t j = 0; j < vectors.cols(); ++j) {
    auto r = ech.reduce(vectors.column(j));
    if (!r.residual.empty()) return std::nullopt;
    cols.push_back(std::move(r.coeffs));
  }
  return Matrix::from_columns(basis.field(), basis.cols(), std::move(cols));
}

Matrix inverse(const Matrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("inverse of non-square matrix");
  std::size_t n = a.rows();
  const FieldSpec& f = a.field();
  std::vector<Vec> rows(n, zero_vec(f, 2 * n));
  for (std::size_t j = 0; j < n; ++j)
    for (const auto& e : a.column(j)) rows[e.index][j] = e.value;
  for (std::size_t i = 0; i < n; ++i) rows[i][n + i] = Scalar::one(f);
  auto rref = dense_rref(std::move(rows), 2 * n);
  if (rref.size() < n) throw Error("matrix is singular");
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < n; ++i) {
    if (!rref[i][i].is_one()) throw Error("matrix is singular");
    for (std::size_t j = 0; j < n; ++j)
      if (!rref[i][n + j].is_zero()) t.push_back({i, j, rref[i][n + j]});
  }
  return Matrix::from_triplets(f, n, n, std::move(t));
}

Quotient::Quotient(const Matrix& cycles, const Matrix& boundary_map)
    : field_(cycles.field()),
      ambient_(cycles.rows()),
      source_(boundary_map.cols()),
      n_image_cols_(boundary_map.cols()),
      ech_(cycles.field(), cycles.rows(), true) {
  if (boundary_map.rows() != cycles.rows()) throw DimensionMismatch("quotient: ambient dimensions differ");
  for (std::size_t j = 0; j < boundary_map.cols(); ++j) ech_.insert(boundary_map.column(j));
  for (std::size_t j = 0; j < cycles.cols(); ++j) {
    std::size_t id = ech_.inserted();
    if (ech_.insert(cycles.column(j))) {
      reps_.push_back(cycles.dense_column(j));
      rep_ids_.push_back(id);
    }
  }
}

Quotient::Decomposition Quotient::decompose(const Vec& v) const {
  auto r = ech_.reduce(to_sparse(v));
  if (!r.residual.empty()) throw Error("vector is not in the cycle space");
  Decomposition d{zero_vec(field_, reps_.size()), zero_vec(field_, source_)};
  for (const auto& e : r.coeffs) {
    if (e.index < n_image_cols_) {
      d.witness[e.index] = e.value;
    } else {
      auto it = std::lower_bound(rep_ids_.begin(), rep_ids_.end(), e.index);
      if (it == rep_ids_.end() || *it != e.index) throw Error("quotient: untracked origin");
      d.coords[it - rep_ids_.begin()] = e.value;
    }
  }
  return d;
}

}  // namespace bhh
