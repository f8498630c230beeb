#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "bhh/exactlin/scalar.hpp"

namespace bhh {

using Vec = std::vector<Scalar>;

struct SparseEntry {
  std::size_t index;
  Scalar value;
};

/// Sorted by index, no explicit zeros.
using SparseVec = std::vector<SparseEntry>;

Vec zero_vec(const FieldSpec& f, std::size_t n);
Vec unit_vec(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec scaled(const Vec& v, const Scalar& s);
void axpy(Vec& y, const Scalar& a, const Vec& x);

SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, const FieldSpec& f, std::size_t n);
/// x + a*y
SparseVec sparse_axpy(const SparseVec& x, const Scalar& a, const SparseVec& y);

struct Triplet {
  std::size_t row;
  std::size_t col;
  Scalar value;
};

/// Linear map between coordinate spaces, stored column-compressed. Tensor
/// products use the lexicographic monomial order with the left factor most
/// significant throughout.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_triplets(const FieldSpec& f, std::size_t rows, std::size_t cols, std::vector<Triplet> entries);
  static Matrix from_columns(const FieldSpec& f, std::size_t rows, std::vector<SparseVec> cols);
  static Matrix from_dense_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_ints(const FieldSpec& f, std::initializer_list<std::initializer_list<long>> rows);
  /// Single column / single row matrices.
  static Matrix column_vector(const Vec& v);
  static Matrix row_vector(const Vec& v);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  const SparseVec& column(std::size_t j) const { return cols_data_[j]; }
  Vec dense_column(std::size_t j) const;
  Scalar at(std::size_t i, std::size_t j) const;

  Vec apply(const Vec& v) const;
  SparseVec apply(const SparseVec& v) const;
  Matrix transpose() const;
  std::vector<SparseVec> sparse_rows() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, const Matrix& m);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// First (row, col) where the two matrices differ; {rows, cols} if equal.
  std::pair<std::size_t, std::size_t> first_difference(const Matrix& o) const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<SparseVec> cols_data_;
};

/// Kronecker product realizing f (x) g.
Matrix kron(const Matrix& f, const Matrix& g);
Matrix kron_all(const std::vector<const Matrix*>& factors);
/// The permutation V(x)W -> W(x)V.
Matrix flip(const FieldSpec& f, std::size_t dim_v, std::size_t dim_w);
/// Reorders tensor factors: output factor t is input factor perm[t].
Matrix permute_factors(const FieldSpec& f, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm);
Vec kron_vec(const Vec& a, const Vec& b);
/// Digits of a lexicographic tensor index (most significant first).
std::vector<std::size_t> multi_index(std::size_t idx, std::size_t base, std::size_t n);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap = static_cast<std::size_t>(1) << 40);

}  // namespace bhh
