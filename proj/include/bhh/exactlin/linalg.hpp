#pragma once

#include <optional>
#include <vector>

#include "bhh/exactlin/matrix.hpp"

namespace bhh {

/// Incremental row-echelon form of a set of vectors. The leading index of a
/// stored vector is its smallest nonzero index. With tracking on, every stored
/// vector remembers how it was obtained from the inserted ones, so membership
/// tests also produce explicit linear combinations.
class EchelonBasis {
 public:
  EchelonBasis(const FieldSpec& f, std::size_t dim, bool track = false);

  /// Inserts v under the next origin id. Returns true if v was independent.
  bool insert(const SparseVec& v);
  bool insert(const Vec& v) { return insert(to_sparse(v)); }

  struct Reduction {
    SparseVec residual;
    /// v - residual = sum coeffs[id] * inserted[id]   (tracked mode only)
    SparseVec coeffs;
  };
  Reduction reduce(const SparseVec& v) const;
  bool contains(const SparseVec& v) const { return reduce(v).residual.empty(); }
  bool contains(const Vec& v) const { return contains(to_sparse(v)); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }
  std::size_t inserted() const { return next_id_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const FieldSpec& field() const { return field_; }

  /// Stored vectors, fully reduced against each other.
  std::vector<SparseVec> reduced_rows() const;

 private:
  FieldSpec field_;
  std::size_t dim_;
  bool track_;
  std::size_t next_id_ = 0;
  std::vector<SparseVec> rows_;   // normalized: leading coefficient 1
  std::vector<SparseVec> combo_;  // in terms of origin ids
  std::vector<std::size_t> pivots_;
  std::vector<long> row_of_pivot_;
};

struct LinalgOptions {
  /// Matrices with at most this many columns use dense elimination.
  std::size_t dense_threshold = 512;
};

LinalgOptions& linalg_options();

/// Basis of ker(A) as the columns of a cols x k matrix, in the reduced form
/// determined by the free columns (each basis vector has a 1 at its free
/// column and 0 at the others).
Matrix kernel_basis(const Matrix& a);
Matrix kernel_basis_dense(const Matrix& a);
Matrix kernel_basis_sparse(const Matrix& a);

std::size_t rank(const Matrix& a);
/// Linearly independent columns spanning the column space.
Matrix column_space_basis(const Matrix& a);

/// Some x with A x = b, if one exists.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
Matrix inverse(const Matrix& a);
/// Coordinates of the columns of `vectors` w.r.t. the independent columns of
/// `basis`; nullopt if some column lies outside their span.
std::optional<Matrix> coordinates_in(const Matrix& basis, const Matrix& vectors);

/// Z / B where B (columns of `boundary_map`'s image) sits inside Z (columns
/// of `cycles`). Provides class coordinates and coboundary witnesses.
class Quotient {
 public:
  Quotient(const Matrix& cycles, const Matrix& boundary_map);

  std::size_t dim() const { return reps_.size(); }
  const std::vector<Vec>& representatives() const { return reps_; }

  struct Decomposition {
    Vec coords;   // coordinates w.r.t. representatives()
    Vec witness;  // v - sum coords[i] reps[i] = boundary_map(witness)
  };
  /// Throws if v is not in span(cycles).
  Decomposition decompose(const Vec& v) const;
  bool is_boundary(const Vec& v) const { return is_zero(decompose(v).coords); }

 private:
  FieldSpec field_;
  std::size_t ambient_;
  std::size_t source_;
  std::size_t n_image_cols_;
  EchelonBasis ech_;
  std::vector<Vec> reps_;
  std::vector<std::size_t> rep_ids_;
};

}  // namespace bhh
