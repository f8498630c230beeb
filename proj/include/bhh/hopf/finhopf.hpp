#pragma once

#include <map>
#include <string>
#include <vector>

#include "bhh/exactlin/linalg.hpp"
#include "bhh/hopf/report.hpp"

namespace bhh {

/// A finite-dimensional Hopf algebra given by structure constants in a fixed
/// basis. mult: H(x)H -> H, comult: H -> H(x)H, counit: H -> k (1 x dim).
struct FinHopf {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  Matrix mult;
  Vec unit;
  Matrix comult;
  Matrix counit;
  Matrix antipode;
  Matrix antipode_inv;

  /// Fills antipode_inv (throws if S is singular) and default labels.
  void finalize();

  Vec basis(std::size_t i) const { return unit_vec(field, dim, i); }
  Vec one() const { return unit; }
  Vec mul(const Vec& a, const Vec& b) const;
  Scalar eps(const Vec& h) const;
  Scalar eps(std::size_t i) const { return counit.at(0, i); }
  /// Matrices of left/right multiplication by a.
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;
  /// Product in the tensor-power algebra H^{(x)n}.
  Vec tensor_mul(std::size_t n, const Vec& a, const Vec& b) const;
  /// Delta^{(n-1)}(e_i) in H^{(x)n}, as a sparse vector (n >= 1).
  const SparseVec& coproduct_power(std::size_t i, std::size_t n) const;
  SparseVec coproduct_power(const Vec& h, std::size_t n) const;
  Matrix iterated_comult(std::size_t n) const;

 private:
  mutable std::map<std::pair<std::size_t, std::size_t>, SparseVec> cop_cache_;
};

Report check_hopf_axioms(const FinHopf& h);

/// A quasitriangular structure R = sum_j r_j (x) r^j.
struct QuasiTriHopf {
  FinHopf hopf;
  Vec R;

  /// sum_j r^j (x) r_j
  Vec R21() const;
  /// Terms of R as (r_j, r^j) basis index pairs with coefficients.
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Scalar>> R_terms() const;
};

/// The R-matrix relations; a failing check names the first differing basis
/// monomial.
Report check_rmatrix(const QuasiTriHopf& h);

/// R = 1 (x) 1.
QuasiTriHopf trivial_rmatrix(const FinHopf& h);

/// Inverse of an invertible element of H^{(x)n}; throws if not invertible.
Vec tensor_inverse(const FinHopf& h, std::size_t n, const Vec& x);

/// Semisimple iff there is a left integral with nonzero counit.
bool is_semisimple(const FinHopf& h);
/// Cosemisimple iff there is a left integral on H not vanishing at 1.
bool is_cosemisimple(const FinHopf& h);

std::string monomial_label(const FinHopf& h, std::size_t idx, std::size_t n);

}  // namespace bhh
