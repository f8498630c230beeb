#pragma once

#include "bhh/complexes/bar.hpp"

namespace bhh {

/// Cochains C^n = Hom(B^{(x)n}, B) of an algebra B in H-mod, stored in the
/// monomial basis (index out * dim^n + in), together with the structure
/// needed to differentiate and act on them. Caches tensor-power actions.
class BraidedCochains {
 public:
  /// `gens` are the elements whose action is attached to complexes (all basis
  /// elements of H when empty). Spaces larger than max_columns throw ResourceCap.
  explicit BraidedCochains(AlgebraObject b, std::vector<Vec> gens = {}, std::size_t max_columns = 10000);

  const AlgebraObject& algebra() const { return b_; }
  const FieldSpec& field() const { return b_.field(); }
  std::size_t dim() const { return b_.dim(); }
  std::size_t space_dim(std::size_t n) const;
  const std::vector<Vec>& generators() const { return gens_; }
  TensorPowers& powers() { return tp_; }

  /// The braided Hochschild differential d_c: C^n -> C^{n+1}:
  ///   (-1)^{n+1} d_c(f)(b_1..b_{n+1}) = (r^j.b_1)(r_j.f)(b_2..b_{n+1})
  ///       + f(d_BB(b_1..b_{n+1})) + (-1)^{n+1} f(b_1..b_n) b_{n+1}.
  const Matrix& differential(std::size_t n);
  /// d_Hom(f) = (-1)^{n+1} f o d_BB.
  Matrix hom_differential(std::size_t n);
  /// The differential carried over from Hom_{B^e}(Bar B, B): lift f to
  /// b (x) x (x) b' -> (r^j.b)(r_j.f)(x) b', compose with the bar resolution
  /// differential and restrict to 1 (x) x (x) 1. Built from hom_action and
  /// the resolution directly; it should equal (-1)^{n+1} d_c.
  Matrix transported_differential(std::size_t n);
  /// Lift Hom(B^{(x)n}, B) -> Hom(B (x) B^{(x)n} (x) B, B).
  Matrix bar_lift(std::size_t n);

  /// Action of h on C^n (inner-hom action).
  Matrix action(std::size_t n, const Vec& h) { return tp_.hom(n, h); }
  /// f -> f o phi for phi: B^{(x)m} -> B^{(x)n}.
  Matrix precompose(const Matrix& phi) const;
  /// The identity of B as a degree-1 cochain.
  Vec pi() const;
  /// The unit of B as a degree-0 cochain.
  Vec unit_cochain() const { return b_.alg.unit; }

  /// Degrees 0..N with the action of generators() attached.
  Complex complex(std::size_t N, bool with_action = true);

 private:
  void check_cap(std::size_t n) const;
  AlgebraObject b_;
  std::vector<Vec> gens_;
  std::size_t max_columns_;
  TensorPowers tp_;
  std::map<std::size_t, Matrix> d_;
};

/// A subcomplex of Hom(B^{(x)n}, B) together with its embedding.
struct EmbeddedComplex {
  Complex complex;
  std::vector<Matrix> embedding;  // degree n coordinates -> Hom(B^{(x)n}, B)
};

/// Maps f: B^{(x)n} -> B that are balanced over E at the inner slots, right
/// E-linear in the last slot, and satisfy f(w x) = (r^j.w)(r_j.f)(x) in the
/// first. In degree 0: beta in B with beta w = (r^j.w)(r_j.beta).
Matrix relative_cochain_constraints(BraidedCochains& c, const Matrix& incl_e, std::size_t n);
/// The relative complex as a subcomplex of `full` (the braided complex of the
/// same BraidedCochains, through degree N).
EmbeddedComplex relative_cochain_complex(BraidedCochains& c, const Complex& full, const Matrix& incl_e);

/// An A-bimodule M given by left: A (x) M -> M and right: M (x) A -> M.
struct ClassicalBimodule {
  std::size_t dim = 0;
  Matrix left;
  Matrix right;
};
ClassicalBimodule regular_classical_bimodule(const Algebra& a);
/// M = B as an A-bimodule along incl: A -> B.
ClassicalBimodule restricted_bimodule(const Algebra& b, const Matrix& incl);
/// A k g inside A * G for a group basis element g, with a.(a' g) = a a' g
/// and (a' g).a = a' (g.a) g.
ClassicalBimodule twisted_bimodule(const ModuleAlgebra& a, std::size_t g);

/// C^n(A, M) = Hom(A^{(x)n}, M), with the standard Hochschild differential
/// multiplied by (-1)^{n+1} so that it matches d_c when the braiding is trivial.
Complex classical_cochain_complex(const Algebra& a, const ClassicalBimodule& m, std::size_t N);

/// Restriction of the relative complex of B = A * E along A^{(x)n} -> B^{(x)n},
/// as maps into C^n(A, B).
std::vector<Matrix> restriction_maps(const EmbeddedComplex& rel, const Matrix& incl_a, std::size_t dim_b);
/// Each restriction map is square and invertible, and they commute with d.
Report check_restriction_iso(const EmbeddedComplex& rel, const Complex& classical, const std::vector<Matrix>& res);

/// Constraints f o (I^{(x)s} (x) unit (x) I^{(x)(n-1-s)}) = 0 for every slot s
/// on Hom(X^{(x)n}, Y); 0 rows when n = 0.
Matrix normalization_constraints(const Vec& unit, std::size_t dim_y, std::size_t n);
/// Cochains vanishing whenever an argument is the unit, for a complex whose
/// degree-n space is Hom(X^{(x)n}, Y) in the monomial basis (lo must be 0).
Complex normalized_subcomplex(const Complex& c, const Vec& unit, std::size_t dim_y);
/// The same for a subcomplex given with its embedding.
EmbeddedComplex normalized_subcomplex(const EmbeddedComplex& c, const Vec& unit, std::size_t dim_y);

}  // namespace bhh
