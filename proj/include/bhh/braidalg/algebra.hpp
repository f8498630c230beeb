#pragma once

#include <memory>

#include "bhh/ydmod/yd.hpp"

namespace bhh {

/// An algebra in H-mod for a quasitriangular H. The structure maps are meant
/// to be H-linear; check_algebra_in_Z verifies it.
struct AlgebraObject {
  std::shared_ptr<const QuasiTriHopf> H;
  Algebra alg;
  HModule mod;

  const FinHopf& hopf() const { return H->hopf; }
  const FieldSpec& field() const { return alg.field; }
  std::size_t dim() const { return alg.dim; }
};

/// Associativity, unitality, and H-linearity of mult and unit, on every basis
/// element of H (or on `gens`, which must generate H as an algebra).
Report check_algebra_in_Z(const AlgebraObject& b, const std::vector<Vec>& gens = {});

/// Algebra generators of the double: E^op together with E*.
std::vector<Vec> double_generators(const DrinfeldDouble& dd);

/// A (x) E with (a w)(a' w') = a (w_1 . a') w_2 w', as an algebra in YD^E_E
/// under (a w).w' = S(w'_1) a w w'_2 and coaction a w_1 (x) w_2.
/// Basis a_i * e_j sits at index i * dim E + j.
struct SmashProduct {
  std::shared_ptr<const DrinfeldDouble> dd;
  AlgebraObject B;
  YDModule yd;
  ModuleAlgebra a;
  std::size_t dim_a = 0;
  Matrix incl_a;  // A -> B, a -> a*1
  Matrix incl_e;  // E -> B, w -> 1*w
};

/// Throws if A is not an E-module algebra.
SmashProduct smash_product(std::shared_ptr<const DrinfeldDouble> dd, const ModuleAlgebra& a);

/// Basis of the coinvariants {m : m_0 (x) m_1 = m (x) 1}.
Matrix coinvariants(const FinHopf& e, const YDModule& m);

/// b ._op b' = (r^j . b')(r_j . b)
AlgebraObject braided_opposite(const AlgebraObject& b);
/// (b (x) c)(b' (x) c') = b (r^j . b') (x) (r_j . c) c'
AlgebraObject braided_tensor_algebra(const AlgebraObject& b, const AlgebraObject& c);
/// B^op (x) B with the braided structures above.
AlgebraObject braided_enveloping(const AlgebraObject& b);
/// Right action B (x) B^e -> B, a (x) (b (x) b') -> (r^j . b)(r_j . a) b'.
Matrix env_action(const AlgebraObject& b);

/// Checks that act: M (x) A -> M is a unital associative right action.
Report check_right_module(const Algebra& a, std::size_t dim_m, const Matrix& act);

/// B^{(x)n} (x) B^e -> B (x) B^{(x)n} (x) B, x (x) b (x) b' -> (r^j . b) (x) (r_j . x) (x) b'.
Matrix freeness_map(const AlgebraObject& b, std::size_t n);
/// The inverse b (x) x (x) b' -> (S(r_j) . x) (x) (r^j . b) (x) b'; with
/// `via_inverse_antipode` the equivalent form (r_j . x) (x) (S^{-1}(r^j) . b) (x) b'.
Matrix freeness_inverse(const AlgebraObject& b, std::size_t n, bool via_inverse_antipode = false);

/// A k-valued 2-cochain alpha on a group, packaged as the element
/// J = sum alpha(g,h) delta_g (x) delta_h of E* (x) E* inside D (x) D.
struct DualCocycle {
  std::vector<std::vector<Scalar>> alpha;
  Vec J;
  Vec J_inv;
};

DualCocycle dual_cocycle(const DrinfeldDouble& dd, const std::vector<std::vector<Scalar>>& alpha);
/// Invertibility, the identity alpha(g,h) alpha(gh,k) = alpha(h,k) alpha(g,hk)
/// enumerated over G, and the twist conditions for J in D (x) D.
Report dual_cocycle_check(const DrinfeldDouble& dd, const GroupTable& g, const DualCocycle& j);
/// alpha(g,h) = (-1)^{g_1 h_2} on Z/2 x Z/2 with g = 2 g_1 + g_2.
std::vector<std::vector<Scalar>> klein_bicharacter(const FieldSpec& f);

/// B_J: same carrier, product (J_l . b)(J^l . b'), over the twisted double
/// D^J. Associativity is not assumed; run check_algebra_in_Z on the result.
AlgebraObject j_twist_algebra(const AlgebraObject& b, const Vec& J);

}  // namespace bhh
