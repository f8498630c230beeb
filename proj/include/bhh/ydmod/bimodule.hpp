#pragma once

#include "bhh/hopf/module.hpp"

namespace bhh {

/// An algebra E in H-mod: structure maps must commute with the H-action.
struct AlgebraInModules {
  Algebra alg;
  HModule mod;
};

/// An object of H-mod with an E-bimodule structure; left[i], right[i] act by
/// the i-th basis element of E.
struct BimoduleObject {
  HModule carrier;
  std::vector<Matrix> left;
  std::vector<Matrix> right;
};

/// Bimodule axioms and H-linearity of E (x) M (x) E -> M.
Report check_bimodule(const FinHopf& h, const AlgebraInModules& e, const BimoduleObject& m);

/// E regarded as a bimodule over itself.
BimoduleObject regular_bimodule(const AlgebraInModules& e);

struct HomSpace {
  Matrix basis;   // columns in Hom_k(M, N), index out * dim M + in
  HModule action; // induced H-action in the coordinates of `basis`
  bool stable = false;
};

/// Maps f: M -> N with f(x w) = f(x) w and f(w x) = (r^j.w)(r_j.f)(x), with
/// the restricted inner-hom action. `stable` records whether every basis
/// element of H preserves the subspace (it always should).
HomSpace bimodule_hom_space(const QuasiTriHopf& q, const AlgebraInModules& e, const BimoduleObject& m,
                            const BimoduleObject& n);

/// Bimodule maps that are also H-linear, solved directly.
Matrix bimodule_morphisms(const FinHopf& h, const BimoduleObject& m, const BimoduleObject& n);

}  // namespace bhh
