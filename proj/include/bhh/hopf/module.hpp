#pragma once

#include <string>
#include <vector>

#include "bhh/hopf/finhopf.hpp"

namespace bhh {

/// Left H-module: rho[i] is the action of the i-th basis element of H.
struct HModule {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<Matrix> rho;

  Matrix act(const Vec& h) const;
};

HModule trivial_module(const FinHopf& h, std::size_t dim);
HModule regular_module(const FinHopf& h);
Report check_module(const FinHopf& h, const HModule& m);

/// Action of the basis element h on M_1 (x) ... (x) M_k through the iterated
/// coproduct. With no factors this is the 1x1 matrix eps(h).
Matrix tensor_action(const FinHopf& h, const std::vector<const HModule*>& factors, std::size_t basis_index);
Matrix tensor_action(const FinHopf& h, const std::vector<const HModule*>& factors, const Vec& elem);
HModule tensor_module(const FinHopf& h, const std::vector<const HModule*>& factors);
HModule tensor_power(const FinHopf& h, const HModule& m, std::size_t n);

/// The H-action on Hom_k(V, W), h.f = h_1 f S(h_2); a map f is stored as the
/// vector with index out * dim V + in.
Matrix hom_action(const FinHopf& h, const HModule& v, const HModule& w, std::size_t basis_index);
Matrix hom_action(const FinHopf& h, const HModule& v, const HModule& w, const Vec& elem);
/// Throws ResourceCap when dim V * dim W exceeds max_dim.
HModule inner_hom(const FinHopf& h, const HModule& v, const HModule& w, std::size_t max_dim = 4096);

/// Basis (as columns) of {m : x.m = eps(x) m} for x ranging over `gens`
/// (all basis elements when empty).
Matrix invariants(const FinHopf& h, const HModule& m, const std::vector<Vec>& gens = {});
/// Basis of H-linear maps V -> W by solving f rho_V(x) = rho_W(x) f directly.
Matrix module_homs(const FinHopf& h, const HModule& v, const HModule& w);

/// c(m (x) n) = (r^j . n) (x) (r_j . m)
Matrix rmatrix_braiding(const QuasiTriHopf& q, const HModule& m, const HModule& n);
/// Inverse braiding, built from R^{-1} = (S (x) id)(R).
Matrix rmatrix_braiding_inverse(const QuasiTriHopf& q, const HModule& m, const HModule& n);

/// An associative unital algebra by structure constants (mult: A (x) A -> A).
struct Algebra {
  FieldSpec field;
  std::size_t dim = 0;
  Matrix mult;
  Vec unit;
  std::vector<std::string> labels;

  Vec mul(const Vec& a, const Vec& b) const { return mult.apply(kron_vec(a, b)); }
  Vec basis(std::size_t i) const { return unit_vec(field, dim, i); }
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;
};

Report check_algebra(const Algebra& a);
Algebra algebra_from_hopf(const FinHopf& h);
/// k[x]/(x^2), basis [1, x].
Algebra dual_numbers(const FieldSpec& f);
Algebra ground_algebra(const FieldSpec& f);
Algebra opposite(const Algebra& a);
Algebra tensor_algebra(const Algebra& a, const Algebra& b);

/// Algebra A with an H-module structure.
struct ModuleAlgebra {
  Algebra alg;
  HModule action;
};

Report check_module_algebra(const FinHopf& h, const ModuleAlgebra& a);

}  // namespace bhh
