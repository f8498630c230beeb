#pragma once

#include "bhh/hopf/group.hpp"
#include "bhh/hopf/module.hpp"

namespace bhh {

/// Sweedler's 4-dimensional Hopf algebra, basis [1, g, x, gx]:
/// g^2 = 1, x^2 = 0, xg = -gx, g group-like, x (1,g)-skew-primitive.
/// Needs char != 2.
FinHopf sweedler4(const FieldSpec& f);

/// A with every basis element of H acting by its counit.
ModuleAlgebra trivial_module_algebra(const FinHopf& h, const Algebra& a);

/// k[x]/(x^2) over k(Z/2), the generator acting by x -> -x.
ModuleAlgebra dual_numbers_sign(const FieldSpec& f);

/// k + V with V^2 = 0, dim V = n; basis [1, v_1, ..., v_n].
Algebra square_zero_extension(const FieldSpec& f, std::size_t n);

/// k + k^2 (square zero) over k(Z/3), the generator acting on k^2 by the
/// order-3 matrix [[0,-1],[1,-1]].
ModuleAlgebra z3_planar(const FieldSpec& f);

}  // namespace bhh
