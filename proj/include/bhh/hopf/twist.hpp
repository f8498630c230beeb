#pragma once

#include "bhh/hopf/finhopf.hpp"

namespace bhh {

/// Checks that J in H (x) H is invertible, counital and satisfies
/// (Delta (x) id)(J) (J (x) 1) = (id (x) Delta)(J) (1 (x) J).
Report check_twist(const FinHopf& h, const Vec& J);

/// H^J: Delta^J = J^{-1} Delta J, R^J = J21^{-1} R J, and the antipode
/// conjugated by U = K1 S(K2) where J^{-1} = K1 (x) K2. Throws if J fails
/// check_twist.
QuasiTriHopf twist_quasitriangular(const QuasiTriHopf& q, const Vec& J);

}  // namespace bhh
