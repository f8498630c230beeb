#pragma once

#include "bhh/hopf/finhopf.hpp"
#include "bhh/hopf/group.hpp"

namespace bhh {

/// Drinfeld double D of a finite-dimensional E, with D-modules = right
/// Yetter-Drinfeld modules over E. As a space D = E^op (x) E*, basis e_i e^a
/// at index i*dim(E) + a; E^op and E* sit inside as Hopf subalgebras and
/// R = sum_i e_i (x) e^i.
struct DrinfeldDouble {
  FinHopf E;
  QuasiTriHopf D;

  /// w in E^op, as the element w*eps of D.
  Vec from_eop(const Vec& w) const;
  /// xi in E* (coordinates in the dual basis), as 1*xi.
  Vec from_dual(const Vec& xi) const;
  std::size_t index(std::size_t i, std::size_t a) const { return i * E.dim + a; }
};

DrinfeldDouble drinfeld_double(const FinHopf& e);
DrinfeldDouble drinfeld_double_group(const GroupTable& g, const FieldSpec& f);

}  // namespace bhh
