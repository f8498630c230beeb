#pragma once

#include <map>

#include "bhh/braidalg/algebra.hpp"
#include "bhh/complexes/complex.hpp"

namespace bhh {

/// Lazily cached actions of basis elements of H on M^{(x)n} and on
/// Hom(M^{(x)n}, M). Built recursively from the coproduct, so only the
/// powers actually requested are ever formed.
class TensorPowers {
 public:
  TensorPowers(const FinHopf& h, HModule m);

  const FinHopf& hopf() const { return *h_; }
  const HModule& module() const { return m_; }

  /// Basis element i on M^{(x)n}; n = 0 gives the 1x1 matrix eps(e_i).
  const Matrix& rho(std::size_t n, std::size_t i);
  Matrix rho(std::size_t n, const Vec& h);
  /// h.f = h_1 f (S(h_2) -) on Hom(M^{(x)n}, M), index out * dim^n + in.
  const Matrix& hom(std::size_t n, std::size_t i);
  Matrix hom(std::size_t n, const Vec& h);

 private:
  const Matrix& rho_antipode(std::size_t n, std::size_t i);
  const FinHopf* h_;
  HModule m_;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> rho_, rho_s_, hom_;
};

/// I^{(x)j} (x) mu (x) I^{(x)(l-j-2)} : B^{(x)l} -> B^{(x)(l-1)}
Matrix merge_map(const Algebra& b, std::size_t l, std::size_t j);
/// sum_{j=0}^{l-2} (-1)^j merge_j on B^{(x)l}
Matrix alternating_merge(const Algebra& b, std::size_t l);
/// d(b_1..b_l) = sum_{i=1}^{l-1} (-1)^i b_1..b_i b_{i+1}..b_l
Matrix bar_differential(const Algebra& b, std::size_t l);

/// The bar construction B^{(x)(l-1)} in degree -l, l = 1..N+1, with the
/// diagonal action of `gens` (all basis elements of H when empty).
Complex bar_construction(const AlgebraObject& b, std::size_t N, const std::vector<Vec>& gens = {});

/// B (x) B^{(x)n} (x) B in degree -(n+1) for n = 0..N, augmented by mu onto B
/// in degree 0.
Complex bar_resolution(const AlgebraObject& b, std::size_t N);
/// Right action of the braided enveloping algebra on B (x) B^{(x)n} (x) B:
/// (a (x) x (x) a')(c (x) c') = (r^j . c)(r_j . (a (x) x (x) a')) c'.
Matrix bar_resolution_action(const AlgebraObject& b, std::size_t n);

/// Vanishing of cohomology in degrees lo..hi by rank counting (the top
/// stored degree counts as having zero outgoing map).
Report check_exact(const Complex& c, int lo, int hi);

/// B^{(x)_E n} as a quotient of B^{(x)n} by the balancing relations.
struct RelativeTensorPower {
  std::size_t n = 0;
  Matrix relations;   // basis of the kernel of B^{(x)n} -> B^{(x)_E n}
  Matrix projection;  // B^{(x)n} -> quotient coordinates
  Matrix section;     // quotient coordinates -> B^{(x)n}
  std::size_t dim() const { return projection.rows(); }
};

/// Closure of E (columns of incl_e) under product, unit and the H-action.
Report check_subalgebra(const AlgebraObject& b, const Matrix& incl_e);
RelativeTensorPower relative_tensor_power(const Algebra& b, const Matrix& incl_e, std::size_t n);

/// B (x)_E B^{(x)_E n} (x)_E B in degree -(n+1), augmented onto B. Throws if
/// E is not a subalgebra in the module category or if the differential does
/// not descend.
Complex relative_bar(const AlgebraObject& b, const Matrix& incl_e, std::size_t N);

}  // namespace bhh
