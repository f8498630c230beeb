#pragma once

#include "bhh/hopf/double.hpp"
#include "bhh/hopf/module.hpp"

namespace bhh {

/// Right Yetter-Drinfeld module over E. act[i] is m -> m.e_i; the coaction
/// m -> m_0 (x) m_1 is a (dim * dim E) x dim matrix.
struct YDModule {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<Matrix> act;
  Matrix coaction;

  Matrix act_elem(const Vec& w) const;
  /// M (x) E -> M, m (x) w -> m.w
  Matrix action_map() const;
  /// m -> m_0 xi(m_1) for xi in E*.
  Matrix coact_pair(const Vec& xi) const;
};

Report check_yd(const FinHopf& e, const YDModule& m);

/// The associated module over the double: e_i e^a acts by m -> (m_0 e^a(m_1)).e_i
HModule to_dmodule(const DrinfeldDouble& dd, const YDModule& m);

YDModule trivial_yd(const FinHopf& e, std::size_t dim);
/// E with right adjoint action w.w' = S(w'_1) w w'_2 and coaction Delta.
YDModule adjoint_yd(const FinHopf& e);
/// E with right regular action and trivial coaction.
YDModule regular_trivial_yd(const FinHopf& e);
/// m (x) n: (m (x) n).w = m.w_1 (x) n.w_2, coaction m_0 (x) n_0 (x) m_1 n_1.
YDModule tensor_yd(const FinHopf& e, const YDModule& m, const YDModule& n);

/// c(m (x) n) = n_0 (x) m.n_1, and c^{-1}(n (x) m) = m.S^{-1}(n_1) (x) n_0.
Matrix yd_braiding(const FinHopf& e, const YDModule& m, const YDModule& n);
Matrix yd_braiding_inverse(const FinHopf& e, const YDModule& m, const YDModule& n);

/// f: M -> N commutes with action and coaction.
bool is_yd_morphism(const FinHopf& e, const YDModule& m, const YDModule& n, const Matrix& f);

}  // namespace bhh
