#include "bhh/hopf/twist.hpp"

namespace bhh {

Report check_twist(const FinHopf& h, const Vec& J) {
  Report rep;
  const auto& f = h.field;
  Matrix I = Matrix::identity(f, h.dim);
  bool invertible = true;
  try {
    tensor_inverse(h, 2, J);
  } catch (const Error&) {
    invertible = false;
  }
  rep.add("invertible", invertible);
  rep.add("counital", kron(h.counit, I).apply(J) == h.unit && kron(I, h.counit).apply(J) == h.unit);
  Vec lhs = h.tensor_mul(3, kron(h.comult, I).apply(J), kron_vec(J, h.unit));
  Vec rhs = h.tensor_mul(3, kron(I, h.comult).apply(J), kron_vec(h.unit, J));
  rep.add("cocycle", lhs == rhs);
  return rep;
}

QuasiTriHopf twist_quasitriangular(const QuasiTriHopf& q, const Vec& J) {
  const FinHopf& h = q.hopf;
  auto rep = check_twist(h, J);
  if (!rep.ok()) throw Error("not a twist:\n" + rep.summary());
  const auto& f = h.field;
  Vec Jinv = tensor_inverse(h, 2, J);
  Matrix fl = flip(f, h.dim, h.dim);

  QuasiTriHopf t = q;
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < h.dim; ++i)
    cols.push_back(h.tensor_mul(2, h.tensor_mul(2, Jinv, h.comult.dense_column(i)), J));
  t.hopf.comult = Matrix::from_dense_columns(f, h.dim * h.dim, cols);

  // U = K1 S(K2)
  Vec U = h.mult.apply(kron(Matrix::identity(f, h.dim), h.antipode).apply(Jinv));
  Vec Uinv = tensor_inverse(h, 1, U);
  t.hopf.antipode = h.left_mult(U) * h.antipode * h.right_mult(Uinv);
  t.hopf.antipode_inv = Matrix();
  t.hopf.finalize();

  Vec J21inv = fl.apply(Jinv);
  t.R = h.tensor_mul(2, h.tensor_mul(2, J21inv, q.R), J);
  return t;
}

}  // namespace bhh
