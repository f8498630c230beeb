#include "bhh/ydmod/yd.hpp"

namespace bhh {

Matrix YDModule::act_elem(const Vec& w) const {
  Matrix r(field, dim, dim);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!w[i].is_zero()) r += w[i] * act.at(i);
  return r;
}

Matrix YDModule::action_map() const {
  std::size_t n = act.size();
  std::vector<SparseVec> cols(dim * n);
  for (std::size_t m = 0; m < dim; ++m)
    for (std::size_t w = 0; w < n; ++w) cols[m * n + w] = act[w].column(m);
  return Matrix::from_columns(field, dim, std::move(cols));
}

Matrix YDModule::coact_pair(const Vec& xi) const {
  return kron(Matrix::identity(field, dim), Matrix::row_vector(xi)) * coaction;
}

Report check_yd(const FinHopf& e, const YDModule& m) {
  Report rep;
  const auto& f = m.field;
  Matrix I = Matrix::identity(f, m.dim), Ie = Matrix::identity(f, e.dim);
  if (m.act.size() != e.dim || m.coaction.rows() != m.dim * e.dim || m.coaction.cols() != m.dim) {
    rep.add("shapes", false, "action/coaction dimensions do not match");
    return rep;
  }
  std::string bad;
  for (std::size_t a = 0; a < e.dim && bad.empty(); ++a)
    for (std::size_t b = 0; b < e.dim && bad.empty(); ++b)
      if (!(m.act[b] * m.act[a] == m.act_elem(e.mul(e.basis(a), e.basis(b))))) bad = e.labels[a] + "," + e.labels[b];
  rep.add("right action associative", bad.empty(), bad);
  rep.add("right action unital", m.act_elem(e.unit) == I);
  rep.add("coaction coassociative", kron(m.coaction, Ie) * m.coaction == kron(I, e.comult) * m.coaction);
  rep.add("coaction counital", kron(I, e.counit) * m.coaction == I);

  bad.clear();
  for (std::size_t w = 0; w < e.dim && bad.empty(); ++w) {
    Matrix lhs = m.coaction * m.act[w];
    Matrix rhs(f, m.dim * e.dim, m.dim);
    for (const auto& t : e.coproduct_power(w, 3)) {
      auto d = multi_index(t.index, e.dim, 3);
      Matrix sm = e.left_mult(e.antipode.dense_column(d[0])) * e.right_mult(e.basis(d[2]));
      rhs += t.value * (kron(m.act[d[1]], sm) * m.coaction);
    }
    auto [r, c] = lhs.first_difference(rhs);
    if (r != lhs.rows()) bad = "fails for m = " + std::to_string(c) + ", w = " + e.labels[w];
  }
  rep.add("Yetter-Drinfeld compatibility", bad.empty(), bad);
  return rep;
}

HModule to_dmodule(const DrinfeldDouble& dd, const YDModule& m) {
  const FinHopf& e = dd.E;
  HModule h{m.field, m.dim, {}};
  std::vector<Matrix> co;
  for (std::size_t a = 0; a < e.dim; ++a) co.push_back(m.coact_pair(e.basis(a)));
  for (std::size_t i = 0; i < e.dim; ++i)
    for (std::size_t a = 0; a < e.dim; ++a) h.rho.push_back(m.act[i] * co[a]);
  return h;
}

YDModule trivial_yd(const FinHopf& e, std::size_t dim) {
  YDModule m{e.field, dim, {}, {}};
  for (std::size_t i = 0; i < e.dim; ++i) m.act.push_back(e.eps(i) * Matrix::identity(e.field, dim));
  m.coaction = kron(Matrix::identity(e.field, dim), Matrix::column_vector(e.unit));
  return m;
}

YDModule adjoint_yd(const FinHopf& e) {
  YDModule m{e.field, e.dim, {}, e.comult};
  for (std::size_t i = 0; i < e.dim; ++i) {
    Matrix r(e.field, e.dim, e.dim);
    for (const auto& c : e.comult.column(i)) {
      std::size_t a = c.index / e.dim, b = c.index % e.dim;
      r += c.value * (e.left_mult(e.antipode.dense_column(a)) * e.right_mult(e.basis(b)));
    }
    m.act.push_back(r);
  }
  return m;
}

YDModule regular_trivial_yd(const FinHopf& e) {
  YDModule m = trivial_yd(e, e.dim);
  for (std::size_t i = 0; i < e.dim; ++i) m.act[i] = e.right_mult(e.basis(i));
  return m;
}

YDModule tensor_yd(const FinHopf& e, const YDModule& m, const YDModule& n) {
  const auto& f = e.field;
  YDModule t{f, m.dim * n.dim, {}, {}};
  for (std::size_t i = 0; i < e.dim; ++i) {
    Matrix r(f, t.dim, t.dim);
    for (const auto& c : e.comult.column(i)) r += c.value * kron(m.act[c.index / e.dim], n.act[c.index % e.dim]);
    t.act.push_back(r);
  }
  // m0 m1 n0 n1 -> m0 n0 m1 n1 -> m0 n0 (m1 n1)
  Matrix p = permute_factors(f, {m.dim, e.dim, n.dim, e.dim}, {0, 2, 1, 3});
  t.coaction = kron(Matrix::identity(f, t.dim), e.mult) * p * kron(m.coaction, n.coaction);
  return t;
}

Matrix yd_braiding(const FinHopf& e, const YDModule& m, const YDModule& n) {
  const auto& f = e.field;
  Matrix step1 = kron(Matrix::identity(f, m.dim), n.coaction);             // m n0 n1
  Matrix step2 = permute_factors(f, {m.dim, n.dim, e.dim}, {1, 0, 2});    // n0 m n1
  Matrix step3 = kron(Matrix::identity(f, n.dim), m.action_map());        // n0 m.n1
  return step3 * step2 * step1;
}

Matrix yd_braiding_inverse(const FinHopf& e, const YDModule& m, const YDModule& n) {
  const auto& f = e.field;
  Matrix step1 = kron(n.coaction, Matrix::identity(f, m.dim));           // n0 n1 m
  Matrix step2 = permute_factors(f, {n.dim, e.dim, m.dim}, {2, 1, 0});   // m n1 n0
  Matrix act = m.action_map() * kron(Matrix::identity(f, m.dim), e.antipode_inv);
  return kron(act, Matrix::identity(f, n.dim)) * step2 * step1;
}

bool is_yd_morphism(const FinHopf& e, const YDModule& m, const YDModule& n, const Matrix& f) {
  for (std::size_t i = 0; i < e.dim; ++i)
    if (!(f * m.act[i] == n.act[i] * f)) return false;
  return n.coaction * f == kron(f, Matrix::identity(e.field, e.dim)) * m.coaction;
}

}  // namespace bhh
