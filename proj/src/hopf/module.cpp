#include "bhh/hopf/module.hpp"

namespace bhh {

Matrix HModule::act(const Vec& h) const {
  Matrix r(field, dim, dim);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) r += h[i] * rho.at(i);
  return r;
}

HModule trivial_module(const FinHopf& h, std::size_t dim) {
  HModule m{h.field, dim, {}};
  for (std::size_t i = 0; i < h.dim; ++i) m.rho.push_back(h.eps(i) * Matrix::identity(h.field, dim));
  return m;
}

HModule regular_module(const FinHopf& h) {
  HModule m{h.field, h.dim, {}};
  for (std::size_t i = 0; i < h.dim; ++i) m.rho.push_back(h.left_mult(h.basis(i)));
  return m;
}

Report check_module(const FinHopf& h, const HModule& m) {
  Report rep;
  if (m.rho.size() != h.dim) {
    rep.add("action shape", false, "expected one matrix per basis element");
    return rep;
  }
  std::string bad;
  for (std::size_t i = 0; i < h.dim && bad.empty(); ++i)
    for (std::size_t j = 0; j < h.dim && bad.empty(); ++j)
      if (!(m.rho[i] * m.rho[j] == m.act(h.mul(h.basis(i), h.basis(j))))) bad = h.labels[i] + "," + h.labels[j];
  rep.add("action associative", bad.empty(), bad);
  rep.add("action unital", m.act(h.unit) == Matrix::identity(m.field, m.dim));
  return rep;
}

Matrix tensor_action(const FinHopf& h, const std::vector<const HModule*>& factors, std::size_t basis_index) {
  const std::size_t k = factors.size();
  if (k == 0) {
    Matrix r(h.field, 1, 1);
    if (!h.eps(basis_index).is_zero()) r = Matrix::from_triplets(h.field, 1, 1, {{0, 0, h.eps(basis_index)}});
    return r;
  }
  if (k == 1) return factors[0]->rho.at(basis_index);
  std::size_t total = 1;
  for (auto* f : factors) total *= f->dim;
  std::vector<Triplet> acc;
  for (const auto& t : h.coproduct_power(basis_index, k)) {
    auto idx = multi_index(t.index, h.dim, k);
    Matrix term = factors[0]->rho[idx[0]];
    for (std::size_t s = 1; s < k && !term.is_zero(); ++s) term = kron(term, factors[s]->rho[idx[s]]);
    for (std::size_t c = 0; c < term.cols(); ++c)
      for (const auto& e : term.column(c)) acc.push_back({e.index, c, t.value * e.value});
  }
  return Matrix::from_triplets(h.field, total, total, std::move(acc));
}

Matrix tensor_action(const FinHopf& h, const std::vector<const HModule*>& factors, const Vec& elem) {
  std::size_t total = 1;
  for (auto* f : factors) total *= f->dim;
  Matrix r(h.field, total, total);
  for (std::size_t i = 0; i < elem.size(); ++i)
    if (!elem[i].is_zero()) r += elem[i] * tensor_action(h, factors, i);
  return r;
}

HModule tensor_module(const FinHopf& h, const std::vector<const HModule*>& factors) {
  std::size_t total = 1;
  for (auto* f : factors) total *= f->dim;
  HModule m{h.field, total, {}};
  for (std::size_t i = 0; i < h.dim; ++i) m.rho.push_back(tensor_action(h, factors, i));
  return m;
}

HModule tensor_power(const FinHopf& h, const HModule& m, std::size_t n) {
  return tensor_module(h, std::vector<const HModule*>(n, &m));
}

Matrix hom_action(const FinHopf& h, const HModule& v, const HModule& w, std::size_t basis_index) {
  std::vector<Triplet> acc;
  for (const auto& c : h.comult.column(basis_index)) {
    std::size_t a = c.index / h.dim, b = c.index % h.dim;
    Matrix s = v.act(h.antipode.dense_column(b)).transpose();
    Matrix term = kron(w.rho[a], s);
    for (std::size_t col = 0; col < term.cols(); ++col)
      for (const auto& e : term.column(col)) acc.push_back({e.index, col, c.value * e.value});
  }
  std::size_t n = v.dim * w.dim;
  return Matrix::from_triplets(h.field, n, n, std::move(acc));
}

Matrix hom_action(const FinHopf& h, const HModule& v, const HModule& w, const Vec& elem) {
  Matrix r(h.field, v.dim * w.dim, v.dim * w.dim);
  for (std::size_t i = 0; i < elem.size(); ++i)
    if (!elem[i].is_zero()) r += elem[i] * hom_action(h, v, w, i);
  return r;
}

HModule inner_hom(const FinHopf& h, const HModule& v, const HModule& w, std::size_t max_dim) {
  if (v.dim * w.dim > max_dim)
    throw ResourceCap("inner hom of dimension " + std::to_string(v.dim * w.dim) + " exceeds cap " + std::to_string(max_dim));
  HModule m{h.field, v.dim * w.dim, {}};
  for (std::size_t i = 0; i < h.dim; ++i) m.rho.push_back(hom_action(h, v, w, i));
  return m;
}

Matrix invariants(const FinHopf& h, const HModule& m, const std::vector<Vec>& gens) {
  std::vector<Matrix> blocks;
  Matrix I = Matrix::identity(h.field, m.dim);
  if (gens.empty()) {
    for (std::size_t i = 0; i < h.dim; ++i) blocks.push_back(m.rho[i] - h.eps(i) * I);
  } else {
    for (const auto& g : gens) blocks.push_back(m.act(g) - h.eps(g) * I);
  }
  return kernel_basis(vstack(blocks));
}

Matrix module_homs(const FinHopf& h, const HModule& v, const HModule& w) {
  std::vector<Matrix> blocks;
  Matrix Iv = Matrix::identity(h.field, v.dim), Iw = Matrix::identity(h.field, w.dim);
  for (std::size_t i = 0; i < h.dim; ++i) blocks.push_back(kron(Iw, v.rho[i].transpose()) - kron(w.rho[i], Iv));
  return kernel_basis(vstack(blocks));
}

Matrix rmatrix_braiding(const QuasiTriHopf& q, const HModule& m, const HModule& n) {
  Matrix r(q.hopf.field, m.dim * n.dim, m.dim * n.dim);
  for (const auto& [ij, c] : q.R_terms()) r += c * kron(m.rho[ij.first], n.rho[ij.second]);
  return flip(q.hopf.field, m.dim, n.dim) * r;
}

Matrix rmatrix_braiding_inverse(const QuasiTriHopf& q, const HModule& m, const HModule& n) {
  Matrix r(q.hopf.field, m.dim * n.dim, m.dim * n.dim);
  for (const auto& [ij, c] : q.R_terms()) r += c * kron(m.act(q.hopf.antipode.dense_column(ij.first)), n.rho[ij.second]);
  return r * flip(q.hopf.field, n.dim, m.dim);
}

Matrix Algebra::left_mult(const Vec& a) const { return mult * kron(Matrix::column_vector(a), Matrix::identity(field, dim)); }

Matrix Algebra::right_mult(const Vec& a) const { return mult * kron(Matrix::identity(field, dim), Matrix::column_vector(a)); }

Report check_algebra(const Algebra& a) {
  Report rep;
  Matrix I = Matrix::identity(a.field, a.dim);
  Matrix u = Matrix::column_vector(a.unit);
  auto [r, c] = (a.mult * kron(a.mult, I)).first_difference(a.mult * kron(I, a.mult));
  rep.add("associativity", r == a.dim, r == a.dim ? "" : "fails on monomial " + std::to_string(c));
  rep.add("unit", a.mult * kron(u, I) == I && a.mult * kron(I, u) == I);
  return rep;
}

Algebra algebra_from_hopf(const FinHopf& h) { return {h.field, h.dim, h.mult, h.unit, h.labels}; }

Algebra dual_numbers(const FieldSpec& f) {
  Algebra a{f, 2, {}, unit_vec(f, 2, 0), {"1", "x"}};
  a.mult = Matrix::from_triplets(f, 2, 4, {{0, 0, Scalar::one(f)}, {1, 1, Scalar::one(f)}, {1, 2, Scalar::one(f)}});
  return a;
}

Algebra ground_algebra(const FieldSpec& f) { return {f, 1, Matrix::identity(f, 1), {Scalar::one(f)}, {"1"}}; }

Algebra opposite(const Algebra& a) {
  Algebra o = a;
  o.mult = a.mult * flip(a.field, a.dim, a.dim);
  return o;
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
  Algebra t;
  t.field = a.field;
  t.dim = a.dim * b.dim;
  Matrix mid = kron(kron(Matrix::identity(a.field, a.dim), flip(a.field, b.dim, a.dim)), Matrix::identity(a.field, b.dim));
  t.mult = kron(a.mult, b.mult) * mid;
  t.unit = kron_vec(a.unit, b.unit);
  for (const auto& x : a.labels)
    for (const auto& y : b.labels) t.labels.push_back(x + "⊗" + y);
  return t;
}

Report check_module_algebra(const FinHopf& h, const ModuleAlgebra& a) {
  Report rep = check_module(h, a.action);
  const Algebra& A = a.alg;
  std::string bad;
  for (std::size_t i = 0; i < h.dim && bad.empty(); ++i) {
    // h.(ab) vs (h1.a)(h2.b), as maps A (x) A -> A
    Matrix lhs = a.action.rho[i] * A.mult;
    Matrix rhs(A.field, A.dim, A.dim * A.dim);
    for (const auto& c : h.comult.column(i))
      rhs += c.value * (A.mult * kron(a.action.rho[c.index / h.dim], a.action.rho[c.index % h.dim]));
    if (!(lhs == rhs)) bad = "fails for " + h.labels[i];
  }
  rep.add("h.(ab) = (h1.a)(h2.b)", bad.empty(), bad);
  bad.clear();
  for (std::size_t i = 0; i < h.dim && bad.empty(); ++i)
    if (a.action.rho[i].apply(A.unit) != scaled(A.unit, h.eps(i))) bad = "fails for " + h.labels[i];
  rep.add("h.1 = eps(h)1", bad.empty(), bad);
  return rep;
}

}  // namespace bhh
