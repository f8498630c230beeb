#include "bhh/ydmod/bimodule.hpp"

namespace bhh {

namespace {

Matrix combo(const std::vector<Matrix>& mats, const Vec& w, const FieldSpec& f, std::size_t dim) {
  Matrix r(f, dim, dim);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!w[i].is_zero()) r += w[i] * mats.at(i);
  return r;
}

// vec(f A) and vec(B f) for f: M -> N stored row-major (out * dim M + in)
Matrix right_compose(const Matrix& a, std::size_t dim_n) { return kron(Matrix::identity(a.field(), dim_n), a.transpose()); }
Matrix left_compose(const Matrix& b, std::size_t dim_m) { return kron(b, Matrix::identity(b.field(), dim_m)); }

}  // namespace

Report check_bimodule(const FinHopf& h, const AlgebraInModules& e, const BimoduleObject& m) {
  Report rep;
  const auto& E = e.alg;
  const auto& f = E.field;
  std::size_t d = m.carrier.dim;
  Matrix I = Matrix::identity(f, d);
  bool ok_l = true, ok_r = true, ok_c = true;
  for (std::size_t a = 0; a < E.dim; ++a)
    for (std::size_t b = 0; b < E.dim; ++b) {
      Vec ab = E.mul(E.basis(a), E.basis(b));
      ok_l = ok_l && m.left[a] * m.left[b] == combo(m.left, ab, f, d);
      ok_r = ok_r && m.right[b] * m.right[a] == combo(m.right, ab, f, d);
      ok_c = ok_c && m.left[a] * m.right[b] == m.right[b] * m.left[a];
    }
  rep.add("left action", ok_l && combo(m.left, E.unit, f, d) == I);
  rep.add("right action", ok_r && combo(m.right, E.unit, f, d) == I);
  rep.add("actions commute", ok_c);
  std::string bad;
  for (std::size_t x = 0; x < h.dim && bad.empty(); ++x)
    for (std::size_t a = 0; a < E.dim && bad.empty(); ++a)
      for (std::size_t b = 0; b < E.dim && bad.empty(); ++b) {
        Matrix lhs = m.carrier.rho[x] * m.left[a] * m.right[b];
        Matrix rhs(f, d, d);
        for (const auto& t : h.coproduct_power(x, 3)) {
          auto i = multi_index(t.index, h.dim, 3);
          Vec ha = e.mod.rho[i[0]].apply(E.basis(a)), hb = e.mod.rho[i[2]].apply(E.basis(b));
          rhs += t.value * (combo(m.left, ha, f, d) * combo(m.right, hb, f, d) * m.carrier.rho[i[1]]);
        }
        if (!(lhs == rhs)) bad = h.labels[x] + " on " + E.labels[a] + "," + E.labels[b];
      }
  rep.add("E (x) M (x) E -> M is H-linear", bad.empty(), bad);
  return rep;
}

BimoduleObject regular_bimodule(const AlgebraInModules& e) {
  BimoduleObject b{e.mod, {}, {}};
  for (std::size_t i = 0; i < e.alg.dim; ++i) {
    b.left.push_back(e.alg.left_mult(e.alg.basis(i)));
    b.right.push_back(e.alg.right_mult(e.alg.basis(i)));
  }
  return b;
}

HomSpace bimodule_hom_space(const QuasiTriHopf& q, const AlgebraInModules& e, const BimoduleObject& m,
                            const BimoduleObject& n) {
  const FinHopf& h = q.hopf;
  const auto& E = e.alg;
  std::size_t dm = m.carrier.dim, dn = n.carrier.dim;
  std::vector<Matrix> hom;
  for (std::size_t i = 0; i < h.dim; ++i) hom.push_back(hom_action(h, m.carrier, n.carrier, i));
  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < E.dim; ++w) {
    blocks.push_back(right_compose(m.right[w], dn) - left_compose(n.right[w], dm));
    Matrix eq2 = right_compose(m.left[w], dn);
    for (const auto& [jk, c] : q.R_terms()) {
      Vec rw = e.mod.rho[jk.second].apply(E.basis(w));
      eq2 -= c * (left_compose(combo(n.left, rw, E.field, dn), dm) * hom[jk.first]);
    }
    blocks.push_back(eq2);
  }
  HomSpace s;
  s.basis = blocks.empty() ? Matrix::identity(E.field, dm * dn) : kernel_basis(vstack(blocks));
  s.action = HModule{E.field, s.basis.cols(), {}};
  s.stable = true;
  for (std::size_t i = 0; i < h.dim; ++i) {
    auto c = coordinates_in(s.basis, hom[i] * s.basis);
    if (!c) {
      s.stable = false;
      s.action.rho.clear();
      break;
    }
    s.action.rho.push_back(*c);
  }
  return s;
}

Matrix bimodule_morphisms(const FinHopf& h, const BimoduleObject& m, const BimoduleObject& n) {
  std::size_t dm = m.carrier.dim, dn = n.carrier.dim;
  std::vector<Matrix> blocks;
  for (std::size_t w = 0; w < m.left.size(); ++w) {
    blocks.push_back(right_compose(m.left[w], dn) - left_compose(n.left[w], dm));
    blocks.push_back(right_compose(m.right[w], dn) - left_compose(n.right[w], dm));
  }
  for (std::size_t i = 0; i < h.dim; ++i)
    blocks.push_back(right_compose(m.carrier.rho[i], dn) - left_compose(n.carrier.rho[i], dm));
  return kernel_basis(vstack(blocks));
}

}  // namespace bhh
