#include "bhh/braidalg/algebra.hpp"

#include "bhh/hopf/twist.hpp"

namespace bhh {

namespace {

std::vector<Vec> all_basis(const FinHopf& h) {
  std::vector<Vec> v;
  for (std::size_t i = 0; i < h.dim; ++i) v.push_back(h.basis(i));
  return v;
}

std::string elem_label(const FinHopf& h, const Vec& x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += (x[i].is_one() ? "" : x[i].str() + " ") + h.labels[i];
  }
  return s.empty() ? "0" : s;
}

// sum_i x_i rho(e_i)
Matrix act_on(const HModule& m, const Vec& x) { return m.act(x); }

// rho on the n-th tensor power (n = 0 gives eps)
Matrix power_action(const FinHopf& h, const HModule& m, std::size_t n, const Vec& x) {
  std::vector<const HModule*> fs(n, &m);
  return tensor_action(h, fs, x);
}

}  // namespace

Report check_algebra_in_Z(const AlgebraObject& b, const std::vector<Vec>& gens) {
  Report rep = check_algebra(b.alg);
  const FinHopf& h = b.hopf();
  const Algebra& A = b.alg;
  std::string bad_m, bad_u;
  for (const Vec& x : gens.empty() ? all_basis(h) : gens) {
    Matrix lhs = b.mod.act(x) * A.mult;
    Matrix rhs = A.mult * tensor_action(h, {&b.mod, &b.mod}, x);
    if (bad_m.empty() && !(lhs == rhs)) bad_m = "fails for " + elem_label(h, x);
    if (bad_u.empty() && !(b.mod.act(x).apply(A.unit) == scaled(A.unit, h.eps(x)))) bad_u = "fails for " + elem_label(h, x);
  }
  rep.add("multiplication is H-linear", bad_m.empty(), bad_m);
  rep.add("unit is H-linear", bad_u.empty(), bad_u);
  return rep;
}

std::vector<Vec> double_generators(const DrinfeldDouble& dd) {
  std::vector<Vec> g;
  for (std::size_t i = 0; i < dd.E.dim; ++i) g.push_back(dd.from_eop(dd.E.basis(i)));
  for (std::size_t a = 0; a < dd.E.dim; ++a) g.push_back(dd.from_dual(dd.E.basis(a)));
  return g;
}

SmashProduct smash_product(std::shared_ptr<const DrinfeldDouble> dd, const ModuleAlgebra& a) {
  const FinHopf& E = dd->E;
  const Algebra& A = a.alg;
  const FieldSpec& f = E.field;
  if (!check_module_algebra(E, a).ok()) throw Error("smash product: not an E-module algebra");
  std::size_t da = A.dim, de = E.dim, d = da * de;

  Algebra B{f, d, {}, kron_vec(A.unit, E.unit), {}};
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < de; ++j) B.labels.push_back(A.labels.at(i) + "*" + E.labels.at(j));
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < de; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < de; ++l) {
          std::size_t col = (i * de + j) * d + (k * de + l);
          for (const auto& c : E.comult.column(j)) {
            std::size_t p = c.index / de, q = c.index % de;
            Vec ak = a.action.rho[p].apply(A.basis(k));
            Vec prod = A.mul(A.basis(i), ak);
            Vec w = E.mul(E.basis(q), E.basis(l));
            for (std::size_t r = 0; r < da; ++r) {
              if (prod[r].is_zero()) continue;
              for (std::size_t s = 0; s < de; ++s)
                if (!w[s].is_zero()) t.push_back({r * de + s, col, c.value * prod[r] * w[s]});
            }
          }
        }
  B.mult = Matrix::from_triplets(f, d, d * d, std::move(t));

  SmashProduct sp;
  sp.dd = dd;
  sp.dim_a = da;
  sp.a = a;
  {
    std::vector<Triplet> ia, ie;
    for (std::size_t i = 0; i < da; ++i)
      for (std::size_t j = 0; j < de; ++j) {
        if (!E.unit[j].is_zero()) ia.push_back({i * de + j, i, E.unit[j]});
        if (!A.unit[i].is_zero()) ie.push_back({i * de + j, j, A.unit[i]});
      }
    sp.incl_a = Matrix::from_triplets(f, d, da, std::move(ia));
    sp.incl_e = Matrix::from_triplets(f, d, de, std::move(ie));
  }

  // right adjoint action and coaction a w_1 (x) w_2
  YDModule yd{f, d, {}, {}};
  for (std::size_t w = 0; w < de; ++w) {
    Matrix r(f, d, d);
    for (const auto& c : E.comult.column(w)) {
      Vec s = sp.incl_e.apply(E.antipode.dense_column(c.index / de));
      Vec u = sp.incl_e.apply(E.basis(c.index % de));
      r += c.value * (B.left_mult(s) * B.right_mult(u));
    }
    yd.act.push_back(r);
  }
  std::vector<Triplet> co;
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < de; ++j)
      for (const auto& c : E.comult.column(j))
        co.push_back({(i * de + c.index / de) * de + c.index % de, i * de + j, c.value});
  yd.coaction = Matrix::from_triplets(f, d * de, d, std::move(co));

  sp.yd = yd;
  sp.B.H = std::shared_ptr<const QuasiTriHopf>(dd, &dd->D);
  sp.B.alg = std::move(B);
  sp.B.mod = to_dmodule(*dd, yd);
  return sp;
}

Matrix coinvariants(const FinHopf& e, const YDModule& m) {
  Matrix triv = kron(Matrix::identity(m.field, m.dim), Matrix::column_vector(e.unit));
  return kernel_basis(m.coaction - triv);
}

AlgebraObject braided_opposite(const AlgebraObject& b) {
  AlgebraObject o = b;
  o.alg.mult = b.alg.mult * rmatrix_braiding(*b.H, b.mod, b.mod);
  return o;
}

AlgebraObject braided_tensor_algebra(const AlgebraObject& b, const AlgebraObject& c) {
  if (b.H != c.H) throw Error("braided tensor algebra: different Hopf algebras");
  const FieldSpec& f = b.field();
  AlgebraObject t;
  t.H = b.H;
  t.alg = tensor_algebra(b.alg, c.alg);
  Matrix mid = kron(kron(Matrix::identity(f, b.dim()), rmatrix_braiding(*b.H, c.mod, b.mod)), Matrix::identity(f, c.dim()));
  t.alg.mult = kron(b.alg.mult, c.alg.mult) * mid;
  t.mod = tensor_module(b.hopf(), {&b.mod, &c.mod});
  return t;
}

AlgebraObject braided_enveloping(const AlgebraObject& b) { return braided_tensor_algebra(braided_opposite(b), b); }

Matrix env_action(const AlgebraObject& b) {
  const Matrix& m = b.alg.mult;
  return m * kron(m * rmatrix_braiding(*b.H, b.mod, b.mod), Matrix::identity(b.field(), b.dim()));
}

Report check_right_module(const Algebra& a, std::size_t dim_m, const Matrix& act) {
  Report rep;
  const FieldSpec& f = a.field;
  Matrix I = Matrix::identity(f, dim_m);
  if (act.rows() != dim_m || act.cols() != dim_m * a.dim) {
    rep.add("shape", false, "action has the wrong shape");
    return rep;
  }
  auto [r, c] = (act * kron(act, Matrix::identity(f, a.dim))).first_difference(act * kron(I, a.mult));
  rep.add("(m.u).v = m.(uv)", r == dim_m, r == dim_m ? "" : "first difference in column " + std::to_string(c));
  rep.add("m.1 = m", act * kron(I, Matrix::column_vector(a.unit)) == I);
  return rep;
}

Matrix freeness_map(const AlgebraObject& b, std::size_t n) {
  const FieldSpec& f = b.field();
  const FinHopf& h = b.hopf();
  std::size_t d = b.dim(), dn = checked_pow(d, n);
  Matrix sum(f, d * dn * d, dn * d * d);
  Matrix p = permute_factors(f, {dn, d, d}, {1, 0, 2});
  for (const auto& [jk, c] : b.H->R_terms())
    sum += c * (p * kron(kron(power_action(h, b.mod, n, h.basis(jk.first)), b.mod.rho[jk.second]), Matrix::identity(f, d)));
  return sum;
}

Matrix freeness_inverse(const AlgebraObject& b, std::size_t n, bool via_inverse_antipode) {
  const FieldSpec& f = b.field();
  const FinHopf& h = b.hopf();
  std::size_t d = b.dim(), dn = checked_pow(d, n);
  Matrix sum(f, dn * d * d, d * dn * d);
  Matrix p = permute_factors(f, {d, dn, d}, {1, 0, 2});
  for (const auto& [jk, c] : b.H->R_terms()) {
    Matrix on_x, on_b;
    if (via_inverse_antipode) {
      on_x = power_action(h, b.mod, n, h.basis(jk.first));
      on_b = act_on(b.mod, h.antipode_inv.dense_column(jk.second));
    } else {
      on_x = power_action(h, b.mod, n, h.antipode.dense_column(jk.first));
      on_b = b.mod.rho[jk.second];
    }
    sum += c * (kron(kron(on_x, on_b), Matrix::identity(f, d)) * p);
  }
  return sum;
}

DualCocycle dual_cocycle(const DrinfeldDouble& dd, const std::vector<std::vector<Scalar>>& alpha) {
  std::size_t n = dd.E.dim;
  if (alpha.size() != n) throw DimensionMismatch("dual cocycle: table size");
  DualCocycle j{alpha, zero_vec(dd.E.field, dd.D.hopf.dim * dd.D.hopf.dim), {}};
  for (std::size_t g = 0; g < n; ++g) {
    if (alpha[g].size() != n) throw DimensionMismatch("dual cocycle: table size");
    for (std::size_t k = 0; k < n; ++k)
      j.J = j.J + scaled(kron_vec(dd.from_dual(dd.E.basis(g)), dd.from_dual(dd.E.basis(k))), alpha[g][k]);
  }
  bool invertible = true;
  for (const auto& row : alpha)
    for (const auto& x : row) invertible = invertible && !x.is_zero();
  if (invertible) j.J_inv = tensor_inverse(dd.D.hopf, 2, j.J);
  return j;
}

Report dual_cocycle_check(const DrinfeldDouble& dd, const GroupTable& g, const DualCocycle& j) {
  Report rep;
  std::size_t n = g.order();
  bool inv = !j.J_inv.empty();
  rep.add("invertible", inv);
  std::string bad;
  for (std::size_t a = 0; a < n && bad.empty(); ++a)
    for (std::size_t b = 0; b < n && bad.empty(); ++b)
      for (std::size_t c = 0; c < n && bad.empty(); ++c) {
        Scalar l = j.alpha[a][b] * j.alpha[g.mul(a, b)][c];
        Scalar r = j.alpha[b][c] * j.alpha[a][g.mul(b, c)];
        if (!(l == r)) bad = "(" + g.labels()[a] + "," + g.labels()[b] + "," + g.labels()[c] + ")";
      }
  rep.add("alpha(g,h) alpha(gh,k) = alpha(h,k) alpha(g,hk)", bad.empty(), bad);
  if (inv) rep.merge(check_twist(dd.D.hopf, j.J), "twist: ");
  return rep;
}

std::vector<std::vector<Scalar>> klein_bicharacter(const FieldSpec& f) {
  std::vector<std::vector<Scalar>> a(4, std::vector<Scalar>(4, Scalar::one(f)));
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t h = 0; h < 4; ++h)
      if ((g / 2) * (h % 2) == 1) a[g][h] = Scalar(f, -1);
  return a;
}

AlgebraObject j_twist_algebra(const AlgebraObject& b, const Vec& J) {
  const FinHopf& h = b.hopf();
  AlgebraObject t = b;
  t.H = std::make_shared<const QuasiTriHopf>(twist_quasitriangular(*b.H, J));
  Matrix m(b.field(), b.dim() * b.dim(), b.dim() * b.dim());
  for (std::size_t k = 0; k < J.size(); ++k)
    if (!J[k].is_zero()) m += J[k] * kron(b.mod.rho[k / h.dim], b.mod.rho[k % h.dim]);
  t.alg.mult = b.alg.mult * m;
  return t;
}

}  // namespace bhh
