#include "bhh/complexes/hochschild.hpp"

#include <string>

namespace bhh {

namespace {

// f in Hom(X^{(x)n}, Y) -> (a (x) y -> L(a (x) f(y))) in Hom(X^{(x)(n+1)}, Y), for L: X (x) Y -> Y
Matrix left_insertion(const Matrix& L, std::size_t dx, std::size_t dy, std::size_t n) {
  std::size_t xn = checked_pow(dx, n), xn1 = xn * dx;
  std::vector<Triplet> t;
  for (std::size_t col = 0; col < L.cols(); ++col) {
    std::size_t a = col / dy, o = col % dy;
    for (const auto& e : L.column(col))
      for (std::size_t y = 0; y < xn; ++y) t.push_back({e.index * xn1 + a * xn + y, o * xn + y, e.value});
  }
  return Matrix::from_triplets(L.field(), dy * xn1, dy * xn, std::move(t));
}

// f -> (y (x) a -> R(f(y) (x) a)), for R: Y (x) X -> Y
Matrix right_insertion(const Matrix& R, std::size_t dx, std::size_t dy, std::size_t n) {
  std::size_t xn = checked_pow(dx, n), xn1 = xn * dx;
  std::vector<Triplet> t;
  for (std::size_t col = 0; col < R.cols(); ++col) {
    std::size_t o = col / dx, a = col % dx;
    for (const auto& e : R.column(col))
      for (std::size_t y = 0; y < xn; ++y) t.push_back({e.index * xn1 + y * dx + a, o * xn + y, e.value});
  }
  return Matrix::from_triplets(R.field(), dy * xn1, dy * xn, std::move(t));
}

Matrix precompose_into(const Matrix& phi, std::size_t dim_y) {
  return kron(Matrix::identity(phi.field(), dim_y), phi.transpose());
}

Matrix postcompose(const Matrix& a, std::size_t dim_in) { return kron(a, Matrix::identity(a.field(), dim_in)); }

std::vector<Vec> all_basis(const FinHopf& h) {
  std::vector<Vec> r;
  for (std::size_t i = 0; i < h.dim; ++i) r.push_back(h.basis(i));
  return r;
}

}  // namespace

BraidedCochains::BraidedCochains(AlgebraObject b, std::vector<Vec> gens, std::size_t max_columns)
    : b_(std::move(b)), gens_(std::move(gens)), max_columns_(max_columns), tp_(b_.hopf(), b_.mod) {
  if (gens_.empty()) gens_ = all_basis(b_.hopf());
}

std::size_t BraidedCochains::space_dim(std::size_t n) const { return checked_pow(dim(), n + 1); }

void BraidedCochains::check_cap(std::size_t n) const {
  if (space_dim(n) > max_columns_)
    throw ResourceCap("C^" + std::to_string(n) + " has dimension " + std::to_string(space_dim(n)) + " > " +
                      std::to_string(max_columns_));
}

Matrix BraidedCochains::precompose(const Matrix& phi) const { return precompose_into(phi, dim()); }

Vec BraidedCochains::pi() const {
  Vec v = zero_vec(field(), dim() * dim());
  for (std::size_t i = 0; i < dim(); ++i) v[i * dim() + i] = Scalar::one(field());
  return v;
}

const Matrix& BraidedCochains::differential(std::size_t n) {
  if (auto it = d_.find(n); it != d_.end()) return it->second;
  check_cap(n + 1);
  const auto& f = field();
  std::size_t d = dim();
  const Algebra& B = b_.alg;
  Matrix Id = Matrix::identity(f, d);
  Matrix t(f, space_dim(n + 1), space_dim(n));
  for (const auto& [jk, c] : b_.H->R_terms())
    t += c * (left_insertion(B.mult * kron(b_.mod.rho[jk.second], Id), d, d, n) * tp_.hom(n, jk.first));
  t += precompose(bar_differential(B, n + 1));
  Matrix r = sign_scalar(f, n + 1) * t + right_insertion(B.mult, d, d, n);
  return d_.emplace(n, std::move(r)).first->second;
}

Matrix BraidedCochains::hom_differential(std::size_t n) {
  return sign_scalar(field(), n + 1) * precompose(bar_differential(b_.alg, n + 1));
}

Matrix BraidedCochains::bar_lift(std::size_t n) {
  const auto& f = field();
  const Algebra& B = b_.alg;
  std::size_t d = dim(), xn = checked_pow(d, n), rows = d * d * xn * d;
  HModule tpow = tensor_power(b_.hopf(), b_.mod, n);
  Matrix lift(f, rows, d * xn);
  for (const auto& [jk, c] : b_.H->R_terms()) {
    std::vector<Triplet> t;
    for (std::size_t b = 0; b < d; ++b) {
      Vec rb = b_.mod.rho[jk.second].apply(B.basis(b));
      for (std::size_t o = 0; o < d; ++o) {
        Vec ro = B.mul(rb, B.basis(o));
        for (std::size_t b2 = 0; b2 < d; ++b2) {
          Vec v = B.mul(ro, B.basis(b2));
          for (std::size_t out = 0; out < d; ++out)
            if (!v[out].is_zero())
              for (std::size_t y = 0; y < xn; ++y)
                t.push_back({out * d * xn * d + (b * xn + y) * d + b2, o * xn + y, v[out]});
        }
      }
    }
    Matrix place = Matrix::from_triplets(f, rows, d * xn, std::move(t));
    lift += c * (place * hom_action(b_.hopf(), tpow, b_.mod, jk.first));
  }
  return lift;
}

Matrix BraidedCochains::transported_differential(std::size_t n) {
  const auto& f = field();
  std::size_t d = dim();
  Matrix u = Matrix::column_vector(b_.alg.unit);
  Matrix iota = kron(u, kron(Matrix::identity(f, checked_pow(d, n + 1)), u));
  return precompose(alternating_merge(b_.alg, n + 3) * iota) * bar_lift(n);
}

Complex BraidedCochains::complex(std::size_t N, bool with_action) {
  check_cap(N);
  Complex c{field(), 0, {}, {}, {}, {}, {}};
  if (with_action) {
    c.action_elems = gens_;
    for (const auto& g : gens_) c.action_eps.push_back(b_.hopf().eps(g));
  }
  for (std::size_t n = 0; n <= N; ++n) {
    c.dims.push_back(space_dim(n));
    if (n < N) c.d.push_back(differential(n));
    if (with_action) {
      c.action.emplace_back();
      for (const auto& g : gens_) c.action.back().push_back(tp_.hom(n, g));
    }
  }
  return c;
}

Matrix relative_cochain_constraints(BraidedCochains& c, const Matrix& incl_e, std::size_t n) {
  const auto& b = c.algebra();
  const auto& f = c.field();
  std::size_t d = c.dim(), xn = checked_pow(d, n);
  Matrix Id = Matrix::identity(f, d);
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < incl_e.cols(); ++k) {
    Vec w = incl_e.dense_column(k);
    Matrix Lw = b.alg.left_mult(w), Rw = b.alg.right_mult(w);
    if (n == 0) {
      Matrix m = Rw;
      for (const auto& [jk, coeff] : b.H->R_terms())
        m -= coeff * (b.alg.left_mult(b.mod.rho[jk.second].apply(w)) * b.mod.rho[jk.first]);
      blocks.push_back(m);
      continue;
    }
    Matrix bal = kron(Rw, Id) - kron(Id, Lw);
    for (std::size_t s = 0; s + 1 < n; ++s)
      blocks.push_back(c.precompose(kron(Matrix::identity(f, checked_pow(d, s)), kron(bal, Matrix::identity(f, checked_pow(d, n - s - 2))))));
    blocks.push_back(c.precompose(kron(Matrix::identity(f, xn / d), Rw)) - postcompose(Rw, xn));
    Matrix eq2 = c.precompose(kron(Lw, Matrix::identity(f, xn / d)));
    for (const auto& [jk, coeff] : b.H->R_terms())
      eq2 -= coeff * (postcompose(b.alg.left_mult(b.mod.rho[jk.second].apply(w)), xn) * c.powers().hom(n, jk.first));
    blocks.push_back(eq2);
  }
  return vstack(blocks);
}

EmbeddedComplex relative_cochain_complex(BraidedCochains& c, const Complex& full, const Matrix& incl_e) {
  std::vector<Matrix> bases;
  for (int n = 0; n <= full.hi(); ++n) bases.push_back(kernel_basis(relative_cochain_constraints(c, incl_e, n)));
  return {subcomplex(full, bases), bases};
}

ClassicalBimodule regular_classical_bimodule(const Algebra& a) { return {a.dim, a.mult, a.mult}; }

ClassicalBimodule restricted_bimodule(const Algebra& b, const Matrix& incl) {
  Matrix Id = Matrix::identity(b.field, b.dim);
  return {b.dim, b.mult * kron(incl, Id), b.mult * kron(Id, incl)};
}

ClassicalBimodule twisted_bimodule(const ModuleAlgebra& a, std::size_t g) {
  Matrix Id = Matrix::identity(a.alg.field, a.alg.dim);
  return {a.alg.dim, a.alg.mult, a.alg.mult * kron(Id, a.action.rho.at(g))};
}

Complex classical_cochain_complex(const Algebra& a, const ClassicalBimodule& m, std::size_t N) {
  const auto& f = a.field;
  Complex c{f, 0, {}, {}, {}, {}, {}};
  for (std::size_t n = 0; n <= N; ++n) {
    c.dims.push_back(m.dim * checked_pow(a.dim, n));
    if (n == N) break;
    Matrix t = left_insertion(m.left, a.dim, m.dim, n) + precompose_into(bar_differential(a, n + 1), m.dim);
    c.d.push_back(sign_scalar(f, n + 1) * t + right_insertion(m.right, a.dim, m.dim, n));
  }
  return c;
}

std::vector<Matrix> restriction_maps(const EmbeddedComplex& rel, const Matrix& incl_a, std::size_t dim_b) {
  const auto& f = incl_a.field();
  std::vector<Matrix> r;
  Matrix pw = Matrix::identity(f, 1);
  for (std::size_t n = 0; n < rel.embedding.size(); ++n) {
    r.push_back(precompose_into(pw, dim_b) * rel.embedding[n]);
    pw = kron(pw, incl_a);
  }
  return r;
}

Report check_restriction_iso(const EmbeddedComplex& rel, const Complex& classical, const std::vector<Matrix>& res) {
  Report rep;
  std::string bad;
  for (std::size_t n = 0; n < res.size() && bad.empty(); ++n)
    if (res[n].rows() != res[n].cols() || rank(res[n]) != res[n].cols()) bad = "degree " + std::to_string(n);
  rep.add("restriction is bijective", bad.empty(), bad);
  rep.merge(check_chain_map(rel.complex, classical, res, "restriction"));
  return rep;
}

Matrix normalization_constraints(const Vec& unit, std::size_t dim_y, std::size_t n) {
  const auto& f = unit.front().field();
  std::size_t dx = unit.size();
  if (n == 0) return Matrix(f, 0, dim_y);
  Matrix u = Matrix::column_vector(unit);
  std::vector<Matrix> blocks;
  for (std::size_t s = 0; s < n; ++s) {
    Matrix ins = kron(Matrix::identity(f, checked_pow(dx, s)), kron(u, Matrix::identity(f, checked_pow(dx, n - 1 - s))));
    blocks.push_back(precompose_into(ins, dim_y));
  }
  return vstack(blocks);
}

Complex normalized_subcomplex(const Complex& c, const Vec& unit, std::size_t dim_y) {
  if (c.lo != 0) throw Error("normalized_subcomplex: complex must start in degree 0");
  std::vector<Matrix> cons;
  for (int n = 0; n <= c.hi(); ++n) cons.push_back(normalization_constraints(unit, dim_y, n));
  return constrained_subcomplex(c, cons);
}

EmbeddedComplex normalized_subcomplex(const EmbeddedComplex& c, const Vec& unit, std::size_t dim_y) {
  std::vector<Matrix> bases, emb;
  for (std::size_t n = 0; n < c.embedding.size(); ++n) {
    Matrix k = normalization_constraints(unit, dim_y, n);
    bases.push_back(k.rows() == 0 ? Matrix::identity(unit.front().field(), c.embedding[n].cols()) : kernel_basis(k * c.embedding[n]));
    emb.push_back(c.embedding[n] * bases.back());
  }
  return {subcomplex(c.complex, bases), emb};
}

}  // namespace bhh
