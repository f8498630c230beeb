#include "bhh/complexes/bar.hpp"

#include <string>

namespace bhh {

TensorPowers::TensorPowers(const FinHopf& h, HModule m) : h_(&h), m_(std::move(m)) {}

const Matrix& TensorPowers::rho(std::size_t n, std::size_t i) {
  auto key = std::make_pair(n, i);
  if (auto it = rho_.find(key); it != rho_.end()) return it->second;
  const auto& f = h_->field;
  Matrix r;
  if (n == 0) {
    r = Matrix(f, 1, 1);
    if (!h_->eps(i).is_zero()) r = Matrix::from_triplets(f, 1, 1, {{0, 0, h_->eps(i)}});
  } else if (n == 1) {
    r = m_.rho.at(i);
  } else {
    std::size_t total = checked_pow(m_.dim, n);
    r = Matrix(f, total, total);
    for (const auto& c : h_->comult.column(i)) {
      const Matrix& rest = rho(n - 1, c.index % h_->dim);
      r += c.value * kron(m_.rho[c.index / h_->dim], rest);
    }
  }
  return rho_.emplace(key, std::move(r)).first->second;
}

Matrix TensorPowers::rho(std::size_t n, const Vec& h) {
  std::size_t total = checked_pow(m_.dim, n);
  Matrix r(h_->field, total, total);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) r += h[i] * rho(n, i);
  return r;
}

const Matrix& TensorPowers::rho_antipode(std::size_t n, std::size_t i) {
  auto key = std::make_pair(n, i);
  if (auto it = rho_s_.find(key); it != rho_s_.end()) return it->second;
  Matrix r = rho(n, h_->antipode.dense_column(i));
  return rho_s_.emplace(key, std::move(r)).first->second;
}

const Matrix& TensorPowers::hom(std::size_t n, std::size_t i) {
  auto key = std::make_pair(n, i);
  if (auto it = hom_.find(key); it != hom_.end()) return it->second;
  std::size_t total = checked_pow(m_.dim, n + 1);
  Matrix r(h_->field, total, total);
  for (const auto& c : h_->comult.column(i))
    r += c.value * kron(m_.rho[c.index / h_->dim], rho_antipode(n, c.index % h_->dim).transpose());
  return hom_.emplace(key, std::move(r)).first->second;
}

Matrix TensorPowers::hom(std::size_t n, const Vec& h) {
  std::size_t total = checked_pow(m_.dim, n + 1);
  Matrix r(h_->field, total, total);
  for (std::size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) r += h[i] * hom(n, i);
  return r;
}

Matrix merge_map(const Algebra& b, std::size_t l, std::size_t j) {
  if (l < 2 || j + 2 > l) throw DimensionMismatch("merge_map: slot out of range");
  const auto& f = b.field;
  return kron(Matrix::identity(f, checked_pow(b.dim, j)), kron(b.mult, Matrix::identity(f, checked_pow(b.dim, l - j - 2))));
}

Matrix alternating_merge(const Algebra& b, std::size_t l) {
  if (l < 2) return Matrix(b.field, l == 0 ? 0 : 1, checked_pow(b.dim, l));
  Matrix r(b.field, checked_pow(b.dim, l - 1), checked_pow(b.dim, l));
  for (std::size_t j = 0; j + 1 < l; ++j) r += sign_scalar(b.field, j) * merge_map(b, l, j);
  return r;
}

Matrix bar_differential(const Algebra& b, std::size_t l) {
  return Scalar(b.field, -1) * alternating_merge(b, l);
}

namespace {

std::vector<Vec> all_basis(const FinHopf& h) {
  std::vector<Vec> r;
  for (std::size_t i = 0; i < h.dim; ++i) r.push_back(h.basis(i));
  return r;
}

}  // namespace

Complex bar_construction(const AlgebraObject& b, std::size_t N, const std::vector<Vec>& gens) {
  const auto& f = b.field();
  Complex c{f, -static_cast<int>(N + 1), {}, {}, gens.empty() ? all_basis(b.hopf()) : gens, {}, {}};
  for (const auto& g : c.action_elems) c.action_eps.push_back(b.hopf().eps(g));
  TensorPowers tp(b.hopf(), b.mod);
  for (std::size_t l = N + 1; l >= 1; --l) {
    c.dims.push_back(checked_pow(b.dim(), l - 1));
    c.action.emplace_back();
    for (const auto& g : c.action_elems) c.action.back().push_back(tp.rho(l - 1, g));
    if (l > 1) c.d.push_back(bar_differential(b.alg, l - 1));
  }
  return c;
}

Complex bar_resolution(const AlgebraObject& b, std::size_t N) {
  Complex c{b.field(), -static_cast<int>(N + 1), {}, {}, {}, {}, {}};
  for (std::size_t k = N + 1; k >= 1; --k) {
    c.dims.push_back(checked_pow(b.dim(), k + 1));
    c.d.push_back(alternating_merge(b.alg, k + 1));
  }
  c.dims.push_back(b.dim());
  return c;
}

Matrix bar_resolution_action(const AlgebraObject& b, std::size_t n) {
  const auto& f = b.field();
  std::size_t d = b.dim(), mid = checked_pow(d, n), total = d * mid * d;
  TensorPowers tp(b.hopf(), b.mod);
  Matrix I = Matrix::identity(f, mid);
  std::vector<Triplet> acc;
  for (const auto& [jk, coeff] : b.H->R_terms()) {
    const Matrix& on_m = tp.rho(n + 2, jk.first);
    for (std::size_t c = 0; c < d; ++c) {
      Matrix left = b.alg.left_mult(b.mod.rho[jk.second].apply(b.alg.basis(c)));
      for (std::size_t c2 = 0; c2 < d; ++c2) {
        Matrix op = kron(left, kron(I, b.alg.right_mult(b.alg.basis(c2)))) * on_m;
        for (std::size_t m = 0; m < total; ++m)
          for (const auto& e : op.column(m)) acc.push_back({e.index, (m * d + c) * d + c2, coeff * e.value});
      }
    }
  }
  return Matrix::from_triplets(f, total, total * d * d, std::move(acc));
}

Report check_exact(const Complex& c, int lo, int hi) {
  Report rep;
  std::string bad;
  for (int n = lo; n <= hi && bad.empty(); ++n) {
    std::size_t out = n < c.hi() ? rank(c.diff(n)) : 0;
    std::size_t in = n > c.lo ? rank(c.diff(n - 1)) : 0;
    if (out + in != c.dim(n)) bad = "degree " + std::to_string(n) + ": dim " + std::to_string(c.dim(n) - out - in);
  }
  rep.add("exact in degrees " + std::to_string(lo) + ".." + std::to_string(hi), bad.empty(), bad);
  return rep;
}

Report check_subalgebra(const AlgebraObject& b, const Matrix& incl_e) {
  Report rep;
  rep.add("E contains the unit", coordinates_in(incl_e, Matrix::column_vector(b.alg.unit)).has_value());
  rep.add("E is closed under multiplication", coordinates_in(incl_e, b.alg.mult * kron(incl_e, incl_e)).has_value());
  bool stable = true;
  for (std::size_t i = 0; i < b.hopf().dim && stable; ++i) stable = coordinates_in(incl_e, b.mod.rho[i] * incl_e).has_value();
  rep.add("E is an H-submodule", stable);
  return rep;
}

RelativeTensorPower relative_tensor_power(const Algebra& b, const Matrix& incl_e, std::size_t n) {
  if (n == 0) throw Error("relative_tensor_power: n >= 1");
  const auto& f = b.field;
  std::size_t d = b.dim, total = checked_pow(d, n);
  Matrix Id = Matrix::identity(f, d);
  // b w (x) b' - b (x) w b' on B (x) E (x) B
  Matrix bal = kron(b.mult * kron(Id, incl_e), Id) - kron(Id, b.mult * kron(incl_e, Id));
  EchelonBasis ech(f, total);
  for (std::size_t j = 0; j + 1 < n; ++j) {
    Matrix rel = kron(Matrix::identity(f, checked_pow(d, j)), kron(bal, Matrix::identity(f, checked_pow(d, n - j - 2))));
    for (std::size_t k = 0; k < rel.cols(); ++k)
      if (!rel.column(k).empty()) ech.insert(rel.column(k));
  }
  RelativeTensorPower r;
  r.n = n;
  auto rows = ech.reduced_rows();
  r.relations = rows.empty() ? Matrix(f, total, 0) : Matrix::from_columns(f, total, rows);
  std::vector<long> slot(total, -1);
  for (auto p : ech.pivots()) slot[p] = -2;
  std::size_t q = 0;
  std::vector<Triplet> sec;
  for (std::size_t i = 0; i < total; ++i)
    if (slot[i] == -1) {
      slot[i] = static_cast<long>(q);
      sec.push_back({i, q++, Scalar::one(f)});
    }
  r.section = Matrix::from_triplets(f, total, q, sec);
  std::vector<Triplet> proj;
  for (std::size_t i = 0; i < total; ++i) {
    auto red = ech.reduce(SparseVec{{i, Scalar::one(f)}});
    for (const auto& e : red.residual) proj.push_back({static_cast<std::size_t>(slot[e.index]), i, e.value});
  }
  r.projection = Matrix::from_triplets(f, q, total, proj);
  return r;
}

Complex relative_bar(const AlgebraObject& b, const Matrix& incl_e, std::size_t N) {
  auto sub = check_subalgebra(b, incl_e);
  if (!sub.ok()) throw Error("relative_bar: not a subalgebra in the module category: " + sub.summary());
  Complex c{b.field(), -static_cast<int>(N + 1), {}, {}, {}, {}, {}};
  std::vector<RelativeTensorPower> pw;
  for (std::size_t k = N + 1; k >= 1; --k) pw.push_back(relative_tensor_power(b.alg, incl_e, k + 1));
  pw.push_back(relative_tensor_power(b.alg, incl_e, 1));
  for (std::size_t i = 0; i < pw.size(); ++i) {
    c.dims.push_back(pw[i].dim());
    if (i + 1 == pw.size()) break;
    Matrix full = alternating_merge(b.alg, pw[i].n);
    if (!(pw[i + 1].projection * full * pw[i].relations).is_zero())
      throw Error("relative_bar: differential does not descend in degree " + std::to_string(c.lo + static_cast<int>(i)));
    c.d.push_back(pw[i + 1].projection * full * pw[i].section);
  }
  return c;
}

}  // namespace bhh
