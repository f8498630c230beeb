#include "bhh/hopf/finhopf.hpp"

#include <map>

namespace bhh {

void FinHopf::finalize() {
  if (labels.size() != dim) {
    labels.clear();
    for (std::size_t i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(i));
  }
  if (mult.rows() != dim || mult.cols() != dim * dim) throw DimensionMismatch("multiplication shape");
  if (comult.rows() != dim * dim || comult.cols() != dim) throw DimensionMismatch("comultiplication shape");
  if (counit.rows() != 1 || counit.cols() != dim) throw DimensionMismatch("counit shape");
  if (antipode.rows() != dim || antipode.cols() != dim) throw DimensionMismatch("antipode shape");
  if (unit.size() != dim) throw DimensionMismatch("unit length");
  if (antipode_inv.rows() != dim) antipode_inv = inverse(antipode);
  cop_cache_.clear();
}

Vec FinHopf::mul(const Vec& a, const Vec& b) const { return mult.apply(kron_vec(a, b)); }

Scalar FinHopf::eps(const Vec& h) const { return counit.apply(h)[0]; }

Matrix FinHopf::left_mult(const Vec& a) const { return mult * kron(Matrix::column_vector(a), Matrix::identity(field, dim)); }

Matrix FinHopf::right_mult(const Vec& a) const { return mult * kron(Matrix::identity(field, dim), Matrix::column_vector(a)); }

Vec FinHopf::tensor_mul(std::size_t n, const Vec& a, const Vec& b) const {
  std::map<std::size_t, Scalar> acc;
  SparseVec sa = to_sparse(a), sb = to_sparse(b);
  for (const auto& x : sa) {
    auto dx = multi_index(x.index, dim, n);
    for (const auto& y : sb) {
      auto dy = multi_index(y.index, dim, n);
      SparseVec term{{0, x.value * y.value}};
      for (std::size_t k = 0; k < n; ++k) {
        const auto& col = mult.column(dx[k] * dim + dy[k]);
        SparseVec next;
        for (const auto& t : term)
          for (const auto& c : col) next.push_back({t.index * dim + c.index, t.value * c.value});
        term = std::move(next);
      }
      for (auto& t : term) {
        auto [it, fresh] = acc.try_emplace(t.index, t.value);
        if (!fresh) it->second += t.value;
      }
    }
  }
  std::size_t total = checked_pow(dim, n);
  Vec r = zero_vec(field, total);
  for (auto& [i, v] : acc) r[i] = v;
  return r;
}

const SparseVec& FinHopf::coproduct_power(std::size_t i, std::size_t n) const {
  if (n == 0) throw DimensionMismatch("coproduct power needs n >= 1");
  auto key = std::make_pair(i, n);
  auto it = cop_cache_.find(key);
  if (it != cop_cache_.end()) return it->second;
  SparseVec result;
  if (n == 1) {
    result.push_back({i, Scalar::one(field)});
  } else {
    const SparseVec& prev = coproduct_power(i, n - 1);
    std::map<std::size_t, Scalar> acc;
    for (const auto& t : prev) {
      std::size_t prefix = t.index / dim, last = t.index % dim;
      for (const auto& c : comult.column(last)) {
        std::size_t idx = prefix * dim * dim + c.index;
        auto [pos, fresh] = acc.try_emplace(idx, t.value * c.value);
        if (!fresh) pos->second += t.value * c.value;
      }
    }
    for (auto& [k, v] : acc)
      if (!v.is_zero()) result.push_back({k, v});
  }
  return cop_cache_.emplace(key, std::move(result)).first->second;
}

SparseVec FinHopf::coproduct_power(const Vec& h, std::size_t n) const {
  SparseVec r;
  for (std::size_t i = 0; i < dim; ++i)
    if (!h[i].is_zero()) r = sparse_axpy(r, h[i], coproduct_power(i, n));
  return r;
}

Matrix FinHopf::iterated_comult(std::size_t n) const {
  std::vector<SparseVec> cols;
  for (std::size_t i = 0; i < dim; ++i) cols.push_back(coproduct_power(i, n));
  return Matrix::from_columns(field, checked_pow(dim, n), std::move(cols));
}

std::string monomial_label(const FinHopf& h, std::size_t idx, std::size_t n) {
  std::string s;
  for (auto d : multi_index(idx, h.dim, n)) {
    if (!s.empty()) s += "⊗";
    s += h.labels.at(d);
  }
  return s;
}

namespace {

// Compares two maps out of H^{(x)n}; on failure names the input monomial.
void compare(Report& rep, const std::string& name, const FinHopf& h, std::size_t n, const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    rep.add(name, false, "shape mismatch");
    return;
  }
  auto [r, c] = lhs.first_difference(rhs);
  if (r == lhs.rows() && c == lhs.cols())
    rep.add(name, true);
  else
    rep.add(name, false, "fails on " + monomial_label(h, c, n));
}

}  // namespace

Report check_hopf_axioms(const FinHopf& h) {
  Report rep;
  const auto& f = h.field;
  Matrix I = Matrix::identity(f, h.dim);
  Matrix u = Matrix::column_vector(h.unit);
  compare(rep, "associativity", h, 3, h.mult * kron(h.mult, I), h.mult * kron(I, h.mult));
  compare(rep, "unit", h, 1, h.mult * kron(u, I), I);
  compare(rep, "unit (right)", h, 1, h.mult * kron(I, u), I);
  compare(rep, "coassociativity", h, 1, kron(h.comult, I) * h.comult, kron(I, h.comult) * h.comult);
  Matrix one1 = Matrix::identity(f, 1);
  compare(rep, "counit", h, 1, kron(h.counit, I) * h.comult, I);
  compare(rep, "counit (right)", h, 1, kron(I, h.counit) * h.comult, I);
  Matrix mid = kron(kron(I, flip(f, h.dim, h.dim)), I);
  compare(rep, "comultiplication is multiplicative", h, 2, h.comult * h.mult, kron(h.mult, h.mult) * mid * kron(h.comult, h.comult));
  compare(rep, "comultiplication is unital", h, 0, h.comult * u, kron(u, u));
  compare(rep, "counit is multiplicative", h, 2, h.counit * h.mult, kron(h.counit, h.counit));
  compare(rep, "counit is unital", h, 0, h.counit * u, one1);
  Matrix ue = u * h.counit;
  compare(rep, "antipode (left)", h, 1, h.mult * kron(h.antipode, I) * h.comult, ue);
  compare(rep, "antipode (right)", h, 1, h.mult * kron(I, h.antipode) * h.comult, ue);
  bool inv_ok = h.antipode_inv.rows() == h.dim && h.antipode * h.antipode_inv == I && h.antipode_inv * h.antipode == I;
  rep.add("antipode bijective", inv_ok);
  return rep;
}

Vec QuasiTriHopf::R21() const { return flip(hopf.field, hopf.dim, hopf.dim).apply(R); }

std::vector<std::pair<std::pair<std::size_t, std::size_t>, Scalar>> QuasiTriHopf::R_terms() const {
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Scalar>> t;
  for (std::size_t k = 0; k < R.size(); ++k)
    if (!R[k].is_zero()) t.push_back({{k / hopf.dim, k % hopf.dim}, R[k]});
  return t;
}

QuasiTriHopf trivial_rmatrix(const FinHopf& h) { return {h, kron_vec(h.unit, h.unit)}; }

Vec tensor_inverse(const FinHopf& h, std::size_t n, const Vec& x) {
  std::size_t N = checked_pow(h.dim, n);
  std::vector<SparseVec> cols;
  for (std::size_t k = 0; k < N; ++k) cols.push_back(to_sparse(h.tensor_mul(n, x, unit_vec(h.field, N, k))));
  Matrix L = Matrix::from_columns(h.field, N, std::move(cols));
  Vec one = h.unit;
  for (std::size_t k = 1; k < n; ++k) one = kron_vec(one, h.unit);
  auto y = solve(L, one);
  if (!y || h.tensor_mul(n, *y, x) != one) throw Error("element is not invertible");
  return *y;
}

namespace {

void compare_vec(Report& rep, const std::string& name, const FinHopf& h, std::size_t n, const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) {
      rep.add(name, false, "differs at " + monomial_label(h, i, n) + ": " + a[i].str() + " vs " + b[i].str());
      return;
    }
  }
  rep.add(name, true);
}

}  // namespace

Report check_rmatrix(const QuasiTriHopf& q) {
  const FinHopf& h = q.hopf;
  const auto& f = h.field;
  Report rep;
  Vec r21 = q.R21();
  Matrix I = Matrix::identity(f, h.dim);
  Matrix fl = flip(f, h.dim, h.dim);

  // Delta(x) R21 = R21 Delta^op(x)
  std::string bad;
  for (std::size_t i = 0; i < h.dim && bad.empty(); ++i) {
    Vec d = h.comult.dense_column(i);
    Vec lhs = h.tensor_mul(2, d, r21), rhs = h.tensor_mul(2, r21, fl.apply(d));
    if (lhs != rhs) bad = "fails for " + h.labels[i];
  }
  rep.add("intertwines comultiplication", bad.empty(), bad);

  Vec one2 = kron_vec(h.unit, h.unit);
  Vec s_r = kron(I, h.antipode).apply(r21);
  Vec sinv_r = kron(h.antipode_inv, I).apply(r21);
  bool inv = h.tensor_mul(2, s_r, r21) == one2 && h.tensor_mul(2, r21, s_r) == one2;
  rep.add("(id⊗S)(R21) inverts R21", inv);
  compare_vec(rep, "(S⁻¹⊗id)(R21) = (id⊗S)(R21)", h, 2, sinv_r, s_r);

  Matrix one1 = Matrix::identity(f, 1);
  Vec le = kron(h.counit, I).apply(r21), re = kron(I, h.counit).apply(r21);
  compare_vec(rep, "(ε⊗id)(R21) = 1", h, 1, le, h.unit);
  compare_vec(rep, "(id⊗ε)(R21) = 1", h, 1, re, h.unit);

  // (id⊗Δ)(R21) = (R21)_12 (R21)_13 and (Δ⊗id)(R21) = (R21)_23 (R21)_13
  Matrix p132 = permute_factors(f, {h.dim, h.dim, h.dim}, {0, 2, 1});
  Vec r12 = kron_vec(r21, h.unit), r23 = kron_vec(h.unit, r21), r13 = p132.apply(r12);
  compare_vec(rep, "braid relation (id⊗Δ)", h, 3, kron(I, h.comult).apply(r21), h.tensor_mul(3, r12, r13));
  compare_vec(rep, "braid relation (Δ⊗id)", h, 3, kron(h.comult, I).apply(r21), h.tensor_mul(3, r23, r13));
  return rep;
}

bool is_semisimple(const FinHopf& h) {
  std::vector<Matrix> blocks;
  for (std::size_t i = 0; i < h.dim; ++i)
    blocks.push_back(h.left_mult(h.basis(i)) - h.eps(i) * Matrix::identity(h.field, h.dim));
  Matrix ints = kernel_basis(vstack(blocks));
  for (std::size_t j = 0; j < ints.cols(); ++j)
    if (!h.eps(ints.dense_column(j)).is_zero()) return true;
  return false;
}

bool is_cosemisimple(const FinHopf& h) {
  // unknown lambda in H*; for each basis h and coordinate k:
  //   sum_{(h)} coeff [h1 = k] lambda(h2) - lambda(h) unit_k = 0
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < h.dim; ++i) {
    for (const auto& c : h.comult.column(i)) {
      std::size_t a = c.index / h.dim, b = c.index % h.dim;
      t.push_back({i * h.dim + a, b, c.value});
    }
    for (std::size_t k = 0; k < h.dim; ++k)
      if (!h.unit[k].is_zero()) t.push_back({i * h.dim + k, i, -h.unit[k]});
  }
  Matrix sys = Matrix::from_triplets(h.field, h.dim * h.dim, h.dim, t);
  Matrix ints = kernel_basis(sys);
  for (std::size_t j = 0; j < ints.cols(); ++j) {
    Scalar at_one = Scalar::zero(h.field);
    for (std::size_t k = 0; k < h.dim; ++k) at_one += ints.at(k, j) * h.unit[k];
    if (!at_one.is_zero()) return true;
  }
  return false;
}

}  // namespace bhh
