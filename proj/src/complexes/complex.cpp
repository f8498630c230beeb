#include "bhh/complexes/complex.hpp"

#include <string>

namespace bhh {

std::size_t Complex::dim(int n) const {
  if (!has_degree(n)) return 0;
  return dims[n - lo];
}

const Matrix& Complex::diff(int n) const {
  if (n < lo || n >= hi()) throw Error("no stored differential out of degree " + std::to_string(n));
  return d[n - lo];
}

Report check_complex(const Complex& c) {
  Report rep;
  bool shapes = c.d.size() + 1 == c.dims.size();
  for (std::size_t i = 0; shapes && i < c.d.size(); ++i)
    shapes = c.d[i].cols() == c.dims[i] && c.d[i].rows() == c.dims[i + 1];
  rep.add("differential shapes", shapes);
  if (!shapes) return rep;
  std::string bad;
  for (std::size_t i = 0; i + 1 < c.d.size() && bad.empty(); ++i)
    if (!(c.d[i + 1] * c.d[i]).is_zero()) bad = "degree " + std::to_string(c.lo + static_cast<int>(i));
  rep.add("d o d = 0", bad.empty(), bad);
  if (c.has_action()) {
    bad.clear();
    for (std::size_t i = 0; i < c.d.size() && bad.empty(); ++i)
      for (std::size_t k = 0; k < c.action_elems.size() && bad.empty(); ++k)
        if (!(c.d[i] * c.action[i][k] == c.action[i + 1][k] * c.d[i]))
          bad = "degree " + std::to_string(c.lo + static_cast<int>(i)) + ", element " + std::to_string(k);
    rep.add("d is H-linear", bad.empty(), bad);
  }
  return rep;
}

Complex subcomplex(const Complex& c, const std::vector<Matrix>& bases) {
  if (bases.size() != c.dims.size()) throw DimensionMismatch("subcomplex: one basis per degree");
  Complex s{c.field, c.lo, {}, {}, c.action_elems, c.action_eps, {}};
  for (const auto& b : bases) s.dims.push_back(b.cols());
  for (std::size_t i = 0; i < c.d.size(); ++i) {
    auto m = coordinates_in(bases[i + 1], c.d[i] * bases[i]);
    if (!m) throw Error("subcomplex: d leaves the subspace in degree " + std::to_string(c.lo + static_cast<int>(i)));
    s.d.push_back(std::move(*m));
  }
  for (std::size_t i = 0; i < c.action.size(); ++i) {
    s.action.emplace_back();
    for (const auto& a : c.action[i]) {
      auto m = coordinates_in(bases[i], a * bases[i]);
      if (!m) throw Error("subcomplex: action leaves the subspace in degree " + std::to_string(c.lo + static_cast<int>(i)));
      s.action.back().push_back(std::move(*m));
    }
  }
  return s;
}

Complex constrained_subcomplex(const Complex& c, const std::vector<Matrix>& constraints) {
  std::vector<Matrix> bases;
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    const Matrix& k = constraints.at(i);
    bases.push_back(k.rows() == 0 ? Matrix::identity(c.field, c.dims[i]) : kernel_basis(k));
  }
  return subcomplex(c, bases);
}

Complex invariant_subcomplex(const Complex& c) {
  if (!c.has_action()) throw Error("invariant_subcomplex: complex carries no action");
  std::vector<Matrix> cons;
  for (std::size_t i = 0; i < c.dims.size(); ++i) {
    std::vector<Matrix> blocks;
    Matrix I = Matrix::identity(c.field, c.dims[i]);
    for (std::size_t k = 0; k < c.action_elems.size(); ++k) blocks.push_back(c.action[i][k] - c.action_eps[k] * I);
    cons.push_back(blocks.empty() ? Matrix(c.field, 0, c.dims[i]) : vstack(blocks));
  }
  return constrained_subcomplex(c, cons);
}

Cohomology::Cohomology(const Complex& c, int lo, int hi) : c_(c), lo_(lo), hi_(hi) {
  if (lo < c.lo || hi >= c.hi())
    throw ResourceCap("cohomology in degrees " + std::to_string(lo) + ".." + std::to_string(hi) +
                      " needs the complex through degree " + std::to_string(hi + 1));
  for (int n = lo; n <= hi; ++n) {
    Matrix cycles = kernel_basis(c.diff(n));
    Matrix bd = n > c.lo ? c.diff(n - 1) : Matrix(c.field, c.dim(n), 0);
    q_.emplace_back(cycles, bd);
  }
}

const Quotient& Cohomology::at(int n) const {
  if (n < lo_ || n > hi_) throw Error("cohomology not computed in degree " + std::to_string(n));
  return q_[n - lo_];
}

std::vector<std::size_t> Cohomology::dims() const {
  std::vector<std::size_t> r;
  for (const auto& q : q_) r.push_back(q.dim());
  return r;
}

Matrix Cohomology::representative_matrix(int n) const {
  const auto& reps = representatives(n);
  if (reps.empty()) return Matrix(c_.field, c_.dim(n), 0);
  return Matrix::from_dense_columns(c_.field, c_.dim(n), reps);
}

bool Cohomology::is_cocycle(int n, const Vec& v) const { return is_zero(c_.diff(n).apply(v)); }

std::optional<Vec> Cohomology::coboundary_witness(int n, const Vec& v) const {
  if (!is_cocycle(n, v)) return std::nullopt;
  auto dec = decompose(n, v);
  if (!is_zero(dec.coords)) return std::nullopt;
  return dec.witness;
}

Matrix Cohomology::induced_action(int n, std::size_t k) const {
  const auto& reps = representatives(n);
  std::vector<Vec> cols;
  for (const auto& r : reps) cols.push_back(decompose(n, c_.action.at(n - c_.lo).at(k).apply(r)).coords);
  return Matrix::from_dense_columns(c_.field, reps.size(), cols);
}

Matrix Cohomology::invariant_classes(int n) const {
  std::size_t h = dim(n);
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < c_.action_elems.size(); ++k)
    blocks.push_back(induced_action(n, k) - c_.action_eps[k] * Matrix::identity(c_.field, h));
  if (blocks.empty()) return Matrix::identity(c_.field, h);
  return kernel_basis(vstack(blocks));
}

Matrix induced_map(const Cohomology& src, const Cohomology& dst, int n, const Matrix& chain_map) {
  const auto& reps = src.representatives(n);
  std::vector<Vec> cols;
  for (const auto& r : reps) cols.push_back(dst.decompose(n, chain_map.apply(r)).coords);
  return Matrix::from_dense_columns(src.complex().field, dst.dim(n), cols);
}

Report check_chain_map(const Complex& a, const Complex& b, const std::vector<Matrix>& f, const std::string& name) {
  Report rep;
  std::string bad;
  int lo = std::max(a.lo, b.lo), hi = std::min(a.hi(), b.hi());
  for (int n = lo; n < hi && bad.empty(); ++n) {
    std::size_t i = n - a.lo, j = n + 1 - a.lo;
    if (j >= f.size()) break;
    if (!(f[j] * a.diff(n) == b.diff(n) * f[i])) bad = "degree " + std::to_string(n);
  }
  rep.add(name + " commutes with d", bad.empty(), bad);
  return rep;
}

}  // namespace bhh
