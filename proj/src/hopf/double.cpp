#include "bhh/hopf/double.hpp"

#include <map>

namespace bhh {

Vec DrinfeldDouble::from_eop(const Vec& w) const {
  Vec r = zero_vec(E.field, E.dim * E.dim);
  for (std::size_t i = 0; i < E.dim; ++i) {
    if (w[i].is_zero()) continue;
    for (std::size_t a = 0; a < E.dim; ++a) r[index(i, a)] += w[i] * E.eps(a);
  }
  return r;
}

Vec DrinfeldDouble::from_dual(const Vec& xi) const {
  Vec r = zero_vec(E.field, E.dim * E.dim);
  for (std::size_t k = 0; k < E.dim; ++k) {
    if (E.unit[k].is_zero()) continue;
    for (std::size_t a = 0; a < E.dim; ++a) r[index(k, a)] += E.unit[k] * xi[a];
  }
  return r;
}

DrinfeldDouble drinfeld_double(const FinHopf& e) {
  const FieldSpec& f = e.field;
  const std::size_t n = e.dim, N = n * n;
  DrinfeldDouble dd{e, {}};
  FinHopf& d = dd.D.hopf;
  d.field = f;
  d.dim = N;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) d.labels.push_back(e.labels[i] + "·" + e.labels[a] + "*");

  // straightening: e^a w' = sum e^a(S(w'_1) e_b w'_3) w'_2 e^b
  // T[(x*n + z)*n + b] = S(e_x) e_b e_z
  std::vector<Vec> T(n * n * n);
  for (std::size_t x = 0; x < n; ++x) {
    Vec sx = e.antipode.dense_column(x);
    for (std::size_t b = 0; b < n; ++b) {
      Vec sxb = e.mul(sx, e.basis(b));
      for (std::size_t z = 0; z < n; ++z) T[(x * n + z) * n + b] = e.mul(sxb, e.basis(z));
    }
  }
  Matrix conv = e.comult.transpose();  // column b*n+c: coefficients of e^b e^c
  std::vector<Triplet> mt;
  for (std::size_t j = 0; j < n; ++j) {
    const SparseVec& cop3 = e.coproduct_power(j, 3);
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& t : cop3) {
        auto xyz = multi_index(t.index, n, 3);
        Vec wv = e.mul(e.basis(xyz[1]), e.basis(i));  // w'_2 w in E, i.e. w *op w'_2
        for (std::size_t b = 0; b < n; ++b) {
          const Vec& tb = T[(xyz[0] * n + xyz[2]) * n + b];
          for (std::size_t a = 0; a < n; ++a) {
            if (tb[a].is_zero()) continue;
            Scalar coef = t.value * tb[a];
            for (std::size_t g = 0; g < n; ++g) {
              std::size_t col = dd.index(i, a) * N + dd.index(j, g);
              for (const auto& dlt : conv.column(b * n + g))
                for (std::size_t k = 0; k < n; ++k)
                  if (!wv[k].is_zero()) mt.push_back({dd.index(k, dlt.index), col, coef * wv[k] * dlt.value});
            }
          }
        }
      }
    }
  }
  d.mult = Matrix::from_triplets(f, N, N * N, std::move(mt));

  std::vector<Triplet> ct;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a)
      for (const auto& w : e.comult.column(i)) {
        std::size_t p = w.index / n, q = w.index % n;
        for (std::size_t bg = 0; bg < n * n; ++bg) {
          Scalar m = e.mult.at(a, bg);
          if (m.is_zero()) continue;
          std::size_t b = bg / n, g = bg % n;
          ct.push_back({dd.index(p, b) * N + dd.index(q, g), dd.index(i, a), w.value * m});
        }
      }
  d.comult = Matrix::from_triplets(f, N * N, N, std::move(ct));

  std::vector<Triplet> et;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      Scalar v = e.eps(i) * e.unit[a];
      if (!v.is_zero()) et.push_back({0, dd.index(i, a), v});
    }
  d.counit = Matrix::from_triplets(f, 1, N, std::move(et));

  d.unit = dd.from_eop(e.unit);

  // S(w xi) = (xi o S_E) * S_E^{-1}(w)
  std::vector<Vec> scols;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      Vec xs = zero_vec(f, n);
      for (std::size_t b = 0; b < n; ++b) xs[b] = e.antipode.at(a, b);
      scols.push_back(d.mul(dd.from_dual(xs), dd.from_eop(e.antipode_inv.dense_column(i))));
    }
  d.antipode = Matrix::from_dense_columns(f, N, scols);
  d.finalize();

  dd.D.R = zero_vec(f, N * N);
  for (std::size_t i = 0; i < n; ++i) dd.D.R = dd.D.R + kron_vec(dd.from_eop(e.basis(i)), dd.from_dual(e.basis(i)));
  return dd;
}

DrinfeldDouble drinfeld_double_group(const GroupTable& g, const FieldSpec& f) { return drinfeld_double(group_algebra(g, f)); }

}  // namespace bhh
