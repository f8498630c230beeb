#include "bhh/products/products.hpp"

#include <string>

namespace bhh {

namespace {

std::string deg(std::size_t p, std::size_t q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

// f (x) g -> (x_1 (x) x_2 -> m(f(x_1) (x) g(x_2))) for f in Hom(X^p, Y), g in Hom(X^q, Y)
Matrix contract(const Matrix& mult, std::size_t dx, std::size_t p, std::size_t q) {
  std::size_t dy = mult.rows(), xp = checked_pow(dx, p), xq = checked_pow(dx, q);
  std::vector<Triplet> t;
  for (std::size_t col = 0; col < mult.cols(); ++col) {
    std::size_t o1 = col / dy, o2 = col % dy;
    for (const auto& e : mult.column(col))
      for (std::size_t x1 = 0; x1 < xp; ++x1)
        for (std::size_t x2 = 0; x2 < xq; ++x2)
          t.push_back({(e.index * xp + x1) * xq + x2, (o1 * xp + x1) * (dy * xq) + o2 * xq + x2, e.value});
  }
  return Matrix::from_triplets(mult.field(), dy * xp * xq, dy * xp * dy * xq, std::move(t));
}

// f (x) g -> (x_1 x_2 x_3 -> f(x_1 (x) g(x_2) (x) x_3)), |x_1| = i, on Hom(X^n, X)
Matrix insertion(const FieldSpec& f, std::size_t d, std::size_t p, std::size_t q, std::size_t i) {
  std::size_t x1n = checked_pow(d, i), x3n = checked_pow(d, p - 1 - i), x2n = checked_pow(d, q);
  std::size_t fin = checked_pow(d, p), gdim = d * x2n, outin = x1n * x2n * x3n;
  std::vector<Triplet> t;
  for (std::size_t out = 0; out < d; ++out)
    for (std::size_t x1 = 0; x1 < x1n; ++x1)
      for (std::size_t m = 0; m < d; ++m)
        for (std::size_t x3 = 0; x3 < x3n; ++x3) {
          std::size_t fidx = out * fin + (x1 * d + m) * x3n + x3;
          for (std::size_t x2 = 0; x2 < x2n; ++x2)
            t.push_back({out * outin + (x1 * x2n + x2) * x3n + x3, fidx * gdim + m * x2n + x2, Scalar::one(f)});
        }
  return Matrix::from_triplets(f, d * outin, d * fin * gdim, std::move(t));
}

Matrix column(const Vec& v) { return Matrix::column_vector(v); }

std::size_t unit_index(const FinHopf& e) {
  for (std::size_t i = 0; i < e.dim; ++i)
    if (e.basis(i) == e.unit) return i;
  throw Error("Hopf algebra: unit is not a basis element");
}

}  // namespace

const Matrix& CochainProducts::cup(std::size_t p, std::size_t q) {
  auto key = std::make_pair(p, q);
  if (auto it = cup_.find(key); it != cup_.end()) return it->second;
  auto& c = *c_;
  const auto& b = c.algebra();
  Matrix W = contract(b.alg.mult, c.dim(), p, q);
  Matrix k(c.field(), W.rows(), W.cols());
  for (const auto& [jk, coeff] : b.H->R_terms())
    k += coeff * (W * kron(c.precompose(c.powers().rho(p, jk.second)), c.powers().hom(q, jk.first)));
  if ((p * q) % 2) k = Scalar(c.field(), -1) * k;
  return cup_.emplace(key, std::move(k)).first->second;
}

const Matrix& CochainProducts::circle(std::size_t p, std::size_t q) {
  auto key = std::make_pair(p, q);
  if (auto it = circle_.find(key); it != circle_.end()) return it->second;
  auto& c = *c_;
  const auto& b = c.algebra();
  const auto& f = c.field();
  std::size_t rows = p + q >= 1 ? c.space_dim(p + q - 1) : 0;
  Matrix r(f, rows, c.space_dim(p) * c.space_dim(q));
  for (std::size_t i = 0; i < p; ++i) {
    Matrix Z = insertion(f, c.dim(), p, q, i);
    Matrix rest = Matrix::identity(f, checked_pow(c.dim(), p - i));
    Matrix term(f, r.rows(), r.cols());
    for (const auto& [jk, coeff] : b.H->R_terms())
      term += coeff * (Z * kron(c.precompose(kron(c.powers().rho(i, jk.second), rest)), c.powers().hom(q, jk.first)));
    r += sign_scalar(f, static_cast<long>(i) * (static_cast<long>(q) - 1)) * term;
  }
  return circle_.emplace(key, std::move(r)).first->second;
}

Matrix CochainProducts::braided_swap(std::size_t p, std::size_t q) {
  auto& c = *c_;
  std::size_t dp = c.space_dim(p), dq = c.space_dim(q);
  Matrix s(c.field(), dq * dp, dp * dq);
  for (const auto& [jk, coeff] : c.algebra().H->R_terms())
    s += coeff * kron(c.powers().hom(q, jk.second), c.powers().hom(p, jk.first));
  return s * flip(c.field(), dp, dq);
}

Matrix CochainProducts::braided_commutator(std::size_t p, std::size_t q) {
  return cup(p, q) - sign_scalar(c_->field(), p * q) * (cup(q, p) * braided_swap(p, q));
}

Matrix CochainProducts::naive_bracket(std::size_t p, std::size_t q) {
  long s = (static_cast<long>(p) - 1) * (static_cast<long>(q) - 1);
  return circle(p, q) - sign_scalar(c_->field(), s) * (circle(q, p) * braided_swap(p, q));
}

Matrix classical_cup(const Matrix& mult, std::size_t dim_x, std::size_t p, std::size_t q) {
  return sign_scalar(mult.field(), p * q) * contract(mult, dim_x, p, q);
}

Matrix classical_circle(std::size_t dim, const FieldSpec& f, std::size_t p, std::size_t q) {
  std::size_t rows = p + q >= 1 ? checked_pow(dim, p + q) : 0;
  Matrix r(f, rows, checked_pow(dim, p + 1) * checked_pow(dim, q + 1));
  for (std::size_t i = 0; i < p; ++i)
    r += sign_scalar(f, static_cast<long>(i) * (static_cast<long>(q) - 1)) * insertion(f, dim, p, q, i);
  return r;
}

Report cup_structure_check(CochainProducts& pr, std::size_t max_total, const std::vector<Matrix>* sub) {
  auto& c = pr.cochains();
  const auto& f = c.field();
  auto I = [&](std::size_t n) { return Matrix::identity(f, c.space_dim(n)); };
  Report rep;
  std::string bad;
  for (std::size_t p = 0; p <= max_total && bad.empty(); ++p)
    for (std::size_t q = 0; p + q <= max_total && bad.empty(); ++q)
      for (std::size_t r = 0; p + q + r <= max_total && bad.empty(); ++r)
        if (!(pr.cup(p + q, r) * kron(pr.cup(p, q), I(r)) == pr.cup(p, q + r) * kron(I(p), pr.cup(q, r))))
          bad = "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
  rep.add("cup is associative", bad.empty(), bad);

  bad.clear();
  Matrix u = column(c.unit_cochain());
  for (std::size_t n = 0; n <= max_total && bad.empty(); ++n)
    if (!(pr.cup(0, n) * kron(u, I(n)) == I(n)) || !(pr.cup(n, 0) * kron(I(n), u) == I(n))) bad = "degree " + std::to_string(n);
  rep.add("unit cochain is a two-sided unit", bad.empty(), bad);

  bad.clear();
  for (std::size_t p = 0; p <= max_total && bad.empty(); ++p)
    for (std::size_t q = 0; p + q <= max_total && bad.empty(); ++q) {
      Matrix lhs = c.differential(p + q) * pr.cup(p, q);
      Matrix rhs = pr.cup(p + 1, q) * kron(c.differential(p), I(q)) +
                   sign_scalar(f, p) * (pr.cup(p, q + 1) * kron(I(p), c.differential(q)));
      if (!(lhs == rhs)) bad = deg(p, q);
    }
  rep.add("Leibniz rule", bad.empty(), bad);

  bad.clear();
  const FinHopf& H = c.algebra().hopf();
  for (std::size_t k = 0; k < c.generators().size() && bad.empty(); ++k) {
    SparseVec dh = to_sparse(H.comult.apply(c.generators()[k]));
    for (std::size_t p = 0; p <= max_total && bad.empty(); ++p)
      for (std::size_t q = 0; p + q <= max_total && bad.empty(); ++q) {
        Matrix lhs = c.action(p + q, c.generators()[k]) * pr.cup(p, q);
        Matrix rhs(f, lhs.rows(), lhs.cols());
        for (const auto& t : dh)
          rhs += t.value * (pr.cup(p, q) * kron(c.powers().hom(p, t.index / H.dim), c.powers().hom(q, t.index % H.dim)));
        if (!(lhs == rhs)) bad = "generator " + std::to_string(k) + " in " + deg(p, q);
      }
  }
  rep.add("cup is H-linear", bad.empty(), bad);

  if (sub) {
    bad.clear();
    for (std::size_t p = 0; p <= max_total && bad.empty(); ++p)
      for (std::size_t q = 0; p + q <= max_total && bad.empty(); ++q)
        if (!coordinates_in(sub->at(p + q), pr.cup(p, q) * kron(sub->at(p), sub->at(q))))
          bad = deg(p, q);
    rep.add("subcomplex is closed under cup", bad.empty(), bad);
  }
  return rep;
}

Report maurer_cartan_check(CochainProducts& pr, std::size_t max_degree) {
  auto& c = pr.cochains();
  const auto& f = c.field();
  Report rep;
  Vec pi = c.pi();
  Vec mc = c.hom_differential(1).apply(pi) - pr.cup(1, pi, 1, pi);
  rep.add("d_Hom(pi) - pi u pi = 0", is_zero(mc));
  std::string bad;
  Matrix P = column(pi);
  for (std::size_t n = 0; n <= max_degree && bad.empty(); ++n) {
    Matrix I = Matrix::identity(f, c.space_dim(n));
    Matrix br = pr.cup(1, n) * kron(P, I) - sign_scalar(f, n) * (pr.cup(n, 1) * kron(I, P));
    if (!(c.differential(n) == c.hom_differential(n) - br)) bad = "degree " + std::to_string(n);
  }
  rep.add("d_c = d_Hom - [pi, -]", bad.empty(), bad);
  return rep;
}

Report commutator_identity_check(CochainProducts& pr, std::size_t p, const Vec& f, std::size_t q, const Vec& g) {
  auto& c = pr.cochains();
  const auto& F = c.field();
  Vec rhs = pr.braided_commutator(p, q).apply(kron_vec(f, g));
  Vec df = c.differential(p).apply(f), dg = c.differential(q).apply(g);
  Vec lhs = scaled(pr.circle(p + 1, df, q, g), sign_scalar(F, p)) - pr.circle(p, f, q + 1, dg);
  if (p >= 1) lhs = lhs + scaled(c.differential(p + q - 1).apply(pr.circle(p, f, q, g)), sign_scalar(F, p + 1));
  Report rep;
  rep.add("commutator identity " + deg(p, q), lhs == rhs);
  if (is_zero(df) && is_zero(dg)) {
    Vec h = commutator_witness(pr, p, f, q, g);
    bool ok = p + q == 0 ? is_zero(rhs) : c.differential(p + q - 1).apply(h) == rhs;
    rep.add("cocycle commutator witness " + deg(p, q), ok);
  }
  return rep;
}

Vec commutator_witness(CochainProducts& pr, std::size_t p, const Vec& f, std::size_t q, const Vec& g) {
  auto& c = pr.cochains();
  if (!is_zero(c.differential(p).apply(f)) || !is_zero(c.differential(q).apply(g)))
    throw Error("commutator_witness: arguments must be cocycles");
  return scaled(pr.circle(p, f, q, g), sign_scalar(c.field(), p + 1));
}

GradedRing cohomology_ring(const Cohomology& h, const CochainProduct& mul, const Vec& unit_cochain, std::size_t max_total,
                           const CochainProduct& commutator) {
  if (h.lo() != 0) throw Error("cohomology_ring: cohomology must start in degree 0");
  if (static_cast<int>(max_total) > h.hi())
    throw ResourceCap("cohomology_ring: products up to degree " + std::to_string(max_total) + " need H^" +
                      std::to_string(max_total));
  const Complex& C = h.complex();
  GradedRing ring;
  ring.dims = h.dims();
  auto certify = [&](std::size_t n, const Vec& v) {
    if (n == 0) return is_zero(v);
    auto w = h.coboundary_witness(n, v);
    if (!w || !(C.diff(n - 1).apply(*w) == v)) return false;
    ++ring.certificates;
    return true;
  };

  std::string bad;
  for (std::size_t p = 0; p <= max_total; ++p)
    for (std::size_t q = 0; p + q <= max_total; ++q) {
      auto& tab = ring.structure[{p, q}];
      for (const auto& x : h.representatives(p)) {
        tab.emplace_back();
        for (const auto& y : h.representatives(q)) {
          Vec v = mul(p, x, q, y);
          if (!h.is_cocycle(p + q, v)) {
            if (bad.empty()) bad = deg(p, q);
            tab.back().push_back(zero_vec(C.field, h.dim(p + q)));
            continue;
          }
          tab.back().push_back(h.decompose(p + q, v).coords);
        }
      }
    }
  ring.checks.add("products of cocycles are cocycles", bad.empty(), bad);

  ring.unit = h.decompose(0, unit_cochain).coords;
  bad.clear();
  for (std::size_t n = 0; n <= max_total && bad.empty(); ++n)
    for (const auto& x : h.representatives(n))
      if (!certify(n, x - mul(0, unit_cochain, n, x)) || !certify(n, x - mul(n, x, 0, unit_cochain))) {
        bad = "degree " + std::to_string(n);
        break;
      }
  ring.checks.add("unit class", bad.empty(), bad);

  bad.clear();
  for (std::size_t p = 0; p <= max_total && bad.empty(); ++p)
    for (std::size_t q = 0; p + q <= max_total && bad.empty(); ++q)
      for (std::size_t r = 0; p + q + r <= max_total && bad.empty(); ++r)
        for (const auto& x : h.representatives(p))
          for (const auto& y : h.representatives(q))
            for (const auto& z : h.representatives(r))
              if (bad.empty() && !certify(p + q + r, mul(p + q, mul(p, x, q, y), r, z) - mul(p, x, q + r, mul(q, y, r, z))))
                bad = "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
  ring.checks.add("associativity on classes", bad.empty(), bad);

  if (commutator) {
    bad.clear();
    std::size_t pairs = 0;
    for (std::size_t p = 0; p <= max_total; ++p)
      for (std::size_t q = 0; p + q <= max_total; ++q)
        for (const auto& x : h.representatives(p))
          for (const auto& y : h.representatives(q)) {
            ++pairs;
            if (!certify(p + q, commutator(p, x, q, y)) && bad.empty()) bad = deg(p, q);
          }
    ring.checks.add("braided commutativity certificates", bad.empty(), bad.empty() ? std::to_string(pairs) + " pairs" : bad);
  }
  return ring;
}

HModule restricted_module(const HModule& m, const Matrix& incl) {
  HModule r{m.field, incl.cols(), {}};
  for (const auto& rho : m.rho) {
    auto c = coordinates_in(incl, rho * incl);
    if (!c) throw Error("restricted_module: not a submodule");
    r.rho.push_back(std::move(*c));
  }
  return r;
}

Matrix classical_hom_action(const SmashProduct& sp, std::size_t n, const Vec& h) {
  const FinHopf& D = sp.dd->D.hopf;
  HModule a = restricted_module(sp.B.mod, sp.incl_a);
  return hom_action(D, tensor_power(D, a, n), sp.B.mod, h);
}

Complex crossed_product_complex(const SmashProduct& sp, std::size_t N) {
  Complex c = classical_cochain_complex(sp.a.alg, restricted_bimodule(sp.B.alg, sp.incl_a), N);
  const auto& dd = *sp.dd;
  for (std::size_t i = 0; i < dd.E.dim; ++i) {
    c.action_elems.push_back(dd.from_eop(dd.E.basis(i)));
    c.action_eps.push_back(dd.E.eps(i));
  }
  const FinHopf& D = dd.D.hopf;
  HModule a = restricted_module(sp.B.mod, sp.incl_a);
  for (std::size_t n = 0; n <= N; ++n) {
    HModule pw = tensor_power(D, a, n);
    c.action.emplace_back();
    for (const auto& h : c.action_elems) c.action.back().push_back(hom_action(D, pw, sp.B.mod, h));
  }
  return c;
}

Matrix grading_projection(const SmashProduct& sp, std::size_t g, std::size_t n) {
  const auto& f = sp.B.field();
  std::size_t de = sp.dd->E.dim;
  std::vector<Triplet> t;
  for (std::size_t a = 0; a < sp.dim_a; ++a) t.push_back({a * de + g, a * de + g, Scalar::one(f)});
  return kron(Matrix::from_triplets(f, sp.B.dim(), sp.B.dim(), t), Matrix::identity(f, checked_pow(sp.dim_a, n)));
}

GDecomposition g_decomposition(const SmashProduct& sp, const Cohomology& h) {
  const Complex& C = h.complex();
  const auto& f = C.field;
  std::size_t G = sp.dd->E.dim, e = unit_index(sp.dd->E);
  GDecomposition dec;
  dec.reps.assign(G, std::vector<std::vector<Vec>>(h.hi() + 1));
  dec.dims.assign(G, std::vector<std::size_t>(h.hi() + 1, 0));

  std::string bad;
  for (int n = 0; n <= C.hi() && bad.empty(); ++n) {
    Matrix sum(f, C.dim(n), C.dim(n));
    for (std::size_t g = 0; g < G; ++g) {
      Matrix P = grading_projection(sp, g, n);
      sum += P;
      if (n < C.hi() && !(C.diff(n) * P == grading_projection(sp, g, n + 1) * C.diff(n))) bad = "degree " + std::to_string(n);
    }
    if (!(sum == Matrix::identity(f, C.dim(n)))) bad = "sum in degree " + std::to_string(n);
  }
  dec.checks.add("grading projections are chain maps summing to 1", bad.empty(), bad);

  bad.clear();
  for (int n = 0; n <= h.hi(); ++n) {
    std::size_t total = 0;
    for (std::size_t g = 0; g < G; ++g) {
      Matrix P = grading_projection(sp, g, n);
      EchelonBasis ech(f, h.dim(n));
      for (const auto& r : h.representatives(n)) {
        Vec v = P.apply(r);
        if (ech.insert(h.decompose(n, v).coords)) dec.reps[g][n].push_back(v);
      }
      dec.dims[g][n] = dec.reps[g][n].size();
      total += dec.dims[g][n];
    }
    if (total != h.dim(n) && bad.empty()) bad = "degree " + std::to_string(n);
  }
  dec.checks.add("summands fill the cohomology", bad.empty(), bad);

  bad.clear();
  for (int p = 0; p <= h.hi(); ++p)
    for (int q = 0; p + q <= h.hi(); ++q) {
      Matrix K = classical_cup(sp.B.alg.mult, sp.dim_a, p, q);
      Matrix P = grading_projection(sp, e, p + q);
      for (const auto& y : dec.reps[e][p])
        for (const auto& z : dec.reps[e][q]) {
          Vec v = K.apply(kron_vec(y, z));
          if (!(P.apply(v) == v) && bad.empty()) bad = deg(p, q);
        }
    }
  dec.checks.add("identity summand is closed under cup", bad.empty(), bad);
  return dec;
}

std::vector<Vec> ideal_generators(const SmashProduct& sp, const GDecomposition& dec, std::size_t g, std::size_t n) {
  std::size_t e = unit_index(sp.dd->E);
  Matrix act = classical_hom_action(sp, n, sp.dd->from_eop(sp.dd->E.basis(g)));
  std::vector<Vec> r;
  for (const auto& y : dec.reps[e].at(n)) r.push_back(y - act.apply(y));
  return r;
}

namespace {

struct Certifier {
  const Cohomology& h;
  std::size_t count = 0;
  bool operator()(std::size_t n, const Vec& v) {
    if (n == 0) return is_zero(v);
    auto w = h.coboundary_witness(n, v);
    if (!w || !(h.complex().diff(n - 1).apply(*w) == v)) return false;
    ++count;
    return true;
  }
};

}  // namespace

Report ideal_annihilation_check(const SmashProduct& sp, const Cohomology& h, const GDecomposition& dec, std::size_t g,
                                std::size_t max_total) {
  Report rep;
  std::size_t e = unit_index(sp.dd->E);
  Vec gel = sp.dd->from_eop(sp.dd->E.basis(g));
  Certifier cert{h};
  std::string left, right, central;
  std::size_t top = std::min<std::size_t>(max_total, h.hi());
  for (std::size_t p = 0; p <= top; ++p) {
    Matrix act = classical_hom_action(sp, p, gel);
    for (std::size_t q = 0; p + q <= top; ++q) {
      Matrix K = classical_cup(sp.B.alg.mult, sp.dim_a, p, q), Kr = classical_cup(sp.B.alg.mult, sp.dim_a, q, p);
      for (const auto& y : dec.reps[e][p]) {
        Vec gy = act.apply(y);
        for (const auto& z : dec.reps[g][q]) {
          if (!cert(p + q, K.apply(kron_vec(y, z)) - K.apply(kron_vec(gy, z))) && left.empty()) left = deg(p, q);
          if (!cert(p + q, Kr.apply(kron_vec(z, y)) - Kr.apply(kron_vec(z, gy))) && right.empty()) right = deg(q, p);
          Vec comm = K.apply(kron_vec(y, z)) - scaled(Kr.apply(kron_vec(z, y)), sign_scalar(h.complex().field, p * q));
          if (!cert(p + q, comm) && central.empty()) central = deg(p, q);
        }
      }
    }
  }
  rep.add("I_g annihilates on the left", left.empty(), left);
  rep.add("I_g annihilates on the right", right.empty(), right);
  rep.add("H(A) acts centrally", central.empty(), central.empty() ? std::to_string(cert.count) + " certificates" : central);
  return rep;
}

Report center_inclusion_check(const SmashProduct& sp, const Cohomology& h, std::size_t max_total) {
  Report rep;
  const FinHopf& E = sp.dd->E;
  if (!is_semisimple(E) || !is_cosemisimple(E)) {
    rep.not_applicable("invariant classes are central", "E is not semisimple and cosemisimple");
    return rep;
  }
  if (!h.complex().has_action()) throw Error("center_inclusion_check: cohomology has no action attached");
  Certifier cert{h};
  std::string bad;
  std::size_t top = std::min<std::size_t>(max_total, h.hi());
  const auto& f = h.complex().field;
  for (std::size_t p = 0; p <= top; ++p) {
    Matrix inv = h.representative_matrix(p) * h.invariant_classes(p);
    for (std::size_t q = 0; p + q <= top; ++q) {
      Matrix K = classical_cup(sp.B.alg.mult, sp.dim_a, p, q), Kr = classical_cup(sp.B.alg.mult, sp.dim_a, q, p);
      for (std::size_t k = 0; k < inv.cols(); ++k) {
        Vec x = inv.dense_column(k);
        for (const auto& y : h.representatives(q)) {
          Vec comm = K.apply(kron_vec(x, y)) - scaled(Kr.apply(kron_vec(y, x)), sign_scalar(f, p * q));
          if (!cert(p + q, comm) && bad.empty()) bad = deg(p, q);
        }
      }
    }
  }
  rep.add("invariant classes are central", bad.empty(), bad.empty() ? std::to_string(cert.count) + " certificates" : bad);
  return rep;
}

Report twist_product_equality(const SmashProduct& sp, const AlgebraObject& bj, const Vec& J, std::size_t max_total) {
  Report rep;
  const FinHopf& D = sp.dd->D.hopf;
  const auto& f = sp.B.field();
  std::size_t da = sp.dim_a;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> act;
  auto A = [&](std::size_t n, std::size_t i) -> const Matrix& {
    auto key = std::make_pair(n, i);
    auto it = act.find(key);
    if (it == act.end()) it = act.emplace(key, classical_hom_action(sp, n, D.basis(i))).first;
    return it->second;
  };
  std::string bad, untw;
  for (std::size_t p = 0; p <= max_total; ++p)
    for (std::size_t q = 0; p + q <= max_total; ++q) {
      Matrix K = classical_cup(sp.B.alg.mult, da, p, q);
      Matrix lhs(f, K.rows(), K.cols());
      for (const auto& t : to_sparse(J)) lhs += t.value * (K * kron(A(p, t.index / D.dim), A(q, t.index % D.dim)));
      if (!(lhs == classical_cup(bj.alg.mult, da, p, q)) && bad.empty()) bad = deg(p, q);
      Matrix Fp = kron(sp.incl_a, Matrix::identity(f, checked_pow(da, p)));
      Matrix Fq = kron(sp.incl_a, Matrix::identity(f, checked_pow(da, q)));
      Matrix Ip = Matrix::identity(f, K.cols() / Fq.rows()), Iq = Matrix::identity(f, Fq.rows());
      if (!(lhs * kron(Fp, Iq) == K * kron(Fp, Iq)) || !(lhs * kron(Ip, Fq) == K * kron(Ip, Fq)))
        if (untw.empty()) untw = deg(p, q);
    }
  rep.add("C(A,B)_J = C(A,B_J) on basis cochains", bad.empty(), bad);
  rep.add("products with a factor in C(A) are untwisted", untw.empty(), untw);
  return rep;
}

}  // namespace bhh
