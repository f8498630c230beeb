// One line per acceptance criterion; exit status 0 iff every criterion passes
// within its time limit. All comparisons are exact.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "../oracle.hpp"
#include "bhh/cli/runner.hpp"
#include "bhh/hopf/catalog.hpp"
#include "bhh/products/products.hpp"

using namespace bhh;
using namespace bhh::oracle;

namespace {

const FieldSpec Q = FieldSpec::rationals();

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const Report& r, const std::string& what) {
    if (r.ok()) return;
    for (const auto& c : r.checks())
      if (c.status == Status::Fail) return require(false, what + ": " + c.name + (c.detail.empty() ? "" : " (" + c.detail + ")"));
  }
};

std::shared_ptr<const DrinfeldDouble> dbl(const FinHopf& e) { return std::make_shared<const DrinfeldDouble>(drinfeld_double(e)); }
std::shared_ptr<const DrinfeldDouble> dbl(const GroupTable& g, const FieldSpec& f = Q) { return dbl(group_algebra(g, f)); }
SmashProduct adjoint(const FinHopf& e) { return smash_product(dbl(e), trivial_module_algebra(e, ground_algebra(e.field))); }
SmashProduct dual_z2() { return smash_product(dbl(GroupTable::cyclic(2)), dual_numbers_sign(Q)); }
GroupTable klein() { return GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2)); }

std::vector<Vec> eop(const DrinfeldDouble& dd) {
  std::vector<Vec> r;
  for (std::size_t i = 0; i < dd.E.dim; ++i) r.push_back(dd.from_eop(dd.E.basis(i)));
  return r;
}

Vec random_vec(std::mt19937& rng, std::size_t n) {
  Vec v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(Q, static_cast<long>(rng() % 7) - 3);
  return v;
}

// 1. R-matrix relations for D(kG), and a corrupted R is caught with a counterexample
Outcome rmatrix_suite() {
  Outcome o;
  for (const auto& g : {GroupTable::trivial(), GroupTable::cyclic(2), GroupTable::cyclic(3), klein(), GroupTable::symmetric3()}) {
    auto dd = dbl(g);
    o.require(check_rmatrix(dd->D), "D(kG), |G| = " + std::to_string(g.order()));
    if (g.order() == 1) continue;
    QuasiTriHopf bad = dd->D;
    // move the weight of one term of R onto a neighbouring basis tensor
    std::size_t d = bad.hopf.dim, k = 0;
    while (bad.R[k].is_zero()) ++k;
    bad.R[(k + 1) % (d * d)] += bad.R[k];
    bad.R[k] = Scalar::zero(Q);
    Report r = check_rmatrix(bad);
    bool localized = false;
    for (const auto& c : r.checks()) localized = localized || (c.status == Status::Fail && !c.detail.empty());
    o.require(!r.ok() && localized, "corrupted R not caught with a counterexample, |G| = " + std::to_string(g.order()));
  }
  return o;
}

// 2. d_c^2 = 0, H-linearity through degree 4, and the transported differential through degree 3
Outcome differential() {
  Outcome o;
  for (const auto& sp : {adjoint(group_algebra(GroupTable::cyclic(2), Q)), dual_z2(), adjoint(sweedler4(Q))}) {
    BraidedCochains bc(sp.B, double_generators(*sp.dd));
    auto c = bc.complex(5);
    auto rep = check_complex(c);
    o.require(rep, "B of dim " + std::to_string(sp.B.dim()));
    o.require(rep.find("d is H-linear") && rep.find("d is H-linear")->status == Status::Pass, "H-linearity not checked");
    for (std::size_t n = 0; n <= 3; ++n)
      o.require(bc.transported_differential(n) == sign_scalar(Q, n + 1) * bc.differential(n),
                "transported differential, degree " + std::to_string(n));
  }
  return o;
}

// 3. C_{c,E}(B) = C(A, B) through degree 4
Outcome restriction() {
  Outcome o;
  auto sp = dual_z2();
  BraidedCochains bc(sp.B);
  auto full = bc.complex(4, false);
  auto rel = relative_cochain_complex(bc, full, sp.incl_e);
  auto cl = classical_cochain_complex(sp.a.alg, restricted_bimodule(sp.B.alg, sp.incl_a), 4);
  auto res = restriction_maps(rel, sp.incl_a, sp.B.dim());
  o.require(res.size() == 5, "restriction maps through degree 4");
  o.require(check_restriction_iso(rel, cl, res), "restriction");
  return o;
}

// 4. E = k: complex, cup and circle are the classical ones
Outcome trivial_braiding() {
  Outcome o;
  for (const auto& a : {dual_numbers(Q), square_zero_extension(Q, 2)}) {
    auto dd = dbl(GroupTable::trivial());
    auto sp = smash_product(dd, trivial_module_algebra(dd->E, a));
    BraidedCochains bc(sp.B);
    CochainProducts pr(bc);
    auto c = bc.complex(4, false);
    auto cl = classical_cochain_complex(a, regular_classical_bimodule(a), 4);
    for (std::size_t n = 0; n <= 3; ++n) {
      o.require(c.d[n] == cl.d[n], "differential, degree " + std::to_string(n));
      o.require(c.d[n] == sign_scalar(Q, n + 1) * oracle_hochschild(a, regular_classical_bimodule(a), n),
                "oracle differential, degree " + std::to_string(n));
    }
    for (std::size_t p = 0; p <= 3; ++p)
      for (std::size_t q = 0; p + q <= 3; ++q) {
        o.require(pr.cup(p, q) == classical_cup(a.mult, a.dim, p, q), "cup");
        o.require(pr.circle(p, q) == classical_circle(a.dim, Q, p, q), "circle");
      }
  }
  return o;
}

// 5. associativity, unit, Leibniz, H-linearity, closure of the relative subcomplex; total degree <= 3
Outcome cup_structure() {
  Outcome o;
  auto sp = dual_z2();
  BraidedCochains bc(sp.B, double_generators(*sp.dd));
  CochainProducts pr(bc);
  auto full = bc.complex(4);
  auto rel = relative_cochain_complex(bc, full, sp.incl_e);
  auto rep = cup_structure_check(pr, 3, &rel.embedding);
  o.require(rep, "cup");
  o.require(rep.checks().size() == 5, "five structure checks");
  return o;
}

// 6. Maurer-Cartan, d_c = d_Hom - [pi, -], and the commutator identity on random pairs
Outcome maurer_cartan() {
  Outcome o;
  auto sp = dual_z2();
  BraidedCochains bc(sp.B);
  CochainProducts pr(bc);
  o.require(maurer_cartan_check(pr, 3), "Maurer-Cartan");
  std::mt19937 rng(2024);
  for (int t = 0; t < 100; ++t) {
    std::size_t p = rng() % 3, q = rng() % (3 - p);
    o.require(commutator_identity_check(pr, p, random_vec(rng, bc.space_dim(p)), q, random_vec(rng, bc.space_dim(q))),
              "random cochain pair " + std::to_string(t));
  }
  Cohomology h(bc.complex(3, false), 0, 2);
  auto cocycle = [&](std::size_t n) {
    Vec v = zero_vec(Q, bc.space_dim(n));
    for (const auto& r : h.representatives(n)) axpy(v, Scalar(Q, static_cast<long>(rng() % 7) - 3), r);
    if (n > 0) v = v + bc.differential(n - 1).apply(random_vec(rng, bc.space_dim(n - 1)));
    return v;
  };
  for (int t = 0; t < 100; ++t) {
    std::size_t p = rng() % 3, q = rng() % (3 - p);
    Vec f = cocycle(p), g = cocycle(q);
    auto rep = commutator_identity_check(pr, p, f, q, g);
    o.require(rep.checks().size() == 2, "cocycle witness not checked");
    o.require(rep, "random cocycle pair " + std::to_string(t));
  }
  return o;
}

// 7. every pair of representatives with total degree <= 3 has a commutator certificate
Outcome braided_commutativity() {
  Outcome o;
  auto sp = dual_z2();
  BraidedCochains bc(sp.B);
  CochainProducts pr(bc);
  Cohomology h(bc.complex(4, false), 0, 3);
  auto mul = [&](std::size_t p, const Vec& f, std::size_t q, const Vec& g) { return pr.cup(p, f, q, g); };
  auto comm = [&](std::size_t p, const Vec& f, std::size_t q, const Vec& g) {
    return pr.braided_commutator(p, q).apply(kron_vec(f, g));
  };
  auto ring = cohomology_ring(h, mul, bc.unit_cochain(), 3, comm);
  o.require(ring.checks, "ring");
  std::size_t pairs = 0;
  for (std::size_t p = 0; p <= 3; ++p)
    for (std::size_t q = 0; p + q <= 3; ++q) pairs += h.dim(p) * h.dim(q);
  o.require(pairs > 0 && ring.checks.find("braided commutativity certificates"), "no pairs certified");
  o.detail = std::to_string(pairs) + " pairs, " + std::to_string(ring.certificates) + " certificates";
  return o;
}

// 8. relative = absolute, and HH(B) = H_c(B)^E, through degree 3
Outcome semisimple_comparison() {
  Outcome o;
  auto sp = dual_z2();
  BraidedCochains bc(sp.B, eop(*sp.dd));
  auto full = bc.complex(4);
  auto rel = relative_cochain_complex(bc, full, sp.incl_e);
  Cohomology hc(full, 0, 3), hr(rel.complex, 0, 3);
  auto hh = oracle_dims(sp.B.alg, regular_classical_bimodule(sp.B.alg), 3);
  Cohomology hb(classical_cochain_complex(sp.B.alg, regular_classical_bimodule(sp.B.alg), 4), 0, 3);
  for (int n = 0; n <= 3; ++n) {
    Matrix m = induced_map(hr, hc, n, rel.embedding[n]);
    o.require(hr.dim(n) == hc.dim(n) && m.rows() == m.cols() && rank(m) == m.cols(), "induced map, degree " + std::to_string(n));
    o.require(hb.dim(n) == hh[n], "classical complex vs oracle, degree " + std::to_string(n));
    o.require(hh[n] == hc.invariant_classes(n).cols(), "HH vs invariants, degree " + std::to_string(n));
  }
  return o;
}

// 9. over F_2 the gate reports not-applicable while relative dimensions are still computed
Outcome modular_contrast() {
  Outcome o;
  JobConfig c = parse_config(example_config("f2-dual-numbers-z2"));
  c.suites = {"relative", "comparison"};
  JobReport r = run_verify(make_job(c));
  o.require(r.ok(), "relative suite");
  const auto* gate = r.suites.at(1).checks.find("relative and absolute cohomology agree");
  o.require(gate && gate->status == Status::NotApplicable, "semisimplicity gate");
  std::string dims;
  for (const auto& d : r.dims)
    if (d.complex == "relative") dims += (dims.empty() ? "" : ",") + std::to_string(d.dim);
  o.require(!dims.empty(), "relative dimensions");
  o.detail = "relative dims " + dims;
  return o;
}

// 10. I_g annihilation and centrality certificates, total degree <= 3
Outcome ideals() {
  Outcome o;
  auto sp = dual_z2();
  Cohomology h(crossed_product_complex(sp, 4), 0, 3);
  auto dec = g_decomposition(sp, h);
  o.require(dec.checks, "decomposition");
  auto rep = ideal_annihilation_check(sp, h, dec, 1, 3);
  o.require(rep, "ideal");
  o.require(rep.checks().size() == 3, "three certificate families");
  return o;
}

// 11. C(A,B)_J = C(A,B_J) for the alternating bicharacter on Z/2 x Z/2
Outcome twist() {
  Outcome o;
  auto dd = dbl(klein());
  auto J = dual_cocycle(*dd, klein_bicharacter(Q));
  o.require(dual_cocycle_check(*dd, klein(), J), "dual cocycle");
  for (const auto& a : {ground_algebra(Q), dual_numbers(Q)}) {
    auto sp = smash_product(dd, trivial_module_algebra(dd->E, a));
    auto bj = j_twist_algebra(sp.B, J.J);
    o.require(check_algebra_in_Z(bj), "B_J");
    auto rep = twist_product_equality(sp, bj, J.J, 2);
    o.require(rep, "twist, dim A = " + std::to_string(a.dim));
    o.require(rep.checks().size() == 2, "untwisted check");
  }
  return o;
}

// 12. braided opposite of E is E, and E (x) E = E_1 * E_2, as multiplication tables
Outcome structural() {
  Outcome o;
  for (const auto& g : {GroupTable::cyclic(2), GroupTable::cyclic(3)}) {
    auto b = adjoint(group_algebra(g, Q)).B;
    o.require(braided_opposite(b).alg.mult == b.alg.mult, "opposite, |G| = " + std::to_string(g.order()));
    o.require(braided_tensor_algebra(b, b).alg.mult == adjoint_smash_table(group_algebra(g, Q)),
              "tensor square, |G| = " + std::to_string(g.order()));
  }
  return o;
}

// 13. normalized complexes, and invariant normalized cohomology = HH(B), through degree 2
Outcome normalized() {
  Outcome o;
  auto sp = dual_z2();
  BraidedCochains bc(sp.B, eop(*sp.dd));
  auto full = bc.complex(3);
  const Vec& u = sp.B.alg.unit;
  auto norm = normalized_subcomplex(full, u, sp.B.dim());
  o.require(Cohomology(norm, 0, 2).dims() == Cohomology(full, 0, 2).dims(), "braided");
  auto rel = relative_cochain_complex(bc, full, sp.incl_e);
  o.require(Cohomology(normalized_subcomplex(rel, u, sp.B.dim()).complex, 0, 2).dims() == Cohomology(rel.complex, 0, 2).dims(),
            "relative");
  auto cl = classical_cochain_complex(sp.B.alg, regular_classical_bimodule(sp.B.alg), 3);
  o.require(Cohomology(normalized_subcomplex(cl, u, sp.B.dim()), 0, 2).dims() == Cohomology(cl, 0, 2).dims(), "classical");
  auto inv = Cohomology(invariant_subcomplex(norm), 0, 2).dims();
  auto hh = oracle_dims(sp.B.alg, regular_classical_bimodule(sp.B.alg), 2);
  o.require(inv == hh, "invariant normalized vs HH(B)");
  return o;
}

// 14. HH(Q[x]/x^2) = 2,1,1,1 from the brute-force oracle, matched by the engine
Outcome regression() {
  Outcome o;
  Algebra a = dual_numbers(Q);
  auto oracle = oracle_dims(a, regular_classical_bimodule(a), 3);
  o.require(oracle == std::vector<std::size_t>{2, 1, 1, 1}, "oracle table");
  o.require(Cohomology(classical_cochain_complex(a, regular_classical_bimodule(a), 4), 0, 3).dims() == oracle, "engine");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"R-matrix suite", 10, rmatrix_suite},
      {"differential correctness", 60, differential},
      {"restriction isomorphism", 30, restriction},
      {"trivial-braiding degeneration", 10, trivial_braiding},
      {"cup structure", 120, cup_structure},
      {"Maurer-Cartan and bracket form", 120, maurer_cartan},
      {"braided commutativity", 120, braided_commutativity},
      {"semisimple comparison", 300, semisimple_comparison},
      {"modular contrast", 60, modular_contrast},
      {"ideals I_g", 60, ideals},
      {"J-twist", 60, twist},
      {"structural lemmas", 10, structural},
      {"normalized complexes", 300, normalized},
      {"regression table", 10, regression},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = s < c.limit;
    if (o.ok && !in_time) o.detail = "over the time limit";
    bool pass = o.ok && in_time;
    failed += !pass;
    std::printf("criterion %2zu  %s  %-32s exact (tolerance 0)  %7.2f s / %4.0f s%s%s\n", i + 1, pass ? "PASS" : "FAIL", c.name, s,
                c.limit, o.detail.empty() ? "" : "  ", o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
