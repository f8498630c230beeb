#include <gtest/gtest.h>

#include "bhh/hopf/catalog.hpp"
#include "bhh/ydmod/bimodule.hpp"
#include "bhh/ydmod/yd.hpp"

using namespace bhh;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// evaluation Hom(M,N) (x) M -> N
Matrix evaluation(const FieldSpec& f, std::size_t dm, std::size_t dn) {
  std::vector<Triplet> t;
  for (std::size_t out = 0; out < dn; ++out)
    for (std::size_t in = 0; in < dm; ++in) t.push_back({out, (out * dm + in) * dm + in, Scalar::one(f)});
  return Matrix::from_triplets(f, dn, dn * dm * dm, t);
}

bool same_span(const Matrix& a, const Matrix& b) {
  return rank(a) == rank(b) && rank(hstack({a, b})) == rank(a);
}

std::vector<FinHopf> small_hopfs() {
  return {group_algebra(GroupTable::cyclic(2), Q), group_algebra(GroupTable::symmetric3(), Q), sweedler4(Q)};
}

}  // namespace

TEST(YD, TrivialAndAdjoint) {
  for (const auto& e : small_hopfs()) {
    EXPECT_TRUE(check_yd(e, trivial_yd(e, 3)).ok());
    auto rep = check_yd(e, adjoint_yd(e));
    EXPECT_TRUE(rep.ok()) << rep.summary();
  }
}

TEST(YD, RegularActionTrivialCoaction) {
  auto e = group_algebra(GroupTable::cyclic(2), Q);
  EXPECT_TRUE(check_yd(e, regular_trivial_yd(e)).ok());
  // any action with trivial coaction is YD over a cocommutative E, but not over Sweedler's
  auto s3 = group_algebra(GroupTable::symmetric3(), Q);
  EXPECT_TRUE(check_yd(s3, regular_trivial_yd(s3)).ok());
  auto sw = sweedler4(Q);
  EXPECT_EQ(check_yd(sw, regular_trivial_yd(sw)).find("Yetter-Drinfeld compatibility")->status, Status::Fail);
}

TEST(YD, DoubleModulesAgree) {
  for (const auto& e : small_hopfs()) {
    auto dd = drinfeld_double(e);
    auto m = adjoint_yd(e), n = regular_trivial_yd(e);
    if (!check_yd(e, n).ok()) n = trivial_yd(e, 2);
    auto dm = to_dmodule(dd, m), dn = to_dmodule(dd, n);
    EXPECT_TRUE(check_module(dd.D.hopf, dm).ok());
    // tensor products agree
    auto t1 = tensor_module(dd.D.hopf, {&dm, &dn});
    auto t2 = to_dmodule(dd, tensor_yd(e, m, n));
    for (std::size_t i = 0; i < dd.D.hopf.dim; ++i) EXPECT_EQ(t1.rho[i], t2.rho[i]);
    // braidings agree
    EXPECT_EQ(yd_braiding(e, m, n), rmatrix_braiding(dd.D, dm, dn));
    EXPECT_EQ(yd_braiding(e, m, m), rmatrix_braiding(dd.D, dm, dm));
    EXPECT_EQ(yd_braiding_inverse(e, m, n), rmatrix_braiding_inverse(dd.D, dm, dn));
  }
}

TEST(YD, BraidingTrivialCoactionIsFlip) {
  auto e = sweedler4(Q);
  auto m = adjoint_yd(e), n = trivial_yd(e, 2);
  EXPECT_EQ(yd_braiding(e, m, n), flip(Q, m.dim, n.dim));
}

TEST(YD, BraidingSymmetricForZ2) {
  auto e = group_algebra(GroupTable::cyclic(2), Q);
  auto m = adjoint_yd(e);
  Matrix c = yd_braiding(e, m, m);
  EXPECT_EQ(c * c, Matrix::identity(Q, 4));
}

TEST(YD, BraidingInverseAndMorphism) {
  for (const auto& e : small_hopfs()) {
    auto m = adjoint_yd(e), n = trivial_yd(e, 2);
    Matrix c = yd_braiding(e, m, n), ci = yd_braiding_inverse(e, m, n);
    EXPECT_EQ(c * ci, Matrix::identity(Q, m.dim * n.dim));
    EXPECT_EQ(ci * c, Matrix::identity(Q, m.dim * n.dim));
    EXPECT_TRUE(is_yd_morphism(e, tensor_yd(e, m, n), tensor_yd(e, n, m), c));
    Matrix cmm = yd_braiding(e, m, m);
    EXPECT_TRUE(is_yd_morphism(e, tensor_yd(e, m, m), tensor_yd(e, m, m), cmm));
  }
}

TEST(YD, Hexagons) {
  for (const auto& e : small_hopfs()) {
    auto m = adjoint_yd(e), n = adjoint_yd(e), p = trivial_yd(e, 2);
    auto I = [&](std::size_t d) { return Matrix::identity(Q, d); };
    auto np = tensor_yd(e, n, p), mn = tensor_yd(e, m, n);
    EXPECT_EQ(yd_braiding(e, m, np), kron(I(n.dim), yd_braiding(e, m, p)) * kron(yd_braiding(e, m, n), I(p.dim)));
    EXPECT_EQ(yd_braiding(e, mn, p), kron(yd_braiding(e, m, p), I(n.dim)) * kron(I(m.dim), yd_braiding(e, n, p)));
  }
}

TEST(YD, Naturality) {
  for (const auto& e : small_hopfs()) {
    auto dd = drinfeld_double(e);
    auto m = adjoint_yd(e), n = adjoint_yd(e);
    auto homs = module_homs(dd.D.hopf, to_dmodule(dd, m), to_dmodule(dd, m));
    ASSERT_GT(homs.cols(), 0u);
    for (std::size_t k = 0; k < homs.cols(); ++k) {
      std::vector<Triplet> t;
      for (const auto& x : homs.column(k)) t.push_back({x.index / m.dim, x.index % m.dim, x.value});
      Matrix f = Matrix::from_triplets(Q, m.dim, m.dim, t);
      ASSERT_TRUE(is_yd_morphism(e, m, m, f));
      EXPECT_EQ(kron(Matrix::identity(Q, n.dim), f) * yd_braiding(e, m, n), yd_braiding(e, m, n) * kron(f, Matrix::identity(Q, n.dim)));
      EXPECT_EQ(kron(f, Matrix::identity(Q, m.dim)) * yd_braiding(e, n, m), yd_braiding(e, n, m) * kron(Matrix::identity(Q, n.dim), f));
    }
  }
}

TEST(InnerHom, TrivialModules) {
  auto h = group_algebra(GroupTable::cyclic(3), Q);
  auto t = trivial_module(h, 2);
  auto ih = inner_hom(h, t, t);
  for (std::size_t i = 0; i < h.dim; ++i) EXPECT_EQ(ih.rho[i], Matrix::identity(Q, 4));
}

TEST(InnerHom, InvariantsAreModuleMaps) {
  for (const auto& e : small_hopfs()) {
    auto dd = drinfeld_double(e);
    const auto& D = dd.D.hopf;
    auto m = to_dmodule(dd, adjoint_yd(e)), n = to_dmodule(dd, trivial_yd(e, 2));
    for (auto [v, w] : {std::pair{&m, &m}, std::pair{&m, &n}, std::pair{&n, &m}}) {
      auto ih = inner_hom(D, *v, *w);
      EXPECT_TRUE(check_module(D, ih).ok());
      Matrix inv = invariants(D, ih), direct = module_homs(D, *v, *w);
      EXPECT_EQ(inv.cols(), direct.cols());
      EXPECT_TRUE(same_span(inv, direct));
    }
  }
}

TEST(InnerHom, PairingIsLinear) {
  auto dd = drinfeld_double_group(GroupTable::cyclic(2), Q);
  const auto& D = dd.D.hopf;
  auto m = to_dmodule(dd, adjoint_yd(dd.E)), n = to_dmodule(dd, regular_trivial_yd(dd.E));
  auto ih = inner_hom(D, m, n);
  Matrix ev = evaluation(Q, m.dim, n.dim);
  for (std::size_t i = 0; i < D.dim; ++i) EXPECT_EQ(ev * tensor_action(D, {&ih, &m}, i), n.rho[i] * ev);
}

TEST(InnerHom, Cap) {
  auto h = group_algebra(GroupTable::cyclic(2), Q);
  auto t = trivial_module(h, 10);
  EXPECT_THROW(inner_hom(h, t, t, 50), ResourceCap);
}

TEST(Invariants, Examples) {
  auto z2 = group_algebra(GroupTable::cyclic(2), Q);
  EXPECT_EQ(invariants(z2, trivial_module(z2, 3)).cols(), 3u);
  auto inv = invariants(z2, regular_module(z2));
  ASSERT_EQ(inv.cols(), 1u);
  EXPECT_EQ(inv.at(0, 0), inv.at(1, 0));
  auto s3 = GroupTable::symmetric3();
  auto dd = drinfeld_double_group(s3, Q);
  // invariants under E^op inside D are the class sums; the coaction cuts these down to k.1
  std::vector<Vec> eop;
  for (std::size_t i = 0; i < dd.E.dim; ++i) eop.push_back(dd.from_eop(dd.E.basis(i)));
  auto adj = to_dmodule(dd, adjoint_yd(dd.E));
  EXPECT_EQ(invariants(dd.D.hopf, adj, eop).cols(), s3.conjugacy_classes());
  EXPECT_EQ(invariants(dd.D.hopf, adj).cols(), 1u);
}

TEST(BimoduleHoms, TrivialE) {
  auto dd = drinfeld_double_group(GroupTable::trivial(), Q);
  auto e = adjoint_yd(dd.E);
  AlgebraInModules E{algebra_from_hopf(dd.E), to_dmodule(dd, e)};
  auto reg = regular_bimodule(E);
  auto s = bimodule_hom_space(dd.D, E, reg, reg);
  EXPECT_EQ(s.basis.cols(), 1u);  // all linear maps k -> k
}

TEST(BimoduleHoms, RegularZ2) {
  for (const auto& hopf : {group_algebra(GroupTable::cyclic(2), Q), sweedler4(Q)}) {
    auto dd = drinfeld_double(hopf);
    AlgebraInModules E{algebra_from_hopf(dd.E), to_dmodule(dd, adjoint_yd(dd.E))};
    auto reg = regular_bimodule(E);
    EXPECT_TRUE(check_bimodule(dd.D.hopf, E, reg).ok()) << check_bimodule(dd.D.hopf, E, reg).summary();
    auto s = bimodule_hom_space(dd.D, E, reg, reg);
    EXPECT_EQ(s.basis.cols(), hopf.dim);  // left multiplications
    EXPECT_TRUE(s.stable);
    // invariants of the hom space are exactly the morphisms of the category
    Matrix inv = s.basis * invariants(dd.D.hopf, s.action);
    Matrix direct = bimodule_morphisms(dd.D.hopf, reg, reg);
    EXPECT_EQ(inv.cols(), direct.cols());
    EXPECT_TRUE(same_span(inv, direct));
  }
}
