#include <gtest/gtest.h>

#include "bhh/hopf/catalog.hpp"
#include "bhh/hopf/double.hpp"
#include "bhh/hopf/module.hpp"
#include "bhh/hopf/twist.hpp"

using namespace bhh;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// Sweedler algebra oracle: (g^a x^b)(g^c x^d) = (-1)^{bc} g^{a+c} x^{b+d}, x^2 = 0,
// basis index a + 2b.
Vec sweedler_oracle_product(std::size_t i, std::size_t j) {
  std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
  Vec r = zero_vec(Q, 4);
  if (b + d >= 2) return r;
  long sign = (b * c) % 2 ? -1 : 1;
  r[(a + c) % 2 + 2 * (b + d)] = Scalar(Q, sign);
  return r;
}

}  // namespace

TEST(GroupAlgebra, Trivial) {
  auto h = group_algebra(GroupTable::trivial(), Q);
  EXPECT_EQ(h.dim, 1u);
  EXPECT_EQ(h.antipode, Matrix::identity(Q, 1));
  EXPECT_EQ(h.mult, Matrix::identity(Q, 1));
  EXPECT_TRUE(check_hopf_axioms(h).ok());
}

TEST(GroupAlgebra, Z2AndS3) {
  auto z2 = group_algebra(GroupTable::cyclic(2), Q);
  EXPECT_EQ(z2.antipode, Matrix::identity(Q, 2));
  EXPECT_TRUE(check_hopf_axioms(z2).ok());
  auto s3 = group_algebra(GroupTable::symmetric3(), Q);
  EXPECT_EQ(s3.dim, 6u);
  EXPECT_TRUE(check_hopf_axioms(s3).ok()) << check_hopf_axioms(s3).summary();
  EXPECT_EQ(GroupTable::symmetric3().conjugacy_classes(), 3u);
}

TEST(GroupAlgebra, CorruptedAntipodeFails) {
  auto h = group_algebra(GroupTable::cyclic(3), Q);
  h.antipode = Matrix::identity(Q, 3);
  h.antipode_inv = Matrix::identity(Q, 3);
  auto rep = check_hopf_axioms(h);
  EXPECT_FALSE(rep.ok());
  EXPECT_EQ(rep.find("antipode (left)")->status, Status::Fail);
  EXPECT_NE(rep.find("antipode (left)")->detail.find("g"), std::string::npos);
}

TEST(GroupTable, RejectsBadTables) {
  EXPECT_THROW(GroupTable({{0, 1}, {0, 1}}), Error);
  EXPECT_THROW(GroupTable({{0, 1}, {1, 1}}), Error);
}

TEST(Sweedler, MatchesPresentation) {
  auto h = sweedler4(Q);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(h.mul(h.basis(i), h.basis(j)), sweedler_oracle_product(i, j)) << i << "," << j;
  auto rep = check_hopf_axioms(h);
  EXPECT_TRUE(rep.ok()) << rep.summary();
  EXPECT_FALSE(is_semisimple(h));
  EXPECT_FALSE(is_cosemisimple(h));
  EXPECT_THROW(sweedler4(FieldSpec::prime(2)), Error);
}

TEST(Semisimple, GroupAlgebras) {
  EXPECT_TRUE(is_semisimple(group_algebra(GroupTable::cyclic(2), Q)));
  EXPECT_FALSE(is_semisimple(group_algebra(GroupTable::cyclic(2), FieldSpec::prime(2))));
  EXPECT_TRUE(is_cosemisimple(group_algebra(GroupTable::cyclic(2), FieldSpec::prime(2))));
  EXPECT_TRUE(is_semisimple(group_algebra(GroupTable::symmetric3(), FieldSpec::prime(5))));
  EXPECT_FALSE(is_semisimple(group_algebra(GroupTable::symmetric3(), FieldSpec::prime(3))));
}

TEST(RMatrix, TrivialOnCocommutative) {
  auto h = group_algebra(GroupTable::cyclic(3), Q);
  EXPECT_TRUE(check_rmatrix(trivial_rmatrix(h)).ok());
}

TEST(RMatrix, TrivialOnSweedlerFails) {
  auto rep = check_rmatrix(trivial_rmatrix(sweedler4(Q)));
  EXPECT_EQ(rep.find("intertwines comultiplication")->status, Status::Fail);
}

TEST(Double, TrivialGroup) {
  auto dd = drinfeld_double_group(GroupTable::trivial(), Q);
  EXPECT_EQ(dd.D.hopf.dim, 1u);
  EXPECT_EQ(dd.D.R, (Vec{Scalar(Q, 1)}));
}

TEST(Double, GroupDoubles) {
  std::vector<GroupTable> groups = {GroupTable::trivial(), GroupTable::cyclic(2), GroupTable::cyclic(3),
                                    GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2)),
                                    GroupTable::symmetric3()};
  for (const auto& g : groups) {
    auto dd = drinfeld_double_group(g, Q);
    EXPECT_EQ(dd.D.hopf.dim, g.order() * g.order());
    auto hrep = check_hopf_axioms(dd.D.hopf);
    EXPECT_TRUE(hrep.ok()) << hrep.summary();
    auto rrep = check_rmatrix(dd.D);
    EXPECT_TRUE(rrep.ok()) << rrep.summary();
  }
}

TEST(Double, SweedlerDouble) {
  auto dd = drinfeld_double(sweedler4(Q));
  EXPECT_EQ(dd.D.hopf.dim, 16u);
  auto hrep = check_hopf_axioms(dd.D.hopf);
  EXPECT_TRUE(hrep.ok()) << hrep.summary();
  auto rrep = check_rmatrix(dd.D);
  EXPECT_TRUE(rrep.ok()) << rrep.summary();
}

TEST(Double, SubalgebrasAndFactorization) {
  auto g = GroupTable::cyclic(3);
  auto dd = drinfeld_double_group(g, Q);
  const auto& E = dd.E;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = 0; b < 3; ++b) {
      // E^op: a *op b = b a
      EXPECT_EQ(dd.D.hopf.mul(dd.from_eop(E.basis(a)), dd.from_eop(E.basis(b))), dd.from_eop(E.mul(E.basis(b), E.basis(a))));
      // w * xi is the basis element (w, xi)
      EXPECT_EQ(dd.D.hopf.mul(dd.from_eop(E.basis(a)), dd.from_dual(E.basis(b))), dd.D.hopf.basis(dd.index(a, b)));
    }
}

TEST(Double, CounitOfR21) {
  auto dd = drinfeld_double_group(GroupTable::symmetric3(), Q);
  auto rep = check_rmatrix(dd.D);
  EXPECT_EQ(rep.find("(ε⊗id)(R21) = 1")->status, Status::Pass);
}

TEST(RMatrix, CorruptedFailsWithLocation) {
  auto dd = drinfeld_double_group(GroupTable::cyclic(2), Q);
  auto q = dd.D;
  q.R[3] += Scalar(Q, 1);
  auto rep = check_rmatrix(q);
  EXPECT_FALSE(rep.ok());
  bool located = false;
  for (const auto& c : rep.checks())
    if (c.status == Status::Fail && !c.detail.empty()) located = true;
  EXPECT_TRUE(located);
}

namespace {

ModuleAlgebra dual_numbers_z2(const FieldSpec& f, long x_image_x, long x_image_one) {
  auto h = group_algebra(GroupTable::cyclic(2), f);
  ModuleAlgebra a{dual_numbers(f), trivial_module(h, 2)};
  a.action.rho[1] = Matrix::from_triplets(f, 2, 2, {{0, 0, Scalar(f, 1)}, {1, 1, Scalar(f, x_image_x)}, {0, 1, Scalar(f, x_image_one)}});
  return a;
}

Vec bicharacter_twist(const DrinfeldDouble& dd, bool alternating) {
  const auto& f = dd.E.field;
  Vec J = zero_vec(f, dd.D.hopf.dim * dd.D.hopf.dim);
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t h = 0; h < 4; ++h) {
      long s = alternating && ((g / 2) * (h % 2)) % 2 ? -1 : 1;
      J = J + scaled(kron_vec(dd.from_dual(dd.E.basis(g)), dd.from_dual(dd.E.basis(h))), Scalar(f, s));
    }
  return J;
}

}  // namespace

TEST(ModuleAlgebra, TrivialAction) {
  auto h = group_algebra(GroupTable::cyclic(3), Q);
  ModuleAlgebra a{dual_numbers(Q), trivial_module(h, 2)};
  EXPECT_TRUE(check_module_algebra(h, a).ok());
}

TEST(ModuleAlgebra, SignAction) {
  auto h = group_algebra(GroupTable::cyclic(2), Q);
  EXPECT_TRUE(check_module_algebra(h, dual_numbers_z2(Q, -1, 0)).ok());
}

TEST(ModuleAlgebra, AffineShiftFails) {
  auto h = group_algebra(GroupTable::cyclic(2), Q);
  // x -> x + 1 is not even an action of Z/2, and breaks x^2 = 0
  auto rep = check_module_algebra(h, dual_numbers_z2(Q, 1, 1));
  EXPECT_EQ(rep.find("h.(ab) = (h1.a)(h2.b)")->status, Status::Fail);
}

TEST(Twist, TrivialTwistIsIdentity) {
  auto dd = drinfeld_double_group(GroupTable::cyclic(2), Q);
  Vec J = kron_vec(dd.D.hopf.unit, dd.D.hopf.unit);
  auto t = twist_quasitriangular(dd.D, J);
  EXPECT_EQ(t.hopf.comult, dd.D.hopf.comult);
  EXPECT_EQ(t.hopf.antipode, dd.D.hopf.antipode);
  EXPECT_EQ(t.R, dd.D.R);
}

TEST(Twist, AlternatingBicharacter) {
  auto dd = drinfeld_double_group(GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2)), Q);
  Vec J = bicharacter_twist(dd, true);
  EXPECT_TRUE(check_twist(dd.D.hopf, J).ok());
  auto t = twist_quasitriangular(dd.D, J);
  EXPECT_NE(t.R, dd.D.R);
  auto hr = check_hopf_axioms(t.hopf);
  EXPECT_TRUE(hr.ok()) << hr.summary();
  auto rr = check_rmatrix(t);
  EXPECT_TRUE(rr.ok()) << rr.summary();
  // twisting back by J^{-1} recovers the original structure
  auto back = twist_quasitriangular(t, tensor_inverse(t.hopf, 2, J));
  EXPECT_EQ(back.hopf.comult, dd.D.hopf.comult);
  EXPECT_EQ(back.hopf.antipode, dd.D.hopf.antipode);
  EXPECT_EQ(back.R, dd.D.R);
}

TEST(Twist, NonCocycleRejected) {
  auto dd = drinfeld_double_group(GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2)), Q);
  const auto& f = dd.E.field;
  Vec J = bicharacter_twist(dd, false);
  // alpha(g1, g1) = -1 only: invertible, counital fails or cocycle fails
  J = J + scaled(kron_vec(dd.from_dual(dd.E.basis(1)), dd.from_dual(dd.E.basis(1))), Scalar(f, -2));
  EXPECT_FALSE(check_twist(dd.D.hopf, J).ok());
  EXPECT_THROW(twist_quasitriangular(dd.D, J), Error);
}
