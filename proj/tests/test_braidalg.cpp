#include <gtest/gtest.h>

#include <random>

#include "bhh/braidalg/algebra.hpp"
#include "bhh/hopf/catalog.hpp"
#include "oracle.hpp"

using namespace bhh;

using namespace bhh::oracle;

namespace {

const FieldSpec Q = FieldSpec::rationals();

std::shared_ptr<const DrinfeldDouble> dbl(const FinHopf& e) { return std::make_shared<const DrinfeldDouble>(drinfeld_double(e)); }
std::shared_ptr<const DrinfeldDouble> dbl(const GroupTable& g) { return dbl(group_algebra(g, Q)); }

GroupTable klein() { return GroupTable::product(GroupTable::cyclic(2), GroupTable::cyclic(2)); }

// E as the smash product k * E
AlgebraObject adjoint_algebra(std::shared_ptr<const DrinfeldDouble> dd) {
  return smash_product(dd, trivial_module_algebra(dd->E, ground_algebra(Q))).B;
}

}  // namespace

TEST(SmashProduct, TrivialE) {
  auto dd = dbl(GroupTable::trivial());
  auto sp = smash_product(dd, trivial_module_algebra(dd->E, dual_numbers(Q)));
  EXPECT_EQ(sp.B.alg.mult, dual_numbers(Q).mult);
  EXPECT_EQ(sp.yd.act[0], Matrix::identity(Q, 2));
  EXPECT_EQ(sp.yd.coaction, Matrix::identity(Q, 2));
}

TEST(SmashProduct, GroundAlgebraGivesAdjointE) {
  for (const auto& e : {group_algebra(GroupTable::cyclic(2), Q), group_algebra(GroupTable::symmetric3(), Q), sweedler4(Q)}) {
    auto sp = smash_product(dbl(e), trivial_module_algebra(e, ground_algebra(Q)));
    auto adj = adjoint_yd(e);
    EXPECT_EQ(sp.B.alg.mult, e.mult);
    EXPECT_EQ(sp.yd.coaction, adj.coaction);
    for (std::size_t i = 0; i < e.dim; ++i) EXPECT_EQ(sp.yd.act[i], adj.act[i]);
  }
}

TEST(SmashProduct, FixturesAreAlgebrasInYD) {
  auto dd2 = dbl(GroupTable::cyclic(2)), dd3 = dbl(GroupTable::cyclic(3));
  for (const auto& sp : {smash_product(dd2, dual_numbers_sign(Q)), smash_product(dd3, z3_planar(Q))}) {
    EXPECT_EQ(sp.B.dim(), sp.dim_a * sp.dd->E.dim);
    EXPECT_TRUE(check_yd(sp.dd->E, sp.yd).ok()) << check_yd(sp.dd->E, sp.yd).summary();
    auto rep = check_algebra_in_Z(sp.B);
    EXPECT_TRUE(rep.ok()) << rep.summary();
    EXPECT_TRUE(check_algebra_in_Z(sp.B, double_generators(*sp.dd)).ok());
  }
}

TEST(SmashProduct, CoinvariantsRecoverA) {
  auto dd = dbl(GroupTable::cyclic(2));
  for (const auto& a : {dual_numbers_sign(Q), trivial_module_algebra(dd->E, dual_numbers(Q))}) {
    auto sp = smash_product(dd, a);
    Matrix co = coinvariants(dd->E, sp.yd);
    EXPECT_EQ(co.cols(), a.alg.dim);
    EXPECT_EQ(rank(hstack({co, sp.incl_a})), a.alg.dim);
    // a -> a*1 is multiplicative
    EXPECT_EQ(sp.B.alg.mult * kron(sp.incl_a, sp.incl_a), sp.incl_a * a.alg.mult);
  }
}

TEST(SmashProduct, RejectsNonModuleAlgebra) {
  auto dd = dbl(GroupTable::cyclic(2));
  ModuleAlgebra bad = trivial_module_algebra(dd->E, dual_numbers(Q));
  bad.action.rho[1] = Matrix::from_ints(Q, {{1, 1}, {0, 1}});  // x -> x + 1
  EXPECT_THROW(smash_product(dd, bad), Error);
}

TEST(SmashProduct, AdjointActionWithoutAntipodeFails) {
  auto dd = dbl(GroupTable::cyclic(3));
  auto sp = smash_product(dd, z3_planar(Q));
  const FinHopf& E = dd->E;
  YDModule bad = sp.yd;
  // b.w = w_1 b w_2 instead of S(w_1) b w_2
  for (std::size_t w = 0; w < E.dim; ++w) {
    Vec u = sp.incl_e.apply(E.basis(w));
    bad.act[w] = sp.B.alg.left_mult(u) * sp.B.alg.right_mult(u);
  }
  AlgebraObject b = sp.B;
  b.mod = to_dmodule(*dd, bad);
  auto rep = check_algebra_in_Z(b);
  EXPECT_FALSE(rep.ok());
  EXPECT_EQ(rep.find("multiplication is H-linear")->status, Status::Fail);
}

TEST(BraidedOpposite, TrivialBraidingIsOpposite) {
  auto h = group_algebra(GroupTable::cyclic(2), Q);
  Algebra s3 = algebra_from_hopf(group_algebra(GroupTable::symmetric3(), Q));
  AlgebraObject b{std::make_shared<const QuasiTriHopf>(trivial_rmatrix(h)), s3, trivial_module(h, 6)};
  EXPECT_EQ(braided_opposite(b).alg.mult, opposite(s3).mult);
}

TEST(BraidedOpposite, OfEIsE) {
  for (const auto& e : {group_algebra(GroupTable::cyclic(2), Q), group_algebra(GroupTable::cyclic(3), Q),
                        group_algebra(GroupTable::symmetric3(), Q), sweedler4(Q)}) {
    auto b = adjoint_algebra(dbl(e));
    EXPECT_EQ(braided_opposite(b).alg.mult, b.alg.mult);
  }
}

TEST(BraidedOpposite, TwiceOnSymmetricFixtures) {
  for (const auto& b : {adjoint_algebra(dbl(GroupTable::cyclic(2))), smash_product(dbl(GroupTable::cyclic(2)), dual_numbers_sign(Q)).B}) {
    Matrix c = rmatrix_braiding(*b.H, b.mod, b.mod);
    if (!(c * c == Matrix::identity(Q, b.dim() * b.dim()))) continue;
    EXPECT_EQ(braided_opposite(braided_opposite(b)).alg.mult, b.alg.mult);
  }
  // a non-symmetric braiding: the double opposite is m c^2, which differs
  auto b = adjoint_algebra(dbl(GroupTable::cyclic(3)));
  Matrix c = rmatrix_braiding(*b.H, b.mod, b.mod);
  EXPECT_EQ(braided_opposite(braided_opposite(b)).alg.mult, b.alg.mult * c * c);
}

TEST(BraidedTensor, TrivialBraiding) {
  auto h = group_algebra(GroupTable::cyclic(2), Q);
  auto H = std::make_shared<const QuasiTriHopf>(trivial_rmatrix(h));
  AlgebraObject a{H, dual_numbers(Q), trivial_module(h, 2)};
  Algebra s3 = algebra_from_hopf(group_algebra(GroupTable::symmetric3(), Q));
  AlgebraObject b{H, s3, trivial_module(h, 6)};
  EXPECT_EQ(braided_tensor_algebra(a, b).alg.mult, tensor_algebra(a.alg, b.alg).mult);
  AlgebraObject k{H, ground_algebra(Q), trivial_module(h, 1)};
  EXPECT_EQ(braided_tensor_algebra(k, k).alg.mult, Matrix::identity(Q, 1));
}

TEST(BraidedTensor, SquareOfEIsSmashProduct) {
  for (const auto& g : {GroupTable::cyclic(2), GroupTable::cyclic(3)}) {
    auto b = adjoint_algebra(dbl(g));
    auto t = braided_tensor_algebra(b, b);
    EXPECT_EQ(t.alg.mult, adjoint_smash_table(b.hopf().dim == 1 ? b.hopf() : dbl(g)->E));
    EXPECT_TRUE(check_algebra_in_Z(t).ok());
  }
}

TEST(BraidedTensor, FixturesStayAlgebras) {
  auto sp = smash_product(dbl(GroupTable::cyclic(2)), dual_numbers_sign(Q));
  auto e = adjoint_algebra(sp.dd);
  auto rep = check_algebra_in_Z(braided_tensor_algebra(sp.B, e));
  EXPECT_TRUE(rep.ok()) << rep.summary();
  EXPECT_TRUE(check_algebra_in_Z(braided_enveloping(sp.B)).ok());
}

TEST(Enveloping, ActionIsRightModule) {
  auto sp = smash_product(dbl(GroupTable::cyclic(2)), dual_numbers_sign(Q));
  for (const auto& b : {sp.B, smash_product(dbl(sweedler4(Q)), trivial_module_algebra(sweedler4(Q), ground_algebra(Q))).B}) {
    auto rep = check_right_module(braided_enveloping(b).alg, b.dim(), env_action(b));
    EXPECT_TRUE(rep.ok()) << rep.summary();
  }
}

TEST(Enveloping, TrivialBraidingIsClassical) {
  auto h = group_algebra(GroupTable::cyclic(2), Q);
  Algebra s3 = algebra_from_hopf(group_algebra(GroupTable::symmetric3(), Q));
  AlgebraObject b{std::make_shared<const QuasiTriHopf>(trivial_rmatrix(h)), s3, trivial_module(h, 6)};
  Matrix act = env_action(b);
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t x = 0; x < 6; ++x)
      for (std::size_t y = 0; y < 6; ++y) {
        Vec want = s3.mul(s3.mul(s3.basis(x), s3.basis(a)), s3.basis(y));
        ASSERT_EQ(act.dense_column((a * 6 + x) * 6 + y), want);
      }
  AlgebraObject k{b.H, ground_algebra(Q), trivial_module(h, 1)};
  EXPECT_EQ(env_action(k), Matrix::identity(Q, 1));
}

TEST(Enveloping, FreenessInverse) {
  auto sp = smash_product(dbl(GroupTable::cyclic(2)), dual_numbers_sign(Q));
  auto sw = smash_product(dbl(sweedler4(Q)), trivial_module_algebra(sweedler4(Q), ground_algebra(Q)));
  for (const auto& b : {sp.B, sw.B, adjoint_algebra(dbl(GroupTable::cyclic(3)))})
    for (std::size_t n = 0; n <= 2; ++n) {
      Matrix phi = freeness_map(b, n), inv = freeness_inverse(b, n);
      std::size_t d = phi.rows();
      EXPECT_EQ(phi * inv, Matrix::identity(Q, d));
      EXPECT_EQ(inv * phi, Matrix::identity(Q, d));
      EXPECT_EQ(freeness_inverse(b, n, true), inv);
    }
}

TEST(DualCocycle, Examples) {
  auto g = klein();
  auto dd = dbl(g);
  std::vector<std::vector<Scalar>> ones(4, std::vector<Scalar>(4, Scalar::one(Q)));
  EXPECT_TRUE(dual_cocycle_check(*dd, g, dual_cocycle(*dd, ones)).ok());
  auto rep = dual_cocycle_check(*dd, g, dual_cocycle(*dd, klein_bicharacter(Q)));
  EXPECT_TRUE(rep.ok()) << rep.summary();
}

TEST(DualCocycle, RandomSignTablesAgreeWithEnumeration) {
  auto g = klein();
  auto dd = dbl(g);
  std::mt19937 rng(7);
  int failures = 0;
  for (int trial = 0; trial < 12; ++trial) {
    std::vector<std::vector<Scalar>> a(4, std::vector<Scalar>(4, Scalar::one(Q)));
    std::vector<std::vector<int>> s(4, std::vector<int>(4, 1));
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        if (rng() % 2) {
          s[x][y] = -1;
          a[x][y] = Scalar(Q, -1);
        }
    bool cocycle = true;
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (int z = 0; z < 4; ++z)
          cocycle = cocycle && s[x][y] * s[x ^ y][z] == s[y][z] * s[x][y ^ z];
    auto rep = dual_cocycle_check(*dd, g, dual_cocycle(*dd, a));
    EXPECT_EQ(rep.ok(), cocycle);
    EXPECT_EQ(rep.find("twist: cocycle")->status == Status::Pass, cocycle);
    failures += !cocycle;
  }
  EXPECT_GT(failures, 6);
}

TEST(JTwist, TrivialTwist) {
  auto dd = dbl(klein());
  auto b = adjoint_algebra(dd);
  auto t = j_twist_algebra(b, kron_vec(dd->D.hopf.unit, dd->D.hopf.unit));
  EXPECT_EQ(t.alg.mult, b.alg.mult);
}

TEST(JTwist, KleinTwistedGroupAlgebra) {
  auto g = klein();
  auto dd = dbl(g);
  auto b = adjoint_algebra(dd);
  auto alpha = klein_bicharacter(Q);
  auto t = j_twist_algebra(b, dual_cocycle(*dd, alpha).J);
  auto rep = check_algebra_in_Z(t);
  EXPECT_TRUE(rep.ok()) << rep.summary();
  EXPECT_TRUE(check_rmatrix(*t.H).ok());
  for (std::size_t x = 0; x < 4; ++x)
    for (std::size_t y = 0; y < 4; ++y)
      EXPECT_EQ(t.alg.mul(t.alg.basis(x), t.alg.basis(y)), scaled(t.alg.basis(g.mul(x, y)), alpha[x][y]));
  // the twisted product is not commutative, unlike kG
  EXPECT_FALSE(t.alg.mult == opposite(t.alg).mult);
}

TEST(JTwist, CoinvariantFactorIsUntwisted) {
  auto g = klein();
  auto dd = dbl(g);
  auto sp = smash_product(dd, trivial_module_algebra(dd->E, dual_numbers(Q)));
  auto t = j_twist_algebra(sp.B, dual_cocycle(*dd, klein_bicharacter(Q)).J);
  EXPECT_TRUE(check_algebra_in_Z(t).ok());
  for (std::size_t a = 0; a < sp.dim_a; ++a)
    for (std::size_t b = 0; b < sp.B.dim(); ++b) {
      Vec av = sp.incl_a.dense_column(a), bv = sp.B.alg.basis(b);
      EXPECT_EQ(t.alg.mul(av, bv), sp.B.alg.mul(av, bv));
      EXPECT_EQ(t.alg.mul(bv, av), sp.B.alg.mul(bv, av));
    }
}
