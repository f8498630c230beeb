#include <random>

#include <gtest/gtest.h>

#include "bhh/exactlin/linalg.hpp"

using namespace bhh;

namespace {

const FieldSpec Q = FieldSpec::rationals();

// Independent rank oracle: plain Gaussian elimination on mpq_class rows.
std::size_t oracle_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      mpq_class k = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= k * m[r][j];
    }
    ++r;
  }
  return r;
}

std::vector<std::vector<mpq_class>> to_rows(const Matrix& a) {
  std::vector<std::vector<mpq_class>> m(a.rows(), std::vector<mpq_class>(a.cols()));
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (const auto& e : a.column(j)) m[e.index][j] = mpq_class(e.value.numerator(), e.value.denominator());
  return m;
}

Matrix random_matrix(std::mt19937& rng, const FieldSpec& f, std::size_t r, std::size_t c, int density = 50) {
  std::uniform_int_distribution<int> val(-3, 3), pct(0, 99);
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      if (pct(rng) < density) t.push_back({i, j, Scalar(f, val(rng))});
  return Matrix::from_triplets(f, r, c, t);
}

}  // namespace

TEST(Scalar, CanonicalRationals) {
  Scalar a(Q, 6, -4);
  EXPECT_EQ(a.numerator(), -3);
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_TRUE((a + (-a)).is_zero());
  Scalar b(Q, 5, 7);
  EXPECT_TRUE(((a / b) * (b / a)).is_one());
}

TEST(Scalar, PrimeField) {
  auto f = FieldSpec::prime(7);
  Scalar a(f, 3);
  EXPECT_TRUE((a * a.inverse()).is_one());
  EXPECT_EQ(Scalar(f, -1).str(), "6");
  EXPECT_EQ(Scalar(f, 1, 2), Scalar(f, 4));
  EXPECT_THROW(Scalar(f, 1, 7), Error);
  EXPECT_THROW(FieldSpec::prime(9), Error);
}

TEST(Scalar, FieldMismatchThrows) {
  EXPECT_THROW(Scalar(Q, 1) + Scalar(FieldSpec::prime(2), 1), FieldMismatch);
  EXPECT_THROW(kron(Matrix::identity(Q, 1), Matrix::identity(FieldSpec::prime(3), 1)), FieldMismatch);
}

TEST(Scalar, RoundTripProperty) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> d(-50, 50);
  for (auto f : {Q, FieldSpec::prime(2), FieldSpec::prime(101)}) {
    for (int k = 0; k < 200; ++k) {
      Scalar a(f, d(rng)), b(f, d(rng));
      EXPECT_TRUE((a + (-a)).is_zero());
      if (!a.is_zero() && !b.is_zero()) EXPECT_TRUE(((a / b) * (b / a)).is_one());
    }
  }
}

TEST(Kernel, ZeroMap) { EXPECT_EQ(kernel_basis(Matrix(Q, 2, 2)).cols(), 2u); }

TEST(Kernel, Identity) { EXPECT_EQ(kernel_basis(Matrix::identity(Q, 3)).cols(), 0u); }

TEST(Kernel, RankOneSymmetric) {
  auto k = kernel_basis(Matrix::from_ints(Q, {{1, 1}, {1, 1}}));
  ASSERT_EQ(k.cols(), 1u);
  auto v = k.dense_column(0);
  EXPECT_EQ(v[0], -v[1]);
  EXPECT_FALSE(v[0].is_zero());
}

TEST(Kernel, DenseAndSparseAgree) {
  std::mt19937 rng(5);
  for (auto f : {Q, FieldSpec::prime(3)}) {
    for (int k = 0; k < 30; ++k) {
      auto a = random_matrix(rng, f, 1 + rng() % 12, 1 + rng() % 12, 30);
      EXPECT_EQ(kernel_basis_dense(a), kernel_basis_sparse(a));
    }
  }
}

TEST(Kernel, RankNullityProperty) {
  std::mt19937 rng(7);
  for (int k = 0; k < 40; ++k) {
    auto a = random_matrix(rng, Q, 1 + rng() % 9, 1 + rng() % 9, 40);
    auto ker = kernel_basis(a);
    EXPECT_EQ(rank(a) + ker.cols(), a.cols());
    EXPECT_EQ(rank(a), oracle_rank(to_rows(a)));
    EXPECT_TRUE((a * ker).is_zero());
    EXPECT_EQ(rank(ker), ker.cols());
  }
}

TEST(Tensor, IdentityAndZero) {
  EXPECT_EQ(kron(Matrix::identity(Q, 2), Matrix::identity(Q, 3)), Matrix::identity(Q, 6));
  auto f = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  EXPECT_TRUE(kron(f, Matrix(Q, 2, 2)).is_zero());
}

TEST(Tensor, LexicographicOrder) {
  // (f (x) g)(e_i (x) e_j) = f(e_i) (x) g(e_j), index i*dim + j.
  auto f = Matrix::from_ints(Q, {{0, 1}, {1, 0}});
  auto g = Matrix::from_ints(Q, {{2, 0}, {0, 3}});
  auto fg = kron(f, g);
  EXPECT_EQ(fg.at(1 * 2 + 0, 0 * 2 + 0), Scalar(Q, 2));
  EXPECT_EQ(fg.at(0 * 2 + 1, 1 * 2 + 1), Scalar(Q, 3));
}

TEST(Tensor, RankMultiplicative) {
  std::mt19937 rng(3);
  for (int k = 0; k < 25; ++k) {
    auto f = random_matrix(rng, Q, 2, 2), g = random_matrix(rng, Q, 2, 2);
    EXPECT_EQ(oracle_rank(to_rows(kron(f, g))), oracle_rank(to_rows(f)) * oracle_rank(to_rows(g)));
    EXPECT_EQ(rank(kron(f, g)), rank(f) * rank(g));
  }
}

TEST(Tensor, Associative) {
  std::mt19937 rng(9);
  for (int k = 0; k < 10; ++k) {
    auto f = random_matrix(rng, Q, 2, 3), g = random_matrix(rng, Q, 3, 2), h = random_matrix(rng, Q, 2, 2);
    EXPECT_EQ(kron(kron(f, g), h), kron(f, kron(g, h)));
  }
}

TEST(Tensor, Interchange) {
  std::mt19937 rng(13);
  auto a = random_matrix(rng, Q, 2, 3), b = random_matrix(rng, Q, 3, 2);
  auto c = random_matrix(rng, Q, 3, 3), d = random_matrix(rng, Q, 3, 2);
  EXPECT_EQ(kron(a, c) * kron(b, d), kron(a * b, c * d));
}

TEST(Tensor, Flip) {
  std::mt19937 rng(17);
  auto f = random_matrix(rng, Q, 2, 2), g = random_matrix(rng, Q, 3, 3);
  EXPECT_EQ(flip(Q, 2, 3) * kron(f, g), kron(g, f) * flip(Q, 2, 3));
}

TEST(Quotient, ZeroSubspace) {
  Quotient q(Matrix::identity(Q, 2), Matrix(Q, 2, 0));
  EXPECT_EQ(q.dim(), 2u);
}

TEST(Quotient, FullSubspace) {
  Quotient q(Matrix::identity(Q, 2), Matrix::identity(Q, 2));
  EXPECT_EQ(q.dim(), 0u);
  auto d = q.decompose({Scalar(Q, 3), Scalar(Q, 5)});
  EXPECT_EQ(d.witness[0], Scalar(Q, 3));
}

TEST(Quotient, CoordinateSubspace) {
  Quotient q(Matrix::identity(Q, 2), Matrix::from_ints(Q, {{1}, {0}}));
  EXPECT_EQ(q.dim(), 1u);
  auto d = q.decompose({Scalar(Q, 1), Scalar(Q, 0)});
  EXPECT_TRUE(is_zero(d.coords));
  EXPECT_EQ(d.witness[0], Scalar(Q, 1));
}

TEST(Quotient, NotContained) {
  Quotient q(Matrix::from_ints(Q, {{1}, {0}}), Matrix(Q, 2, 0));
  EXPECT_THROW(q.decompose({Scalar(Q, 0), Scalar(Q, 1)}), Error);
}

TEST(Quotient, WitnessProperty) {
  std::mt19937 rng(21);
  for (int k = 0; k < 20; ++k) {
    auto d = random_matrix(rng, Q, 6, 4, 40);
    auto cyc = hstack({d, random_matrix(rng, Q, 6, 2, 40)});
    Quotient q(cyc, d);
    EXPECT_EQ(q.dim(), rank(cyc) - rank(d));
    Vec v = zero_vec(Q, 6);
    for (std::size_t j = 0; j < cyc.cols(); ++j) axpy(v, Scalar(Q, long(rng() % 5) - 2), cyc.dense_column(j));
    auto dec = q.decompose(v);
    Vec rest = v;
    for (std::size_t i = 0; i < q.dim(); ++i) axpy(rest, -dec.coords[i], q.representatives()[i]);
    EXPECT_EQ(rest, d.apply(dec.witness));
  }
}

TEST(Solve, InverseAndSolve) {
  auto a = Matrix::from_ints(Q, {{2, 1}, {1, 1}});
  EXPECT_EQ(a * inverse(a), Matrix::identity(Q, 2));
  auto x = solve(a, {Scalar(Q, 3), Scalar(Q, 2)});
  ASSERT_TRUE(x);
  EXPECT_EQ(a.apply(*x), (Vec{Scalar(Q, 3), Scalar(Q, 2)}));
  EXPECT_FALSE(solve(Matrix::from_ints(Q, {{1}, {1}}), {Scalar(Q, 1), Scalar(Q, 0)}));
  EXPECT_THROW(inverse(Matrix::from_ints(Q, {{1, 1}, {1, 1}})), Error);
}
