#include "doctest.h"
#include "oracles.hpp"

#include "vinberg/echelon.hpp"
#include "vinberg/error.hpp"
#include "vinberg/matrix.hpp"
#include "vinberg/poly.hpp"
#include "vinberg/sampling.hpp"

using namespace vinberg;

TEST_CASE("scalar arithmetic stays in lowest terms") {
  const Scalar a(6, 4);
  CHECK(a.str() == "3/2");
  CHECK(a + Scalar(1, 2) == Scalar(2));
  CHECK((a * Scalar(2, 3)).is_integer());
  CHECK(Scalar(-3, -6) == Scalar(1, 2));
  CHECK(Scalar::parse("-7/21") == Scalar(-1, 3));
  CHECK_THROWS_AS(Scalar::parse("1/0"), ValidationError);
  CHECK_THROWS_AS(Scalar::parse("abc"), ValidationError);
  CHECK_THROWS_AS(Scalar(1) / Scalar(0), std::domain_error);
  CHECK(pow(Scalar(-2, 3), 3) == Scalar(-8, 27));
  CHECK(Scalar(5).fits_int64());
  CHECK(Scalar(5).to_int64() == 5);
}

TEST_CASE("mat_mul examples") {
  CHECK(mat_mul(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(2));
  const Matrix e12{{0, 1}, {0, 0}};
  const Matrix e21{{0, 0}, {1, 0}};
  CHECK(mat_mul(e12, e21) == Matrix{{1, 0}, {0, 0}});
  CHECK_THROWS_AS(mat_mul(Matrix(2, 3), Matrix(2, 3)), DimensionError);
}

TEST_CASE("mat_mul agrees with the entrywise oracle") {
  Sampler rng(11);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = rng.rational_matrix(3, 4, 5, 3);
    const Matrix b = rng.rational_matrix(4, 2, 5, 3);
    CHECK(mat_mul(a, b) == oracle::matmul(a, b));
  }
}

TEST_CASE("kernel_basis examples") {
  CHECK(kernel_basis(Matrix(2, 2)).size() == 2);
  CHECK(kernel_basis(Matrix::identity(3)).empty());
  const auto k = kernel_basis(Matrix{{1, 2}, {2, 4}});
  REQUIRE(k.size() == 1);
  CHECK(k[0][0] == Scalar(-2) * k[0][1]);
}

TEST_CASE("rank-nullity on random matrices") {
  Sampler rng(3);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = mat_mul(rng.integer_matrix(4, 2, 2), rng.integer_matrix(2, 5, 2));
    const auto k = kernel_basis(a);
    CHECK(rank(a) + k.size() == 5);
    for (const auto& v : k) {
      Matrix col(5, 1);
      for (std::size_t i = 0; i < 5; ++i) col(i, 0) = v[i];
      CHECK(mat_mul(a, col).is_zero());
    }
  }
}

TEST_CASE("solve and inverse") {
  const Matrix a{{2, 1}, {1, 1}};
  const auto inv = inverse(a);
  REQUIRE(inv);
  CHECK(mat_mul(a, *inv) == Matrix::identity(2));
  CHECK_FALSE(inverse(Matrix{{1, 2}, {2, 4}}));
  const auto x = solve(a, Vector{Scalar(3), Scalar(2)});
  REQUIRE(x);
  CHECK((*x)[0] == Scalar(1));
  CHECK((*x)[1] == Scalar(1));
  CHECK_FALSE(solve(Matrix{{1, 1}, {1, 1}}, Vector{Scalar(1), Scalar(2)}));
}

TEST_CASE("charpoly examples") {
  CHECK(charpoly(Matrix::identity(2)) == Poly({Scalar(1), Scalar(-2), Scalar(1)}));
  const Scalar d[] = {1, 2, 3};
  CHECK(charpoly(Matrix::diagonal(d)) == Poly({Scalar(-6), Scalar(11), Scalar(-6), Scalar(1)}));
  CHECK_THROWS_AS(charpoly(Matrix(2, 3)), DimensionError);
}

TEST_CASE("charpoly agrees with the cofactor-expansion oracle") {
  Sampler rng(5);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 4; ++t) {
      const Matrix a = rng.rational_matrix(n, n, 4, 3);
      CHECK(charpoly(a) == oracle::charpoly(a));
    }
}

TEST_CASE("Cayley-Hamilton and minimal polynomial") {
  Sampler rng(9);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = rng.integer_matrix(4, 4, 3);
    CHECK(charpoly(a)(a).is_zero());
    const Poly mp = minimal_polynomial(a);
    CHECK(mp(a).is_zero());
    CHECK(divmod(charpoly(a), mp).second.is_zero());
  }
  const Matrix nil{{0, 1, 0}, {0, 0, 0}, {0, 0, 0}};
  CHECK(minimal_polynomial(nil) == Poly::monomial(Scalar(1), 2));
  CHECK_FALSE(is_squarefree(minimal_polynomial(nil)));
  const Scalar d[] = {1, 1, 2};
  CHECK(is_squarefree(minimal_polynomial(Matrix::diagonal(d))));
}

TEST_CASE("poly gcd and substitution") {
  const Poly x = Poly::monomial(Scalar(1), 1);
  const Poly p = (x - Poly::constant(Scalar(1))) * (x - Poly::constant(Scalar(2)));
  const Poly q = (x - Poly::constant(Scalar(1))) * (x + Poly::constant(Scalar(5)));
  CHECK(gcd(p, q) == x - Poly::constant(Scalar(1)));
  CHECK(p.substitute_power(3)(Scalar(2)) == p(Scalar(8)));
  CHECK(p.derivative() == x * Scalar(2) - Poly::constant(Scalar(3)));
}

TEST_CASE("subspace echelon membership") {
  SubspaceEchelon e(4);
  CHECK(e.insert(sparse_of(Vector{Scalar(1), Scalar(1), Scalar(0), Scalar(0)})));
  CHECK(e.insert(sparse_of(Vector{Scalar(0), Scalar(1), Scalar(1), Scalar(0)})));
  CHECK_FALSE(e.insert(sparse_of(Vector{Scalar(1), Scalar(2), Scalar(1), Scalar(0)})));
  CHECK(e.dimension() == 2);
  CHECK(e.contains(sparse_of(Vector{Scalar(1), Scalar(0), Scalar(-1), Scalar(0)})));
  CHECK_FALSE(e.contains(sparse_of(Vector{Scalar(0), Scalar(0), Scalar(0), Scalar(1)})));
}

TEST_CASE("sparse bracket matches the dense commutator") {
  Sampler rng(21);
  for (int t = 0; t < 10; ++t) {
    const Matrix a = rng.integer_matrix(4, 4, 2);
    const Matrix b = rng.integer_matrix(4, 4, 2);
    const Matrix ref = oracle::matmul(a, b) - oracle::matmul(b, a);
    CHECK(sparse_bracket(sparse_of(a), sparse_of(b), 4) == sparse_of(ref));
  }
}
