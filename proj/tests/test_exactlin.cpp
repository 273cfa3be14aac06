#include <catch_amalgamated.hpp>

#include "arsubcat/errors.hpp"
#include "arsubcat/exactlin/polynomial.hpp"
#include "support/support.hpp"

using namespace arsubcat;
using arsubcat::testing::random_matrix;

TEST_CASE("prime field arithmetic", "[exactlin]") {
  PrimeField k(5);
  CHECK(k.add(3, 4) == 2);
  CHECK(k.sub(1, 3) == 3);
  CHECK(k.neg(0) == 0);
  CHECK(k.mul(3, 4) == 2);
  CHECK(k.reduce(-7) == 3);
  for (Residue a = 1; a < 5; ++a) CHECK(k.mul(a, k.inv(a)) == 1);
  CHECK(k.pow(2, 4) == 1);
  CHECK_THROWS_AS(PrimeField(6), PreconditionError);
  CHECK_THROWS_AS(PrimeField(1), PreconditionError);
  PrimeField big(2147483647);
  CHECK(big.mul(2147483646, 2147483646) == 1);
}

TEST_CASE("rank of small matrices", "[exactlin]") {
  PrimeField k(5);
  CHECK(rank(Matrix::from_rows(k, {{1, 2}, {2, 4}})) == 1);
  CHECK(rank(Matrix::from_rows(k, {{1, 2}, {3, 4}})) == 2);
  // 5 | det so the matrix is singular mod 5 only
  CHECK(rank(Matrix::from_rows(k, {{1, 2}, {3, 11}})) == 1);
  CHECK(rank(Matrix(k, 0, 3)) == 0);
  CHECK(rank(Matrix(k, 3, 0)) == 0);
}

TEST_CASE("rref and rref_serial agree on random matrices", "[exactlin][parallel]") {
  Rng rng(11);
  for (std::uint32_t p : {2u, 5u, 101u}) {
    PrimeField k(p);
    for (int t = 0; t < 30; ++t) {
      std::uniform_int_distribution<std::size_t> d(0, 70);
      Matrix m = random_matrix(k, d(rng), d(rng), rng);
      Rref a = rref(m), b = rref_serial(m);
      CHECK(a.reduced == b.reduced);
      CHECK(a.pivots == b.pivots);
    }
  }
  // large enough to cross the threading threshold
  PrimeField k(7);
  Matrix m = random_matrix(k, 300, 260, rng);
  CHECK(rref(m).reduced == rref_serial(m).reduced);
}

TEST_CASE("rank-nullity and kernel vectors", "[exactlin][property]") {
  Rng rng(3);
  PrimeField k(5);
  for (int t = 0; t < 40; ++t) {
    std::uniform_int_distribution<std::size_t> d(1, 9);
    Matrix m = random_matrix(k, d(rng), d(rng), rng);
    if (t % 3 == 0) m = random_matrix(k, m.rows(), 2, rng) * random_matrix(k, 2, m.cols(), rng);
    Matrix ker = kernel_basis(m);
    CHECK(ker.cols() + rank(m) == m.cols());
    CHECK((m * ker).is_zero());
    CHECK(rank(ker) == ker.cols());
  }
}

TEST_CASE("solve, inverse and image membership", "[exactlin][property]") {
  Rng rng(5);
  PrimeField k(7);
  for (int t = 0; t < 40; ++t) {
    Matrix a = random_matrix(k, 5, 4, rng);
    Matrix x = random_matrix(k, 4, 2, rng);
    Matrix b = a * x;
    auto y = solve(a, b);
    REQUIRE(y.has_value());
    CHECK(a * *y == b);
    CHECK(image_membership(a, b));
    Matrix sq = random_matrix(k, 4, 4, rng);
    auto inv = inverse(sq);
    CHECK(inv.has_value() == (rank(sq) == 4));
    if (inv) CHECK(sq * *inv == Matrix::identity(k, 4));
  }
  // e_3 is not in the span of e_1, e_2
  Matrix span = Matrix::from_rows(k, {{1, 0}, {0, 1}, {0, 0}});
  CHECK_FALSE(image_membership(span, Matrix::from_rows(k, {{0}, {0}, {1}})));
  CHECK_FALSE(solve(span, Matrix::from_rows(k, {{0}, {0}, {1}})).has_value());
}

TEST_CASE("column space complement and cokernel projection", "[exactlin][property]") {
  Rng rng(9);
  PrimeField k(3);
  for (int t = 0; t < 30; ++t) {
    Matrix a = random_matrix(k, 6, 3, rng) * random_matrix(k, 3, 4, rng);
    Matrix cs = column_space(a);
    Matrix comp = complement_columns(cs);
    CHECK(cs.cols() == rank(a));
    CHECK(rank(hstack(cs, comp)) == 6);
    Matrix q = cokernel_projection(a);
    CHECK(q.rows() == 6 - rank(a));
    CHECK((q * a).is_zero());
    CHECK(rank(q) == q.rows());
  }
}

TEST_CASE("minimal polynomial annihilates and divides every annihilator", "[exactlin][property]") {
  Rng rng(21);
  PrimeField k(5);
  for (int t = 0; t < 30; ++t) {
    Matrix m = random_matrix(k, 5, 5, rng);
    if (t % 2) m = direct_sum(m.block(0, 0, 2, 2), Matrix::from_rows(k, {{2, 1, 0}, {0, 2, 0}, {0, 0, 2}}));
    auto mp = minimal_polynomial(m);
    CHECK(mp.back() == 1);
    CHECK(evaluate_polynomial(mp, m).is_zero());
    // no proper monic divisor of smaller degree annihilates: check x^j for j < deg are independent
    std::size_t deg = mp.size() - 1;
    Matrix stack(k, m.rows() * m.cols(), 0);
    Matrix pw = Matrix::identity(k, m.rows());
    for (std::size_t j = 0; j < deg; ++j) {
      stack = hstack(stack, Matrix::column(k, pw.data()));
      pw = pw * m;
    }
    CHECK(rank(stack) == deg);
  }
  Matrix nil = Matrix::from_rows(k, {{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  CHECK(is_nilpotent(nil));
  CHECK(minimal_polynomial(nil) == std::vector<Residue>{0, 0, 0, 1});
  CHECK(power(nil, 3).is_zero());
  CHECK_FALSE(power(nil, 2).is_zero());
}

TEST_CASE("irreducible factors multiply back to the polynomial", "[exactlin][property]") {
  Rng rng(2);
  PrimeField k(5);
  std::uniform_int_distribution<Residue> pick(0, 4);
  for (int t = 0; t < 40; ++t) {
    poly::Poly f(1 + t % 7);
    for (auto& c : f) c = pick(rng);
    f.push_back(1);
    auto fs = poly::irreducible_factors(k, f, rng);
    poly::Poly prod{1};
    // factors are distinct monic irreducibles; recover multiplicities by division
    poly::Poly rest = f;
    for (auto& g : fs) {
      CHECK(g.back() == 1);
      while (true) {
        auto [qt, r] = poly::divmod(k, rest, g);
        poly::normalize(r);
        if (!r.empty()) break;
        rest = qt;
        prod = poly::mul(k, prod, g);
      }
    }
    poly::normalize(rest);
    CHECK(rest == poly::Poly{1});
    CHECK(prod == f);
  }
  // x^2 + 2 is irreducible over GF(5) (-2 = 3 is not a square)
  CHECK(poly::irreducible_factors(k, {2, 0, 1}, rng).size() == 1);
  CHECK(poly::irreducible_factors(k, {1, 0, 1}, rng).size() == 2);
}
