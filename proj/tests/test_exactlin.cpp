#include <doctest.h>

#include "nilcarnot/errors.hpp"
#include "nilcarnot/subspace.hpp"
#include "support/oracles.hpp"

using namespace nilcarnot;
using testsupport::Rng;

namespace {
Rational q(long n, long d = 1) { return Rational(n, d); }
}

TEST_CASE("rational basics") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational::parse("-7/21") == Rational(-1, 3));
  CHECK(Rational::parse("5").is_integer());
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
  CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
  CHECK(Rational(-7, 2).floor() == -4);
  Rational root;
  CHECK(Rational(9, 4).is_perfect_square(&root));
  CHECK(root == Rational(3, 2));
  CHECK_FALSE(Rational(2).is_perfect_square());
  CHECK(Rational(1, 3).str() == "1/3");
}

TEST_CASE("rref examples") {
  Matrix m{{q(2), q(4)}, {q(1), q(2)}};
  CHECK(rref(m) == Matrix{{q(1), q(2)}, {q(0), q(0)}});
  CHECK(rref(Matrix::identity(3)) == Matrix::identity(3));
  Matrix p{{q(0), q(1)}, {q(1), q(0)}};
  CHECK(rref(p) == Matrix::identity(2));
}

TEST_CASE("rref is idempotent on random matrices") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    std::size_t r = 1 + t % 5, c = 1 + (t * 7) % 6;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.rational();
    Matrix once = rref(m);
    CHECK(rref(once) == once);
  }
}

TEST_CASE("kernel examples") {
  Matrix single{{q(1), q(1)}};
  Matrix k = kernel_basis(single);
  REQUIRE(k.rows() == 1);
  CHECK(k.row(0) == Vector{q(1), q(-1)});

  CHECK(kernel_basis(Matrix::identity(4)).rows() == 0);
  CHECK(kernel_basis(Matrix(2, 3)).rows() == 3);  // zero 2x3 matrix -> full 3-space
}

TEST_CASE("rank + nullity = cols on random matrices") {
  Rng rng(5);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + t % 6, c = 1 + (t * 3) % 7;
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rng.rational();
    CHECK(rank(m) + kernel_basis(m).rows() == c);
  }
}

TEST_CASE("subspace canonical form: row mixes give identical bases") {
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    std::size_t dim = 4;
    Matrix rows(2, dim);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < dim; ++j) rows.at(i, j) = rng.rational();
    Subspace s = Subspace::span(rows);
    // random invertible 2x2 mix of the spanning rows
    Matrix mix(2, 2);
    do {
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) mix.at(i, j) = rng.rational();
    } while (determinant(mix).is_zero());
    Subspace s2 = Subspace::span(mix * rows);
    CHECK(s == s2);
  }
}

TEST_CASE("subspace sum and intersection") {
  Subspace a = Subspace::span({{q(1), q(0), q(0)}, {q(0), q(1), q(0)}}, 3);
  Subspace b = Subspace::span({{q(0), q(1), q(0)}, {q(0), q(0), q(1)}}, 3);
  CHECK(a.sum(b) == Subspace::full(3));
  Subspace meet = a.intersect(b);
  CHECK(meet.dim() == 1);
  CHECK(meet.contains(Vector{q(0), q(1), q(0)}));
}

TEST_CASE("quotient_coords examples") {
  Subspace plane = Subspace::full(2);
  Subspace axis = Subspace::span({{q(0), q(1)}}, 2);
  CHECK(quotient_coords(plane, axis, {q(3), q(7)}) == Vector{q(3)});
  CHECK(quotient_coords(plane, axis, {q(0), q(5)}) == Vector{q(0)});

  Subspace amb = Subspace::span({{q(1), q(0), q(0)}, {q(0), q(1), q(0)}}, 3);
  CHECK(quotient_coords(amb, Subspace::zero(3), {q(2), q(5), q(0)}) == Vector{q(2), q(5)});

  CHECK_THROWS_AS(quotient_coords(amb, Subspace::zero(3), {q(0), q(0), q(1)}), MembershipError);
  CHECK_THROWS_AS(quotient_coords(axis, plane, {q(0), q(1)}), MembershipError);
}

TEST_CASE("determinant and solve") {
  Matrix m{{q(2), q(1)}, {q(1), q(1)}};
  CHECK(determinant(m) == q(1));
  CHECK(solve(m, {q(3), q(2)}) == Vector{q(1), q(1)});
  Matrix sing{{q(1), q(2)}, {q(2), q(4)}};
  CHECK(determinant(sing) == q(0));
  CHECK_THROWS(solve(sing, {q(1), q(0)}));
}
