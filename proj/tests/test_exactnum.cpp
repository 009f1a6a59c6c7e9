#include <doctest.h>

#include <random>

#include "generators.hpp"
#include "grado/errors.hpp"
#include "grado/exactnum.hpp"
#include "support.hpp"

using namespace grado;
using support::mat;
using support::vec;

TEST_CASE("prime field arithmetic") {
  const Field f = Field::prime(5);
  CHECK(f.from_int(7) == f.from_int(2));
  CHECK(f.from_int(-1) == f.from_int(4));
  CHECK(f.from_int(3).inverse() == f.from_int(2));
  CHECK((f.from_int(2) / f.from_int(3)) == f.from_int(4));
  CHECK(f.from_int(2).pow(4).is_one());
  CHECK_THROWS_AS(f.zero().inverse(), Error);
  CHECK_THROWS(Field::prime(4));
}

TEST_CASE("rational arithmetic is exact") {
  const Field q = Field::rationals();
  const Scalar a = q.from_rational(mpq_class(1, 3));
  const Scalar b = q.from_rational(mpq_class(1, 6));
  CHECK((a + b) == q.from_rational(mpq_class(1, 2)));
  CHECK((a * b).to_string() == "1/18");
  CHECK(!q.is_finite());
}

TEST_CASE("solve_linear examples") {
  SUBCASE("invertible 2x2 over GF(2)") {
    const Field f = Field::prime(2);
    auto s = solve_linear(mat(f, {{1, 1}, {0, 1}}), vec(f, {0, 1}));
    REQUIRE(s.consistent);
    CHECK(*s.particular == vec(f, {1, 1}));
    CHECK(s.kernel.empty());
  }
  SUBCASE("zero system") {
    const Field f = Field::prime(3);
    auto s = solve_linear(Matrix(f, 2, 2), vec(f, {0, 0}));
    REQUIRE(s.consistent);
    CHECK(is_zero(*s.particular));
    CHECK(s.kernel.size() == 2);
  }
  SUBCASE("over Q") {
    const Field q = Field::rationals();
    auto s = solve_linear(mat(q, {{2}}), vec(q, {3}));
    REQUIRE(s.consistent);
    CHECK((*s.particular)[0] == q.from_rational(mpq_class(3, 2)));
  }
  SUBCASE("inconsistent") {
    const Field f = Field::prime(3);
    CHECK(!solve_linear(mat(f, {{1, 1}, {1, 1}}), vec(f, {0, 1})).consistent);
  }
  SUBCASE("shape mismatch") {
    const Field f = Field::prime(3);
    CHECK_THROWS_AS(solve_linear(mat(f, {{1, 1}}), vec(f, {0, 1})), DimensionMismatch);
  }
}

TEST_CASE("nullspace examples") {
  const Field f = Field::prime(2);
  CHECK(nullspace(Matrix::identity(f, 4)).empty());
  CHECK(nullspace(Matrix(f, 3, 3)).size() == 3);
  auto k = nullspace(mat(f, {{1, 1}}));
  REQUIRE(k.size() == 1);
  CHECK(k[0] == vec(f, {1, 1}));
}

TEST_CASE("invertible examples") {
  const Field q = Field::rationals();
  CHECK(invertible(Matrix::identity(q, 3)));
  CHECK(!invertible(Matrix(q, 2, 2)));
  CHECK(!invertible(mat(q, {{1, 2}, {2, 4}})));
  CHECK_THROWS_AS(invertible(Matrix(q, 2, 3)), DimensionMismatch);
}

TEST_CASE("property: rank plus nullity, solutions, inverses") {
  std::mt19937_64 rng(2024);
  for (std::uint64_t p : {2, 3, 5, 7}) {
    const Field f = Field::prime(p);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
      Matrix a = gen::random_matrix(rng, f, r, c);
      auto ker = nullspace(a);
      CHECK(rank(a) + ker.size() == c);
      for (const auto& v : ker) CHECK(is_zero(a * v));
      // b in the column space: the solver must find it.
      Vec x = gen::random_matrix(rng, f, c, 1).col(0);
      Vec b = a * x;
      auto s = solve_linear(a, b);
      REQUIRE(s.consistent);
      CHECK(a * *s.particular == b);
      CHECK(s.kernel.size() == ker.size());
      // Incremental reduction agrees with the batch one.
      RowReducer rr(f, c);
      for (const auto& row : a.row_list()) rr.add(row);
      CHECK(rr.rank() == rank(a));
      CHECK(rr.basis() == Subspace(f, c, a.row_list()).basis());
      if (r == c) {
        auto inv = inverse(a);
        CHECK(inv.has_value() == invertible(a));
        if (inv) CHECK(a * *inv == Matrix::identity(f, r));
      }
    }
  }
}

TEST_CASE("subspace operations") {
  const Field f = Field::prime(3);
  Subspace x(f, 3, {vec(f, {1, 0, 0}), vec(f, {0, 1, 0})});
  Subspace y(f, 3, {vec(f, {0, 1, 0}), vec(f, {0, 0, 1})});
  CHECK(x.intersect(y).dim() == 1);
  CHECK(x.sum(y) == Subspace::whole(f, 3));
  CHECK(x.contains(vec(f, {2, 1, 0})));
  CHECK(!x.contains(vec(f, {0, 0, 1})));
  auto c = x.coordinates(vec(f, {2, 1, 0}));
  REQUIRE(c);
  CHECK(*c == vec(f, {2, 1}));
}
