#include <doctest.h>

#include <random>

#include "cthh/error.hpp"
#include "cthh/field.hpp"
#include "cthh/integer.hpp"
#include "cthh/matrix.hpp"

using namespace cthh;

TEST_SUITE("exact-linalg") {

TEST_CASE("prime field arithmetic") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.from_int(-1) == 6);
  CHECK(f.from_rational(Rational(1, 2)) == 4);
  CHECK_THROWS_AS((void)f.inv(0), Error);
  CHECK_THROWS_AS(PrimeField(4), Error);
  CHECK_THROWS_AS(FieldSpec(9), Error);
  CHECK(FieldSpec::prime(5).name() == "GF(5)");
  CHECK(FieldSpec::rationals().name() == "Q");
  CHECK(default_oracle_fields().size() == 5);
}

TEST_CASE("echelonize small cases") {
  {
    auto e = echelonize(Matrix<PrimeField>::identity(PrimeField(5), 3));
    CHECK(e.rank == 3);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1, 2});
  }
  {
    auto e = echelonize(Matrix<RationalField>(RationalField{}, 2, 4));
    CHECK(e.rank == 0);
    CHECK(e.pivots.empty());
  }
  {
    auto e = echelonize(Matrix<RationalField>::from_ints(RationalField{}, {{1, 1}, {1, 1}}));
    CHECK(e.rank == 1);
    CHECK(e.pivots == std::vector<std::size_t>{0});
  }
}

TEST_CASE("kernel basis") {
  CHECK(kernel_basis(Matrix<RationalField>::identity(RationalField{}, 2)).empty());
  {
    auto k = kernel_basis(Matrix<PrimeField>::from_ints(PrimeField(2), {{1, 1}}));
    REQUIRE(k.size() == 1);
    CHECK(k[0] == std::vector<std::uint32_t>{1, 1});
  }
  {
    auto k = kernel_basis(Matrix<RationalField>::from_ints(RationalField{}, {{1, 2}, {2, 4}}));
    REQUIRE(k.size() == 1);
    // proportional to (-2, 1)
    CHECK(k[0][0] == -2 * k[0][1]);
    CHECK(k[0][1] != 0);
  }
}

TEST_CASE_TEMPLATE("rank plus nullity on random matrices", F, PrimeField, RationalField) {
  std::mt19937 rng(12345);
  F field = [] {
    if constexpr (std::is_same_v<F, PrimeField>) return PrimeField(3);
    else return RationalField{};
  }();
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
    for (auto& row : rows)
      for (auto& x : row) x = static_cast<std::int64_t>(rng() % 5) - 2;
    auto m = Matrix<F>::from_ints(field, rows);
    const auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == c);
    for (const auto& v : ker) {
      for (const auto& x : m.apply(v)) CHECK(field.is_zero(x));
    }
  }
}

TEST_CASE("echelon basis span") {
  EchelonBasis<PrimeField> b(PrimeField(5), 3);
  CHECK(b.insert({1, 2, 3}));
  CHECK(b.insert({0, 1, 1}));
  CHECK_FALSE(b.insert({1, 3, 4}));
  CHECK(b.contains({2, 4, 1}));
  CHECK(b.rank() == 2);
  CHECK_FALSE(b.contains({0, 0, 1}));
}

TEST_CASE("integer determinants") {
  CHECK(det_int({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 1);
  CHECK(det_int({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}) == 2);
  CHECK(det_int({{1, 1}, {0, 1}}) == 1);
  CHECK(det_int({{0, 1}, {1, 0}}) == -1);
  CHECK(det_int({{2, 4}, {1, 2}}) == 0);
  CHECK_THROWS_AS((void)det_int({{1, 2, 3}, {4, 5, 6}}), Error);
}

TEST_CASE("pencil determinants") {
  const IntMatrix id{{1, 0}, {0, 1}}, neg{{-1, 0}, {0, -1}};
  CHECK(pencil_det(id, neg) == IntPolynomial::from_descending({1, -2, 1}));
  const IntMatrix c{{1, 1}, {0, 1}};
  const IntMatrix minus_ct{{-1, 0}, {-1, -1}};
  const auto p = pencil_det(c, minus_ct);
  CHECK(p == IntPolynomial::from_descending({1, -1, 1}));
  CHECK(p.to_string() == "x^2 - x + 1");
  CHECK(p.descending_csv() == "1,-1,1");
  CHECK_THROWS_AS((void)pencil_det(id, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), Error);
}

}  // TEST_SUITE
