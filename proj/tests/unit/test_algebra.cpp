#include <doctest.h>

#include "cthh/algebra.hpp"
#include "cthh/error.hpp"
#include "cthh/relations.hpp"
#include "helpers.hpp"

using namespace cthh;
using namespace cthh::test;

TEST_SUITE("algebra-model") {

TEST_CASE("hereditary linear A3") {
  const auto a = cluster_tilted_algebra(linear(3));
  CHECK(a.dimension() == 6);
  CHECK(a.degree_dims() == std::vector<std::size_t>{3, 2, 1});
  const auto c = cartan(a);
  CHECK(c.matrix == IntMatrix{{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
  CHECK(c.det == 1);
}

TEST_CASE("oriented 3-cycle") {
  const auto a = cluster_tilted_algebra(oriented_cycle(3));
  CHECK(a.dimension() == 6);
  CHECK(a.degree_dims() == std::vector<std::size_t>{3, 3});  // nothing in degree 2
  CHECK(a.degree_dim(2) == 0);
  const auto c = cartan(a);
  CHECK(c.matrix == IntMatrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(c.det == 2);
}

TEST_CASE("two-triangle D4 quotient") {
  const auto q = two_triangles();
  for (const auto& field : {FieldSpec::rationals(), FieldSpec::prime(2), FieldSpec::prime(3)}) {
    const auto a = cluster_tilted_algebra(q, field);
    CHECK(a.dimension() == 10);
    CHECK(a.degree_dims() == std::vector<std::size_t>{4, 5, 1});
    CHECK(a.max_path_length() == 2);
    CHECK(is_associative(a));
  }
  const auto a = cluster_tilted_algebra(q);
  // bc and de both survive in the normal-form product table with bc = -de.
  const auto b = a.index_of(Path::from_arrows(q, {static_cast<std::size_t>(q.arrow_index(2, 3))}));
  const auto c = a.index_of(Path::from_arrows(q, {static_cast<std::size_t>(q.arrow_index(3, 1))}));
  const auto d = a.index_of(Path::from_arrows(q, {static_cast<std::size_t>(q.arrow_index(2, 4))}));
  const auto e = a.index_of(Path::from_arrows(q, {static_cast<std::size_t>(q.arrow_index(4, 1))}));
  REQUIRE((b && c && d && e));
  const auto& bc = a.product(*b, *c);
  const auto& de = a.product(*d, *e);
  REQUIRE(bc.size() == 1);
  REQUIRE(de.size() == 1);
  CHECK(bc[0].index == de[0].index);
  CHECK(bc[0].coefficient == -de[0].coefficient);
}

TEST_CASE("truncated cycles") {
  const auto c4 = cartan(cluster_tilted_algebra(oriented_cycle(4)));
  CHECK(c4.matrix == IntMatrix{{1, 1, 1, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}});
  CHECK(c4.det == 3);
  const auto a5 = cluster_tilted_algebra(oriented_cycle(5));
  CHECK(a5.degree_dims() == std::vector<std::size_t>{5, 5, 5, 5});
  CHECK(cartan(a5).det == 4);
}

TEST_CASE("path composition follows arrows") {
  const auto q = linear(3);
  const auto a = cluster_tilted_algebra(q);
  const auto x = *a.index_of(Path::from_arrows(q, {0}));
  const auto y = *a.index_of(Path::from_arrows(q, {1}));
  const auto& xy = a.product(x, y);
  REQUIRE(xy.size() == 1);
  CHECK(a.basis_path(xy[0].index).arrows == std::vector<std::size_t>{0, 1});
  CHECK(a.product(y, x).empty());
  CHECK(a.product(a.idempotent(1), x).size() == 1);
  CHECK(a.product(x, a.idempotent(1)).empty());
}

TEST_CASE("associated polynomial of hereditary A2") {
  const auto c = cartan(cluster_tilted_algebra(linear(2)));
  CHECK(c.assoc_poly.to_string() == "x^2 - x + 1");
  CHECK(cartan_of_matrix({{1, 1}, {0, 1}}).assoc_poly == c.assoc_poly);
}

TEST_CASE("errors") {
  // Without relations the oriented cycle algebra is infinite dimensional.
  CHECK_THROWS_WITH_AS((void)build_algebra(oriented_cycle(3), RelationSet{}), doctest::Contains("NotFiniteDimensional"),
                       Error);
  RelationSet bogus;
  bogus.relations.push_back(Relation{{RelationTerm{1, Path{{7}, 1, 2}}}, 0});
  CHECK_THROWS_WITH_AS((void)build_algebra(linear(3), bogus), doctest::Contains("InvalidRelations"), Error);
}

TEST_CASE("every built algebra is associative and its Cartan matrix is field independent") {
  for (const char* t : {"A5", "D5", "E6"}) {
    for (const auto& m : enumerate_class(standard_seed(parse_dynkin(t)))) {
      const auto rel = generate_relations(m.quiver);
      const auto base = cartan(build_algebra(m.quiver, rel));
      for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const auto a = build_algebra(m.quiver, rel, FieldSpec::prime(p));
        REQUIRE(is_associative(a));
        REQUIRE(cartan(a).matrix == base.matrix);
      }
    }
  }
}

}  // TEST_SUITE
