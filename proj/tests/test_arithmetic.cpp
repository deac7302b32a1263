#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "qwsed/qwsed.hpp"

using namespace qwsed;

TEST_CASE("two_adic valuation") {
  CHECK(two_adic(12) == 2);
  CHECK(two_adic(-2) == 1);
  CHECK(two_adic(7) == 0);
  CHECK(two_adic(64) == 6);
  CHECK_THROWS_AS(two_adic(0), error);
}

TEST_CASE("square-free detection") {
  CHECK(is_square_free(1));
  CHECK(is_square_free(2));
  CHECK(is_square_free(30));
  CHECK_FALSE(is_square_free(4));
  CHECK_FALSE(is_square_free(12));
  CHECK_FALSE(is_square_free(18));
}

TEST_CASE("recognize snaps to integers and ratio-sqrt forms") {
  EigenvalueClass a = recognize(2.00000000003);
  CHECK(a.is_integer());
  CHECK(a.p == 2);

  EigenvalueClass b = recognize(1.7320508075);
  REQUIRE(b.is_ratio_sqrt());
  CHECK(b.p == 1);
  CHECK(b.q == 1);
  CHECK(b.delta == 3);

  EigenvalueClass c = recognize(1.1180339);  // sqrt(5)/2
  REQUIRE(c.is_ratio_sqrt());
  CHECK(c.p == 1);
  CHECK(c.q == 2);
  CHECK(c.delta == 5);

  EigenvalueClass d = recognize(-2.8284271247461903);  // -2 sqrt(2)
  REQUIRE(d.is_ratio_sqrt());
  CHECK(d.p == -2);
  CHECK(d.q == 1);
  CHECK(d.delta == 2);

  CHECK_FALSE(recognize((1.0 + std::sqrt(17.0)) / 2.0).recognized());
  CHECK(recognize(0.0).is_integer());
}

TEST_CASE("recognize round-trips exact forms") {
  for (int k = -100; k <= 100; ++k) {
    EigenvalueClass f = recognize(static_cast<double>(k));
    REQUIRE(f.is_integer());
    CHECK(f.p == k);
  }
  for (long long delta : {2, 3, 5, 6, 7})
    for (long long q = 1; q <= 8; ++q)
      for (long long p = 1; p <= 8; ++p) {
        if (std::gcd(p, q) != 1) continue;
        double value = static_cast<double>(p) / static_cast<double>(q) *
                       std::sqrt(static_cast<double>(delta));
        EigenvalueClass f = recognize(value);
        REQUIRE(f.is_ratio_sqrt());
        CHECK(f.p == p);
        CHECK(f.q == q);
        CHECK(f.delta == delta);
      }
}

TEST_CASE("rational recognition") {
  auto r = recognize_rational(0.75, 64, 1e-9);
  REQUIRE(r.has_value());
  CHECK(r->first == 3);
  CHECK(r->second == 4);
  CHECK_FALSE(recognize_rational(std::sqrt(2.0), 64, 1e-9).has_value());
}

TEST_CASE("integer relations in layered descending-lex order") {
  auto r1 = integer_relation({std::sqrt(2.0), 2.0 * std::sqrt(2.0)}, 4, 1e-9);
  REQUIRE(r1.has_value());
  CHECK(*r1 == std::vector<long long>{2, -1});

  CHECK_FALSE(integer_relation({1.0, std::sqrt(2.0)}, 10, 1e-9).has_value());

  auto r3 = integer_relation({1.0, 2.0, 3.0}, 3, 1e-9);
  REQUIRE(r3.has_value());
  CHECK(*r3 == std::vector<long long>{1, 1, -1});

  CHECK_THROWS_AS(integer_relation({1, 2, 3, 4, 5, 6, 7}, 2, 1e-9), error);
}

TEST_CASE("relation enumeration collects all lattice points up to the bound") {
  auto rels = enumerate_relations({2.0, 6.0}, 8, 1e-9);
  REQUIRE(rels.has_value());
  // generated by (3, -1); multiples up to the bound in both signs
  bool found_primitive = false;
  for (const auto& r : *rels) {
    CHECK(r[0] * 2 + r[1] * 6 == 0);
    if (r == std::vector<long long>{3, -1}) found_primitive = true;
  }
  CHECK(found_primitive);
  CHECK(rels->size() == 4);  // +-(3,-1), +-(6,-2)
}

TEST_CASE("relation bound budget shrinks with dimension") {
  CHECK(relation_bound_for(2, 32) == 32);
  CHECK(relation_bound_for(4, 32) == 22);
  CHECK(relation_bound_for(6, 32) == 8);
  CHECK(relation_bound_for(6, 4) == 4);
}
