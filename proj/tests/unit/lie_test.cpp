#include <doctest.h>

#include <algorithm>
#include <set>

#include "affinv/lie.hpp"

using namespace affinv;

namespace {

std::set<std::string> labels(const std::vector<LieAlgebraInfo>& v) {
  std::set<std::string> out;
  for (const auto& i : v) out.insert(i.label);
  return out;
}

Weight U(int m, int n) { return Weight::unshifted_weight(m, n); }

}  // namespace

TEST_CASE("catalog lookup") {
  CHECK(catalog_lookup("E6").dim == 78);
  CHECK(catalog_lookup("A5").dim == 35);
  CHECK(catalog_lookup("E7").dim == 133);
  CHECK_THROWS_AS(catalog_lookup("Z9"), std::out_of_range);
}

TEST_CASE("algebras by dimension") {
  CHECK(labels(algebras_with_dim(78)) == std::set<std::string>{"B6", "C6", "E6"});
  CHECK(labels(algebras_with_dim(133)) == std::set<std::string>{"E7"});
  CHECK(labels(algebras_with_dim(35)) == std::set<std::string>{"A5"});
  CHECK(algebras_with_dim(4).empty());
}

TEST_CASE("central charges") {
  CHECK(central_charge(catalog_lookup("A2"), 5) == 5);
  CHECK(central_charge(catalog_lookup("A5"), 1) == 5);
  CHECK(central_charge(catalog_lookup("E6"), 1) == 6);
  CHECK(central_charge(catalog_lookup("E7"), 1) == 7);
  CHECK(central_charge(catalog_lookup("A1"), 1) == 1);
}

TEST_CASE("inner product") {
  CHECK(inner_product(U(1, 0), U(1, 0)) == make_rational(2, 3));
  CHECK(inner_product(U(2, 2), U(2, 2)) == 8);
  CHECK(inner_product(U(1, 1), U(1, 1)) == 2);
  CHECK(inner_product(U(1, 0), U(0, 1)) == make_rational(1, 3));
  CHECK_THROWS(inner_product(U(1, 0), Weight::shifted_weight(1, 1)));
}

TEST_CASE("Weyl group of A2") {
  const auto& w = weyl_group_a2();
  REQUIRE(w.size() == 6);
  CHECK(w[0].sign == 1);
  CHECK(w[0].apply(3, 5) == std::array<int, 2>{3, 5});
  int longest = 0;
  for (const auto& g : w) {
    if (g.apply(1, 0) == std::array<int, 2>{0, -1} && g.apply(0, 1) == std::array<int, 2>{-1, 0}) {
      CHECK(g.sign == -1);
      ++longest;
    }
    for (const auto& h : w) {
      const auto c = g.compose(h);
      CHECK(std::any_of(w.begin(), w.end(), [&](const WeylElement& e) { return e.matrix == c.matrix; }));
      CHECK(c.sign == g.sign * h.sign);
    }
  }
  CHECK(longest == 1);
  int s1_found = 0;
  for (const auto& g : w) s1_found += g.sign == -1 && g.apply(1, 0) == std::array<int, 2>{-1, 1} && g.apply(0, 1) == std::array<int, 2>{0, 1};
  CHECK(s1_found == 1);
}

TEST_CASE("Weyl dimension formula") {
  CHECK(weyl_dim_a2(U(0, 0)) == 1);
  CHECK(weyl_dim_a2(U(1, 0)) == 3);
  CHECK(weyl_dim_a2(U(1, 1)) == 8);
  CHECK(weyl_dim_a2(U(2, 2)) == 27);
  CHECK(weyl_dim_a2(U(1, 4)) == 35);
  CHECK(weyl_dim_a2(U(4, 4)) == 125);
  CHECK_THROWS(weyl_dim_a2(U(-1, 0)));
}

TEST_CASE("root counts") {
  CHECK(enumerate_roots(catalog_lookup("A2")) == 6);
  CHECK(enumerate_roots(catalog_lookup("A5")) == 30);
  CHECK(enumerate_roots(catalog_lookup("E7")) == 126);
  CHECK(enumerate_roots(catalog_lookup("B6")) == 72);
  CHECK(enumerate_roots(catalog_lookup("C6")) == 72);
}

TEST_CASE("catalog: dim = rank + roots for every entry") {
  for (const auto& info : catalog()) {
    CAPTURE(info.label);
    CHECK(info.dim == info.rank + enumerate_roots(info));
  }
}

TEST_CASE("shifting") {
  CHECK(U(0, 0).shift() == Weight::shifted_weight(1, 1));
  CHECK(Weight::shifted_weight(3, 2).unshift() == U(2, 1));
  CHECK(U(2, 3).dominant_at_level(5));
  CHECK_FALSE(U(3, 3).dominant_at_level(5));
  CHECK(Weight::shifted_weight(6, 1).in_alcove(5));
  CHECK_FALSE(Weight::shifted_weight(7, 1).in_alcove(5));
}
