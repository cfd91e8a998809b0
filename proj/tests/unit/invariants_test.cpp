#include <doctest.h>

#include "affinv/invariants.hpp"
#include "affinv/modular_data.hpp"

using namespace affinv;

namespace {

Weight S(int m, int n) { return Weight::shifted_weight(m, n); }

const ModularData& md_at(int k) {
  static std::map<int, ModularData> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, build_modular_data(k)).first;
  return it->second;
}

}  // namespace

TEST_CASE("A_k is the identity") {
  for (int k : {1, 4, 7}) {
    const auto a = build_named(k, "A");
    CHECK(a.nonzero_count() == dominant_weights(k).size());
    for (const auto& w : dominant_weights(k)) CHECK(a.at(w, w) == 1);
  }
}

TEST_CASE("named entries") {
  CHECK(build_named(9, "E9_1").at(S(3, 3), S(3, 6)) == 2);
  const auto e92 = build_named(9, "E9_2");
  CHECK(e92.at(S(2, 2), S(4, 4)) == 1);
  CHECK(e92.at(S(2, 2), S(2, 2)) == 0);
  const auto d6 = build_named(6, "D");
  CHECK(d6.at(S(1, 1), S(1, 1)) == 1);
  CHECK(d6.at(S(1, 1), S(7, 1)) == 1);
  CHECK(d6.at(S(1, 1), S(1, 7)) == 1);
  for (const auto& [a, b, v] : support(d6)) CHECK((a.m - a.n) % 3 == 0);
  const auto d3 = build_named(3, "D");
  CHECK(d3.at(S(2, 2), S(2, 2)) == 3);
}

TEST_CASE("families defined per level") {
  CHECK(named_families(1) == std::vector<std::string>{"A"});
  CHECK(named_families(3) == std::vector<std::string>{"A", "D"});
  CHECK(named_families(5) == std::vector<std::string>{"A", "D", "E5"});
  CHECK(named_families(9) == std::vector<std::string>{"A", "D", "E9_1", "E9_2"});
  CHECK(named_families(21) == std::vector<std::string>{"A", "D", "E21"});
  CHECK_THROWS_AS(build_named(4, "E5"), std::invalid_argument);
  CHECK_THROWS_AS(build_named(2, "D"), std::invalid_argument);
  CHECK_THROWS_AS(build_named(5, "Q"), std::invalid_argument);
}

TEST_CASE("conjugation") {
  const auto ac = conjugate(build_named(4, "A"));
  CHECK(ac.name() == "A^C");
  for (const auto& w : dominant_weights(4)) CHECK(ac.at(w, map_h(4, w)) == 1);
  CHECK(ac.nonzero_count() == dominant_weights(4).size());
  CHECK(equal(conjugate(build_named(3, "D")), build_named(3, "D")));
  CHECK(equal(conjugate(build_named(6, "D")), build_named(6, "D")));
  CHECK(equal(conjugate(build_named(9, "E9_1")), build_named(9, "E9_1")));
  CHECK(equal(conjugate(build_named(21, "E21")), build_named(21, "E21")));
  CHECK_FALSE(equal(conjugate(build_named(9, "D")), build_named(9, "D")));
  CHECK(equal(build_named(5, "E5^C"), conjugate(build_named(5, "E5"))));
  CHECK(conjugate_name("E5^C") == "E5");
}

TEST_CASE("equal and support") {
  CHECK_FALSE(equal(build_named(5, "A"), build_named(5, "E5")));
  CHECK_THROWS(equal(build_named(5, "A"), build_named(6, "A")));
  const auto sup = support(build_named(5, "E5"));
  CHECK(std::is_sorted(sup.begin(), sup.end()));
}

TEST_CASE("entry validation") {
  ModularInvariant x(2);
  CHECK_THROWS_AS(x.set(S(1, 1), S(1, 1), -1), std::invalid_argument);
  CHECK_THROWS_AS(x.set(S(1, 1), S(4, 1), 1), std::invalid_argument);
  x.set(S(1, 1), S(1, 1), 2);
  x.set(S(1, 1), S(1, 1), 0);
  CHECK(x.nonzero_count() == 0);
}

TEST_CASE("every named invariant and conjugate is modular, levels 1..12") {
  for (int k = 1; k <= 12; ++k) {
    for (const auto& fam : named_families(k)) {
      for (const auto& name : {fam, fam + "^C"}) {
        CAPTURE(k);
        CAPTURE(name);
        const auto x = build_named(k, name);
        const auto r = is_modular_invariant(x, md_at(k));
        CHECK(r.passed());
        for (const auto& [a, b, v] : support(x)) {
          const Rational d = md_at(k).t_exponents[md_at(k).index(a)] - md_at(k).t_exponents[md_at(k).index(b)];
          CHECK(is_integer(d));
        }
      }
    }
  }
}

TEST_CASE("E9_2 is symmetric and its transpose is modular") {
  const auto x = build_named(9, "E9_2");
  CHECK(equal(x, x.transpose()));
  CHECK(is_modular_invariant(x.transpose(), md_at(9)).passed());
}

TEST_CASE("a moved E5 entry fails with a witness") {
  auto x = build_named(5, "E5");
  // Vacuum-row entry moved off the {(1,1),(3,3)} block.
  x.set(S(1, 1), S(3, 3), 0);
  x.set(S(1, 1), S(6, 1), 1);
  const auto r = is_modular_invariant(x, md_at(5));
  CHECK_FALSE(r.passed());
  CHECK(r.p1);
  CHECK(r.p2);
  REQUIRE(r.failing_position.has_value());

  auto y = build_named(5, "E5");
  y.set(S(1, 1), S(3, 3), 0);
  y.set(S(1, 1), S(1, 2), 1);
  const auto ry = is_modular_invariant(y, md_at(5));
  CHECK_FALSE(ry.commutes_with_t);
  REQUIRE(ry.failing_position.has_value());
  CHECK(*ry.failing_position == WeightPair{S(1, 1), S(1, 2)});
}

TEST_CASE("P1 failure and level mismatch") {
  auto x = build_named(4, "A");
  x.set(S(1, 1), S(1, 1), 2);
  const auto r = is_modular_invariant(x, md_at(4));
  CHECK_FALSE(r.p1);
  CHECK_THROWS_AS(is_modular_invariant(build_named(3, "A"), md_at(4)), std::invalid_argument);
}
