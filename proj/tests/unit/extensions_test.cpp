#include <doctest.h>

#include "affinv/extensions.hpp"

using namespace affinv;

namespace {

Weight S(int m, int n) { return Weight::shifted_weight(m, n); }
Weight U(int m, int n) { return Weight::unshifted_weight(m, n); }

Spectrum spectrum_of(std::initializer_list<std::pair<int, int>> ws) {
  Spectrum s;
  for (const auto& [m, n] : ws) s[U(m, n)] = 1;
  return s;
}

const ModularData& md_at(int k) {
  static std::map<int, ModularData> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, build_modular_data(k)).first;
  return it->second;
}

}  // namespace

TEST_CASE("diagonal filter witnesses") {
  const auto e5c = diagonal_filter(build_named(5, "E5^C"));
  REQUIRE(e5c);
  CHECK(e5c->witness == WeightPair{S(1, 3), S(3, 1)});

  const auto e92 = diagonal_filter(build_named(9, "E9_2"));
  REQUIRE(e92);
  CHECK(e92->witness == WeightPair{S(2, 2), S(4, 4)});
  CHECK(e92->failing_index == S(2, 2));

  const auto d9c = diagonal_filter(build_named(9, "D^C"));
  REQUIRE(d9c);
  CHECK(d9c->witness == WeightPair{S(1, 4), S(4, 1)});

  for (int k = 1; k <= 12; ++k) CHECK_FALSE(diagonal_filter(build_named(k, "A")));
  for (int k = 2; k <= 12; ++k) CHECK(diagonal_filter(build_named(k, "A^C")));
  for (int k : {4, 5, 7, 8}) CHECK(diagonal_filter(build_named(k, "D")));
  for (int k : {3, 6, 9, 12}) CHECK_FALSE(diagonal_filter(build_named(k, "D")));
  CHECK_FALSE(diagonal_filter(build_named(5, "E5")));
  CHECK_FALSE(diagonal_filter(build_named(9, "E9_1")));
  CHECK_FALSE(diagonal_filter(build_named(21, "E21")));
}

TEST_CASE("vacuum spectra") {
  CHECK(vacuum_spectrum(build_named(5, "E5")) == spectrum_of({{0, 0}, {2, 2}}));
  CHECK(vacuum_spectrum(build_named(9, "E9_1")) == spectrum_of({{0, 0}, {0, 9}, {9, 0}, {4, 4}, {4, 1}, {1, 4}}));
  CHECK(vacuum_spectrum(build_named(21, "E21")) ==
        spectrum_of({{0, 0}, {21, 0}, {0, 21}, {1, 10}, {10, 1}, {10, 10}, {4, 4}, {6, 6}, {13, 4}, {9, 6}, {4, 13},
                     {6, 9}}));
  CHECK_THROWS_AS(vacuum_spectrum(build_named(5, "E5^C")), std::invalid_argument);
}

TEST_CASE("integral weight modules") {
  CHECK(integral_weight_modules(5) == std::vector<Weight>{U(0, 0), U(2, 2)});
  CHECK(integral_weight_modules(1) == std::vector<Weight>{U(0, 0)});
  const auto k9 = integral_weight_modules(9);
  for (const auto& w : {U(0, 0), U(1, 4), U(4, 1), U(4, 4), U(9, 0), U(0, 9)}) {
    CHECK(std::find(k9.begin(), k9.end(), w) != k9.end());
  }
}

TEST_CASE("grade-one dimensions") {
  CHECK(grade_one_dimension(vacuum_spectrum(build_named(5, "E5")), 5) == 35);
  CHECK(grade_one_dimension(vacuum_spectrum(build_named(9, "E9_1")), 9) == 78);
  CHECK(grade_one_dimension(vacuum_spectrum(build_named(21, "E21")), 21) == 133);
  CHECK(grade_one_dimension(spectrum_of({{0, 0}}), 4) == 8);
  CHECK_THROWS_AS(grade_one_dimension(spectrum_of({{0, 0}, {1, 0}}), 4), std::invalid_argument);
}

TEST_CASE("Lie algebra identification") {
  const auto e6 = identify_lie_algebra(78, 6);
  REQUIRE(e6.size() == 1);
  CHECK(e6[0].first.label == "E6");
  CHECK(e6[0].second == 1);
  for (const auto& c : lie_algebra_candidates(78, 6)) {
    if (c.info.label == "B6") {
      CHECK(c.level == make_rational(11, 12));
      CHECK_FALSE(c.accepted);
    }
    if (c.info.label == "C6") {
      CHECK(c.level == make_rational(7, 12));
      CHECK_FALSE(c.accepted);
    }
  }
  const auto e7 = identify_lie_algebra(133, 7);
  REQUIRE(e7.size() == 1);
  CHECK(e7[0].first.label == "E7");
  CHECK(e7[0].second == 1);
  const auto a5 = identify_lie_algebra(35, 5);
  REQUIRE(a5.size() == 1);
  CHECK(a5[0].first.label == "A5");
  CHECK(a5[0].second == 1);
  CHECK(identify_lie_algebra(35, 6).empty());
}

TEST_CASE("simple currents") {
  CHECK(simple_current_spectrum(6) == spectrum_of({{0, 0}, {6, 0}, {0, 6}}));
  CHECK(simple_current_spectrum(3) == spectrum_of({{0, 0}, {3, 0}, {0, 3}}));
  CHECK_THROWS_AS(simple_current_spectrum(5), std::domain_error);
  for (int k : {3, 6, 9, 12}) CHECK(equal(simple_current_invariant(k), build_named(k, "D")));
  CHECK(equal(simple_current_invariant(6), conjugate(simple_current_invariant(6))));
  CHECK_THROWS_AS(simple_current_invariant(4), std::domain_error);
}

TEST_CASE("classification reports") {
  SUBCASE("k=5") {
    const auto r = classify(md_at(5), ClassifyMode::named_only);
    CHECK(r.find("A")->status == VerdictStatus::self);
    const auto* e5 = r.find("E5");
    CHECK(e5->status == VerdictStatus::conformal_embedding);
    CHECK(*e5->target == "A5");
    CHECK(*e5->target_level == 1);
    CHECK(*e5->grade1_dim == 35);
    for (const auto* n : {"A^C", "D", "D^C", "E5^C"}) {
      CAPTURE(n);
      CHECK(r.find(n)->status == VerdictStatus::excluded);
      CHECK(r.find(n)->certificate.has_value());
    }
    CHECK(r.count(VerdictStatus::unmatched) == 0);
  }
  SUBCASE("k=9") {
    const auto r = classify(md_at(9), ClassifyMode::named_only);
    CHECK(r.find("A")->status == VerdictStatus::self);
    CHECK(r.find("D")->status == VerdictStatus::simple_current);
    CHECK(r.find("E9_1")->status == VerdictStatus::conformal_embedding);
    CHECK(*r.find("E9_1")->target == "E6");
    for (const auto* n : {"D^C", "E9_2", "E9_2^C", "A^C"}) CHECK(r.find(n)->status == VerdictStatus::excluded);
    CHECK_FALSE(r.complete);
  }
  SUBCASE("k=4") {
    const auto r = classify(md_at(4), ClassifyMode::named_only);
    CHECK(r.find("A")->status == VerdictStatus::self);
    for (const auto* n : {"A^C", "D", "D^C"}) CHECK(r.find(n)->status == VerdictStatus::excluded);
    CHECK(r.verdicts.size() == 4);
  }
  SUBCASE("enumerated and named modes agree at small levels") {
    for (int k = 1; k <= 6; ++k) {
      const auto a = classify(md_at(k), ClassifyMode::named_only);
      const auto b = classify(md_at(k), ClassifyMode::enumerated);
      CHECK(b.complete);
      REQUIRE(a.verdicts.size() == b.verdicts.size());
      for (std::size_t i = 0; i < a.verdicts.size(); ++i) {
        CHECK(a.verdicts[i].name == b.verdicts[i].name);
        CHECK(a.verdicts[i].status == b.verdicts[i].status);
      }
    }
  }
  SUBCASE("realized spectra have integral weights") {
    for (int k : {3, 5, 6, 9}) {
      for (const auto& v : classify(md_at(k), ClassifyMode::named_only).verdicts) {
        if (!v.spectrum) continue;
        for (const auto& [w, mult] : *v.spectrum) CHECK(is_integer(conformal_weight(k, w)));
      }
    }
  }
}

TEST_CASE("embedding checks") {
  const auto ok = embedding_check(md_at(5), "A5");
  CHECK(ok.ok);
  CHECK(*ok.grade1_dim == 35);
  CHECK(ok.sl3_central_charge == ok.target_central_charge);
  const auto bad = embedding_check(md_at(5), "E6");
  CHECK_FALSE(bad.ok);
  CHECK_THROWS_AS(embedding_check(md_at(5), "X1"), std::out_of_range);
}
