#include <doctest.h>

#include <algorithm>
#include <set>

#include "affinv/modular_data.hpp"

using namespace affinv;

namespace {

Weight S(int m, int n) { return Weight::shifted_weight(m, n); }
Weight U(int m, int n) { return Weight::unshifted_weight(m, n); }

bool check_passed(const ModularDataReport& r, const std::string& name) {
  for (const auto& c : r.checks) {
    if (c.name == name) return c.passed;
  }
  FAIL("missing check " << name);
  return false;
}

}  // namespace

TEST_CASE("dominant weights") {
  const auto w1 = dominant_weights(1);
  CHECK(w1 == std::vector<Weight>{S(1, 1), S(1, 2), S(2, 1)});
  CHECK(dominant_weights(5).size() == 21);
  const auto w21 = dominant_weights(21);
  CHECK(w21.size() == 253);
  CHECK(std::find(w21.begin(), w21.end(), S(22, 1)) != w21.end());
  CHECK(std::is_sorted(w21.begin(), w21.end()));
  CHECK_THROWS(dominant_weights(0));
}

TEST_CASE("conformal weights") {
  CHECK(conformal_weight(5, U(2, 2)) == 1);
  CHECK(conformal_weight(9, U(1, 4)) == 1);
  for (int k = 1; k <= 12; ++k) {
    CHECK(conformal_weight(k, U(0, 0)) == 0);
    CHECK(conformal_weight(k, U(k, 0)) == make_rational(k, 3));
    CHECK(conformal_weight(k, U(0, k)) == make_rational(k, 3));
  }
  CHECK_THROWS_AS(conformal_weight(3, U(2, 2)), std::out_of_range);
}

TEST_CASE("h and sigma") {
  CHECK(map_sigma(5, S(1, 1)) == S(6, 1));
  CHECK(map_sigma(9, map_sigma(9, S(3, 3))) == S(3, 6));
  CHECK(map_h(4, S(2, 3)) == S(3, 2));
  CHECK_THROWS_AS(map_h(1, S(3, 3)), std::out_of_range);
  for (int k = 1; k <= 21; ++k) {
    std::set<Weight> image;
    for (const auto& w : dominant_weights(k)) {
      CHECK(map_h(k, map_h(k, w)) == w);
      CHECK(map_sigma(k, map_sigma(k, map_sigma(k, w))) == w);
      image.insert(map_sigma(k, w));
    }
    CHECK(image.size() == dominant_weights(k).size());
  }
}

TEST_CASE("t exponents") {
  const auto t1 = t_vector(1);
  CHECK(t1[0] == make_rational(-1, 12));
  const auto md5 = build_modular_data(5);
  CHECK(md5.t_exponents[md5.index(S(3, 3))] == make_rational(19, 24));
  CHECK(sl3_central_charge(5) == 5);
  CHECK(sl3_central_charge(21) == 7);
}

TEST_CASE("level 1 S-matrix has all entries of modulus 1/sqrt(3)") {
  const auto md = build_modular_data(1);
  REQUIRE(md.size() == 3);
  for (std::size_t a = 0; a < 3; ++a) {
    for (std::size_t b = 0; b < 3; ++b) {
      // |S|^2 = S * conj(S) is exactly 1/3.
      CHECK(md.S(a, b) * md.S(a, b).conj() == CycNum(make_rational(1, 3)));
      const auto ball = md.S(a, b).to_complex(128);
      const double re = ball.re.to_double(), im = ball.im.to_double();
      CHECK(re * re + im * im == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("vacuum entry is positive") {
  for (int k = 1; k <= 9; ++k) {
    const auto md = build_modular_data(k);
    const auto row = vacuum_row_enclosures(md, 128);
    for (const auto& b : row) CHECK(b.certainly_positive_real());
  }
}

TEST_CASE("S^2 at level 2 is the conjugation permutation") {
  const auto md = build_modular_data(2);
  const std::size_t n = md.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      CycNum sum;
      for (std::size_t c = 0; c < n; ++c) sum += md.S(a, c) * md.S(c, b);
      const bool expect = map_h(2, md.weights[a]) == md.weights[b];
      CHECK(sum == CycNum(expect ? 1 : 0));
    }
  }
  CHECK(map_h(2, S(2, 1)) == S(1, 2));
  CHECK(map_h(2, S(3, 1)) == S(1, 3));
}

TEST_CASE("verification passes at levels 1..8") {
  for (int k = 1; k <= 8; ++k) {
    CAPTURE(k);
    const auto report = verify_modular_data(build_modular_data(k));
    CHECK(report.passed());
    CHECK(report.checks.size() == 5);
  }
}

TEST_CASE("mutations are caught") {
  const auto md = build_modular_data(3);
  SUBCASE("negated entry breaks unitarity") {
    auto bad = md;
    bad.S(1, 2) = -bad.S(1, 2);
    bad.S(2, 1) = -bad.S(2, 1);
    const auto r = verify_modular_data(bad);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(check_passed(r, "unitary"));
  }
  SUBCASE("shifted t exponent breaks (ST)^3 = S^2") {
    auto bad = md;
    bad.t_exponents[2] += make_rational(1, 2);
    const auto r = verify_modular_data(bad);
    CHECK_FALSE(check_passed(r, "st_cubed_equals_s_squared"));
    CHECK(check_passed(r, "unitary"));
    CHECK(check_passed(r, "symmetric"));
  }
}

TEST_CASE("t_root_exponents") {
  const auto md = build_modular_data(2);
  const auto e = t_root_exponents(md);
  REQUIRE(e.has_value());
  for (std::size_t i = 0; i < md.size(); ++i) {
    CHECK(is_integer(make_rational((*e)[i], md.conductor) - md.t_exponents[i]));
  }
}
