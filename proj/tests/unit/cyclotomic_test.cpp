#include <doctest.h>

#include <mpfr.h>

#include <random>

#include "affinv/cyclotomic.hpp"

using namespace affinv;

namespace {

CycNum z(int n, long e = 1) { return CycNum::root_of_unity(n, e); }

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(12) == 4);
  CHECK(euler_phi(288) == 96);
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  CHECK(cyclotomic_polynomial(5) == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  // Phi_105 is the first with a coefficient of absolute value 2.
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(p105[7] == -2);
}

TEST_CASE("field arithmetic examples") {
  CHECK(z(4) * z(4) == CycNum(-1));
  CHECK(cyc_is_zero(CycNum(1) + z(3) + z(3, 2)));
  CHECK(z(12, 2) + z(12, 10) == CycNum(1));
  CHECK(cyc_mul(z(4), z(4)) == cyc_neg(CycNum(1)));
}

TEST_CASE("conjugation") {
  CHECK(cyc_conj(z(3)).identical(z(3, 2)));
  CHECK(cyc_conj(CycNum(make_rational(5, 7))) == CycNum(make_rational(5, 7)));
  CHECK(cyc_conj(z(12, 3)) == z(12, 9));
  const CycNum a = z(15, 2) + z(15, 7).scaled(make_rational(-3, 4));
  CHECK(cyc_conj(cyc_conj(a)) == a);
  const auto ball = cyc_to_complex(a * a.conj(), 128);
  CHECK(ball.may_be_real());
}

TEST_CASE("zero test reduces modulo the cyclotomic polynomial") {
  CHECK(cyc_is_zero(CycNum(1) + z(2)));
  CHECK(cyc_is_zero(z(5) - z(5)));
  CHECK(cyc_is_zero(CycNum(1) + z(5) + z(5, 2) + z(5, 3) + z(5, 4)));
  CHECK_FALSE(cyc_is_zero(CycNum(1) + z(5) + z(5, 2) + z(5, 3)));
  CHECK_FALSE(cyc_is_zero(z(7)));
}

TEST_CASE("mixed conductors lift to the lcm") {
  const CycNum s = z(4) + z(6);
  CHECK(s.conductor() == 12);
  CHECK(s == z(12, 3) + z(12, 2));
  CHECK(z(3).lift(12).identical(z(12, 4)));
}

TEST_CASE("numeric enclosures") {
  const auto i = cyc_to_complex(z(4), 64);
  CHECK(i.re.to_double() == doctest::Approx(0.0));
  CHECK(i.im.to_double() == doctest::Approx(1.0));
  CHECK(mpfr_cmp_d(i.radius.get(), std::ldexp(1.0, -60)) < 0);

  const auto one = cyc_to_complex(z(12, 2) + z(12, 10), 128);
  CHECK(one.re.to_double() == doctest::Approx(1.0));
  CHECK(one.may_be_real());

  // Independent reference: sqrt(3)/3 straight from MPFR at 256 bits.
  const CycNum v = (z(12) + z(12, 11)).scaled(make_rational(1, 3));
  const auto ball = cyc_to_complex(v, 200);
  mpfr_t ref, lo, hi;
  mpfr_inits2(256, ref, lo, hi, static_cast<mpfr_ptr>(nullptr));
  mpfr_sqrt_ui(ref, 3, MPFR_RNDN);
  mpfr_div_ui(ref, ref, 3, MPFR_RNDN);
  mpfr_set(lo, ball.real_lower().get(), MPFR_RNDN);
  mpfr_set(hi, ball.real_upper().get(), MPFR_RNDN);
  CHECK(mpfr_cmp(lo, ref) <= 0);
  CHECK(mpfr_cmp(ref, hi) <= 0);
  mpfr_sub(hi, hi, lo, MPFR_RNDU);
  CHECK(mpfr_cmp_d(hi, std::ldexp(1.0, -180)) < 0);
  mpfr_clears(ref, lo, hi, static_cast<mpfr_ptr>(nullptr));
  CHECK(ball.certainly_positive_real());
}

TEST_CASE("inverse") {
  const CycNum a = CycNum(2) + z(7) - z(7, 3).scaled(make_rational(1, 2));
  CHECK(a * a.inverse() == CycNum(1));
  CHECK_THROWS_AS(CycNum(0).inverse(), std::domain_error);
  CHECK_THROWS_AS((CycNum(1) + z(2)).inverse(), std::domain_error);
}

TEST_CASE("field laws on random elements") {
  std::mt19937_64 rng(7);
  const int conductors[] = {1, 3, 4, 5, 8, 12, 15, 24, 40};
  auto random_element = [&] {
    const int n = conductors[rng() % std::size(conductors)];
    std::vector<CycNum::Term> terms;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int t = 0; t < count; ++t) {
      terms.push_back({static_cast<int>(rng() % n),
                       make_rational(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4))});
    }
    return CycNum(n, terms);
  };
  for (int trial = 0; trial < 300; ++trial) {
    const CycNum a = random_element(), b = random_element(), c = random_element();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(cyc_is_zero(a + (-a)));
    if (!a.is_zero()) CHECK(a * a.inverse() == CycNum(1));
    CHECK((a * b).conj() == a.conj() * b.conj());
  }
}
