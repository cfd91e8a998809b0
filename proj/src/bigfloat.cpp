#include "affinv/bigfloat.hpp"

#include <utility>
#include <vector>

namespace affinv {

BigFloat::BigFloat(mpfr_prec_t precision) {
  mpfr_init2(value_, precision);
  mpfr_set_zero(value_, 1);
  live_ = true;
}

BigFloat::BigFloat(const BigFloat& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
  live_ = true;
}

BigFloat::BigFloat(BigFloat&& other) noexcept {
  // mpfr_t is an array type; swapping the structs moves the limb pointer.
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
  live_ = true;
}

BigFloat& BigFloat::operator=(const BigFloat& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& other) noexcept {
  if (this != &other) mpfr_swap(value_, other.value_);
  return *this;
}

BigFloat::~BigFloat() {
  if (live_) mpfr_clear(value_);
}

BigFloat BigFloat::from_rational(const Rational& value, mpfr_prec_t precision, mpfr_rnd_t rnd) {
  BigFloat out(precision);
  mpfr_set_q(out.value_, value.get_mpq_t(), rnd);
  return out;
}

BigFloat BigFloat::from_double(double value, mpfr_prec_t precision) {
  BigFloat out(precision);
  mpfr_set_d(out.value_, value, MPFR_RNDN);
  return out;
}

std::string BigFloat::to_string(int digits) const {
  std::vector<char> buf(static_cast<size_t>(digits) + 64);
  mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, value_);
  return std::string(buf.data());
}

bool ComplexBall::contains_zero() const {
  return mpfr_cmpabs(re.get(), radius.get()) <= 0 && mpfr_cmpabs(im.get(), radius.get()) <= 0;
}

bool ComplexBall::may_be_real() const { return mpfr_cmpabs(im.get(), radius.get()) <= 0; }

BigFloat ComplexBall::real_lower() const {
  BigFloat out(re.precision());
  mpfr_sub(out.get(), re.get(), radius.get(), MPFR_RNDD);
  return out;
}

BigFloat ComplexBall::real_upper() const {
  BigFloat out(re.precision());
  mpfr_add(out.get(), re.get(), radius.get(), MPFR_RNDU);
  return out;
}

bool ComplexBall::certainly_positive_real() const { return real_lower().sign() > 0; }

}  // namespace affinv
