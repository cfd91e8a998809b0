#pragma once

#include <mpfr.h>

#include <string>

#include "affinv/rational.hpp"

namespace affinv {

// Owning handle for an mpfr_t.
class BigFloat {
 public:
  explicit BigFloat(mpfr_prec_t precision = 128);
  BigFloat(const BigFloat& other);
  BigFloat(BigFloat&& other) noexcept;
  BigFloat& operator=(const BigFloat& other);
  BigFloat& operator=(BigFloat&& other) noexcept;
  ~BigFloat();

  static BigFloat from_rational(const Rational& value, mpfr_prec_t precision, mpfr_rnd_t rnd);
  static BigFloat from_double(double value, mpfr_prec_t precision);

  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  double to_double(mpfr_rnd_t rnd = MPFR_RNDN) const { return mpfr_get_d(value_, rnd); }
  std::string to_string(int digits = 20) const;

  int sign() const { return mpfr_sgn(value_); }

 private:
  mpfr_t value_;
  bool live_ = false;
};

// Midpoint-radius enclosure of a complex number: the true value z satisfies
// |Re z - re| <= radius and |Im z - im| <= radius.
struct ComplexBall {
  BigFloat re;
  BigFloat im;
  BigFloat radius;

  bool contains_zero() const;
  // Re z > 0 is certified (lower endpoint strictly positive).
  bool certainly_positive_real() const;
  // Imaginary interval contains zero.
  bool may_be_real() const;
  BigFloat real_lower() const;
  BigFloat real_upper() const;
};

}  // namespace affinv
