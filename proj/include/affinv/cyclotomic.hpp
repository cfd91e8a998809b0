#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "affinv/bigfloat.hpp"
#include "affinv/rational.hpp"

namespace affinv {

int euler_phi(int n);

// Coefficients of the n-th cyclotomic polynomial, constant term first.
// Results are memoized; safe to call concurrently.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

// Reduces a dense coefficient vector (index = exponent, size >= n) modulo
// Phi_n in place. Afterwards only indices [0, phi(n)) may be nonzero.
void reduce_mod_cyclotomic(std::span<Rational> coeffs, int n);
// Same over the integers; throws std::overflow_error if any intermediate
// value leaves int64.
void reduce_mod_cyclotomic(std::span<std::int64_t> coeffs, int n);

// An element sum_e c_e zeta_N^e of Q(zeta_N), stored on exponents 0..N-1.
// The representation is not canonical; value comparisons reduce modulo
// Phi_N. Mixed-conductor arithmetic lifts both operands to lcm(M, N).
class CycNum {
 public:
  struct Term {
    int exponent;
    Rational coeff;
  };

  CycNum() = default;
  CycNum(const Rational& value, int conductor = 1);  // NOLINT(google-explicit-constructor)
  CycNum(int conductor, std::vector<Term> terms);

  static CycNum root_of_unity(int conductor, long exponent = 1);

  int conductor() const { return conductor_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  // Re-expresses the value over a multiple of the current conductor.
  CycNum lift(int conductor) const;

  CycNum conj() const;
  CycNum inverse() const;  // throws std::domain_error on zero
  CycNum scaled(const Rational& factor) const;

  bool is_zero() const;
  // Coordinates in the power basis 1, z, ..., z^(phi(N)-1) of Q[z]/Phi_N.
  std::vector<Rational> reduced() const;

  // Same exponents and coefficients; stronger than value equality.
  bool identical(const CycNum& other) const;

  ComplexBall to_complex(int precision_bits) const;

  std::string to_string() const;

  CycNum& operator+=(const CycNum& rhs);
  CycNum& operator-=(const CycNum& rhs);
  CycNum& operator*=(const CycNum& rhs);

  friend CycNum operator+(CycNum lhs, const CycNum& rhs) { return lhs += rhs; }
  friend CycNum operator-(CycNum lhs, const CycNum& rhs) { return lhs -= rhs; }
  friend CycNum operator*(const CycNum& lhs, const CycNum& rhs);
  friend CycNum operator-(const CycNum& value);
  friend bool operator==(const CycNum& lhs, const CycNum& rhs) { return (lhs - rhs).is_zero(); }

 private:
  void normalize();

  int conductor_ = 1;
  std::vector<Term> terms_;  // sorted by exponent, coefficients nonzero
};

CycNum cyc_add(const CycNum& a, const CycNum& b);
CycNum cyc_mul(const CycNum& a, const CycNum& b);
CycNum cyc_neg(const CycNum& a);
CycNum cyc_conj(const CycNum& a);
bool cyc_is_zero(const CycNum& a);
ComplexBall cyc_to_complex(const CycNum& a, int precision_bits);

}  // namespace affinv
