#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "affinv/rational.hpp"

namespace affinv {

// An sl3 weight m*L1 + n*L2. Unshifted weights label P^k_+; shifted ones
// carry the +rho offset and label P^k.
struct Weight {
  int m = 0;
  int n = 0;
  bool shifted = false;

  static Weight unshifted_weight(int m, int n) { return {m, n, false}; }
  static Weight shifted_weight(int m, int n) { return {m, n, true}; }

  Weight shift() const;
  Weight unshift() const;
  // (n, m): the conjugate representation.
  Weight reversed() const { return {n, m, shifted}; }

  bool dominant_at_level(int k) const;  // unshifted, in P^k_+
  bool in_alcove(int k) const;          // shifted, in P^k

  friend auto operator<=>(const Weight&, const Weight&) = default;
  friend bool operator==(const Weight&, const Weight&) = default;
};

std::string to_string(const Weight& w);

// Normalized form with <theta, theta> = 2 on fundamental-weight coordinates.
Rational inner_product(const Weight& a, const Weight& b);

struct WeylElement {
  int sign;  // det
  // Action on fundamental-weight coordinates: (a, b) -> (m00 a + m01 b, m10 a + m11 b).
  std::array<int, 4> matrix;

  std::array<int, 2> apply(int a, int b) const {
    return {matrix[0] * a + matrix[1] * b, matrix[2] * a + matrix[3] * b};
  }
  WeylElement compose(const WeylElement& rhs) const;  // this * rhs
};

// Six elements, identity first, generated by s1(a,b) = (-a, a+b) and
// s2(a,b) = (a+b, -b).
const std::vector<WeylElement>& weyl_group_a2();

// Dimension of the irreducible sl3 module with highest weight lambda.
std::int64_t weyl_dim_a2(const Weight& lambda);

struct LieAlgebraInfo {
  std::string label;
  int rank = 0;
  int dim = 0;
  int dual_coxeter = 0;
  // Cartan matrix a_ij = 2 <alpha_i, alpha_j> / <alpha_j, alpha_j>, row-major.
  std::vector<int> cartan;
  // <alpha_j, alpha_j> with long roots normalized to 2.
  std::vector<int> root_norms;

  // Integer matrix 2 <alpha_i, alpha_j>.
  std::vector<int> doubled_gram() const;
};

const std::vector<LieAlgebraInfo>& catalog();
const LieAlgebraInfo& catalog_lookup(std::string_view label);  // throws std::out_of_range
std::vector<LieAlgebraInfo> algebras_with_dim(int dim);

Rational central_charge(const LieAlgebraInfo& info, int level);

// Number of roots, found by a bounded search over the root lattice.
std::int64_t enumerate_roots(const LieAlgebraInfo& info);

}  // namespace affinv
