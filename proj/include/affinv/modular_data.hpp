#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "affinv/bigfloat.hpp"
#include "affinv/cyclotomic.hpp"
#include "affinv/lie.hpp"
#include "affinv/rational.hpp"

namespace affinv {

// Exact modular datum of affine sl3 at level k. Weights are shifted and
// sorted lexicographically, so the vacuum (1,1) is index 0.
struct ModularData {
  int level = 0;
  int shifted_level = 0;  // k + 3
  int conductor = 0;      // 12 (k + 3)
  std::vector<Weight> weights;
  std::vector<CycNum> s;  // row-major
  std::vector<Rational> t_exponents;
  Rational central_charge;

  std::size_t size() const { return weights.size(); }
  const CycNum& S(std::size_t i, std::size_t j) const { return s[i * weights.size() + j]; }
  CycNum& S(std::size_t i, std::size_t j) { return s[i * weights.size() + j]; }

  std::optional<std::size_t> index_of(const Weight& shifted) const;
  std::size_t index(const Weight& shifted) const;  // throws std::out_of_range
};

// Shifted weights of P^k in lexicographic order; throws for k < 1.
std::vector<Weight> dominant_weights(int k);

// h_lambda = <lambda, lambda + 2 rho> / (2 (k + 3)) for unshifted lambda.
Rational conformal_weight(int k, const Weight& lambda);

Weight map_h(int k, const Weight& shifted);
Weight map_sigma(int k, const Weight& shifted);

// Kac-Peterson S-matrix over Q(zeta_{12(k+3)}), row-major in
// dominant_weights(k) order.
std::vector<CycNum> s_matrix(int k);

// h_lambda - c/24 per shifted weight.
std::vector<Rational> t_vector(int k);

Rational sl3_central_charge(int k);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ModularDataReport {
  int level = 0;
  std::vector<CheckResult> checks;
  bool passed() const;
};

// Symmetry, unitarity, S^2 = P_h, (ST)^3 = S^2 (exact) and certified
// positivity of the vacuum row.
ModularDataReport verify_modular_data(const ModularData& md);

// Builds and verifies; throws std::runtime_error if any relation fails.
ModularData build_modular_data(int k);

// Certified enclosures of S_{0,lambda}.
std::vector<ComplexBall> vacuum_row_enclosures(const ModularData& md, int precision_bits);

// t_lambda * N as integers (the T-matrix as powers of zeta_N); empty if
// some exponent is not representable at the datum's conductor.
std::optional<std::vector<int>> t_root_exponents(const ModularData& md);

}  // namespace affinv
