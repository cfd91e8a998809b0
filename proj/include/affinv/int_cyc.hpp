#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "affinv/cyclotomic.hpp"

namespace affinv {

// A square CycNum matrix A written as M / scale with M having integer
// coefficients; the hot loops of verification and the commutant work on M.
class IntCycMatrix {
 public:
  using Entry = std::vector<std::pair<int, std::int64_t>>;  // (exponent, coefficient)

  IntCycMatrix() = default;
  // All entries are lifted to `conductor`.
  IntCycMatrix(std::span<const CycNum> entries, std::size_t dim, int conductor);

  std::size_t dim() const { return dim_; }
  int conductor() const { return conductor_; }
  const BigInt& scale() const { return scale_; }
  const Entry& at(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  std::int64_t max_abs_coeff() const { return max_abs_; }
  std::size_t max_terms() const { return max_terms_; }

  // Power-basis coordinates (length phi(conductor)) of M(i, j).
  std::vector<std::int64_t> reduced(std::size_t i, std::size_t j) const;

 private:
  std::size_t dim_ = 0;
  int conductor_ = 1;
  BigInt scale_ = 1;
  std::int64_t max_abs_ = 0;
  std::size_t max_terms_ = 0;
  std::vector<Entry> entries_;
};

// Unfolded accumulator: acc[e1 + e2 + shift] += factor * c1 * c2 for all
// term pairs, with 0 <= shift < N and acc of size 3N. fold_accumulator
// brings it back to N slots.
inline void accumulate_product(const IntCycMatrix::Entry& a, const IntCycMatrix::Entry& b, std::int64_t factor,
                               int shift, std::span<std::int64_t> acc) {
  for (const auto& [ea, ca] : a) {
    const std::int64_t fa = factor * ca;
    std::int64_t* base = acc.data() + ea + shift;
    for (const auto& [eb, cb] : b) base[eb] += fa * cb;
  }
}

inline void fold_accumulator(std::span<std::int64_t> acc, int conductor) {
  const auto n = static_cast<std::size_t>(conductor);
  for (std::size_t i = n; i < acc.size(); ++i) {
    acc[i % n] += acc[i];
    acc[i] = 0;
  }
}

}  // namespace affinv
