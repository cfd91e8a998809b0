#include "affinv/int_cyc.hpp"

#include <stdexcept>

namespace affinv {

IntCycMatrix::IntCycMatrix(std::span<const CycNum> entries, std::size_t dim, int conductor)
    : dim_(dim), conductor_(conductor) {
  if (entries.size() != dim * dim) throw std::invalid_argument("IntCycMatrix: entry count mismatch");
  for (const auto& e : entries) {
    if (conductor % e.conductor() != 0) {
      throw std::invalid_argument("IntCycMatrix: entry conductor does not divide the matrix conductor");
    }
    for (const auto& t : e.terms()) scale_ = lcm(scale_, t.coeff.get_den());
  }
  entries_.reserve(entries.size());
  for (const auto& e : entries) {
    const CycNum lifted = e.lift(conductor);
    Entry out;
    out.reserve(lifted.term_count());
    for (const auto& t : lifted.terms()) {
      const BigInt v = t.coeff.get_num() * (scale_ / t.coeff.get_den());
      if (!v.fits_slong_p()) throw std::overflow_error("IntCycMatrix: coefficient exceeds int64");
      const std::int64_t c = v.get_si();
      out.emplace_back(t.exponent, c);
      max_abs_ = std::max<std::int64_t>(max_abs_, c < 0 ? -c : c);
    }
    max_terms_ = std::max(max_terms_, out.size());
    entries_.push_back(std::move(out));
  }
}

std::vector<std::int64_t> IntCycMatrix::reduced(std::size_t i, std::size_t j) const {
  std::vector<std::int64_t> dense(static_cast<std::size_t>(conductor_), 0);
  for (const auto& [e, c] : at(i, j)) dense[static_cast<std::size_t>(e)] += c;
  reduce_mod_cyclotomic(dense, conductor_);
  dense.resize(static_cast<std::size_t>(euler_phi(conductor_)));
  return dense;
}

}  // namespace affinv
