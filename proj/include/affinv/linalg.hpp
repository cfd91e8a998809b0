#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "affinv/rational.hpp"

namespace affinv {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Rational> apply(const std::vector<Rational>& x) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

using RationalVector = std::vector<Rational>;

struct KernelResult {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
  std::vector<std::size_t> free_columns;
  // One vector per free column f: x_f = 1, the other free coordinates 0.
  std::vector<RationalVector> basis;
};

// Exact kernel via fraction-free (Bareiss) elimination followed by
// back-substitution. The basis is the reduced-echelon kernel basis.
KernelResult kernel(const RationalMatrix& m);

std::vector<RationalVector> nullspace(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Exact inverse; throws std::domain_error if singular.
RationalMatrix inverse(const RationalMatrix& m);

// Sparse integer row: (column, coefficient) sorted by column.
using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

// Kernel of a large, highly redundant sparse integer system. A maximal
// independent row subset is chosen modulo a 61-bit prime, the kernel of
// that subset is computed exactly, and every basis vector is then checked
// against all rows; rows that fail are added and the solve repeats, so the
// returned kernel is exact regardless of the prime.
KernelResult sparse_integer_kernel(const std::vector<SparseRow>& rows, std::size_t cols);

// Removes zero rows and duplicates up to sign and content (gcd) scaling.
std::vector<SparseRow> dedupe_rows(std::vector<SparseRow> rows);

}  // namespace affinv
