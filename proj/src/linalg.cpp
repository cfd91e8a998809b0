#include "affinv/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace affinv {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw std::invalid_argument("RationalMatrix: entry count mismatch");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
  if (x.size() != cols_) throw std::invalid_argument("RationalMatrix::apply: dimension mismatch");
  std::vector<Rational> out(rows_, Rational(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& a = (*this)(r, c);
      if (a != 0 && x[c] != 0) out[r] += a * x[c];
    }
  }
  return out;
}

namespace {

using BigRow = std::vector<BigInt>;

// Fraction-free row echelon form in place. Returns pivot columns; row i of
// the result (i < rank) has its leading entry at pivots[i].
std::vector<std::size_t> bareiss_echelon(std::vector<BigRow>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  BigInt prev = 1;
  std::size_t r = 0;
  BigInt t1, t2;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const BigInt& piv = a[r][c];
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      BigInt& lead = a[i][c];
      if (lead == 0) {
        // Row still gets scaled so that every entry stays a minor.
        for (std::size_t j = c + 1; j < cols; ++j) {
          if (a[i][j] == 0) continue;
          mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), a[i][j].get_mpz_t());
          mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_mul(t1.get_mpz_t(), piv.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_mul(t2.get_mpz_t(), lead.get_mpz_t(), a[r][j].get_mpz_t());
        mpz_sub(t1.get_mpz_t(), t1.get_mpz_t(), t2.get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), t1.get_mpz_t(), prev.get_mpz_t());
      }
      lead = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

KernelResult kernel_from_integer_rows(std::vector<BigRow> a, std::size_t cols) {
  KernelResult out;
  out.pivot_columns = bareiss_echelon(a, cols);
  out.rank = out.pivot_columns.size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : out.pivot_columns) is_pivot[c] = true;
  for (std::size_t c = 0; c < cols; ++c) {
    if (!is_pivot[c]) out.free_columns.push_back(c);
  }
  for (auto f : out.free_columns) {
    RationalVector x(cols, Rational(0));
    x[f] = 1;
    for (std::size_t i = out.rank; i-- > 0;) {
      const std::size_t pc = out.pivot_columns[i];
      Rational acc = 0;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (a[i][j] != 0 && x[j] != 0) acc += Rational(a[i][j]) * x[j];
      }
      x[pc] = -acc / Rational(a[i][pc]);
    }
    out.basis.push_back(std::move(x));
  }
  return out;
}

}  // namespace

KernelResult kernel(const RationalMatrix& m) {
  std::vector<BigRow> a(m.rows(), BigRow(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    BigInt den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c) den = lcm(den, m(r, c).get_den());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      a[r][c] = m(r, c).get_num() * (den / m(r, c).get_den());
    }
  }
  return kernel_from_integer_rows(std::move(a), m.cols());
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) { return kernel(m).basis; }

std::size_t rank(const RationalMatrix& m) { return kernel(m).rank; }

RationalMatrix inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse: matrix must be square");
  const std::size_t n = m.rows();
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) throw std::domain_error("inverse: singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(c, j));
        std::swap(inv(p, j), inv(c, j));
      }
    }
    const Rational piv = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= piv;
      inv(c, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

namespace {

constexpr std::uint64_t kPrime = (1ULL << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b) {
  const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(p & kPrime);
  std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
  std::uint64_t s = lo + hi;
  if (s >= kPrime) s -= kPrime;
  return s;
}

std::uint64_t submod(std::uint64_t a, std::uint64_t b) { return a >= b ? a - b : a + kPrime - b; }

std::uint64_t to_mod(std::int64_t v) {
  const std::int64_t r = v % static_cast<std::int64_t>(kPrime);
  return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(kPrime) : r);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, b);
    b = mulmod(b, b);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a) { return powmod(a, kPrime - 2); }

// Greedy independent-row selection modulo kPrime.
class ModEchelon {
 public:
  explicit ModEchelon(std::size_t cols) : cols_(cols), row_of_pivot_(cols, -1) {}

  // Returns true if the row was independent of those already added.
  bool add(const SparseRow& row) {
    std::vector<std::uint64_t> v(cols_, 0);
    for (const auto& [c, x] : row) v[c] = to_mod(x);
    for (std::size_t c = 0; c < cols_; ++c) {
      if (v[c] == 0) continue;
      const int r = row_of_pivot_[c];
      if (r < 0) {
        const std::uint64_t inv = invmod(v[c]);
        for (std::size_t j = c; j < cols_; ++j) v[j] = mulmod(v[j], inv);
        row_of_pivot_[c] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(v));
        return true;
      }
      const auto& b = rows_[static_cast<std::size_t>(r)];
      const std::uint64_t f = v[c];
      for (std::size_t j = c; j < cols_; ++j) {
        if (b[j] != 0) v[j] = submod(v[j], mulmod(f, b[j]));
      }
    }
    return false;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::size_t cols_;
  std::vector<int> row_of_pivot_;
  std::vector<std::vector<std::uint64_t>> rows_;
};

bool row_annihilates(const SparseRow& row, const std::vector<BigInt>& x, BigInt& scratch) {
  scratch = 0;
  for (const auto& [c, a] : row) {
    if (x[c] == 0) continue;
    if (a > 0) {
      mpz_addmul_ui(scratch.get_mpz_t(), x[c].get_mpz_t(), static_cast<unsigned long>(a));
    } else {
      mpz_submul_ui(scratch.get_mpz_t(), x[c].get_mpz_t(), static_cast<unsigned long>(-a));
    }
  }
  return scratch == 0;
}

std::vector<BigInt> integer_scaled(const RationalVector& x) {
  BigInt den = 1;
  for (const auto& v : x) den = lcm(den, v.get_den());
  std::vector<BigInt> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = x[i].get_num() * (den / x[i].get_den());
  return out;
}

}  // namespace

std::vector<SparseRow> dedupe_rows(std::vector<SparseRow> rows) {
  struct Hash {
    std::size_t operator()(const SparseRow& r) const {
      std::size_t h = 1469598103934665603ULL;
      for (const auto& [c, v] : r) {
        h ^= static_cast<std::size_t>(c) * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(v);
        h *= 1099511628211ULL;
      }
      return h;
    }
  };
  std::unordered_set<SparseRow, Hash> seen;
  std::vector<SparseRow> out;
  for (auto& row : rows) {
    std::erase_if(row, [](const auto& e) { return e.second == 0; });
    if (row.empty()) continue;
    std::sort(row.begin(), row.end());
    std::int64_t g = 0;
    for (const auto& e : row) g = std::gcd(g, e.second < 0 ? -e.second : e.second);
    const std::int64_t sign = row.front().second < 0 ? -1 : 1;
    for (auto& e : row) e.second = sign * (e.second / g);
    if (seen.insert(row).second) out.push_back(std::move(row));
  }
  return out;
}

KernelResult sparse_integer_kernel(const std::vector<SparseRow>& rows, std::size_t cols) {
  for (const auto& row : rows) {
    for (const auto& e : row) {
      if (e.first >= cols) throw std::invalid_argument("sparse_integer_kernel: column out of range");
    }
  }
  // Deterministic shuffle so that independent rows surface early.
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::mt19937_64 rng(0x5eed5eedULL);
  std::shuffle(order.begin(), order.end(), rng);

  ModEchelon ech(cols);
  std::vector<std::size_t> selected;
  const std::size_t patience = std::max<std::size_t>(2000, 4 * cols);
  std::size_t since_last = 0;
  for (std::size_t idx : order) {
    if (ech.rank() == cols || since_last >= patience) break;
    if (ech.add(rows[idx])) {
      selected.push_back(idx);
      since_last = 0;
    } else {
      ++since_last;
    }
  }

  BigInt scratch;
  for (;;) {
    std::vector<BigRow> dense;
    dense.reserve(selected.size());
    for (std::size_t idx : selected) {
      BigRow r(cols);
      for (const auto& [c, v] : rows[idx]) r[c] = static_cast<long>(v);
      dense.push_back(std::move(r));
    }
    KernelResult result = kernel_from_integer_rows(std::move(dense), cols);

    std::vector<std::vector<BigInt>> scaled;
    for (const auto& x : result.basis) scaled.push_back(integer_scaled(x));
    std::vector<std::size_t> failing;
    std::vector<bool> chosen(rows.size(), false);
    for (std::size_t idx : selected) chosen[idx] = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (chosen[i]) continue;
      for (const auto& x : scaled) {
        if (!row_annihilates(rows[i], x, scratch)) {
          failing.push_back(i);
          break;
        }
      }
    }
    if (failing.empty()) return result;
    const std::size_t before = selected.size();
    for (std::size_t i : failing) {
      if (ech.add(rows[i])) selected.push_back(i);
    }
    // Dependent modulo the prime but not over Q: force one in.
    if (selected.size() == before) selected.push_back(failing.front());
  }
}

}  // namespace affinv
