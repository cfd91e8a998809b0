#include <doctest.h>

#include <random>

#include "affinv/linalg.hpp"

using namespace affinv;

TEST_CASE("nullspace examples") {
  CHECK(nullspace(RationalMatrix::identity(3)).empty());
  CHECK(nullspace(RationalMatrix(2, 3)).size() == 3);

  RationalMatrix m(2, 3, {1, 1, 0, 0, 0, 1});
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == RationalVector{-1, 1, 0});
}

TEST_CASE("kernel vectors are in reduced echelon form") {
  RationalMatrix m(2, 4, {2, 4, 1, 3, 1, 2, 1, 1});
  const auto k = kernel(m);
  CHECK(k.rank == 2);
  CHECK(k.free_columns == std::vector<std::size_t>{1, 3});
  for (std::size_t i = 0; i < k.basis.size(); ++i) {
    for (std::size_t j = 0; j < k.free_columns.size(); ++j) {
      CHECK(k.basis[i][k.free_columns[j]] == (i == j ? 1 : 0));
    }
    for (const auto& v : m.apply(k.basis[i])) CHECK(v == 0);
  }
}

TEST_CASE("inverse and rank") {
  RationalMatrix m(2, 2, {1, 2, 3, 4});
  const auto inv = inverse(m);
  CHECK(inv(0, 0) == -2);
  CHECK(inv(1, 0) == make_rational(3, 2));
  CHECK(rank(RationalMatrix(3, 3, {1, 2, 3, 2, 4, 6, 1, 0, 1})) == 2);
  CHECK_THROWS_AS(inverse(RationalMatrix(2, 2, {1, 2, 2, 4})), std::domain_error);
}

TEST_CASE("sparse kernel agrees with the dense kernel") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t cols = 3 + rng() % 8;
    const std::size_t rows = 1 + rng() % 10;
    std::vector<SparseRow> sparse;
    RationalMatrix dense(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
      SparseRow row;
      for (std::size_t c = 0; c < cols; ++c) {
        if (rng() % 3 == 0) {
          const auto v = static_cast<std::int64_t>(rng() % 7) - 3;
          if (v != 0) row.emplace_back(static_cast<std::uint32_t>(c), v);
          dense(r, c) = v;
        }
      }
      sparse.push_back(row);
      if (rng() % 2) sparse.push_back(row);  // duplicates
    }
    const auto a = sparse_integer_kernel(dedupe_rows(sparse), cols);
    const auto b = kernel(dense);
    CHECK(a.basis == b.basis);
  }
}

TEST_CASE("dedupe_rows removes scaled duplicates and zero rows") {
  std::vector<SparseRow> rows{{{0, 2}, {3, -4}}, {{0, -1}, {3, 2}}, {}, {{1, 5}}};
  CHECK(dedupe_rows(rows).size() == 2);
}
