#include "affinv/lie.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "affinv/linalg.hpp"

namespace affinv {

Weight Weight::shift() const {
  if (shifted) throw std::invalid_argument("Weight::shift: weight is already shifted");
  return {m + 1, n + 1, true};
}

Weight Weight::unshift() const {
  if (!shifted) throw std::invalid_argument("Weight::unshift: weight is not shifted");
  return {m - 1, n - 1, false};
}

bool Weight::dominant_at_level(int k) const { return !shifted && m >= 0 && n >= 0 && m + n <= k; }

bool Weight::in_alcove(int k) const { return shifted && m > 0 && n > 0 && m + n < k + 3; }

std::string to_string(const Weight& w) {
  return "(" + std::to_string(w.m) + "," + std::to_string(w.n) + ")";
}

Rational inner_product(const Weight& a, const Weight& b) {
  if (a.shifted != b.shifted) throw std::invalid_argument("inner_product: shifted/unshifted convention mismatch");
  return make_rational(2L * a.m * b.m + 2L * a.n * b.n + 1L * a.m * b.n + 1L * a.n * b.m, 3);
}

WeylElement WeylElement::compose(const WeylElement& rhs) const {
  const auto& a = matrix;
  const auto& b = rhs.matrix;
  return {sign * rhs.sign,
          {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
           a[2] * b[1] + a[3] * b[3]}};
}

const std::vector<WeylElement>& weyl_group_a2() {
  static const std::vector<WeylElement> group = [] {
    const WeylElement id{1, {1, 0, 0, 1}};
    const WeylElement s1{-1, {-1, 0, 1, 1}};
    const WeylElement s2{-1, {1, 1, 0, -1}};
    std::vector<WeylElement> out{id};
    for (std::size_t i = 0; i < out.size(); ++i) {
      for (const auto& s : {s1, s2}) {
        WeylElement g = s.compose(out[i]);
        const bool known = std::any_of(out.begin(), out.end(), [&](const WeylElement& h) { return h.matrix == g.matrix; });
        if (!known) out.push_back(g);
      }
    }
    return out;
  }();
  return group;
}

std::int64_t weyl_dim_a2(const Weight& lambda) {
  if (lambda.shifted || lambda.m < 0 || lambda.n < 0) {
    throw std::invalid_argument("weyl_dim_a2: expected a dominant unshifted weight");
  }
  const std::int64_t m = lambda.m, n = lambda.n;
  return (m + 1) * (n + 1) * (m + n + 2) / 2;
}

std::vector<int> LieAlgebraInfo::doubled_gram() const {
  std::vector<int> g(cartan.size());
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      g[static_cast<size_t>(i * rank + j)] = cartan[static_cast<size_t>(i * rank + j)] * root_norms[static_cast<size_t>(j)];
    }
  }
  return g;
}

namespace {

std::vector<int> chain_cartan(int r) {
  std::vector<int> a(static_cast<size_t>(r * r), 0);
  for (int i = 0; i < r; ++i) {
    a[static_cast<size_t>(i * r + i)] = 2;
    if (i + 1 < r) {
      a[static_cast<size_t>(i * r + i + 1)] = -1;
      a[static_cast<size_t>((i + 1) * r + i)] = -1;
    }
  }
  return a;
}

LieAlgebraInfo type_a(int r) {
  return {"A" + std::to_string(r), r, r * r + 2 * r, r + 1, chain_cartan(r), std::vector<int>(static_cast<size_t>(r), 2)};
}

LieAlgebraInfo type_b(int r) {
  auto a = chain_cartan(r);
  // alpha_r short
  a[static_cast<size_t>((r - 2) * r + r - 1)] = -2;
  std::vector<int> norms(static_cast<size_t>(r), 2);
  norms.back() = 1;
  return {"B" + std::to_string(r), r, 2 * r * r + r, 2 * r - 1, a, norms};
}

LieAlgebraInfo type_c(int r) {
  auto a = chain_cartan(r);
  // alpha_r long, the rest short
  a[static_cast<size_t>((r - 1) * r + r - 2)] = -2;
  std::vector<int> norms(static_cast<size_t>(r), 1);
  norms.back() = 2;
  return {"C" + std::to_string(r), r, 2 * r * r + r, r + 1, a, norms};
}

// Bourbaki numbering: 1-3-4-5-...-r chain with node 2 attached to node 4.
LieAlgebraInfo type_e(int r, int dim, int dual_coxeter) {
  std::vector<int> a(static_cast<size_t>(r * r), 0);
  auto link = [&](int i, int j) {
    a[static_cast<size_t>((i - 1) * r + j - 1)] = -1;
    a[static_cast<size_t>((j - 1) * r + i - 1)] = -1;
  };
  for (int i = 0; i < r; ++i) a[static_cast<size_t>(i * r + i)] = 2;
  link(1, 3);
  link(2, 4);
  for (int i = 3; i < r; ++i) link(i, i + 1);
  return {"E" + std::to_string(r), r, dim, dual_coxeter, a, std::vector<int>(static_cast<size_t>(r), 2)};
}

}  // namespace

const std::vector<LieAlgebraInfo>& catalog() {
  static const std::vector<LieAlgebraInfo> entries = [] {
    std::vector<LieAlgebraInfo> out;
    for (int r = 1; r <= 7; ++r) out.push_back(type_a(r));
    out.push_back(type_b(6));
    out.push_back(type_c(6));
    out.push_back(type_e(6, 78, 12));
    out.push_back(type_e(7, 133, 18));
    return out;
  }();
  return entries;
}

const LieAlgebraInfo& catalog_lookup(std::string_view label) {
  for (const auto& info : catalog()) {
    if (info.label == label) return info;
  }
  throw std::out_of_range("unknown Lie algebra label: " + std::string(label));
}

std::vector<LieAlgebraInfo> algebras_with_dim(int dim) {
  if (dim <= 0) throw std::invalid_argument("algebras_with_dim: dim must be positive");
  std::vector<LieAlgebraInfo> out;
  for (const auto& info : catalog()) {
    if (info.dim == dim) out.push_back(info);
  }
  return out;
}

Rational central_charge(const LieAlgebraInfo& info, int level) {
  if (level < 1) throw std::invalid_argument("central_charge: level must be positive");
  return make_rational(static_cast<long>(level) * info.dim, level + info.dual_coxeter);
}

std::int64_t enumerate_roots(const LieAlgebraInfo& info) {
  const int r = info.rank;
  const auto g = info.doubled_gram();
  RationalMatrix gm(static_cast<size_t>(r), static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) gm(static_cast<size_t>(i), static_cast<size_t>(j)) = g[static_cast<size_t>(i * r + j)];
  }
  const RationalMatrix ginv = inverse(gm);
  const int max_norm2 = 2 * *std::max_element(info.root_norms.begin(), info.root_norms.end());

  // v_i^2 <= q(v) * (G^-1)_ii for the doubled form q; q(v) <= max_norm2.
  std::vector<int> bound(static_cast<size_t>(r));
  for (int i = 0; i < r; ++i) {
    const Rational cap = ginv(static_cast<size_t>(i), static_cast<size_t>(i)) * max_norm2;
    int b = 0;
    while (Rational((b + 1) * (b + 1)) <= cap) ++b;
    bound[static_cast<size_t>(i)] = b;
  }

  std::set<int> root_norm2;
  for (int d : info.root_norms) root_norm2.insert(2 * d);

  std::vector<int> v(static_cast<size_t>(r), 0);
  std::int64_t count = 0;
  std::function<void(int)> walk = [&](int i) {
    if (i == r) {
      long q = 0;
      for (int a = 0; a < r; ++a) {
        if (v[static_cast<size_t>(a)] == 0) continue;
        for (int b = 0; b < r; ++b) q += static_cast<long>(v[static_cast<size_t>(a)]) * g[static_cast<size_t>(a * r + b)] * v[static_cast<size_t>(b)];
      }
      if (!root_norm2.contains(static_cast<int>(q))) return;
      // The coroot 2v/<v,v> must lie in the coroot lattice.
      for (int j = 0; j < r; ++j) {
        if ((2L * v[static_cast<size_t>(j)] * info.root_norms[static_cast<size_t>(j)]) % q != 0) return;
      }
      ++count;
      return;
    }
    for (int x = -bound[static_cast<size_t>(i)]; x <= bound[static_cast<size_t>(i)]; ++x) {
      v[static_cast<size_t>(i)] = x;
      walk(i + 1);
    }
    v[static_cast<size_t>(i)] = 0;
  };
  walk(0);
  return count;
}

}  // namespace affinv
