#include <doctest.h>

#include <algorithm>
#include <set>

#include "affinv/commutant.hpp"

using namespace affinv;

namespace {

Weight S(int m, int n) { return Weight::shifted_weight(m, n); }

const ModularData& md_at(int k) {
  static std::map<int, ModularData> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, build_modular_data(k)).first;
  return it->second;
}

std::vector<ModularInvariant> named_and_conjugates(int k) {
  std::vector<ModularInvariant> out;
  for (const auto& fam : named_families(k)) {
    for (const auto& name : {fam, fam + "^C"}) {
      auto x = build_named(k, name);
      if (std::none_of(out.begin(), out.end(), [&](const ModularInvariant& y) { return equal(x, y); })) {
        out.push_back(std::move(x));
      }
    }
  }
  std::sort(out.begin(), out.end(), support_less);
  return out;
}

bool same_set(const std::vector<ModularInvariant>& a, const std::vector<ModularInvariant>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!equal(a[i], b[i])) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("T-compatible pairs") {
  const auto p1 = t_compatible_pairs(md_at(1));
  const std::vector<WeightPair> expect{{S(1, 1), S(1, 1)}, {S(1, 2), S(1, 2)}, {S(1, 2), S(2, 1)},
                                       {S(2, 1), S(1, 2)}, {S(2, 1), S(2, 1)}};
  CHECK(p1 == expect);

  const auto p5 = t_compatible_pairs(md_at(5));
  const std::set<WeightPair> set5(p5.begin(), p5.end());
  CHECK(set5.count({S(1, 1), S(3, 3)}) == 1);
  for (const auto& [a, b, v] : support(build_named(5, "E5"))) CHECK(set5.count({a, b}) == 1);
}

TEST_CASE("commutant at level 1 is spanned by A and A^C") {
  const auto cb = commutant_basis(md_at(1));
  CHECK(cb.dimension() == 2);
  CHECK(in_span(cb, build_named(1, "A")));
  CHECK(in_span(cb, build_named(1, "A^C")));
  auto off = build_named(1, "A");
  off.set(S(1, 2), S(2, 1), 1);
  CHECK_FALSE(in_span(cb, off));
}

TEST_CASE("named invariants lie in the commutant") {
  for (int k : {2, 3, 5, 6}) {
    const auto cb = commutant_basis(md_at(k));
    for (const auto& x : named_and_conjugates(k)) {
      CAPTURE(k);
      CAPTURE(x.name());
      CHECK(in_span(cb, x));
    }
  }
}

TEST_CASE("commutant basis matrices commute with S") {
  const auto& md = md_at(2);
  const auto cb = commutant_basis(md);
  const std::size_t n = md.size();
  for (std::size_t i = 0; i < cb.dimension(); ++i) {
    const auto x = cb.matrix(i, md);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        CycNum xs, sx;
        for (std::size_t c = 0; c < n; ++c) {
          xs += md.S(c, b).scaled(x(a, c));
          sx += md.S(a, c).scaled(x(c, b));
        }
        CHECK(xs == sx);
      }
    }
  }
}

TEST_CASE("entry bounds") {
  for (const auto& a : md_at(1).weights) {
    for (const auto& b : md_at(1).weights) CHECK(entry_bound(md_at(1), a, b) == 3);
  }
  for (int k = 1; k <= 9; ++k) CHECK(entry_bound(md_at(k), S(1, 1), S(1, 1)) >= 1);
  CHECK(entry_bound(md_at(9), S(3, 3), S(3, 3)) >= 2);
  CHECK(entry_bound(md_at(9), S(3, 3), S(3, 3), 53) == entry_bound(md_at(9), S(3, 3), S(3, 3), 256));
}

TEST_CASE("enumeration matches the named list at small levels") {
  for (int k = 1; k <= 6; ++k) {
    CAPTURE(k);
    const auto r = enumerate_physical(md_at(k));
    CHECK(r.complete);
    CHECK(same_set(r.invariants, named_and_conjugates(k)));
    for (const auto& x : r.invariants) CHECK(is_modular_invariant(x, md_at(k)).passed());
  }
  CHECK(enumerate_physical(md_at(1)).invariants.size() == 2);
  CHECK(enumerate_physical(md_at(5)).invariants.size() == 6);
  CHECK(enumerate_physical(md_at(6)).invariants.size() == 3);
}

TEST_CASE("enumeration is independent of the worker count") {
  const auto cb = commutant_basis(md_at(6));
  EnumerationOptions one, four;
  four.workers = 4;
  const auto a = enumerate_physical(md_at(6), cb, one);
  const auto b = enumerate_physical(md_at(6), cb, four);
  CHECK(same_set(a.invariants, b.invariants));
  CHECK(a.nodes == b.nodes);
}

TEST_CASE("guards") {
  EnumerationOptions small;
  small.guard_dim = 2;
  CHECK_THROWS_AS(enumerate_physical(md_at(5), small), GuardExceeded);
}

TEST_CASE("node guard is resumable") {
  const auto& md = md_at(6);
  const auto cb = commutant_basis(md);
  const auto full = enumerate_physical(md, cb).invariants;
  bool saw_progress = false;
  for (std::uint64_t budget = 1; budget < 2000; budget *= 2) {
    EnumerationOptions opt;
    opt.guard_nodes = budget;
    try {
      enumerate_physical(md, cb, opt);
      break;
    } catch (const GuardExceeded& g) {
      saw_progress = saw_progress || !g.completed_subtrees.empty();
      EnumerationOptions resume;
      resume.skip_subtrees.insert(g.completed_subtrees.begin(), g.completed_subtrees.end());
      const auto rest = enumerate_physical(md, cb, resume);
      CHECK(rest.complete == g.completed_subtrees.empty());
      std::vector<ModularInvariant> merged = g.partial_results;
      for (const auto& x : rest.invariants) {
        if (std::none_of(merged.begin(), merged.end(), [&](const ModularInvariant& y) { return equal(x, y); })) {
          merged.push_back(x);
        }
      }
      std::sort(merged.begin(), merged.end(), support_less);
      CHECK(same_set(merged, full));
    }
  }
  CHECK(saw_progress);
}
