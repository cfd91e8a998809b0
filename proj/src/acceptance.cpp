#include "affinv/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "affinv/commutant.hpp"
#include "affinv/cyclotomic.hpp"
#include "affinv/extensions.hpp"
#include "affinv/invariants.hpp"
#include "affinv/lie.hpp"
#include "affinv/modular_data.hpp"

namespace affinv {

namespace {

class DataCache {
 public:
  const ModularData& get(int k) {
    auto it = data_.find(k);
    if (it == data_.end()) it = data_.emplace(k, build_modular_data(k)).first;
    return it->second;
  }

 private:
  std::map<int, ModularData> data_;
};

std::string pair_str(const WeightPair& p) { return "(" + to_string(p.first) + "," + to_string(p.second) + ")"; }

struct Ctx {
  DataCache cache;
  unsigned workers = 1;
};

using Failures = std::vector<std::string>;

// 1. SL(2,Z) relations, k = 1..9.
std::string modular_relations(Ctx&, Failures& f) {
  std::size_t checks = 0;
  for (int k = 1; k <= 9; ++k) {
    ModularData md;
    md.level = k;
    md.shifted_level = k + 3;
    md.conductor = 12 * (k + 3);
    md.weights = dominant_weights(k);
    md.s = s_matrix(k);
    md.t_exponents = t_vector(k);
    md.central_charge = sl3_central_charge(k);
    const auto report = verify_modular_data(md);
    for (const auto& c : report.checks) {
      ++checks;
      if (!c.passed) f.push_back("k=" + std::to_string(k) + " " + c.name + ": " + c.detail);
    }
  }
  return std::to_string(checks) + " exact relation checks over k=1..9";
}

std::vector<std::pair<int, std::string>> table_names() {
  std::vector<std::pair<int, std::string>> out;
  for (int k = 1; k <= 21; ++k) out.emplace_back(k, "A");
  for (int k = 3; k <= 12; ++k) out.emplace_back(k, "D");
  out.emplace_back(5, "E5");
  out.emplace_back(9, "E9_1");
  out.emplace_back(9, "E9_2");
  out.emplace_back(21, "E21");
  return out;
}

// 2. Every named invariant and conjugate satisfies (P1)-(P3).
std::string named_invariants(Ctx& ctx, Failures& f) {
  std::size_t n = 0;
  for (const auto& [k, fam] : table_names()) {
    const auto& md = ctx.cache.get(k);
    for (const auto& name : {fam, fam + "^C"}) {
      const auto r = is_modular_invariant(build_named(k, name), md);
      ++n;
      if (!r.passed()) f.push_back("k=" + std::to_string(k) + " " + name + ": " + r.detail);
    }
  }
  return std::to_string(n) + " invariants verified exactly (A_1..A_21, D_3..D_12, E5, E9_1, E9_2, E21, conjugates)";
}

// 3. Conjugation identities.
std::string conjugation_identities(Ctx&, Failures& f) {
  for (const auto& [k, fam] : std::vector<std::pair<int, std::string>>{{3, "D"}, {6, "D"}, {9, "E9_1"}, {21, "E21"}}) {
    const auto x = build_named(k, fam);
    if (!equal(conjugate(x), x)) f.push_back(fam + " at k=" + std::to_string(k) + " differs from its conjugate");
  }
  const auto d9 = build_named(9, "D");
  if (equal(conjugate(d9), d9)) f.push_back("D_9^C equals D_9");
  return "D_3^C = D_3, D_6^C = D_6, E9_1^C = E9_1, E21^C = E21, D_9^C != D_9";
}

// 4. Enumeration equals the named list for k = 1..6.
std::string completeness(Ctx& ctx, Failures& f) {
  std::ostringstream summary;
  for (int k = 1; k <= 6; ++k) {
    const auto& md = ctx.cache.get(k);
    EnumerationOptions opt;
    opt.workers = ctx.workers;
    const auto result = enumerate_physical(md, opt);
    std::vector<ModularInvariant> named;
    for (const auto& fam : named_families(k)) {
      for (const auto& name : {fam, fam + "^C"}) {
        auto x = build_named(k, name);
        if (std::none_of(named.begin(), named.end(), [&](const ModularInvariant& y) { return equal(x, y); })) {
          named.push_back(std::move(x));
        }
      }
    }
    const auto& found = result.invariants;
    for (std::size_t i = 0; i < found.size(); ++i) {
      for (std::size_t j = i + 1; j < found.size(); ++j) {
        if (equal(found[i], found[j])) f.push_back("k=" + std::to_string(k) + ": duplicate enumeration output");
      }
      if (std::none_of(named.begin(), named.end(), [&](const ModularInvariant& y) { return equal(found[i], y); })) {
        f.push_back("k=" + std::to_string(k) + ": enumerated invariant not in the named list");
      }
    }
    for (const auto& y : named) {
      if (std::none_of(found.begin(), found.end(), [&](const ModularInvariant& x) { return equal(x, y); })) {
        f.push_back("k=" + std::to_string(k) + ": " + y.name() + " not found by enumeration");
      }
    }
    if (!result.complete) f.push_back("k=" + std::to_string(k) + ": search incomplete");
    summary << (k > 1 ? ", " : "") << "k=" << k << ":" << found.size();
  }
  return "physical invariants found " + summary.str();
}

// 5. Diagonal-filter verdicts.
std::string exclusions(Ctx&, Failures& f) {
  std::size_t n = 0;
  auto expect_excluded = [&](int k, const std::string& name, std::optional<WeightPair> witness) {
    ++n;
    const auto cert = diagonal_filter(build_named(k, name));
    const std::string label = name + " at k=" + std::to_string(k);
    if (!cert) {
      f.push_back(label + " passes the diagonal filter");
    } else if (witness && cert->witness != *witness) {
      f.push_back(label + " witness " + pair_str(cert->witness) + ", expected " + pair_str(*witness));
    }
  };
  auto expect_pass = [&](int k, const std::string& name) {
    ++n;
    if (const auto cert = diagonal_filter(build_named(k, name))) {
      f.push_back(name + " at k=" + std::to_string(k) + " excluded with witness " + pair_str(cert->witness));
    }
  };
  const auto w = Weight::shifted_weight;
  for (int k = 2; k <= 21; ++k) expect_excluded(k, "A^C", std::nullopt);
  for (int k : {4, 5, 7, 8}) expect_excluded(k, "D", std::nullopt);
  for (int k : {4, 5, 7, 8, 9, 12}) expect_excluded(k, "D^C", std::nullopt);
  expect_excluded(9, "D^C", WeightPair{w(1, 4), w(4, 1)});
  expect_excluded(5, "E5^C", WeightPair{w(1, 3), w(3, 1)});
  expect_excluded(9, "E9_2", WeightPair{w(2, 2), w(4, 4)});
  expect_excluded(9, "E9_2^C", std::nullopt);
  {
    const auto cert = diagonal_filter(build_named(9, "E9_2^C"));
    const bool involves = cert && (cert->witness.first == w(2, 2) || cert->witness.first == w(4, 4) ||
                                   cert->witness.second == w(2, 2) || cert->witness.second == w(4, 4));
    if (!involves) f.push_back("E9_2^C witness does not involve (2,2) or (4,4)");
  }
  for (int k = 1; k <= 21; ++k) expect_pass(k, "A");
  for (int k : {3, 6, 9, 12, 15, 18, 21}) expect_pass(k, "D");
  expect_pass(5, "E5");
  expect_pass(9, "E9_1");
  expect_pass(21, "E21");
  return std::to_string(n) + " filter verdicts; E5^C ((1,3),(3,1)), E9_2 ((2,2),(4,4)), D_9^C ((1,4),(4,1))";
}

// 6. Grade-1 dimensions and central charges of the three embeddings.
std::string embedding_arithmetic(Ctx&, Failures& f) {
  const auto u = Weight::unshifted_weight;
  if (weyl_dim_a2(u(2, 2)) != 27 || weyl_dim_a2(u(1, 4)) != 35 || weyl_dim_a2(u(4, 1)) != 35 ||
      weyl_dim_a2(u(4, 4)) != 125) {
    f.push_back("Weyl dimensions 27/35/35/125 not reproduced");
  }
  struct Case {
    int k;
    std::string name;
    std::int64_t dim;
    long c;
    std::string target;
  };
  for (const auto& cs : std::vector<Case>{{5, "E5", 35, 5, "A5"}, {9, "E9_1", 78, 6, "E6"}, {21, "E21", 133, 7, "E7"}}) {
    const auto spectrum = vacuum_spectrum(build_named(cs.k, cs.name));
    const auto g1 = grade_one_dimension(spectrum, cs.k);
    if (g1 != cs.dim) f.push_back(cs.name + ": grade-1 dimension " + std::to_string(g1));
    if (sl3_central_charge(cs.k) != cs.c) f.push_back(cs.name + ": c(sl3, k) != " + std::to_string(cs.c));
    if (central_charge(catalog_lookup(cs.target), 1) != cs.c) f.push_back(cs.target + ": c at level 1 mismatch");
    const auto ids = identify_lie_algebra(static_cast<int>(cs.dim), Rational(cs.c));
    if (ids.size() != 1 || ids.front().first.label != cs.target || ids.front().second != 1) {
      f.push_back("(" + std::to_string(cs.dim) + ", " + std::to_string(cs.c) + ") not identified as (" + cs.target +
                  ", 1)");
    }
  }
  for (const auto& cand : lie_algebra_candidates(78, Rational(6))) {
    if ((cand.info.label == "B6" || cand.info.label == "C6") && cand.accepted) {
      f.push_back(cand.info.label + " not eliminated");
    }
    if (cand.info.label == "B6" && cand.level != Rational(11, 12)) f.push_back("B6 level != 11/12");
    if (cand.info.label == "C6" && cand.level != Rational(7, 12)) f.push_back("C6 level != 7/12");
  }
  if (integral_weight_modules(5) != std::vector<Weight>{u(0, 0), u(2, 2)}) {
    f.push_back("integral-weight scan at k=5 differs from {(0,0),(2,2)}");
  }
  return "35 = 8+27 (A5,1); 78 = 8+35+35 (E6,1), B6 k1=11/12, C6 k1=7/12; 133 = 8+125 (E7,1)";
}

// 7. Realization table.
std::string realization_table(Ctx& ctx, Failures& f) {
  std::ostringstream summary;
  for (int k : {3, 4, 5, 6, 9, 21}) {
    const auto& md = ctx.cache.get(k);
    EnumerationOptions opt;
    opt.workers = ctx.workers;
    const auto mode = k < 9 ? ClassifyMode::enumerated : ClassifyMode::named_only;
    const auto report = classify(md, mode, opt);
    const std::string at = " at k=" + std::to_string(k);
    std::size_t realized = 0;
    for (const auto& v : report.verdicts) {
      std::set<std::string> names(v.aliases.begin(), v.aliases.end());
      names.insert(v.name);
      VerdictStatus want = VerdictStatus::excluded;
      std::string target;
      if (names.contains("A")) {
        want = VerdictStatus::self;
      } else if (names.contains("D") && k % 3 == 0) {
        want = VerdictStatus::simple_current;
      } else if (names.contains("E5")) {
        want = VerdictStatus::conformal_embedding;
        target = "A5";
      } else if (names.contains("E9_1")) {
        want = VerdictStatus::conformal_embedding;
        target = "E6";
      } else if (names.contains("E21")) {
        want = VerdictStatus::conformal_embedding;
        target = "E7";
      }
      if (v.status != want) {
        f.push_back(v.name + at + ": " + to_string(v.status) + ", expected " + to_string(want));
      } else if (want == VerdictStatus::conformal_embedding && (v.target != target || v.target_level != 1)) {
        f.push_back(v.name + at + ": wrong embedding target");
      }
      if (v.status != VerdictStatus::excluded) ++realized;
    }
    if (report.count(VerdictStatus::unmatched) != 0) f.push_back("unmatched verdicts" + at);
    const std::size_t want_realized = 1 + (k % 3 == 0 ? 1 : 0) + (k == 5 || k == 9 || k == 21 ? 1 : 0);
    if (realized != want_realized) f.push_back(std::to_string(realized) + " realized invariants" + at);
    summary << (k == 3 ? "" : ", ") << "k=" << k << ":" << realized << "/" << report.verdicts.size();
  }
  return "realized/candidates " + summary.str();
}

CycNum random_cyc(std::mt19937_64& rng) {
  static const int conductors[] = {1, 2, 3, 4, 5, 6, 8, 10, 12, 15, 20, 24, 30, 40, 60, 120};
  const int n = conductors[rng() % std::size(conductors)];
  std::vector<CycNum::Term> terms;
  const int count = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < count; ++i) {
    const long num = static_cast<long>(rng() % 11) - 5;
    const long den = 1 + static_cast<long>(rng() % 4);
    terms.push_back({static_cast<int>(rng() % static_cast<unsigned>(n)), make_rational(num, den)});
  }
  return CycNum(n, std::move(terms));
}

// 8. Property suites.
std::string properties(Ctx& ctx, Failures& f) {
  for (int k = 1; k <= 21; ++k) {
    for (const auto& w : dominant_weights(k)) {
      if (map_sigma(k, map_sigma(k, map_sigma(k, w))) != w) f.push_back("sigma^3 != id at k=" + std::to_string(k));
      if (map_h(k, map_h(k, w)) != w) f.push_back("h^2 != id at k=" + std::to_string(k));
    }
  }
  for (const auto& info : catalog()) {
    const auto roots = enumerate_roots(info);
    if (info.dim != info.rank + roots) {
      f.push_back(info.label + ": dim " + std::to_string(info.dim) + " != rank + " + std::to_string(roots));
    }
  }
  std::size_t entries = 0;
  for (int k : {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 21}) {
    const auto& md = ctx.cache.get(k);
    for (const auto& fam : named_families(k)) {
      for (const auto& name : {fam, fam + "^C"}) {
        const auto x = build_named(k, name);
        for (const auto& [key, v] : x.entries()) {
          ++entries;
          if (v > entry_bound(md, key.first, key.second)) {
            f.push_back(name + " at k=" + std::to_string(k) + " exceeds entry_bound at " + pair_str(key));
          }
        }
      }
    }
  }
  std::mt19937_64 rng(20240611);
  constexpr int kTriples = 10000;
  for (int i = 0; i < kTriples && f.size() < 20; ++i) {
    const CycNum a = random_cyc(rng), b = random_cyc(rng), c = random_cyc(rng);
    const std::string at = " (triple " + std::to_string(i) + ")";
    if (!((a + b) + c == a + (b + c))) f.push_back("additive associativity" + at);
    if (!((a * b) * c == a * (b * c))) f.push_back("multiplicative associativity" + at);
    if (!(a * (b + c) == a * b + a * c)) f.push_back("distributivity" + at);
    if (!(a * b == b * a)) f.push_back("commutativity" + at);
    if (!(a.conj().conj() == a)) f.push_back("conjugation involution" + at);
    if (!a.is_zero() && !(a * a.inverse() == CycNum(Rational(1)))) f.push_back("a * a^-1 != 1" + at);
    if ((a - a).to_complex(64).contains_zero() == false) f.push_back("enclosure of zero excludes 0" + at);
  }
  return "sigma/h orders to k=21, " + std::to_string(catalog().size()) + " catalog root counts, " +
         std::to_string(entries) + " entries within entry_bound, " + std::to_string(kTriples) + " field-law triples";
}

struct Criterion {
  int id;
  const char* title;
  double limit;
  std::string (*run)(Ctx&, Failures&);
};

const Criterion kCriteria[] = {
    {1, "modular-data relations k=1..9", 120, modular_relations},
    {2, "named invariants satisfy (P1)-(P3)", 600, named_invariants},
    {3, "conjugation identities", 0, conjugation_identities},
    {4, "completeness of enumeration k=1..6", 1800, completeness},
    {5, "diagonal-filter exclusion certificates", 0, exclusions},
    {6, "conformal-embedding arithmetic", 0, embedding_arithmetic},
    {7, "realization table k=3,4,5,6,9,21", 0, realization_table},
    {8, "property suites", 0, properties},
};

}  // namespace

std::vector<AcceptanceResult> run_acceptance(const AcceptanceOptions& options) {
  Ctx ctx;
  ctx.workers = options.workers;
  std::vector<AcceptanceResult> out;
  for (const auto& c : kCriteria) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), c.id) == options.only.end()) {
      continue;
    }
    AcceptanceResult r;
    r.id = c.id;
    r.title = c.title;
    r.limit_seconds = c.limit;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      r.summary = c.run(ctx, r.failures);
    } catch (const std::exception& e) {
      r.failures.push_back(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit > 0 && r.seconds > c.limit) {
      r.failures.push_back("runtime " + std::to_string(r.seconds) + "s exceeds " + std::to_string(c.limit) + "s");
    }
    r.passed = r.failures.empty();
    if (options.on_result) options.on_result(r);
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_result(const AcceptanceResult& r) {
  std::ostringstream os;
  os << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << " (";
  os.setf(std::ios::fixed);
  os.precision(2);
  os << r.seconds << "s";
  if (r.limit_seconds > 0) os << " / limit " << static_cast<int>(r.limit_seconds) << "s";
  os << ")";
  if (!r.summary.empty()) os << ": " << r.summary;
  for (const auto& f : r.failures) os << "\n    - " << f;
  return os.str();
}

}  // namespace affinv
