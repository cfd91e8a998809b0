#include "affinv/extensions.hpp"

#include <algorithm>
#include <stdexcept>

namespace affinv {

namespace {

std::pair<int, int> graded_key(const Weight& w) { return {w.m + w.n, w.m}; }

bool graded_less(const WeightPair& a, const WeightPair& b) {
  const auto ka = std::make_pair(graded_key(a.first), graded_key(a.second));
  const auto kb = std::make_pair(graded_key(b.first), graded_key(b.second));
  return ka < kb;
}

}  // namespace

std::optional<ExclusionCertificate> diagonal_filter(const ModularInvariant& x) {
  std::vector<WeightPair> keys;
  keys.reserve(x.nonzero_count());
  for (const auto& [key, v] : x.entries()) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), graded_less);
  for (const auto& key : keys) {
    const bool left = x.at(key.first, key.first) != 0;
    const bool right = x.at(key.second, key.second) != 0;
    if (left && right) continue;
    return ExclusionCertificate{x.name(), key, left ? key.second : key.first};
  }
  return std::nullopt;
}

Spectrum vacuum_spectrum(const ModularInvariant& x) {
  if (diagonal_filter(x)) throw std::invalid_argument("vacuum_spectrum: invariant fails the diagonal filter");
  Spectrum out;
  const Weight vac = Weight::shifted_weight(1, 1);
  for (const auto& [key, v] : x.entries()) {
    if (key.first == vac) out[key.second.unshift()] = v;
  }
  return out;
}

std::vector<Weight> integral_weight_modules(int k) {
  std::vector<Weight> out;
  for (const auto& w : dominant_weights(k)) {
    const Weight u = w.unshift();
    if (is_integer(conformal_weight(k, u))) out.push_back(u);
  }
  return out;
}

std::int64_t grade_one_dimension(const Spectrum& spectrum, int k) {
  std::int64_t dim = 8;
  for (const auto& [w, mult] : spectrum) {
    const Rational h = conformal_weight(k, w);
    if (!is_integer(h)) {
      throw std::invalid_argument("grade_one_dimension: " + to_string(w) + " has non-integral h = " + to_string(h));
    }
    if (h == 1) dim += mult * weyl_dim_a2(w);
  }
  return dim;
}

std::vector<LieCandidate> lie_algebra_candidates(int d, const Rational& c) {
  std::vector<LieCandidate> out;
  if (d <= 0) return out;
  for (const auto& info : algebras_with_dim(d)) {
    LieCandidate cand{info, Rational(0), false};
    // k1 d / (k1 + h) = c  <=>  k1 = c h / (d - c)
    const Rational gap = Rational(d) - c;
    if (gap > 0) {
      cand.level = c * info.dual_coxeter / gap;
      cand.accepted = cand.level > 0 && is_integer(cand.level);
    }
    out.push_back(std::move(cand));
  }
  return out;
}

std::vector<std::pair<LieAlgebraInfo, int>> identify_lie_algebra(int d, const Rational& c) {
  std::vector<std::pair<LieAlgebraInfo, int>> out;
  for (const auto& cand : lie_algebra_candidates(d, c)) {
    if (cand.accepted) out.emplace_back(cand.info, static_cast<int>(cand.level.get_num().get_si()));
  }
  return out;
}

Spectrum simple_current_spectrum(int k) {
  const Rational h = conformal_weight(k, Weight::unshifted_weight(k, 0));
  if (!is_integer(h)) {
    throw std::domain_error("no simple-current extension at level " + std::to_string(k) + ": h_{k Lambda_1} = " +
                            to_string(h));
  }
  return {{Weight::unshifted_weight(0, 0), 1}, {Weight::unshifted_weight(k, 0), 1}, {Weight::unshifted_weight(0, k), 1}};
}

ModularInvariant simple_current_invariant(int k) {
  if (k < 3 || k % 3 != 0) throw std::domain_error("simple_current_invariant: level must be a positive multiple of 3");
  ModularInvariant x(k, "D");
  for (const auto& lam : dominant_weights(k)) {
    if ((lam.m - lam.n) % 3 != 0) continue;
    std::vector<Weight> orbit{lam};
    for (Weight w = map_sigma(k, lam); w != lam; w = map_sigma(k, w)) orbit.push_back(w);
    if (orbit.front() != *std::min_element(orbit.begin(), orbit.end())) continue;  // visit each orbit once
    // A free orbit contributes 1 on O x O; the fixed point has stabilizer
    // of order 3.
    const std::int64_t v = orbit.size() == 1 ? 3 : 1;
    for (const auto& a : orbit) {
      for (const auto& b : orbit) x.set(a, b, v);
    }
  }
  return x;
}

std::string to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::self: return "self";
    case VerdictStatus::simple_current: return "simple_current";
    case VerdictStatus::conformal_embedding: return "conformal_embedding";
    case VerdictStatus::excluded: return "excluded";
    case VerdictStatus::unmatched: return "unmatched";
  }
  return "unmatched";
}

std::size_t RealizationReport::count(VerdictStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [&](const Verdict& v) { return v.status == s; }));
}

const Verdict* RealizationReport::find(std::string_view name) const {
  for (const auto& v : verdicts) {
    if (v.name == name || std::find(v.aliases.begin(), v.aliases.end(), name) != v.aliases.end()) return &v;
  }
  return nullptr;
}

namespace {

Verdict judge(const ModularInvariant& x, int k) {
  Verdict v;
  v.name = x.name();
  v.central_charge = sl3_central_charge(k);
  if (auto cert = diagonal_filter(x)) {
    v.status = VerdictStatus::excluded;
    v.certificate = std::move(cert);
    return v;
  }
  const Spectrum spectrum = vacuum_spectrum(x);
  v.spectrum = spectrum;
  for (const auto& [w, mult] : spectrum) {
    if (!is_integer(conformal_weight(k, w))) {
      v.status = VerdictStatus::unmatched;
      v.note = "vacuum row contains " + to_string(w) + " with non-integral conformal weight";
      return v;
    }
  }
  if (spectrum == Spectrum{{Weight::unshifted_weight(0, 0), 1}}) {
    v.status = VerdictStatus::self;
    return v;
  }
  if (k % 3 == 0 && spectrum == simple_current_spectrum(k)) {
    v.status = VerdictStatus::simple_current;
    return v;
  }
  v.grade1_dim = grade_one_dimension(spectrum, k);
  v.candidates = lie_algebra_candidates(static_cast<int>(*v.grade1_dim), v.central_charge);
  const auto found = identify_lie_algebra(static_cast<int>(*v.grade1_dim), v.central_charge);
  if (found.size() == 1) {
    v.status = VerdictStatus::conformal_embedding;
    v.target = found.front().first.label;
    v.target_level = found.front().second;
  } else {
    v.status = VerdictStatus::unmatched;
    v.note = found.empty() ? "no catalog algebra matches (dim, c)" : "several catalog algebras match (dim, c)";
  }
  return v;
}

std::vector<ModularInvariant> named_candidates(int k) {
  std::vector<ModularInvariant> out;
  for (const auto& f : named_families(k)) {
    out.push_back(build_named(k, f));
    out.push_back(build_named(k, f + "^C"));
  }
  return out;
}

}  // namespace

RealizationReport classify(const ModularData& md, ClassifyMode mode, const EnumerationOptions& options) {
  const int k = md.level;
  RealizationReport report;
  report.level = k;
  report.mode = mode;

  const auto named = named_candidates(k);
  std::vector<ModularInvariant> candidates;
  std::vector<std::vector<std::string>> aliases;
  auto add = [&](ModularInvariant x) {
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (equal(candidates[i], x)) {
        if (!x.name().empty()) aliases[i].push_back(x.name());
        return;
      }
    }
    candidates.push_back(std::move(x));
    aliases.emplace_back();
  };

  if (mode == ClassifyMode::named_only) {
    for (const auto& x : named) add(x);
  } else {
    const auto result = enumerate_physical(md, options);
    report.complete = result.complete;
    std::size_t unnamed = 0;
    for (auto x : result.invariants) {
      std::vector<std::string> names;
      for (const auto& y : named) {
        if (equal(x, y)) names.push_back(y.name());
      }
      // enumerate_physical output has no duplicates
      x.set_name(names.empty() ? "X" + std::to_string(unnamed++) : names.front());
      candidates.push_back(std::move(x));
      aliases.emplace_back(names.begin() + (names.empty() ? 0 : 1), names.end());
    }
  }

  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Verdict v = judge(candidates[i], k);
    v.aliases = aliases[i];
    report.verdicts.push_back(std::move(v));
  }
  std::sort(report.verdicts.begin(), report.verdicts.end(),
            [](const Verdict& a, const Verdict& b) { return a.name < b.name; });
  return report;
}

EmbeddingCheck embedding_check(const ModularData& md, std::string_view target) {
  EmbeddingCheck out;
  out.level = md.level;
  out.target = std::string(target);
  const LieAlgebraInfo& info = catalog_lookup(target);
  out.target_dim = info.dim;
  out.sl3_central_charge = sl3_central_charge(md.level);
  out.target_central_charge = central_charge(info, 1);
  const auto report = classify(md, ClassifyMode::named_only);
  for (const auto& v : report.verdicts) {
    if (v.status != VerdictStatus::conformal_embedding || v.target != out.target) continue;
    out.invariant = v.name;
    out.grade1_dim = v.grade1_dim;
    out.ok = v.target_level == 1 && v.grade1_dim == info.dim && out.sl3_central_charge == out.target_central_charge;
    out.detail = out.ok ? "grade-1 dimension and central charge match" : "realization found but arithmetic mismatch";
    return out;
  }
  out.detail = "no named invariant at level " + std::to_string(md.level) + " is realized by " + out.target;
  return out;
}

}  // namespace affinv
