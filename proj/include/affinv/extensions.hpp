#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "affinv/commutant.hpp"
#include "affinv/invariants.hpp"
#include "affinv/lie.hpp"
#include "affinv/modular_data.hpp"

namespace affinv {

struct ExclusionCertificate {
  std::string invariant_name;
  WeightPair witness;    // X_{witness} != 0
  Weight failing_index;  // diagonal entry X_{ii} = 0
};

// Support pairs are scanned with weights ordered by (m + n, m); the first
// pair with a zero diagonal entry at either end is the witness.
std::optional<ExclusionCertificate> diagonal_filter(const ModularInvariant& x);

// Unshifted weight -> multiplicity.
using Spectrum = std::map<Weight, std::int64_t>;

// Vacuum row of X. Throws std::invalid_argument if X fails diagonal_filter.
Spectrum vacuum_spectrum(const ModularInvariant& x);

// Unshifted weights of P^k_+ with integral conformal weight, lexicographic.
std::vector<Weight> integral_weight_modules(int k);

// 8 + sum of mult * dim over spectrum weights with h = 1. Throws
// std::invalid_argument if some weight has non-integral h.
std::int64_t grade_one_dimension(const Spectrum& spectrum, int k);

struct LieCandidate {
  LieAlgebraInfo info;
  Rational level;  // solution of k1 dim / (k1 + h) = c; 0 if none
  bool accepted = false;  // level is a positive integer
};

// Every catalog entry of dimension d with its level equation solved.
std::vector<LieCandidate> lie_algebra_candidates(int d, const Rational& c);
// Accepted candidates only.
std::vector<std::pair<LieAlgebraInfo, int>> identify_lie_algebra(int d, const Rational& c);

// {(0,0), (k,0), (0,k)}; throws std::domain_error unless 3 | k.
Spectrum simple_current_spectrum(int k);
// D_k for 3 | k built from sigma-orbits; throws std::domain_error otherwise.
ModularInvariant simple_current_invariant(int k);

enum class VerdictStatus { self, simple_current, conformal_embedding, excluded, unmatched };
std::string to_string(VerdictStatus s);

struct Verdict {
  std::string name;
  std::vector<std::string> aliases;  // other names for the same matrix
  VerdictStatus status = VerdictStatus::unmatched;
  std::optional<ExclusionCertificate> certificate;
  std::optional<Spectrum> spectrum;
  std::optional<std::string> target;
  std::optional<int> target_level;
  std::optional<std::int64_t> grade1_dim;
  std::vector<LieCandidate> candidates;
  Rational central_charge;
  std::string note;
};

enum class ClassifyMode { named_only, enumerated };

struct RealizationReport {
  int level = 0;
  ClassifyMode mode = ClassifyMode::named_only;
  bool complete = false;  // candidate list is provably exhaustive
  std::vector<Verdict> verdicts;  // sorted by name
  std::size_t count(VerdictStatus s) const;
  const Verdict* find(std::string_view name) const;  // also searches aliases
};

// Named mode: every family defined at k and its conjugate, deduplicated.
// Enumerated mode: enumerate_physical output (may throw GuardExceeded);
// matrices equal to a named invariant take its name, others are "X<i>".
RealizationReport classify(const ModularData& md, ClassifyMode mode, const EnumerationOptions& options = {});

struct EmbeddingCheck {
  int level = 0;
  std::string target;
  bool ok = false;
  std::optional<std::string> invariant;  // realizing invariant
  std::optional<std::int64_t> grade1_dim;
  Rational sl3_central_charge;
  Rational target_central_charge;
  int target_dim = 0;
  std::string detail;
};

// Checks that some named invariant at level k is realized as a conformal
// embedding into `target` at level 1 with matching dim and c.
EmbeddingCheck embedding_check(const ModularData& md, std::string_view target);

}  // namespace affinv
