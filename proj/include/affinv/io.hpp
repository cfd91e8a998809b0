#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "affinv/extensions.hpp"
#include "affinv/invariants.hpp"
#include "affinv/modular_data.hpp"

namespace affinv {

inline constexpr int kFormatVersion = 1;

nlohmann::json weight_to_json(const Weight& w);
Weight weight_from_json(const nlohmann::json& j);  // shifted

// { format_version, level, name?, entries: [[[m,n],[m',n'],v], ...] }
nlohmann::json invariant_to_json(const ModularInvariant& x);
// Throws std::invalid_argument on malformed input or a version mismatch.
ModularInvariant invariant_from_json(const nlohmann::json& j);

// row,col,value triplets with a header line.
std::string invariant_to_csv(const ModularInvariant& x);

// { format_version, level, conductor, weights, s: [[[e,"p/q"],...], ...] }
nlohmann::json modular_data_to_json(const ModularData& md);
// Rebuilds weights, S, t and c. The S entries are taken verbatim from the
// file; callers decide whether to verify.
ModularData modular_data_from_json(const nlohmann::json& j);

nlohmann::json verification_to_json(const ModularDataReport& report);
nlohmann::json invariant_report_to_json(const InvariantReport& report);

// { format_version, level, mode, complete, verdicts: [{name, status,
//   witness?, spectrum?, target?, grade1_dim?, central_charge, ...}] }
nlohmann::json realization_report_to_json(const RealizationReport& report);
nlohmann::json embedding_check_to_json(const EmbeddingCheck& check);
nlohmann::json catalog_to_json();

// AFFINV_CACHE if set, else ".affinv-cache".
std::filesystem::path default_cache_dir();
std::filesystem::path cache_file(const std::filesystem::path& dir, int k);

struct CacheOutcome {
  bool hit = false;
  bool written = false;
  std::string note;  // why a cache file was ignored, if it was
};

// Loads smat_k<k>.json if present, current and verified; otherwise builds,
// verifies and (best effort) writes the cache. Throws std::runtime_error
// when the freshly built datum fails verification.
ModularData load_or_build_modular_data(int k, const std::filesystem::path& dir, CacheOutcome* outcome = nullptr);

}  // namespace affinv
