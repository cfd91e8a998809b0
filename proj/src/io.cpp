#include "affinv/io.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace affinv {

using nlohmann::json;

json weight_to_json(const Weight& w) { return json::array({w.m, w.n}); }

Weight weight_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() || !j[1].is_number_integer()) {
    throw std::invalid_argument("weight must be [m, n], got " + j.dump());
  }
  return Weight::shifted_weight(j[0].get<int>(), j[1].get<int>());
}

json invariant_to_json(const ModularInvariant& x) {
  json j;
  j["format_version"] = kFormatVersion;
  j["level"] = x.level();
  if (!x.name().empty()) j["name"] = x.name();
  json entries = json::array();
  for (const auto& [key, v] : x.entries()) {
    entries.push_back(json::array({weight_to_json(key.first), weight_to_json(key.second), v}));
  }
  j["entries"] = std::move(entries);
  return j;
}

ModularInvariant invariant_from_json(const json& j) {
  if (!j.is_object() || !j.contains("level") || !j.contains("entries")) {
    throw std::invalid_argument("invariant JSON needs 'level' and 'entries'");
  }
  if (j.contains("format_version") && j["format_version"] != kFormatVersion) {
    throw std::invalid_argument("unsupported invariant format_version " + j["format_version"].dump());
  }
  const int level = j["level"].get<int>();
  if (level < 1) throw std::invalid_argument("invariant level must be >= 1");
  ModularInvariant x(level, j.value("name", std::string{}));
  for (const auto& e : j["entries"]) {
    if (!e.is_array() || e.size() != 3 || !e[2].is_number_integer()) {
      throw std::invalid_argument("invariant entry must be [[m,n],[m',n'],v], got " + e.dump());
    }
    const Weight a = weight_from_json(e[0]);
    const Weight b = weight_from_json(e[1]);
    if (x.at(a, b) != 0) throw std::invalid_argument("duplicate invariant entry " + e.dump());
    x.set(a, b, e[2].get<std::int64_t>());
  }
  return x;
}

std::string invariant_to_csv(const ModularInvariant& x) {
  std::ostringstream os;
  os << "row_m,row_n,col_m,col_n,value\n";
  for (const auto& [key, v] : x.entries()) {
    os << key.first.m << ',' << key.first.n << ',' << key.second.m << ',' << key.second.n << ',' << v << '\n';
  }
  return os.str();
}

json modular_data_to_json(const ModularData& md) {
  json j;
  j["format_version"] = kFormatVersion;
  j["level"] = md.level;
  j["conductor"] = md.conductor;
  json weights = json::array();
  for (const auto& w : md.weights) weights.push_back(weight_to_json(w));
  j["weights"] = std::move(weights);
  json s = json::array();
  for (const auto& v : md.s) {
    json terms = json::array();
    for (const auto& t : v.terms()) terms.push_back(json::array({t.exponent, to_string(t.coeff)}));
    s.push_back(std::move(terms));
  }
  j["s"] = std::move(s);
  return j;
}

ModularData modular_data_from_json(const json& j) {
  if (j.value("format_version", -1) != kFormatVersion) throw std::invalid_argument("S cache: format_version mismatch");
  ModularData md;
  md.level = j.at("level").get<int>();
  md.shifted_level = md.level + 3;
  md.conductor = j.at("conductor").get<int>();
  if (md.level < 1 || md.conductor != 12 * md.shifted_level) throw std::invalid_argument("S cache: bad level/conductor");
  for (const auto& w : j.at("weights")) md.weights.push_back(weight_from_json(w));
  if (md.weights != dominant_weights(md.level)) throw std::invalid_argument("S cache: unexpected weight order");
  const auto& s = j.at("s");
  if (s.size() != md.weights.size() * md.weights.size()) throw std::invalid_argument("S cache: wrong entry count");
  md.s.reserve(s.size());
  for (const auto& entry : s) {
    std::vector<CycNum::Term> terms;
    for (const auto& t : entry) {
      const int e = t.at(0).get<int>();
      if (e < 0 || e >= md.conductor) throw std::invalid_argument("S cache: exponent out of range");
      terms.push_back({e, parse_rational(t.at(1).get<std::string>())});
    }
    md.s.emplace_back(md.conductor, std::move(terms));
  }
  md.t_exponents = t_vector(md.level);
  md.central_charge = sl3_central_charge(md.level);
  return md;
}

json verification_to_json(const ModularDataReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  return {{"level", report.level}, {"passed", report.passed()}, {"checks", std::move(checks)}};
}

json invariant_report_to_json(const InvariantReport& report) {
  json j{{"passed", report.passed()},
         {"p1", report.p1},
         {"p2", report.p2},
         {"commutes_with_s", report.commutes_with_s},
         {"commutes_with_t", report.commutes_with_t}};
  if (report.failing_position) {
    j["failing_position"] = json::array({weight_to_json(report.failing_position->first),
                                         weight_to_json(report.failing_position->second)});
  }
  if (!report.detail.empty()) j["detail"] = report.detail;
  return j;
}

namespace {

json spectrum_to_json(const Spectrum& spectrum) {
  json out = json::array();
  for (const auto& [w, mult] : spectrum) out.push_back(json::array({weight_to_json(w), mult}));
  return out;
}

}  // namespace

json realization_report_to_json(const RealizationReport& report) {
  json verdicts = json::array();
  for (const auto& v : report.verdicts) {
    json e{{"name", v.name}, {"status", to_string(v.status)}, {"central_charge", to_string(v.central_charge)}};
    if (!v.aliases.empty()) e["aliases"] = v.aliases;
    if (v.certificate) {
      e["witness"] = json::array({weight_to_json(v.certificate->witness.first),
                                  weight_to_json(v.certificate->witness.second)});
      e["failing_index"] = weight_to_json(v.certificate->failing_index);
    }
    if (v.spectrum) e["spectrum"] = spectrum_to_json(*v.spectrum);
    if (v.target) e["target"] = {{"label", *v.target}, {"level", *v.target_level}};
    if (v.grade1_dim) e["grade1_dim"] = *v.grade1_dim;
    if (!v.candidates.empty()) {
      json cands = json::array();
      for (const auto& c : v.candidates) {
        cands.push_back({{"label", c.info.label}, {"level", to_string(c.level)}, {"accepted", c.accepted}});
      }
      e["candidates"] = std::move(cands);
    }
    if (!v.note.empty()) e["note"] = v.note;
    verdicts.push_back(std::move(e));
  }
  return {{"format_version", kFormatVersion},
          {"level", report.level},
          {"mode", report.mode == ClassifyMode::named_only ? "named_only" : "enumerated"},
          {"complete", report.complete},
          {"verdicts", std::move(verdicts)}};
}

json embedding_check_to_json(const EmbeddingCheck& check) {
  json j{{"format_version", kFormatVersion},
         {"level", check.level},
         {"target", check.target},
         {"verdict", check.ok ? "ok" : "fail"},
         {"target_dim", check.target_dim},
         {"central_charge", to_string(check.sl3_central_charge)},
         {"target_central_charge", to_string(check.target_central_charge)},
         {"detail", check.detail}};
  if (check.invariant) j["invariant"] = *check.invariant;
  if (check.grade1_dim) j["grade1_dim"] = *check.grade1_dim;
  return j;
}

json catalog_to_json() {
  json out = json::array();
  for (const auto& info : catalog()) {
    out.push_back({{"label", info.label},
                   {"rank", info.rank},
                   {"dim", info.dim},
                   {"dual_coxeter", info.dual_coxeter},
                   {"cartan", info.cartan},
                   {"root_norms", info.root_norms}});
  }
  return {{"format_version", kFormatVersion}, {"algebras", std::move(out)}};
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("AFFINV_CACHE"); env != nullptr && *env != '\0') return env;
  return ".affinv-cache";
}

std::filesystem::path cache_file(const std::filesystem::path& dir, int k) {
  return dir / ("smat_k" + std::to_string(k) + ".json");
}

ModularData load_or_build_modular_data(int k, const std::filesystem::path& dir, CacheOutcome* outcome) {
  CacheOutcome local;
  CacheOutcome& out = outcome ? *outcome : local;
  out = {};
  const auto path = cache_file(dir, k);
  std::error_code ec;
  if (!dir.empty() && std::filesystem::exists(path, ec)) {
    try {
      std::ifstream in(path);
      ModularData md = modular_data_from_json(json::parse(in));
      if (md.level != k) throw std::invalid_argument("S cache: level mismatch");
      if (verify_modular_data(md).passed()) {
        out.hit = true;
        return md;
      }
      out.note = "cached S failed verification; rebuilt";
    } catch (const std::exception& e) {
      out.note = std::string("ignored cache file: ") + e.what();
    }
  }
  ModularData md = build_modular_data(k);
  if (!dir.empty()) {
    std::filesystem::create_directories(dir, ec);
    const auto tmp = path.string() + ".tmp";
    std::ofstream os(tmp);
    if (os) {
      os << modular_data_to_json(md).dump() << '\n';
      os.close();
      std::filesystem::rename(tmp, path, ec);
      out.written = !ec;
    }
  }
  return md;
}

}  // namespace affinv
