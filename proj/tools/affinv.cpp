// affinv: modular invariants and extensions of affine sl3 at level k.
//
// Exit codes: 0 ok, 1 usage error, 2 verification failure, 3 guard exhausted.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "affinv/acceptance.hpp"
#include "affinv/commutant.hpp"
#include "affinv/extensions.hpp"
#include "affinv/invariants.hpp"
#include "affinv/io.hpp"
#include "affinv/modular_data.hpp"

namespace {

using nlohmann::json;
using namespace affinv;

enum ExitCode { kOk = 0, kUsage = 1, kVerification = 2, kGuard = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string format = "json";
  int precision_bits = 128;
  std::string cache_dir;
  std::string json_out;
  std::size_t guard_dim = 64;
  std::uint64_t guard_nodes = 100'000'000;
  unsigned workers = 1;
};

void write_json_file(const Config& cfg, const json& j) {
  if (cfg.json_out.empty()) return;
  std::ofstream os(cfg.json_out);
  if (!os) throw std::runtime_error("cannot write " + cfg.json_out);
  os << j.dump(2) << '\n';
}

// Prints `j` (json) or `text` (pretty/csv) and mirrors json to --json.
void emit(const Config& cfg, const json& j, const std::string& text = {}) {
  if (cfg.format == "json") {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
  write_json_file(cfg, j);
}

void require_format(const Config& cfg, bool csv_ok) {
  if (cfg.format == "csv" && !csv_ok) throw UsageError("--format csv is only available for matrix output");
}

ModularData load(const Config& cfg, int k) {
  if (k < 1) throw UsageError("--level must be >= 1");
  CacheOutcome outcome;
  ModularData md = load_or_build_modular_data(k, cfg.cache_dir, &outcome);
  if (!outcome.note.empty()) std::cerr << "cache: " << outcome.note << '\n';
  return md;
}

std::string pair_text(const WeightPair& p) { return to_string(p.first) + " " + to_string(p.second); }

int cmd_smat(const Config& cfg, int k) {
  require_format(cfg, true);
  const ModularData md = load(cfg, k);
  const auto report = verify_modular_data(md);
  json j = modular_data_to_json(md);
  json t = json::array();
  for (const auto& v : md.t_exponents) t.push_back(to_string(v));
  j["t_exponents"] = std::move(t);
  j["central_charge"] = to_string(md.central_charge);
  j["verification"] = verification_to_json(report);

  std::ostringstream text;
  if (cfg.format == "csv") {
    text << "row_m,row_n,col_m,col_n,value,re\n";
    for (std::size_t a = 0; a < md.size(); ++a) {
      for (std::size_t b = 0; b < md.size(); ++b) {
        const auto ball = md.S(a, b).to_complex(cfg.precision_bits);
        text << md.weights[a].m << ',' << md.weights[a].n << ',' << md.weights[b].m << ',' << md.weights[b].n << ",\""
             << md.S(a, b).to_string() << "\"," << ball.re.to_string(17) << '\n';
      }
    }
  } else {
    text << "level " << k << ", conductor " << md.conductor << ", |P^k| = " << md.size() << ", c = "
         << to_string(md.central_charge) << '\n';
    for (const auto& c : report.checks) {
      text << "  " << (c.passed ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << '\n';
    }
    const auto row = vacuum_row_enclosures(md, cfg.precision_bits);
    text << "weight  t  S_0,lambda\n";
    for (std::size_t j2 = 0; j2 < md.size(); ++j2) {
      text << "  " << to_string(md.weights[j2]) << "  " << to_string(md.t_exponents[j2]) << "  "
           << row[j2].re.to_string(20) << '\n';
    }
  }
  emit(cfg, j, text.str());
  return report.passed() ? kOk : kVerification;
}

int cmd_invariant_build(const Config& cfg, int k, const std::string& name) {
  require_format(cfg, true);
  if (k < 1) throw UsageError("--level must be >= 1");
  const auto x = build_named(k, name);
  std::ostringstream text;
  if (cfg.format == "csv") {
    text << invariant_to_csv(x);
  } else {
    text << name << " at level " << k << ": " << x.nonzero_count() << " nonzero entries\n";
    for (const auto& [a, b, v] : support(x)) text << "  " << to_string(a) << " " << to_string(b) << "  " << v << '\n';
  }
  emit(cfg, invariant_to_json(x), text.str());
  return kOk;
}

int cmd_invariant_verify(const Config& cfg, int k, const std::string& name, const std::string& input) {
  require_format(cfg, false);
  ModularInvariant x;
  if (!input.empty()) {
    std::ifstream in(input);
    if (!in) throw UsageError("cannot read " + input);
    json parsed;
    try {
      parsed = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError(std::string("malformed JSON in ") + input + ": " + e.what());
    }
    x = invariant_from_json(parsed);
    if (k > 0 && x.level() != k) throw UsageError("--level disagrees with the level in " + input);
    k = x.level();
  } else {
    if (name.empty()) throw UsageError("invariant verify needs --name or --input");
    if (k < 1) throw UsageError("--level must be >= 1");
    x = build_named(k, name);
  }
  const ModularData md = load(cfg, k);
  const auto report = is_modular_invariant(x, md);
  json j = invariant_report_to_json(report);
  j["level"] = k;
  if (!x.name().empty()) j["name"] = x.name();
  std::ostringstream text;
  text << (x.name().empty() ? "matrix" : x.name()) << " at level " << k << ": "
       << (report.passed() ? "modular invariant" : "NOT a modular invariant") << '\n';
  text << "  P1 " << report.p1 << "  P2 " << report.p2 << "  XS=SX " << report.commutes_with_s << "  XT=TX "
       << report.commutes_with_t << '\n';
  if (!report.detail.empty()) text << "  " << report.detail << '\n';
  emit(cfg, j, text.str());
  return report.passed() ? kOk : kVerification;
}

std::set<std::int64_t> parse_skip(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

int cmd_enumerate(const Config& cfg, int k, const std::vector<std::int64_t>& skip) {
  require_format(cfg, true);
  const ModularData md = load(cfg, k);
  EnumerationOptions opt;
  opt.guard_dim = cfg.guard_dim;
  opt.guard_nodes = cfg.guard_nodes;
  opt.workers = cfg.workers;
  opt.precision_bits = cfg.precision_bits;
  opt.skip_subtrees = parse_skip(skip);
  auto list_json = [](const std::vector<ModularInvariant>& xs) {
    json arr = json::array();
    for (const auto& x : xs) arr.push_back(invariant_to_json(x));
    return arr;
  };
  try {
    const auto result = enumerate_physical(md, opt);
    json j{{"format_version", kFormatVersion},
           {"level", k},
           {"complete", result.complete},
           {"commutant_dim", result.commutant_dim},
           {"count", result.invariants.size()},
           {"invariants", list_json(result.invariants)}};
    std::ostringstream text;
    if (cfg.format == "csv") {
      text << "index,row_m,row_n,col_m,col_n,value\n";
      for (std::size_t i = 0; i < result.invariants.size(); ++i) {
        for (const auto& [a, b, v] : support(result.invariants[i])) {
          text << i << ',' << a.m << ',' << a.n << ',' << b.m << ',' << b.n << ',' << v << '\n';
        }
      }
    } else {
      text << "level " << k << ": commutant dimension " << result.commutant_dim << ", "
           << result.invariants.size() << " physical invariants" << (result.complete ? "" : " (partial search)")
           << '\n';
      for (std::size_t i = 0; i < result.invariants.size(); ++i) {
        std::string match = "unnamed";
        for (const auto& fam : named_families(k)) {
          for (const auto& nm : {fam, fam + "^C"}) {
            if (match == "unnamed" && equal(result.invariants[i], build_named(k, nm))) match = nm;
          }
        }
        text << "  #" << i << " " << match << " (" << result.invariants[i].nonzero_count() << " nonzero entries)\n";
      }
    }
    emit(cfg, j, text.str());
    return kOk;
  } catch (const GuardExceeded& g) {
    json j{{"format_version", kFormatVersion},
           {"level", k},
           {"complete", false},
           {"guard_exceeded", g.what()},
           {"completed_subtrees", g.completed_subtrees},
           {"count", g.partial_results.size()},
           {"invariants", list_json(g.partial_results)}};
    std::cerr << "guard exceeded: " << g.what() << '\n';
    if (cfg.format == "json") std::cout << j.dump(2) << '\n';
    write_json_file(cfg, j);
    return kGuard;
  }
}

int cmd_classify(const Config& cfg, int k, bool enumerated) {
  require_format(cfg, false);
  const ModularData md = load(cfg, k);
  EnumerationOptions opt;
  opt.guard_dim = cfg.guard_dim;
  opt.guard_nodes = cfg.guard_nodes;
  opt.workers = cfg.workers;
  opt.precision_bits = cfg.precision_bits;
  RealizationReport report;
  try {
    report = classify(md, enumerated ? ClassifyMode::enumerated : ClassifyMode::named_only, opt);
  } catch (const GuardExceeded& g) {
    std::cerr << "guard exceeded: " << g.what() << '\n';
    return kGuard;
  }
  std::ostringstream text;
  text << "level " << k << " (" << (enumerated ? "enumerated" : "named_only") << ")\n";
  for (const auto& v : report.verdicts) {
    text << "  " << v.name;
    for (const auto& a : v.aliases) text << " = " << a;
    text << ": " << to_string(v.status);
    if (v.certificate) {
      text << ", witness " << pair_text(v.certificate->witness) << ", zero diagonal at "
           << to_string(v.certificate->failing_index);
    }
    if (v.target) text << " -> (" << *v.target << ", " << *v.target_level << "), grade-1 dim " << *v.grade1_dim;
    if (!v.note.empty()) text << " (" << v.note << ")";
    text << '\n';
  }
  emit(cfg, realization_report_to_json(report), text.str());
  return report.count(VerdictStatus::unmatched) == 0 ? kOk : kVerification;
}

int cmd_embedding(const Config& cfg, int k, const std::string& target) {
  require_format(cfg, false);
  catalog_lookup(target);
  const ModularData md = load(cfg, k);
  const auto check = embedding_check(md, target);
  std::ostringstream text;
  text << "sl3 level " << k << " in " << target << " level 1: " << (check.ok ? "ok" : "fail") << '\n';
  if (check.grade1_dim) text << "  grade-1 dimension " << *check.grade1_dim << " (dim " << check.target_dim << ")\n";
  text << "  c = " << to_string(check.sl3_central_charge) << " vs " << to_string(check.target_central_charge) << '\n';
  text << "  " << check.detail << '\n';
  emit(cfg, embedding_check_to_json(check), text.str());
  return check.ok ? kOk : kVerification;
}

int cmd_catalog(const Config& cfg) {
  require_format(cfg, false);
  std::ostringstream text;
  text << "label rank dim h\n";
  for (const auto& info : catalog()) {
    text << "  " << info.label << "  " << info.rank << "  " << info.dim << "  " << info.dual_coxeter << '\n';
  }
  emit(cfg, catalog_to_json(), text.str());
  return kOk;
}

int cmd_selftest(const Config& cfg, const std::vector<int>& only) {
  require_format(cfg, false);
  AcceptanceOptions opt;
  opt.only = only;
  opt.workers = cfg.workers;
  if (cfg.format != "json") opt.on_result = [](const AcceptanceResult& r) { std::cout << format_result(r) << std::endl; };
  const auto results = run_acceptance(opt);
  json arr = json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    json e{{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"summary", r.summary}};
    if (!r.failures.empty()) e["failures"] = r.failures;
    arr.push_back(std::move(e));
  }
  json j{{"passed", all}, {"criteria", std::move(arr)}};
  if (cfg.format == "json") std::cout << j.dump(2) << '\n';
  write_json_file(cfg, j);
  return all ? kOk : kVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modular invariants and extensions of affine sl3"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  cfg.cache_dir = default_cache_dir().string();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--precision-bits", cfg.precision_bits, "Interval precision")->check(CLI::Range(53, 1 << 20));
  app.add_option("--cache-dir", cfg.cache_dir, "S-matrix cache directory (default $AFFINV_CACHE or .affinv-cache)");
  app.add_option("--json", cfg.json_out, "Also write the JSON result to this file");
  app.add_option("--guard-dim", cfg.guard_dim, "Largest commutant dimension to search")->check(CLI::PositiveNumber);
  app.add_option("--guard-nodes", cfg.guard_nodes, "Search node budget")->check(CLI::PositiveNumber);
  app.add_option("--workers", cfg.workers, "Search threads")->check(CLI::PositiveNumber);

  int level = 0;
  std::string name, input, target;
  bool enumerated = false, named_only = false;
  std::vector<std::int64_t> skip;
  std::vector<int> only;

  auto* smat = app.add_subcommand("smat", "Build, verify and print the S-matrix");
  smat->add_option("--level", level, "Level k")->required();

  auto* inv = app.add_subcommand("invariant", "Named modular invariants");
  inv->require_subcommand(1);
  auto* build = inv->add_subcommand("build", "Build a named invariant (append ^C for the conjugate)");
  build->add_option("--level", level, "Level k")->required();
  build->add_option("--name", name, "A, D, E5, E9_1, E9_2, E21, optionally with ^C")->required();
  auto* verify = inv->add_subcommand("verify", "Check (P1)-(P3)");
  verify->add_option("--level", level, "Level k");
  auto* name_opt = verify->add_option("--name", name, "Named invariant");
  verify->add_option("--input", input, "Invariant JSON file")->excludes(name_opt);

  auto* en = app.add_subcommand("enumerate", "All physical invariants in the commutant");
  en->add_option("--level", level, "Level k")->required();
  en->add_option("--skip-subtrees", skip, "First-level subtrees finished by an earlier run")->delimiter(',');

  auto* cl = app.add_subcommand("classify", "Realization report");
  cl->add_option("--level", level, "Level k")->required();
  auto* en_flag = cl->add_flag("--enumerated", enumerated, "Use enumerated candidates");
  cl->add_flag("--named-only", named_only, "Use named invariants and conjugates (default)")->excludes(en_flag);

  auto* emb = app.add_subcommand("embedding", "Conformal embeddings");
  emb->require_subcommand(1);
  auto* check = emb->add_subcommand("check", "Check grade-1 dimension and central charge");
  check->add_option("--level", level, "Level k")->required();
  check->add_option("--target", target, "Catalog label, e.g. E7")->required();

  auto* cat = app.add_subcommand("catalog", "List the Lie algebra catalog");
  auto* self = app.add_subcommand("selftest", "Run the acceptance suite");
  self->add_option("--only", only, "Criterion ids")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*smat) return cmd_smat(cfg, level);
    if (*build) return cmd_invariant_build(cfg, level, name);
    if (*verify) return cmd_invariant_verify(cfg, level, name, input);
    if (*en) return cmd_enumerate(cfg, level, skip);
    if (*cl) return cmd_classify(cfg, level, enumerated);
    if (*check) return cmd_embedding(cfg, level, target);
    if (*cat) return cmd_catalog(cfg);
    if (*self) return cmd_selftest(cfg, only);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << '\n';
    return kVerification;
  }
  return kUsage;
}
