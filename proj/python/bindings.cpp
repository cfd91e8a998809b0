// Thin bindings: every call returns a JSON string that the Python package
// decodes, so the schemas match the CLI exactly.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "affinv/commutant.hpp"
#include "affinv/extensions.hpp"
#include "affinv/invariants.hpp"
#include "affinv/io.hpp"
#include "affinv/modular_data.hpp"

namespace py = pybind11;
using namespace affinv;
using nlohmann::json;

namespace {

const ModularData& modular_data(int k, const std::optional<std::string>& cache_dir) {
  static std::mutex mu;
  static std::map<int, ModularData> memo;
  std::lock_guard lock(mu);
  auto it = memo.find(k);
  if (it == memo.end()) {
    ModularData md = cache_dir ? load_or_build_modular_data(k, *cache_dir) : build_modular_data(k);
    it = memo.emplace(k, std::move(md)).first;
  }
  return it->second;
}

EnumerationOptions options(std::size_t guard_dim, std::uint64_t guard_nodes, unsigned workers) {
  EnumerationOptions opt;
  opt.guard_dim = guard_dim;
  opt.guard_nodes = guard_nodes;
  opt.workers = workers;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_affinv, m) {
  m.doc() = "Modular invariants and extensions of affine sl3";

  static py::exception<GuardExceeded> guard_exc(m, "GuardExceeded", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const GuardExceeded& e) {
      json partial = json::array();
      for (const auto& x : e.partial_results) partial.push_back(invariant_to_json(x));
      json payload{{"message", e.what()}, {"completed_subtrees", e.completed_subtrees}, {"partial", partial}};
      py::set_error(guard_exc, payload.dump().c_str());
    }
  });

  m.def("format_version", [] { return kFormatVersion; });

  m.def(
      "smat",
      [](int k, std::optional<std::string> cache_dir) {
        py::gil_scoped_release release;
        const auto& md = modular_data(k, cache_dir);
        json j = modular_data_to_json(md);
        json t = json::array();
        for (const auto& v : md.t_exponents) t.push_back(to_string(v));
        j["t_exponents"] = std::move(t);
        j["central_charge"] = to_string(md.central_charge);
        j["verification"] = verification_to_json(verify_modular_data(md));
        return j.dump();
      },
      py::arg("level"), py::arg("cache_dir") = py::none());

  m.def(
      "build_invariant", [](int k, const std::string& name) { return invariant_to_json(build_named(k, name)).dump(); },
      py::arg("level"), py::arg("name"));

  m.def(
      "verify_invariant",
      [](const std::string& text, std::optional<std::string> cache_dir) {
        const auto x = invariant_from_json(json::parse(text));
        py::gil_scoped_release release;
        json j = invariant_report_to_json(is_modular_invariant(x, modular_data(x.level(), cache_dir)));
        j["level"] = x.level();
        return j.dump();
      },
      py::arg("invariant_json"), py::arg("cache_dir") = py::none());

  m.def(
      "enumerate",
      [](int k, std::size_t guard_dim, std::uint64_t guard_nodes, unsigned workers, std::optional<std::string> cache_dir) {
        py::gil_scoped_release release;
        const auto r = enumerate_physical(modular_data(k, cache_dir), options(guard_dim, guard_nodes, workers));
        json list = json::array();
        for (const auto& x : r.invariants) list.push_back(invariant_to_json(x));
        return json{{"format_version", kFormatVersion},
                    {"level", k},
                    {"complete", r.complete},
                    {"commutant_dim", r.commutant_dim},
                    {"count", r.invariants.size()},
                    {"invariants", list}}
            .dump();
      },
      py::arg("level"), py::arg("guard_dim") = 64, py::arg("guard_nodes") = 100'000'000ULL, py::arg("workers") = 1,
      py::arg("cache_dir") = py::none());

  m.def(
      "classify",
      [](int k, bool enumerated, std::size_t guard_dim, std::uint64_t guard_nodes, unsigned workers,
         std::optional<std::string> cache_dir) {
        py::gil_scoped_release release;
        const auto mode = enumerated ? ClassifyMode::enumerated : ClassifyMode::named_only;
        return realization_report_to_json(
                   classify(modular_data(k, cache_dir), mode, options(guard_dim, guard_nodes, workers)))
            .dump();
      },
      py::arg("level"), py::arg("enumerated") = false, py::arg("guard_dim") = 64,
      py::arg("guard_nodes") = 100'000'000ULL, py::arg("workers") = 1, py::arg("cache_dir") = py::none());

  m.def(
      "embedding_check",
      [](int k, const std::string& target, std::optional<std::string> cache_dir) {
        catalog_lookup(target);
        py::gil_scoped_release release;
        return embedding_check_to_json(embedding_check(modular_data(k, cache_dir), target)).dump();
      },
      py::arg("level"), py::arg("target"), py::arg("cache_dir") = py::none());

  m.def("catalog", [] { return catalog_to_json().dump(); });

  m.def(
      "dominant_weights",
      [](int k) {
        std::vector<std::pair<int, int>> out;
        for (const auto& w : dominant_weights(k)) out.emplace_back(w.m, w.n);
        return out;
      },
      py::arg("level"));

  m.def(
      "conformal_weight",
      [](int k, int m, int n) { return to_string(conformal_weight(k, Weight::unshifted_weight(m, n))); },
      py::arg("level"), py::arg("m"), py::arg("n"));
}
