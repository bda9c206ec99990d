#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "stanley/cache.hpp"
#include "stanley/decomposition.hpp"
#include "stanley/graph.hpp"
#include "stanley/homology.hpp"
#include "stanley/partition.hpp"
#include "stanley/replay.hpp"
#include "stanley/serialize.hpp"

namespace py = pybind11;
using namespace stanley;

namespace {

py::object json_to_py(const Json& j) {
  switch (j.type()) {
    case Json::value_t::null: return py::none();
    case Json::value_t::boolean: return py::bool_(j.get<bool>());
    case Json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case Json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case Json::value_t::number_float: return py::float_(j.get<double>());
    case Json::value_t::string: return py::str(j.get<std::string>());
    case Json::value_t::array: {
      py::list list;
      for (const auto& item : j) list.append(json_to_py(item));
      return list;
    }
    case Json::value_t::object: {
      py::dict dict;
      for (auto it = j.begin(); it != j.end(); ++it)
        dict[py::str(it.key())] = json_to_py(it.value());
      return dict;
    }
    default: return py::none();
  }
}

SquarefreeIdeal ideal_for(const FamilySpec& spec) {
  if (spec.family == Family::P || spec.family == Family::C)
    return generators_formula(spec);
  return edge_ideal(build_family(spec).graph);
}

Duration seconds(double s) { return Duration{static_cast<std::int64_t>(s * 1000)}; }

ModuleDescriptor descriptor_for(const FamilySpec& spec, const std::string& module) {
  if (module == "pair") {
    if (spec.family != Family::C)
      throw std::invalid_argument("pair module compares C:n,m against P:n,m");
    return ModuleDescriptor::pair(generators_formula(FamilySpec{Family::P, spec.shape}),
                                  generators_formula(spec));
  }
  SquarefreeIdeal ideal = ideal_for(spec);
  if (module == "ideal") return ModuleDescriptor::ideal(std::move(ideal));
  if (module == "quotient") return ModuleDescriptor::quotient(std::move(ideal));
  throw std::invalid_argument("module must be ideal|quotient|pair");
}

}  // namespace

PYBIND11_MODULE(_stanley, m) {
  m.doc() =
      "Depth and Stanley depth of edge ideals of strong products of paths "
      "and cycles.";

  m.def(
      "info",
      [](const std::string& dsl) {
        FamilySpec spec = FamilySpec::parse(dsl);
        FamilyGraph fam = build_family(spec);
        auto diam = diameter(fam.graph);
        Json j;
        j["family"] = spec.dsl();
        j["vertices"] = fam.graph.vertex_count();
        j["edges"] = fam.graph.edge_count();
        j["diameter"] = diam ? Json(*diam) : Json();
        return json_to_py(j);
      },
      py::arg("family"),
      "Vertex count, edge count and diameter of a family graph.");

  m.def(
      "generators",
      [](const std::string& dsl) {
        FamilySpec spec = FamilySpec::parse(dsl);
        FamilyGraph fam = build_family(spec);
        return json_to_py(ideal_to_json(ideal_for(spec), fam.labels));
      },
      py::arg("family"),
      "Minimal generator supports of the family's edge ideal.");

  m.def(
      "depth",
      [](const std::string& dsl, const std::string& module, int p) {
        FamilySpec spec = FamilySpec::parse(dsl);
        if (module == "ideal") return depth_ideal(ideal_for(spec), FieldChar(p));
        if (module == "quotient") return depth_quotient(ideal_for(spec), FieldChar(p));
        throw std::invalid_argument("module must be ideal|quotient");
      },
      py::arg("family"), py::arg("module") = "quotient", py::arg("p") = 2,
      "Exact depth via Betti numbers over GF(p).");

  m.def(
      "sdepth",
      [](const std::string& dsl, const std::string& module, double budget_s) {
        FamilySpec spec = FamilySpec::parse(dsl);
        auto descriptor = descriptor_for(spec, module);
        SdepthResult result = sdepth_exact(descriptor, seconds(budget_s));
        Json j = sdepth_result_to_json(result, descriptor.ambient());
        return json_to_py(j);
      },
      py::arg("family"), py::arg("module") = "quotient", py::arg("budget_s") = 60.0,
      "Exact Stanley depth (with witness) via interval partitions.");

  m.def(
      "verify_decomposition",
      [](const std::string& family, int n, double budget_s) {
        StanleyDecomposition dec = family == "C2quot"
                                       ? c2_pair_decomposition(n, seconds(budget_s))
                                       : c3_pair_decomposition(n, seconds(budget_s));
        auto check = verify_decomposition(dec);
        Json j;
        j["verified"] = check.ok;
        j["spaces"] = dec.spaces.size();
        j["min_dimension"] = dec.min_dimension();
        j["lower_bound"] = (n + 2 + 2) / 3;
        return json_to_py(j);
      },
      py::arg("family"), py::arg("n"), py::arg("budget_s") = 60.0,
      "Build and verify one of the explicit pair decompositions "
      "(family C2quot or C3quot).");

  m.def(
      "run_suite",
      [](const std::string& suite, int max_vars, double budget_s, bool stretch_ok) {
        SuiteLimits limits;
        limits.max_vars = max_vars;
        limits.budget = seconds(budget_s);
        limits.stretch_ok = stretch_ok;
        return json_to_py(report_to_json(run_suite(suite, limits), false));
      },
      py::arg("suite"), py::arg("max_vars") = 12, py::arg("budget_s") = 30.0,
      py::arg("stretch_ok") = false,
      "Run a reference-value suite and return the report rows.");

  m.attr("__version__") = kToolVersion;
}
