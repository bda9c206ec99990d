// stanley: depth and Stanley depth of edge ideals of strong products of
// paths and cycles.
//
// Exit codes: 0 all pass, 1 any fail, 2 usage error, 3 inconclusive only.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "stanley/cache.hpp"
#include "stanley/decomposition.hpp"
#include "stanley/graph.hpp"
#include "stanley/homology.hpp"
#include "stanley/partition.hpp"
#include "stanley/replay.hpp"
#include "stanley/serialize.hpp"

using namespace stanley;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

Json meta_block(std::int64_t elapsed_ms, const std::string& cache_state = {}) {
  Json meta;
  meta["elapsed_ms"] = elapsed_ms;
  if (!cache_state.empty()) meta["cache"] = cache_state;
  return meta;
}

struct Timer {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  std::int64_t ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
  }
};

SquarefreeIdeal family_ideal(const FamilySpec& spec) {
  if (spec.family == Family::P || spec.family == Family::C)
    return generators_formula(spec);
  return edge_ideal(build_family(spec).graph);
}

Mod parse_mod(const std::string& name) {
  if (name == "ideal") return Mod::Ideal;
  if (name == "quotient") return Mod::Quotient;
  if (name == "pair") return Mod::Pair;
  throw CLI::ValidationError("--module", "expected ideal|quotient|pair");
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::Pass: return kExitPass;
    case Verdict::Fail: return kExitFail;
    case Verdict::Inconclusive: return kExitInconclusive;
  }
  return kExitFail;
}

std::string bracket(int lo, int hi, bool exact) {
  if (exact) return std::to_string(lo);
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

void print_expectation_line(const std::optional<Expectation>& e) {
  if (!e) {
    std::cout << "expected:  (no stated value)\n";
    return;
  }
  std::cout << "expected:  ";
  switch (e->form) {
    case Expectation::Form::Exact: std::cout << "= " << e->lo; break;
    case Expectation::Form::Range:
      std::cout << "in [" << e->lo << ", " << e->hi << "]";
      break;
    case Expectation::Form::UpperBound: std::cout << "<= " << e->lo; break;
    case Expectation::Form::StrictLowerBound: std::cout << "> " << e->lo; break;
  }
  std::cout << "   (" << e->provenance << ")\n";
}

int cmd_info(const std::string& dsl, bool as_json) {
  FamilySpec spec = FamilySpec::parse(dsl);
  FamilyGraph fam = build_family(spec);
  SquarefreeIdeal ideal = family_ideal(spec);
  auto diam = diameter(fam.graph);

  if (as_json) {
    Json j;
    j["family"] = spec.dsl();
    j["vertices"] = fam.graph.vertex_count();
    j["edges"] = fam.graph.edge_count();
    j["diameter"] = diam ? Json(*diam) : Json();
    j["generators"] = ideal_to_json(ideal, fam.labels);
    std::cout << j.dump(2) << '\n';
    return kExitPass;
  }

  std::cout << "family:    " << spec.dsl() << '\n'
            << "vertices:  " << fam.graph.vertex_count() << '\n'
            << "edges:     " << fam.graph.edge_count() << '\n'
            << "diameter:  " << (diam ? std::to_string(*diam) : "infinite") << '\n'
            << "gens:      " << ideal.gens().size() << '\n';
  std::cout << "generator list:";
  int per_line = 0;
  for (const Support& g : ideal.gens()) {
    if (per_line++ % 6 == 0) std::cout << "\n  ";
    std::string mono;
    for (int i : g.indices()) mono += fam.labels[static_cast<size_t>(i)];
    std::cout << mono << ' ';
  }
  std::cout << '\n';
  return kExitPass;
}

int cmd_depth(const std::string& dsl, const std::string& module, int field_char,
              bool as_json, bool no_cache) {
  Timer timer;
  FamilySpec spec = FamilySpec::parse(dsl);
  Mod mod = parse_mod(module);
  if (mod == Mod::Pair)
    throw CLI::ValidationError("--module", "depth supports ideal|quotient");
  SquarefreeIdeal ideal = family_ideal(spec);
  FieldChar field(field_char);

  ResultCache cache = ResultCache::from_env();
  const std::string key = cache_key(ideal, "depth", field.p);
  std::string cache_state = "miss";
  std::optional<int> quotient_depth;

  if (!no_cache) {
    if (auto hit = cache.get(key)) {
      // Fast re-check: the stored top Betti witness must recompute.
      try {
        int pd = hit->at("pd").get<int>();
        Mask sigma = 0;
        for (int i : hit->at("witness_sigma")) sigma |= bit(i);
        int rank = hit->at("witness_rank").get<int>();
        auto member = membership_bits(ideal);
        std::vector<Mask> faces;
        for_each_submask(sigma, [&](Mask f) {
          if (!get_bit(member, f)) faces.push_back(f);
        });
        auto dims = reduced_homology_dims(faces, field);
        int c = popcount(sigma) - pd;
        bool ok = c >= 0 && c < static_cast<int>(dims.size()) &&
                  dims[static_cast<size_t>(c)] == rank;
        if (ok) {
          quotient_depth = ideal.ambient() - pd;
          cache_state = "hit";
        } else {
          std::cerr << "warning: cache entry failed re-verification; recomputing\n";
        }
      } catch (const std::exception&) {
        std::cerr << "warning: malformed cache entry ignored\n";
      }
    }
  }

  if (!quotient_depth) {
    BettiTable table = hochster_betti(ideal, field);
    int pd = table.projective_dimension();
    quotient_depth = ideal.ambient() - pd;
    // Store the extreme Betti entry as re-verifiable evidence.
    for (const auto& [key2, rank] : table.entries()) {
      if (key2.first != pd) continue;
      Json payload;
      payload["schema"] = "depth-cache/1";
      payload["char"] = field.p;
      payload["depth"] = *quotient_depth;
      payload["pd"] = pd;
      payload["witness_sigma"] = support_to_json(Support(key2.second, ideal.ambient()));
      payload["witness_rank"] = rank;
      if (!no_cache) cache.put(key, payload);
      break;
    }
  }

  int value = *quotient_depth + (mod == Mod::Ideal ? 1 : 0);
  auto expectation = expected_value(spec, Measure::Depth, mod);
  Verdict verdict =
      expectation ? judge(*expectation, value, value, true) : Verdict::Pass;

  if (as_json) {
    Json j;
    j["meta"] = meta_block(timer.ms(), cache_state);
    j["family"] = spec.dsl();
    j["measure"] = "depth";
    j["module"] = mod_name(mod);
    j["char"] = field.p;
    j["value"] = value;
    j["expectation"] = expectation ? expectation_to_json(*expectation) : Json();
    j["verdict"] = verdict_name(verdict);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "depth(" << (mod == Mod::Ideal ? "I" : "S/I") << ") for "
              << spec.dsl() << " over GF(" << field.p << "): " << value << '\n';
    print_expectation_line(expectation);
    std::cout << "verdict:   " << verdict_name(verdict) << '\n';
  }
  return verdict_exit(verdict);
}

int cmd_sdepth(const std::string& dsl, const std::string& module, double budget_s,
               bool as_json, bool no_cache) {
  Timer timer;
  FamilySpec spec = FamilySpec::parse(dsl);
  Mod mod = parse_mod(module);
  if (mod == Mod::Pair && spec.family != Family::C)
    throw CLI::ValidationError("--module",
                               "the pair module compares C:n,m against P:n,m");
  Duration budget{static_cast<std::int64_t>(budget_s * 1000)};

  SquarefreeIdeal inner = mod == Mod::Pair
                              ? generators_formula(FamilySpec{Family::P, spec.shape})
                              : family_ideal(spec);
  std::optional<SquarefreeIdeal> outer;
  if (mod == Mod::Pair) outer = generators_formula(spec);

  ResultCache cache = ResultCache::from_env();
  std::string kind = "sdepth:" + mod_name(mod);
  if (outer) kind += ":outer=" + cache_key(*outer, "pair-outer", 0);
  const std::string key = cache_key(inner, kind, 0);
  std::string cache_state = "miss";

  auto descriptor = [&] {
    switch (mod) {
      case Mod::Ideal: return ModuleDescriptor::ideal(inner);
      case Mod::Quotient: return ModuleDescriptor::quotient(inner);
      default: return ModuleDescriptor::pair(inner, *outer);
    }
  }();
  CharPoset poset(descriptor);

  std::optional<SdepthResult> result;
  if (!no_cache) {
    if (auto hit = cache.get(key)) {
      try {
        SdepthResult cached;
        cached.lower = hit->at("lower").get<int>();
        cached.upper = hit->at("upper").get<int>();
        cached.exact = hit->at("exact").get<bool>();
        if (hit->contains("witness") && !hit->at("witness").is_null()) {
          PartitionWitness witness = witness_from_json(hit->at("witness"));
          if (verify_witness(poset, witness, cached.lower)) {
            cached.witness = std::move(witness);
            result = std::move(cached);
            cache_state = "hit";
          } else {
            std::cerr << "warning: cached witness failed re-verification; recomputing\n";
          }
        }
      } catch (const std::exception&) {
        std::cerr << "warning: malformed cache entry ignored\n";
      }
    }
  }

  if (!result) {
    result = sdepth_exact(poset, budget);
    if (!no_cache && result->witness)
      cache.put(key, sdepth_result_to_json(*result, poset.ambient()));
  }

  auto expectation = expected_value(spec, Measure::Sdepth, mod);
  Verdict verdict = expectation ? judge(*expectation, result->lower, result->upper,
                                        result->exact)
                                : Verdict::Pass;

  if (as_json) {
    Json j;
    j["meta"] = meta_block(timer.ms(), cache_state);
    j["family"] = spec.dsl();
    j["measure"] = "sdepth";
    j["module"] = mod_name(mod);
    j["result"] = sdepth_result_to_json(*result, poset.ambient());
    j["expectation"] = expectation ? expectation_to_json(*expectation) : Json();
    j["verdict"] = verdict_name(verdict);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "sdepth(" << mod_name(mod) << ") for " << spec.dsl() << ": "
              << bracket(result->lower, result->upper, result->exact) << '\n';
    if (result->budget_hit)
      std::cout << "note:      budget exhausted; bounds are certified, value open\n";
    print_expectation_line(expectation);
    std::cout << "verdict:   " << verdict_name(verdict) << '\n';
  }
  if (result->budget_hit && verdict == Verdict::Pass) return kExitInconclusive;
  return verdict_exit(verdict);
}

int cmd_replay(const std::string& suite, int max_vars, double budget_s,
               const std::string& out_path, bool enable_stretch) {
  if (suite == "stretch" && !enable_stretch) {
    std::cerr << "the stretch suite runs 2^16-subset sweeps and hour-scale "
                 "searches; pass --enable-stretch to confirm\n";
    return kExitUsage;
  }
  SuiteLimits limits;
  limits.max_vars = max_vars;
  limits.budget = Duration{static_cast<std::int64_t>(budget_s * 1000)};
  limits.stretch_ok = enable_stretch;

  Report report = run_suite(suite, limits);

  for (const ReportRow& row : report.rows) {
    std::cout << verdict_name(row.verdict) << "  " << row.family << "  "
              << measure_name(row.measure) << "(" << mod_name(row.mod) << ") = "
              << bracket(row.computed_lo, row.computed_hi, row.exact);
    if (!row.note.empty()) std::cout << "  [" << row.note << "]";
    std::cout << '\n';
  }
  int pass = 0, fail = 0, inconclusive = 0;
  for (const ReportRow& row : report.rows) {
    if (row.verdict == Verdict::Pass) ++pass;
    else if (row.verdict == Verdict::Fail) ++fail;
    else ++inconclusive;
  }
  std::cout << "suite " << suite << ": " << pass << " pass, " << fail << " fail, "
            << inconclusive << " inconclusive\n";

  if (!out_path.empty()) {
    std::ofstream json_out(out_path);
    if (!json_out) {
      std::cerr << "cannot write " << out_path << '\n';
      return kExitFail;
    }
    json_out << report_to_json(report).dump(2) << '\n';
    std::string csv_path = out_path;
    if (auto dot = csv_path.rfind(".json"); dot != std::string::npos)
      csv_path = csv_path.substr(0, dot);
    csv_path += ".csv";
    std::ofstream csv_out(csv_path);
    csv_out << report_to_csv(report);
    std::cout << "report written to " << out_path << " and " << csv_path << '\n';
  }

  if (fail > 0) return kExitFail;
  if (inconclusive > 0) return kExitInconclusive;
  return kExitPass;
}

int cmd_verify_decomp(const std::string& family, int n, double budget_s,
                      bool as_json) {
  Duration budget{static_cast<std::int64_t>(budget_s * 1000)};
  StanleyDecomposition dec = family == "C2quot" ? c2_pair_decomposition(n, budget)
                                                : c3_pair_decomposition(n, budget);
  auto check = verify_decomposition(dec);
  int bound = (n + 2 + 2) / 3;

  if (as_json) {
    Json j;
    j["family"] = family;
    j["n"] = n;
    j["spaces"] = dec.spaces.size();
    j["verified"] = check.ok;
    j["min_dimension"] = dec.min_dimension();
    j["lower_bound"] = bound;
    j["meets_bound"] = check.ok && dec.min_dimension() >= bound;
    if (!check.ok) {
      j["violation_pattern"] = check.pattern;
      j["violation_count"] = check.count;
    }
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << "decomposition " << family << " at n=" << n << ": "
              << dec.spaces.size() << " spaces\n";
    if (check.ok) {
      std::cout << "verified:  exact cover\n"
                << "min dim:   " << dec.min_dimension() << "  (needs >= " << bound
                << ", ceil((n+2)/3))\n";
    } else {
      std::cout << "FAILED: pattern covered " << check.count << " times\n";
    }
  }
  return check.ok && dec.min_dimension() >= bound ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"depth and Stanley depth of strong-product edge ideals"};
  app.require_subcommand(1);

  std::string dsl, module = "quotient", suite, out_path, decomp_family;
  int field_char = 2, max_vars = 12, decomp_n = 5;
  double budget_s = 60.0;
  bool as_json = false, no_cache = false, enable_stretch = false;

  auto* info = app.add_subcommand(
      "info", "vertices, edges, diameter and generators of a family graph");
  info->add_option("family", dsl, "family spec, e.g. P:6,4 or Cdiamond:8")->required();
  info->add_flag("--json", as_json, "machine-readable output");

  auto* depth = app.add_subcommand("depth", "exact depth via Betti numbers over GF(p)");
  depth->add_option("family", dsl)->required();
  depth->add_option("--module", module, "ideal|quotient (default quotient)");
  depth->add_option("--char", field_char, "field characteristic (prime, default 2)");
  depth->add_flag("--json", as_json);
  depth->add_flag("--no-cache", no_cache, "skip the result cache");

  auto* sdepth = app.add_subcommand(
      "sdepth", "exact Stanley depth via interval partitions of the support poset");
  sdepth->add_option("family", dsl)->required();
  sdepth->add_option("--module", module, "ideal|quotient|pair (default quotient)");
  sdepth->add_option("--budget", budget_s, "seconds per decision call (default 60)");
  sdepth->add_flag("--json", as_json);
  sdepth->add_flag("--no-cache", no_cache);

  auto* replay = app.add_subcommand("replay", "run a reference-value suite");
  replay
      ->add_option("--suite", suite,
                   "m1|m2|m3|aux|pairs|conjecture|bounds|stretch|identities")
      ->required();
  replay->add_option("--max-vars", max_vars, "ambient variable cap (default 12)");
  replay->add_option("--budget", budget_s, "seconds per decision call");
  replay->add_option("--out", out_path, "write the report JSON (and CSV) here");
  replay->add_flag("--enable-stretch", enable_stretch,
                   "opt into the long-running stretch computations");

  auto* verify = app.add_subcommand(
      "verify-decomp", "build and verify an explicit pair decomposition");
  verify->add_option("--family", decomp_family, "C2quot|C3quot")
      ->required()
      ->check(CLI::IsMember({"C2quot", "C3quot"}));
  verify->add_option("--n", decomp_n, "strip length")->required();
  verify->add_option("--budget", budget_s, "seconds per inner decision call");
  verify->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(dsl, as_json);
    if (depth->parsed()) return cmd_depth(dsl, module, field_char, as_json, no_cache);
    if (sdepth->parsed()) return cmd_sdepth(dsl, module, budget_s, as_json, no_cache);
    if (replay->parsed())
      return cmd_replay(suite, max_vars, budget_s, out_path, enable_stretch);
    if (verify->parsed())
      return cmd_verify_decomp(decomp_family, decomp_n, budget_s, as_json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << '\n';
    return kExitUsage;
  } catch (const invalid_shape_error& e) {
    std::cerr << "invalid shape: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
