#include <doctest.h>

#include <cstdlib>
#include <filesystem>

#include "stanley/cache.hpp"
#include "stanley/serialize.hpp"

using namespace stanley;

TEST_CASE("ideal json round trip") {
  SquarefreeIdeal ideal = generators_formula(FamilySpec::parse("C:4,2"));
  Json j = ideal_to_json(ideal, build_family(FamilySpec::parse("C:4,2")).labels);
  CHECK(j["ambient"] == 8);
  CHECK(j["labels"][0] == "x1");
  CHECK(ideal_from_json(j) == ideal);
}

TEST_CASE("witness and decomposition json round trip") {
  CharPoset poset(
      ModuleDescriptor::quotient(generators_formula(FamilySpec::parse("P:3,1"))));
  SdepthResult r = sdepth_exact(poset, Duration{60 * 1000});
  REQUIRE(r.witness.has_value());
  Json j = witness_to_json(*r.witness, poset.ambient());
  PartitionWitness back = witness_from_json(j);
  CHECK(verify_witness(poset, back, r.lower));

  StanleyDecomposition dec = partition_to_decomposition(poset, *r.witness);
  Json dj = decomposition_to_json(dec);
  CHECK(dj["min_dimension"] == dec.min_dimension());
  auto spaces = spaces_from_json(dj);
  CHECK(spaces.size() == dec.spaces.size());
}

TEST_CASE("betti export embeds the field characteristic") {
  SquarefreeIdeal ideal(2, {Support(0b11, 2)});
  Json j = betti_to_json(hochster_betti(ideal, FieldChar{}), 2, 2);
  CHECK(j["char"] == 2);
  CHECK(j["entries"].size() == 2);
}

TEST_CASE("report csv has one line per row plus the header") {
  SuiteLimits limits;
  limits.max_vars = 6;
  Report report = run_suite("m1", limits);
  std::string csv = report_to_csv(report);
  size_t lines = static_cast<size_t>(std::count(csv.begin(), csv.end(), '\n'));
  CHECK(lines == report.rows.size() + 1);
}

TEST_CASE("cache keys and round trip") {
  // Equal ideals from different construction routes share a key.
  FamilySpec spec = FamilySpec::parse("P:4,2");
  SquarefreeIdeal a = generators_formula(spec);
  SquarefreeIdeal b = edge_ideal(build_family(spec).graph);
  CHECK(cache_key(a, "depth", 2) == cache_key(b, "depth", 2));
  CHECK(cache_key(a, "depth", 2) != cache_key(a, "depth", 3));
  CHECK(cache_key(a, "depth", 2) != cache_key(a, "sdepth:quotient", 2));

  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "stanley-cache-unit";
  std::filesystem::remove_all(dir);
  ResultCache cache(dir);
  CHECK_FALSE(cache.get("absent").has_value());
  Json payload;
  payload["depth"] = 2;
  cache.put(cache_key(a, "depth", 2), payload);
  auto hit = cache.get(cache_key(b, "depth", 2));
  REQUIRE(hit.has_value());
  CHECK((*hit)["depth"] == 2);
  std::filesystem::remove_all(dir);
}
