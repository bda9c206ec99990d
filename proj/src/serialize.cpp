#include "stanley/serialize.hpp"

#include <chrono>
#include <ctime>
#include <sstream>

namespace stanley {

namespace {

std::vector<int> index_list(const Json& j) {
  std::vector<int> out;
  for (const auto& v : j) out.push_back(v.get<int>());
  return out;
}

std::string iso_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

Json support_to_json(const Support& s) { return Json(s.indices()); }

Json ideal_to_json(const SquarefreeIdeal& ideal, const std::vector<std::string>& labels) {
  Json j;
  j["schema"] = "ideal/1";
  j["ambient"] = ideal.ambient();
  Json gens = Json::array();
  for (const Support& g : ideal.gens()) gens.push_back(support_to_json(g));
  j["gens"] = std::move(gens);
  if (!labels.empty()) j["labels"] = labels;
  return j;
}

SquarefreeIdeal ideal_from_json(const Json& j) {
  int ambient = j.at("ambient").get<int>();
  std::vector<Support> gens;
  for (const auto& g : j.at("gens")) gens.push_back(Support::of(index_list(g), ambient));
  return SquarefreeIdeal(ambient, std::move(gens));
}

Json spaces_to_json(const std::vector<StanleySpace>& spaces, int ambient) {
  Json j;
  j["schema"] = "decomposition/1";
  j["ambient"] = ambient;
  Json arr = Json::array();
  for (const StanleySpace& s : spaces) {
    Json space;
    space["w"] = support_to_json(s.w);
    space["free"] = support_to_json(s.free_vars);
    arr.push_back(std::move(space));
  }
  j["spaces"] = std::move(arr);
  return j;
}

Json decomposition_to_json(const StanleyDecomposition& dec) {
  Json j = spaces_to_json(dec.spaces, dec.target.ambient());
  j["min_dimension"] = dec.min_dimension();
  return j;
}

std::vector<StanleySpace> spaces_from_json(const Json& j) {
  int ambient = j.at("ambient").get<int>();
  std::vector<StanleySpace> out;
  for (const auto& s : j.at("spaces"))
    out.push_back({Support::of(index_list(s.at("w")), ambient),
                   Support::of(index_list(s.at("free")), ambient)});
  return out;
}

Json witness_to_json(const PartitionWitness& witness, int ambient) {
  Json j;
  j["schema"] = "witness/1";
  j["ambient"] = ambient;
  Json arr = Json::array();
  for (const Interval& iv : witness.intervals) {
    Json interval;
    interval["lo"] = support_to_json(iv.lo);
    interval["hi"] = support_to_json(iv.hi);
    arr.push_back(std::move(interval));
  }
  j["intervals"] = std::move(arr);
  return j;
}

PartitionWitness witness_from_json(const Json& j) {
  int ambient = j.at("ambient").get<int>();
  PartitionWitness witness;
  for (const auto& iv : j.at("intervals"))
    witness.intervals.push_back({Support::of(index_list(iv.at("lo")), ambient),
                                 Support::of(index_list(iv.at("hi")), ambient)});
  return witness;
}

Json betti_to_json(const BettiTable& table, int ambient, int field_char) {
  Json j;
  j["schema"] = "betti/1";
  j["ambient"] = ambient;
  j["char"] = field_char;
  Json arr = Json::array();
  for (const auto& [key, rank] : table.entries()) {
    Json entry;
    entry["i"] = key.first;
    entry["sigma"] = support_to_json(Support(key.second, ambient));
    entry["rank"] = rank;
    arr.push_back(std::move(entry));
  }
  j["entries"] = std::move(arr);
  return j;
}

Json sdepth_result_to_json(const SdepthResult& result, int ambient) {
  Json j;
  j["schema"] = "sdepth/1";
  j["lower"] = result.lower;
  j["upper"] = result.upper;
  j["exact"] = result.exact;
  j["budget_hit"] = result.budget_hit;
  if (result.witness) j["witness"] = witness_to_json(*result.witness, ambient);
  return j;
}

Json expectation_to_json(const Expectation& e) {
  Json j;
  switch (e.form) {
    case Expectation::Form::Exact:
      j["form"] = "exact";
      j["value"] = e.lo;
      break;
    case Expectation::Form::Range:
      j["form"] = "range";
      j["lo"] = e.lo;
      j["hi"] = e.hi;
      break;
    case Expectation::Form::UpperBound:
      j["form"] = "upper_bound";
      j["value"] = e.lo;
      break;
    case Expectation::Form::StrictLowerBound:
      j["form"] = "strict_lower_bound";
      j["value"] = e.lo;
      break;
  }
  j["provenance"] = e.provenance;
  return j;
}

Json report_to_json(const Report& report, bool with_meta) {
  Json j;
  j["schema"] = "report/1";
  if (with_meta) {
    Json meta;
    meta["generated_at"] = iso_timestamp();
    Json elapsed = Json::array();
    for (const ReportRow& row : report.rows) elapsed.push_back(row.elapsed_ms);
    meta["row_elapsed_ms"] = std::move(elapsed);
    j["meta"] = std::move(meta);
  }
  j["suite"] = report.suite;
  j["char"] = report.field_char;
  j["tool_version"] = report.tool_version;
  Json rows = Json::array();
  for (const ReportRow& row : report.rows) {
    Json r;
    r["family"] = row.family;
    r["measure"] = measure_name(row.measure);
    r["module"] = mod_name(row.mod);
    r["expectation"] = row.expectation ? expectation_to_json(*row.expectation) : Json();
    Json computed;
    computed["lo"] = row.computed_lo;
    computed["hi"] = row.computed_hi;
    computed["exact"] = row.exact;
    r["computed"] = std::move(computed);
    r["verdict"] = verdict_name(row.verdict);
    r["note"] = row.note;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  return j;
}

std::string report_to_csv(const Report& report) {
  std::ostringstream out;
  out << "family,measure,module,form,expected_lo,expected_hi,computed_lo,"
         "computed_hi,exact,verdict,note,elapsed_ms\n";
  for (const ReportRow& row : report.rows) {
    out << csv_escape(row.family) << ',' << measure_name(row.measure) << ','
        << mod_name(row.mod) << ',';
    if (row.expectation) {
      switch (row.expectation->form) {
        case Expectation::Form::Exact: out << "exact"; break;
        case Expectation::Form::Range: out << "range"; break;
        case Expectation::Form::UpperBound: out << "upper_bound"; break;
        case Expectation::Form::StrictLowerBound: out << "strict_lower_bound"; break;
      }
      out << ',' << row.expectation->lo << ',' << row.expectation->hi << ',';
    } else {
      out << ",,,";
    }
    out << row.computed_lo << ',' << row.computed_hi << ','
        << (row.exact ? "true" : "false") << ',' << verdict_name(row.verdict) << ','
        << csv_escape(row.note) << ',' << row.elapsed_ms << '\n';
  }
  return out.str();
}

}  // namespace stanley
