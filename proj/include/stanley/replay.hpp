#ifndef STANLEY_REPLAY_HPP
#define STANLEY_REPLAY_HPP

#include <optional>
#include <string>
#include <vector>

#include "stanley/graph.hpp"
#include "stanley/homology.hpp"
#include "stanley/partition.hpp"

namespace stanley {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kAlgoVersion = "1";

enum class Measure { Depth, Sdepth };
enum class Mod { Ideal, Quotient, Pair };

std::string measure_name(Measure m);
std::string mod_name(Mod m);

// A reference value or bound for one (family, measure, module) triple.
struct Expectation {
  enum class Form { Exact, Range, UpperBound, StrictLowerBound };
  Form form = Form::Exact;
  int lo = 0;
  int hi = 0;  // Exact: lo == hi; UpperBound/StrictLowerBound use lo only
  std::string provenance;

  static Expectation exact(int v, std::string why);
  static Expectation range(int lo, int hi, std::string why);
  static Expectation upper_bound(int v, std::string why);
  static Expectation strict_lower_bound(int v, std::string why);
};

// The table of known closed forms and bounds for these families; returns
// nothing for combinations without a stated value.
std::optional<Expectation> expected_value(const FamilySpec& spec, Measure measure,
                                          Mod mod);

enum class Verdict { Pass, Fail, Inconclusive };

std::string verdict_name(Verdict v);

struct ReportRow {
  std::string family;  // family DSL, or a label for identity rows
  Measure measure = Measure::Depth;
  Mod mod = Mod::Quotient;
  std::optional<Expectation> expectation;
  int computed_lo = 0;
  int computed_hi = 0;
  bool exact = true;
  Verdict verdict = Verdict::Pass;
  std::string note;
  std::int64_t elapsed_ms = 0;
};

struct Report {
  std::string suite;
  int field_char = 2;
  std::string tool_version = kToolVersion;
  std::vector<ReportRow> rows;

  bool any_fail() const;
  bool any_inconclusive() const;
};

// Verdict of a computed bracket [lo, hi] (lo == hi when exact) against an
// expectation. Inconclusive can only arise from an inexact bracket.
Verdict judge(const Expectation& e, int lo, int hi, bool exact);

struct SuiteLimits {
  int max_vars = 12;
  Duration budget = Duration{30000};  // per decision call
  bool stretch_ok = false;
};

// Deterministic suites keyed by id: m1, m2, m3, aux, pairs, conjecture,
// bounds, stretch. Unknown ids throw; the stretch suite refuses to run
// unless limits.stretch_ok is set.
Report run_suite(const std::string& suite_id, const SuiteLimits& limits);

// Replays the colon/sum identities behind the closed forms: rebuilds both
// sides of each displayed identity (colon or sum on one side, a renumbered
// family ideal plus killed and free variables on the other), checks
// generator-set equality, and checks the depth shift against the free-
// variable extension rule.
Report colon_identity_checks(const SuiteLimits& limits);

const std::vector<std::string>& suite_names();

}  // namespace stanley

#endif
