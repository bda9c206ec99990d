#ifndef STANLEY_SERIALIZE_HPP
#define STANLEY_SERIALIZE_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "stanley/decomposition.hpp"
#include "stanley/homology.hpp"
#include "stanley/ideal.hpp"
#include "stanley/partition.hpp"
#include "stanley/replay.hpp"

namespace stanley {

// All emitted JSON uses insertion-ordered objects so identical inputs give
// byte-identical output; run timing lives only in the "meta" header block.
using Json = nlohmann::ordered_json;

Json support_to_json(const Support& s);

Json ideal_to_json(const SquarefreeIdeal& ideal,
                   const std::vector<std::string>& labels = {});
SquarefreeIdeal ideal_from_json(const Json& j);

Json decomposition_to_json(const StanleyDecomposition& dec);
Json spaces_to_json(const std::vector<StanleySpace>& spaces, int ambient);
std::vector<StanleySpace> spaces_from_json(const Json& j);

Json witness_to_json(const PartitionWitness& witness, int ambient);
PartitionWitness witness_from_json(const Json& j);

Json betti_to_json(const BettiTable& table, int ambient, int field_char);

Json sdepth_result_to_json(const SdepthResult& result, int ambient);

Json expectation_to_json(const Expectation& e);

// Deterministic body plus a meta block holding the timestamp and timings.
Json report_to_json(const Report& report, bool with_meta = true);
std::string report_to_csv(const Report& report);

}  // namespace stanley

#endif
