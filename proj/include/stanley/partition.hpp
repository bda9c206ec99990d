#ifndef STANLEY_PARTITION_HPP
#define STANLEY_PARTITION_HPP

#include <chrono>
#include <optional>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/support.hpp"

namespace stanley {

using Duration = std::chrono::milliseconds;
inline constexpr Duration kNoBudget{0};  // 0 means unlimited

// Characteristic poset of a module: the squarefree supports that belong to
// it, with membership precomputed as a bitset over all 2^ambient supports.
// Ideal posets are up-closed, quotient posets down-closed, pair posets an
// up-closed set minus an up-closed subset; in all three cases lo and hi in
// the poset makes the whole interval [lo, hi] lie in the poset.
class CharPoset {
 public:
  explicit CharPoset(ModuleDescriptor descriptor);

  const ModuleDescriptor& descriptor() const { return descriptor_; }
  int ambient() const { return descriptor_.ambient(); }
  bool member(Mask sigma) const { return get_bit(member_bits_, sigma); }
  std::size_t size() const { return size_; }

  // Members of each cardinality, lex-sorted.
  const std::vector<std::vector<Mask>>& by_cardinality() const { return by_card_; }

  // Smallest member cardinality (the value of the all-singleton partition).
  int min_cardinality() const;

 private:
  static bool get_bit(const std::vector<std::uint64_t>& bits, Mask i) {
    return (bits[i >> 6] >> (i & 63)) & 1;
  }

  ModuleDescriptor descriptor_;
  std::vector<std::uint64_t> member_bits_;
  std::vector<std::vector<Mask>> by_card_;
  std::size_t size_ = 0;
};

// Interval [lo, hi] in the characteristic poset, lo subset of hi.
struct Interval {
  Support lo;
  Support hi;
};

// An interval partition of the characteristic poset: pairwise disjoint
// intervals whose union is exactly the poset.
struct PartitionWitness {
  std::vector<Interval> intervals;

  int min_top_cardinality() const;
};

enum class DecideStatus { Yes, No, Timeout };

struct DecideResult {
  DecideStatus status = DecideStatus::No;
  std::optional<PartitionWitness> witness;  // present iff status == Yes
  std::uint64_t nodes = 0;                  // search nodes explored
};

// Decides whether the poset admits an interval partition with every top of
// cardinality >= k. Yes carries a witness that has been re-verified by the
// independent checker; No is exhaustive; Timeout reports budget exhaustion
// (a value, not an error). Budget 0 disables the clock.
DecideResult decide_partition(const CharPoset& poset, int k, Duration budget);

// Independent witness checker: enumerates all 2^ambient supports and
// verifies disjointness, exact cover of the poset, interval validity, and
// min top cardinality >= k.
bool verify_witness(const CharPoset& poset, const PartitionWitness& witness, int k);

struct SdepthResult {
  int lower = 0;   // best value achieved, backed by `witness`
  int upper = 0;   // from exhausted refutation or the trivial ambient bound
  bool exact = false;
  bool budget_hit = false;
  Duration elapsed{0};
  std::optional<PartitionWitness> witness;
};

// Exact Stanley depth by binary search over decide_partition; each decision
// call gets `budget_per_decision` of wall clock. When a decision times out
// the result degrades to the bracketing bounds. `lower_hint` may carry a
// value already achieved by a known decomposition.
SdepthResult sdepth_exact(const ModuleDescriptor& descriptor,
                          Duration budget_per_decision = kNoBudget,
                          std::optional<int> lower_hint = std::nullopt);

SdepthResult sdepth_exact(const CharPoset& poset,
                          Duration budget_per_decision = kNoBudget,
                          std::optional<int> lower_hint = std::nullopt);

}  // namespace stanley

#endif
