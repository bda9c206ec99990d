#include "stanley/partition.hpp"

#include <algorithm>

#include "stanley/homology.hpp"

namespace stanley {

namespace {

std::vector<std::uint64_t> module_membership(const ModuleDescriptor& d) {
  const int n = d.ambient();
  if (n > 26)
    throw std::invalid_argument("CharPoset: ambient too large to enumerate");
  const Mask total = Mask{1} << n;
  std::vector<std::uint64_t> bits((total + 63) / 64, 0);
  switch (d.kind()) {
    case ModuleDescriptor::Kind::Ideal: {
      if (d.inner().is_zero())
        throw std::invalid_argument("CharPoset: ideal-kind poset of the zero ideal");
      return membership_bits(d.inner());
    }
    case ModuleDescriptor::Kind::Quotient: {
      auto in = membership_bits(d.inner());
      for (size_t w = 0; w < bits.size(); ++w) bits[w] = ~in[w];
      // Clear bits beyond 2^n in the last word.
      if (total % 64 != 0) bits.back() &= (std::uint64_t{1} << (total % 64)) - 1;
      return bits;
    }
    case ModuleDescriptor::Kind::Pair: {
      auto in = membership_bits(d.inner());
      auto out = membership_bits(d.outer());
      for (size_t w = 0; w < bits.size(); ++w) bits[w] = out[w] & ~in[w];
      return bits;
    }
  }
  return bits;
}

}  // namespace

CharPoset::CharPoset(ModuleDescriptor descriptor)
    : descriptor_(std::move(descriptor)), member_bits_(module_membership(descriptor_)) {
  const int n = ambient();
  by_card_.assign(static_cast<size_t>(n) + 1, {});
  const Mask total = Mask{1} << n;
  for (Mask sigma = 0; sigma < total; ++sigma)
    if (member(sigma)) {
      by_card_[static_cast<size_t>(popcount(sigma))].push_back(sigma);
      ++size_;
    }
  for (auto& bucket : by_card_) std::sort(bucket.begin(), bucket.end(), lex_mask_less);
  if (size_ == 0) throw std::logic_error("CharPoset: empty poset");
}

int CharPoset::min_cardinality() const {
  for (size_t c = 0; c < by_card_.size(); ++c)
    if (!by_card_[c].empty()) return static_cast<int>(c);
  return 0;
}

int PartitionWitness::min_top_cardinality() const {
  int best = kMaxVars + 1;
  for (const Interval& iv : intervals) best = std::min(best, iv.hi.count());
  return intervals.empty() ? 0 : best;
}

namespace {

// Backtracking search for an interval partition with all tops of
// cardinality >= k. Elements of cardinality >= k never *need* a nontrivial
// interval (each can close as [s, s]), so the search only assigns intervals
// to the low elements, scarcest first: pick the uncovered low element of
// minimum cardinality (lex-least tiebreak), try admissible tops largest
// first, and refute as soon as some uncovered low element has no admissible
// top left.
class Searcher {
 public:
  Searcher(const CharPoset& poset, int k, Duration budget)
      : poset_(poset),
        k_(k),
        n_(poset.ambient()),
        covered_((static_cast<size_t>(Mask{1} << n_) + 63) / 64, 0),
        has_deadline_(budget.count() > 0) {
    if (has_deadline_) deadline_ = std::chrono::steady_clock::now() + budget;
    for (int c = 0; c < std::min(k_, static_cast<int>(poset.by_cardinality().size())); ++c)
      for (Mask m : poset.by_cardinality()[static_cast<size_t>(c)]) lows_.push_back(m);
    cached_top_.assign(lows_.size(), 0);
  }

  DecideResult run() {
    DecideResult result;
    bool found = solve();
    result.nodes = nodes_;
    if (timed_out_) {
      result.status = DecideStatus::Timeout;
      return result;
    }
    if (!found) {
      result.status = DecideStatus::No;
      return result;
    }
    PartitionWitness witness;
    witness.intervals = chosen_;
    // Close every still-uncovered member (all of cardinality >= k) trivially.
    for (size_t c = static_cast<size_t>(k_); c < poset_.by_cardinality().size(); ++c)
      for (Mask m : poset_.by_cardinality()[c])
        if (!is_covered(m))
          witness.intervals.push_back({Support(m, n_), Support(m, n_)});
    result.status = DecideStatus::Yes;
    result.witness = std::move(witness);
    return result;
  }

 private:
  bool is_covered(Mask m) const { return (covered_[m >> 6] >> (m & 63)) & 1; }
  void flip_cover(Mask lo, Mask hi) {
    Mask diff = hi & ~lo;
    for_each_submask(diff, [&](Mask s) {
      Mask m = lo | s;
      covered_[m >> 6] ^= std::uint64_t{1} << (m & 63);
    });
  }

  bool out_of_time() {
    if (!has_deadline_) return false;
    if ((++ticks_ & 1023) != 0) return timed_out_;
    if (timed_out_) return true;
    if (std::chrono::steady_clock::now() >= deadline_) timed_out_ = true;
    return timed_out_;
  }

  bool interval_free(Mask lo, Mask hi) {
    if (out_of_time()) return false;
    Mask diff = hi & ~lo;
    Mask s = diff;
    while (true) {
      if (is_covered(lo | s)) return false;
      if (s == 0) return true;
      s = (s - 1) & diff;
    }
  }

  // Is there any admissible top for the low element at `index`? Caches the
  // last viable top per element so unchanged elements re-check in O(2^|B\A|).
  bool has_candidate(size_t index) {
    Mask a = lows_[index];
    Mask cached = cached_top_[index];
    if (cached != 0 && (a & ~cached) == 0 && interval_free(a, cached)) return true;
    if (timed_out_) return false;
    const auto& buckets = poset_.by_cardinality();
    for (int c = n_; c >= k_; --c) {
      for (Mask b : buckets[static_cast<size_t>(c)]) {
        if ((a & ~b) != 0) continue;
        if (interval_free(a, b)) {
          cached_top_[index] = b;
          return true;
        }
        if (timed_out_) return false;
      }
    }
    return false;
  }

  bool solve() {
    if (timed_out_) return false;
    ++nodes_;

    // Next target: first uncovered low element in (cardinality, lex) order.
    size_t target = lows_.size();
    for (size_t i = 0; i < lows_.size(); ++i)
      if (!is_covered(lows_[i])) {
        target = i;
        break;
      }
    if (target == lows_.size()) return true;

    // Fail fast: every uncovered low element must still have some
    // admissible top, or this branch is dead.
    for (size_t i = target; i < lows_.size(); ++i) {
      if (is_covered(lows_[i])) continue;
      if (!has_candidate(i)) return false;
    }
    if (timed_out_) return false;

    const Mask a = lows_[target];
    const auto& buckets = poset_.by_cardinality();
    for (int c = n_; c >= k_; --c) {
      for (Mask b : buckets[static_cast<size_t>(c)]) {
        if ((a & ~b) != 0) continue;
        if (!interval_free(a, b)) {
          if (timed_out_) return false;
          continue;
        }
        flip_cover(a, b);
        chosen_.push_back({Support(a, n_), Support(b, n_)});
        if (solve()) return true;
        chosen_.pop_back();
        flip_cover(a, b);
        if (timed_out_) return false;
      }
    }
    return false;
  }

  const CharPoset& poset_;
  const int k_;
  const int n_;
  std::vector<std::uint64_t> covered_;
  std::vector<Mask> lows_;
  std::vector<Mask> cached_top_;
  std::vector<Interval> chosen_;
  std::uint64_t nodes_ = 0;
  std::uint64_t ticks_ = 0;
  bool has_deadline_;
  bool timed_out_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

}  // namespace

DecideResult decide_partition(const CharPoset& poset, int k, Duration budget) {
  if (k < 0) k = 0;
  if (k > poset.ambient()) return DecideResult{DecideStatus::No, std::nullopt, 0};
  Searcher searcher(poset, k, budget);
  DecideResult result = searcher.run();
  if (result.status == DecideStatus::Yes && !verify_witness(poset, *result.witness, k))
    throw std::logic_error("decide_partition: produced witness failed verification");
  return result;
}

bool verify_witness(const CharPoset& poset, const PartitionWitness& witness, int k) {
  const int n = poset.ambient();
  const Mask total = Mask{1} << n;
  std::vector<std::uint8_t> count(static_cast<size_t>(total), 0);
  for (const Interval& iv : witness.intervals) {
    if (iv.lo.width() != n || iv.hi.width() != n) return false;
    if (!iv.lo.subset_of(iv.hi)) return false;
    if (!poset.member(iv.lo.bits()) || !poset.member(iv.hi.bits())) return false;
    if (iv.hi.count() < k) return false;
    Mask diff = iv.hi.bits() & ~iv.lo.bits();
    for_each_submask(diff, [&](Mask s) { ++count[static_cast<size_t>(iv.lo.bits() | s)]; });
  }
  for (Mask sigma = 0; sigma < total; ++sigma) {
    std::uint8_t expected = poset.member(sigma) ? 1 : 0;
    if (count[static_cast<size_t>(sigma)] != expected) return false;
  }
  return true;
}

SdepthResult sdepth_exact(const ModuleDescriptor& descriptor, Duration budget,
                          std::optional<int> lower_hint) {
  CharPoset poset(descriptor);
  return sdepth_exact(poset, budget, lower_hint);
}

SdepthResult sdepth_exact(const CharPoset& poset, Duration budget,
                          std::optional<int> lower_hint) {
  const auto t0 = std::chrono::steady_clock::now();
  SdepthResult result;

  // The all-singleton partition achieves the smallest member cardinality.
  int lo = poset.min_cardinality();
  int hi = poset.ambient();
  PartitionWitness trivial;
  for (const auto& bucket : poset.by_cardinality())
    for (Mask m : bucket)
      trivial.intervals.push_back(
          {Support(m, poset.ambient()), Support(m, poset.ambient())});
  result.witness = std::move(trivial);
  if (lower_hint && *lower_hint > lo) {
    lo = *lower_hint;
    result.witness.reset();  // the hint's witness lives with the caller
  }

  while (lo < hi) {
    int mid = lo + (hi - lo + 1) / 2;
    DecideResult decision = decide_partition(poset, mid, budget);
    if (decision.status == DecideStatus::Yes) {
      lo = mid;
      result.witness = std::move(decision.witness);
    } else if (decision.status == DecideStatus::No) {
      hi = mid - 1;
    } else {
      result.budget_hit = true;
      break;
    }
  }

  result.lower = lo;
  result.upper = hi;
  result.exact = !result.budget_hit && lo == hi;
  result.elapsed = std::chrono::duration_cast<Duration>(
      std::chrono::steady_clock::now() - t0);
  return result;
}

}  // namespace stanley
