#ifndef STANLEY_HOMOLOGY_HPP
#define STANLEY_HOMOLOGY_HPP

#include <map>
#include <utility>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/support.hpp"

namespace stanley {

// Coefficient field GF(p). Default 2 (bit-packed ranks); 32003 is the
// conventional second prime for characteristic cross-checks.
struct FieldChar {
  int p = 2;

  FieldChar() = default;
  explicit FieldChar(int prime);
};

// Multigraded Betti numbers: (homological index i, support sigma) -> rank.
// Only nonzero entries are stored.
class BettiTable {
 public:
  void set(int i, Mask sigma, int rank);
  int rank(int i, Mask sigma) const;
  int projective_dimension() const;  // max i with a nonzero entry; -1 if empty
  const std::map<std::pair<int, Mask>, int>& entries() const { return entries_; }

 private:
  std::map<std::pair<int, Mask>, int> entries_;
};

// Reduced homology dimensions of the complex with the given face list,
// over GF(p). Faces are vertex masks; the list must be down-closed and must
// include the empty face unless the complex is void. Entry [k+1] of the
// result is dim H~_k, starting at k = -1; the void complex gives an empty
// vector, the irrelevant complex {0} gives H~_{-1} = 1.
std::vector<int> reduced_homology_dims(const std::vector<Mask>& faces, FieldChar field);

// Betti numbers of S/I via Hochster's formula: for each sigma, the
// homology of the restriction of the independence complex to sigma gives
// beta_{i,sigma} = dim H~_{|sigma|-i-1}. Restrictions that are cones (some
// vertex of sigma meets no generator inside sigma) are skipped as acyclic.
BettiTable hochster_betti(const SquarefreeIdeal& ideal, FieldChar field);

// As hochster_betti but without the cone skip; used to validate that the
// pruning is conservative.
BettiTable hochster_betti_unpruned(const SquarefreeIdeal& ideal, FieldChar field);

// depth(S/I) = ambient - pd(S/I) (Auslander-Buchsbaum). The zero ideal is
// the free module: depth = ambient.
int depth_quotient(const SquarefreeIdeal& ideal, FieldChar field = FieldChar{});

// depth(I) = depth(S/I) + 1. Throws for the zero ideal.
int depth_ideal(const SquarefreeIdeal& ideal, FieldChar field = FieldChar{});

struct CharSensitivityReport {
  std::vector<std::pair<int, int>> depth_by_char;  // (p, depth)
  bool agree = true;
};

// depth(S/I) over each listed prime; flags disagreement. Needs >= 2 primes.
CharSensitivityReport char_sensitivity(const SquarefreeIdeal& ideal,
                                       const std::vector<int>& primes);

// Membership bitset of an ideal over all 2^ambient supports (up-closed
// superset DP); bit sigma is set iff x_sigma lies in I.
std::vector<std::uint64_t> membership_bits(const SquarefreeIdeal& ideal);

inline bool get_bit(const std::vector<std::uint64_t>& bits, Mask i) {
  return (bits[i >> 6] >> (i & 63)) & 1;
}
inline void put_bit(std::vector<std::uint64_t>& bits, Mask i) {
  bits[i >> 6] |= std::uint64_t{1} << (i & 63);
}

}  // namespace stanley

#endif
