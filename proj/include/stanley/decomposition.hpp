#ifndef STANLEY_DECOMPOSITION_HPP
#define STANLEY_DECOMPOSITION_HPP

#include <optional>
#include <vector>

#include "stanley/ideal.hpp"
#include "stanley/partition.hpp"
#include "stanley/support.hpp"

namespace stanley {

// Stanley space w * K[A]: monomial multiples of w whose residual support
// lies in the free set A. Its dimension is |A|. w need not be contained
// in A.
struct StanleySpace {
  Support w;
  Support free_vars;
};

struct StanleyDecomposition {
  std::vector<StanleySpace> spaces;
  ModuleDescriptor target;

  int min_dimension() const;
};

// Maps each interval [A, B] of a verified witness to the Stanley space
// x_A * K[B]. Throws if the witness does not verify against the poset.
StanleyDecomposition partition_to_decomposition(const CharPoset& poset,
                                                const PartitionWitness& witness);

struct DecompositionCheck {
  bool ok = true;
  std::vector<int> pattern;  // first violating exponent pattern (0/1/2 per var)
  int count = 0;             // its coverage count

  explicit operator bool() const { return ok; }
};

// Exactness check: over exponent patterns in {0,1,2}^ambient (exponent 2
// standing in for any exponent >= 2, which is equivalent because all w are
// squarefree), each monomial of the target module must lie in exactly one
// space and monomials outside it in none. Variables untouched by both the
// generators and the spaces' w's and free in every space factor out
// multiplicatively and are skipped.
DecompositionCheck verify_decomposition(const StanleyDecomposition& dec);

// The explicit decompositions of the pair module I(C_{n,m}) / I(P_{n,m}).
//
// m = 2, n in {3,4,5}: the four- resp. eight-space closed forms; n >= 6:
// four corner-prefixed copies of an optimal decomposition of the interior
// strip quotient (computed by sdepth_exact within `inner_budget`).
StanleyDecomposition c2_pair_decomposition(int n, Duration inner_budget = kNoBudget);

// m = 3, n = 5: the seven fixed spaces plus trivial spaces v*K[supp v] for
// the remaining squarefree members; n >= 6: seven corner-prefixed interior
// quotients (plain strip, strip-with-pendant, and wrapped-strip types)
// plus the three completion families needed for monomials whose boundary
// support meets both the x- and z-rows on the same side.
StanleyDecomposition c3_pair_decomposition(int n, Duration inner_budget = kNoBudget);

// Generator-count lower bound for sdepth of a nonzero ideal: the literal
// min{1, n - floor(m/2)} form alongside the max{1, n - floor(m/2)} reading
// (m = number of minimal generators, n = ambient). Only the corrected form
// is ever used as a bound.
struct OkazakiBound {
  int literal = 0;
  int corrected = 0;
};
OkazakiBound okazaki_bound(const SquarefreeIdeal& ideal);

}  // namespace stanley

#endif
