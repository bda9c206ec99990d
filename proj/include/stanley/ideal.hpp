#ifndef STANLEY_IDEAL_HPP
#define STANLEY_IDEAL_HPP

#include <optional>
#include <utility>
#include <vector>

#include "stanley/graph.hpp"
#include "stanley/support.hpp"

namespace stanley {

// Removes every support that contains another one, deduplicates, and sorts
// into normal order (cardinality, then lex). The result is an antichain.
std::vector<Support> minimalize(std::vector<Support> gens);

// Squarefree monomial ideal given by its minimal generating set. Generators
// are stored in normal order, so equality of ideals is list equality. The
// zero ideal (no generators) is a valid value; the unit ideal is not
// representable and operations that would produce it throw.
class SquarefreeIdeal {
 public:
  SquarefreeIdeal(int ambient, std::vector<Support> gens);

  static SquarefreeIdeal zero(int ambient) { return SquarefreeIdeal(ambient, {}); }

  int ambient() const { return ambient_; }
  const std::vector<Support>& gens() const& { return gens_; }
  std::vector<Support> gens() && { return std::move(gens_); }  // keep rvalue use safe
  bool is_zero() const { return gens_.empty(); }

  // True iff the squarefree monomial with support s lies in the ideal.
  bool contains(const Support& s) const;
  bool contains(Mask s) const;

  friend bool operator==(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
    return a.ambient_ == b.ambient_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const SquarefreeIdeal& a, const SquarefreeIdeal& b) {
    return !(a == b);
  }

 private:
  int ambient_;
  std::vector<Support> gens_;
};

// One degree-2 generator per edge. Throws on an edgeless graph (the zero
// ideal case is handled by callers as the full-ring module).
SquarefreeIdeal edge_ideal(const Graph& g);

// Builds the minimal generating set of I(P_{n,m}) or I(C_{n,m}) directly
// from the closed-form generator unions (with the dedicated x/y/z unions
// for m <= 3), independent of the product graph construction.
SquarefreeIdeal generators_formula(const FamilySpec& spec);

// (I : u) for a squarefree monomial u outside I. Throws if u lies in I,
// since the colon would be the unit ideal.
SquarefreeIdeal colon(const SquarefreeIdeal& ideal, const Support& u);

// (I, u), minimalized. Throws when u is empty (unit ideal).
SquarefreeIdeal add(const SquarefreeIdeal& ideal, const Support& u);

// Generators of I whose support lies inside `vars`; equals the
// intersection I \cap K[vars] for squarefree I. Ambient is unchanged.
SquarefreeIdeal restrict_to(const SquarefreeIdeal& ideal, const Support& vars);

// Splits I as a vector space along variable v (which must not lie in I):
// the v-free part restrict_to(I, all minus v) and the colon (I : v).
std::pair<SquarefreeIdeal, SquarefreeIdeal> split_by_variable(
    const SquarefreeIdeal& ideal, int v);

// The ladder ideal L_l = I(P'_{l-1}) + I(P''_{l-1}) + J_l inside the
// 3n-variable ring of a three-layer grid, for 3 <= l <= n-2: seven
// boundary variables plus two disjoint path ideals of length l-1 on the
// trailing x- and z-runs.
SquarefreeIdeal build_L(int n, int l);

// Applies a permutation of the ambient variable indices to every
// generator. Throws if perm is not a bijection.
SquarefreeIdeal relabel(const SquarefreeIdeal& ideal, const std::vector<int>& perm);

// Re-expresses the ideal in the smaller ring spanned by the variables
// actually appearing in its generators. Returns the compressed ideal and
// the list mapping new indices to old ones.
std::pair<SquarefreeIdeal, std::vector<int>> compress_to_support(
    const SquarefreeIdeal& ideal);

// Which graded module is under study: an ideal I, a quotient S/I, or a
// pair J/I with I contained in J.
class ModuleDescriptor {
 public:
  enum class Kind { Ideal, Quotient, Pair };

  static ModuleDescriptor ideal(SquarefreeIdeal i);
  static ModuleDescriptor quotient(SquarefreeIdeal i);
  static ModuleDescriptor pair(SquarefreeIdeal inner, SquarefreeIdeal outer);

  Kind kind() const { return kind_; }
  int ambient() const { return inner_.ambient(); }
  const SquarefreeIdeal& inner() const& { return inner_; }
  SquarefreeIdeal inner() && { return std::move(inner_); }
  const SquarefreeIdeal& outer() const&;

  // Membership of a squarefree support in the module.
  bool member(Mask sigma) const;

 private:
  ModuleDescriptor(Kind kind, SquarefreeIdeal inner, std::optional<SquarefreeIdeal> outer);

  Kind kind_;
  SquarefreeIdeal inner_;
  std::optional<SquarefreeIdeal> outer_;
};

}  // namespace stanley

#endif
