#include "stanley/decomposition.hpp"

#include <algorithm>

namespace stanley {

int StanleyDecomposition::min_dimension() const {
  int best = kMaxVars + 1;
  for (const StanleySpace& s : spaces) best = std::min(best, s.free_vars.count());
  return spaces.empty() ? 0 : best;
}

StanleyDecomposition partition_to_decomposition(const CharPoset& poset,
                                                const PartitionWitness& witness) {
  if (!verify_witness(poset, witness, 0))
    throw std::invalid_argument("partition_to_decomposition: witness does not verify");
  StanleyDecomposition dec{{}, poset.descriptor()};
  dec.spaces.reserve(witness.intervals.size());
  for (const Interval& iv : witness.intervals) dec.spaces.push_back({iv.lo, iv.hi});
  return dec;
}

DecompositionCheck verify_decomposition(const StanleyDecomposition& dec) {
  const int n = dec.target.ambient();
  const Mask full = full_mask(n);
  for (const StanleySpace& s : dec.spaces)
    if (s.w.width() != n || s.free_vars.width() != n)
      throw std::invalid_argument("verify_decomposition: space width mismatch");

  Mask gen_vars = 0;
  for (const Support& g : dec.target.inner().gens()) gen_vars |= g.bits();
  if (dec.target.kind() == ModuleDescriptor::Kind::Pair)
    for (const Support& g : dec.target.outer().gens()) gen_vars |= g.bits();

  Mask w_vars = 0;
  Mask every_free = dec.spaces.empty() ? 0 : full;
  for (const StanleySpace& s : dec.spaces) {
    w_vars |= s.w.bits();
    every_free &= s.free_vars.bits();
  }
  // A variable outside every generator and every w that is free in every
  // space contributes the same factor to both sides; skip it.
  const Mask active = full & ~(every_free & ~gen_vars & ~w_vars);

  auto make_violation = [&](Mask supp1, Mask supp2, int count) {
    DecompositionCheck out;
    out.ok = false;
    out.count = count;
    out.pattern.assign(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      if (supp2 & bit(i)) out.pattern[static_cast<size_t>(i)] = 2;
      else if (supp1 & bit(i)) out.pattern[static_cast<size_t>(i)] = 1;
    }
    return out;
  };

  std::vector<Mask> bad;  // per supp1: w \ free of matching spaces with w not inside free
  DecompositionCheck result;
  bool failed = false;
  for_each_submask(active, [&](Mask supp1) {
    if (failed) return;
    const bool in_module = dec.target.member(supp1);
    int good = 0;
    bad.clear();
    for (const StanleySpace& s : dec.spaces) {
      const Mask w = s.w.bits(), free = s.free_vars.bits();
      if ((w & ~supp1) != 0) continue;          // w must divide the monomial
      if ((supp1 & ~w & ~free) != 0) continue;  // residual support must be free
      Mask stuck = w & ~free;                   // w-vars that may not gain exponent
      if (stuck == 0) ++good;
      else bad.push_back(stuck);
    }
    const int expected = in_module ? 1 : 0;
    if (bad.empty()) {
      if (good != expected) {
        result = make_violation(supp1, 0, good);
        failed = true;
      }
      return;
    }
    for_each_submask(supp1, [&](Mask supp2) {
      if (failed) return;
      int count = good;
      for (Mask b : bad)
        if ((b & supp2) == 0) ++count;
      if (count != expected) {
        result = make_violation(supp1, supp2, count);
        failed = true;
      }
    });
  });
  return failed ? result : DecompositionCheck{};
}

namespace {

// Expands an inner quotient witness into the ambient ring: each space
// (w, A) becomes (prefix * w, A + prefix-vars) under the local-to-ambient
// index map.
void append_mapped(std::vector<StanleySpace>& out, const StanleyDecomposition& inner,
                   const std::vector<int>& local_to_ambient, Mask prefix, int ambient) {
  auto map_mask = [&](const Support& s) {
    Mask bits = 0;
    for (int i : s.indices()) bits |= bit(local_to_ambient[static_cast<size_t>(i)]);
    return bits;
  };
  for (const StanleySpace& s : inner.spaces)
    out.push_back({Support(map_mask(s.w) | prefix, ambient),
                   Support(map_mask(s.free_vars) | prefix, ambient)});
}

StanleyDecomposition optimal_quotient_decomposition(const SquarefreeIdeal& ideal,
                                                    Duration budget) {
  CharPoset poset(ModuleDescriptor::quotient(ideal));
  SdepthResult result = sdepth_exact(poset, budget);
  if (!result.witness)
    throw std::runtime_error("inner quotient decomposition: search returned no witness");
  return partition_to_decomposition(poset, *result.witness);
}

ModuleDescriptor cycle_vs_path_pair(int n, int m) {
  SquarefreeIdeal path = generators_formula(FamilySpec{Family::P, {n, m}});
  SquarefreeIdeal cycle = generators_formula(FamilySpec{Family::C, {n, m}});
  return ModuleDescriptor::pair(std::move(path), std::move(cycle));
}

}  // namespace

StanleyDecomposition c2_pair_decomposition(int n, Duration inner_budget) {
  if (n < 3) throw std::invalid_argument("c2_pair_decomposition: need n >= 3");
  const int width = 2 * n;
  auto x = [&](int i) { return i - 1; };
  auto y = [&](int i) { return n + i - 1; };
  auto sup = [&](std::initializer_list<int> vars) {
    Mask m = 0;
    for (int v : vars) m |= bit(v);
    return Support(m, width);
  };

  StanleyDecomposition dec{{}, cycle_vs_path_pair(n, 2)};

  if (n == 3 || n == 4) {
    for (int a : {x(1), y(1)})
      for (int b : {x(n), y(n)})
        dec.spaces.push_back({sup({a, b}), sup({a, b})});
    return dec;
  }

  if (n == 5) {
    dec.spaces = {
        {sup({x(1), x(5)}), sup({x(1), x(3), x(5)})},
        {sup({x(1), y(5)}), sup({x(1), x(3), y(5)})},
        {sup({y(1), x(5)}), sup({y(1), x(3), x(5)})},
        {sup({y(1), y(5)}), sup({y(1), x(3), y(5)})},
        {sup({x(1), y(3), x(5)}), sup({x(1), y(3), x(5)})},
        {sup({x(1), y(3), y(5)}), sup({x(1), y(3), y(5)})},
        {sup({y(1), y(3), y(5)}), sup({y(1), y(3), y(5)})},
        {sup({y(1), y(3), x(5)}), sup({y(1), y(3), x(5)})},
    };
    return dec;
  }

  // n >= 6: the interior strip on columns 3..n-2 is a copy of the
  // (n-4)-column two-layer path quotient; each of the four corner pairs
  // multiplies one optimal interior decomposition.
  const int inner_n = n - 4;
  SquarefreeIdeal interior = generators_formula(FamilySpec{Family::P, {inner_n, 2}});
  StanleyDecomposition inner = optimal_quotient_decomposition(interior, inner_budget);
  std::vector<int> to_ambient;
  for (int j = 1; j <= inner_n; ++j) to_ambient.push_back(x(j + 2));
  for (int j = 1; j <= inner_n; ++j) to_ambient.push_back(y(j + 2));
  for (int a : {x(1), y(1)})
    for (int b : {x(n), y(n)})
      append_mapped(dec.spaces, inner, to_ambient, bit(a) | bit(b), width);
  return dec;
}

StanleyDecomposition c3_pair_decomposition(int n, Duration inner_budget) {
  if (n < 5) throw std::invalid_argument("c3_pair_decomposition: need n >= 5");
  const int width = 3 * n;
  auto x = [&](int i) { return i - 1; };
  auto y = [&](int i) { return n + i - 1; };
  auto z = [&](int i) { return 2 * n + i - 1; };
  auto sup = [&](std::initializer_list<int> vars) {
    Mask m = 0;
    for (int v : vars) m |= bit(v);
    return Support(m, width);
  };

  StanleyDecomposition dec{{}, cycle_vs_path_pair(n, 3)};

  if (n == 5) {
    dec.spaces = {
        {sup({x(1), x(5)}), sup({x(1), x(3), x(5)})},
        {sup({x(1), y(5)}), sup({x(1), x(3), y(5)})},
        {sup({y(1), x(5)}), sup({x(3), x(5), y(1)})},
        {sup({y(1), y(5)}), sup({x(3), y(1), y(5)})},
        {sup({z(1), y(5)}), sup({x(3), y(5), z(1)})},
        {sup({z(1), z(5)}), sup({z(1), z(3), z(5)})},
        {sup({y(1), z(5)}), sup({y(1), y(3), z(5)})},
    };
    // Every remaining squarefree member closes as its own space v*K[supp v];
    // all of them have degree >= 3.
    CharPoset poset(dec.target);
    for (const auto& bucket : poset.by_cardinality())
      for (Mask sigma : bucket) {
        bool covered = false;
        for (const StanleySpace& s : dec.spaces) {
          if ((s.w.bits() & ~sigma) == 0 &&
              (sigma & ~s.w.bits() & ~s.free_vars.bits()) == 0) {
            covered = true;
            break;
          }
        }
        if (!covered) dec.spaces.push_back({Support(sigma, width), Support(sigma, width)});
      }
    return dec;
  }

  // n >= 6. Interior ring R on columns 3..n-2 of all three rows, with the
  // (n-4)-column three-layer path relations U.
  const int inner_n = n - 4;
  SquarefreeIdeal interior = generators_formula(FamilySpec{Family::P, {inner_n, 3}});
  std::vector<int> r_map;  // local R index -> ambient flat index
  for (int j = 1; j <= inner_n; ++j) r_map.push_back(x(j + 2));
  for (int j = 1; j <= inner_n; ++j) r_map.push_back(y(j + 2));
  for (int j = 1; j <= inner_n; ++j) r_map.push_back(z(j + 2));
  const int r_size = 3 * inner_n;

  // Local interior indices of the column-3 / column-(n-2) boundary rows.
  auto rx = [&](int col) { return (col - 3); };            // x_{col}
  auto ry = [&](int col) { return inner_n + (col - 3); };  // y_{col}
  auto rz = [&](int col) { return 2 * inner_n + (col - 3); };

  StanleyDecomposition plain = optimal_quotient_decomposition(interior, inner_budget);

  // Builds the interior quotient extended by `extras` ambient variables and
  // the listed extra relations (as pairs of local indices in the extended
  // ring), then decomposes it optimally.
  auto extended = [&](const std::vector<int>& extras,
                      const std::vector<std::pair<int, int>>& relations,
                      std::vector<int>& map_out) {
    const int ext_size = r_size + static_cast<int>(extras.size());
    map_out = r_map;
    for (int a : extras) map_out.push_back(a);
    std::vector<Support> gens;
    for (const Support& g : interior.gens()) gens.push_back(Support(g.bits(), ext_size));
    for (auto [a, b] : relations) gens.push_back(Support(bit(a) | bit(b), ext_size));
    SquarefreeIdeal ideal(ext_size, std::move(gens));
    return optimal_quotient_decomposition(ideal, inner_budget);
  };

  const int e0 = r_size;  // first extra local index
  std::vector<int> map2, map3, map4, map5, map6, map7;

  // One pendant column-2 / column-(n-1) vertex in the x or z row.
  StanleyDecomposition pend_z2 =
      extended({z(2)}, {{ry(3), e0}, {rz(3), e0}}, map2);
  StanleyDecomposition pend_x2 =
      extended({x(2)}, {{ry(3), e0}, {rx(3), e0}}, map3);
  StanleyDecomposition pend_zn1 =
      extended({z(n - 1)}, {{ry(n - 2), e0}, {rz(n - 2), e0}}, map4);
  StanleyDecomposition pend_xn1 =
      extended({x(n - 1)}, {{ry(n - 2), e0}, {rx(n - 2), e0}}, map5);

  // Whole wrapped x- or z-row: four extra vertices closing the cycle.
  StanleyDecomposition wrap_z = extended(
      {z(1), z(2), z(n - 1), z(n)},
      {{ry(n - 2), e0 + 2}, {rz(n - 2), e0 + 2}, {e0 + 2, e0 + 3}, {e0 + 3, e0},
       {e0, e0 + 1}, {ry(3), e0 + 1}, {rz(3), e0 + 1}},
      map6);
  StanleyDecomposition wrap_x = extended(
      {x(1), x(2), x(n - 1), x(n)},
      {{ry(n - 2), e0 + 2}, {rx(n - 2), e0 + 2}, {e0 + 2, e0 + 3}, {e0 + 3, e0},
       {e0, e0 + 1}, {ry(3), e0 + 1}, {rx(3), e0 + 1}},
      map7);

  auto pre = [&](std::initializer_list<int> vars) {
    Mask m = 0;
    for (int v : vars) m |= bit(v);
    return m;
  };

  append_mapped(dec.spaces, plain, r_map, pre({y(1), y(n)}), width);
  append_mapped(dec.spaces, pend_z2, map2, pre({x(1), y(n)}), width);
  append_mapped(dec.spaces, pend_x2, map3, pre({z(1), y(n)}), width);
  append_mapped(dec.spaces, pend_zn1, map4, pre({y(1), x(n)}), width);
  append_mapped(dec.spaces, pend_xn1, map5, pre({y(1), z(n)}), width);
  append_mapped(dec.spaces, wrap_z, map6, pre({x(1), x(n)}), width);
  append_mapped(dec.spaces, wrap_x, map7, pre({z(1), z(n)}), width);

  // Completion families: members whose boundary support picks both the x-
  // and z-row on one side (x_1 z_1 or x_n z_n) are reached by none of the
  // seven corner prefixes above; their residual lives in the plain interior
  // quotient.
  append_mapped(dec.spaces, plain, r_map, pre({x(1), z(1), y(n)}), width);
  append_mapped(dec.spaces, plain, r_map, pre({y(1), x(n), z(n)}), width);
  append_mapped(dec.spaces, plain, r_map, pre({x(1), z(1), x(n), z(n)}), width);

  return dec;
}

OkazakiBound okazaki_bound(const SquarefreeIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("okazaki_bound: zero ideal");
  const int n = ideal.ambient();
  const int m = static_cast<int>(ideal.gens().size());
  const int branch = n - m / 2;
  return OkazakiBound{std::min(1, branch), std::max(1, branch)};
}

}  // namespace stanley
