#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "stanley/ideal.hpp"

using namespace stanley;

namespace {

Support sup(std::initializer_list<int> vars, int width) {
  Mask m = 0;
  for (int v : vars) m |= bit(v);
  return Support(m, width);
}

// Generators as a set of masks for order-independent comparison.
std::set<Mask> gen_masks(const SquarefreeIdeal& ideal) {
  std::set<Mask> out;
  for (const Support& g : ideal.gens()) out.insert(g.bits());
  return out;
}

// x_i, y_i, z_i as flat indices in the 1 <= i <= n, m-layer grid.
struct XYZ {
  int n;
  int x(int i) const { return i - 1; }
  int y(int i) const { return n + i - 1; }
  int z(int i) const { return 2 * n + i - 1; }
};

}  // namespace

TEST_CASE("minimalize") {
  int w = 6;
  auto result = minimalize({sup({0, 1}, w), sup({0}, w)});
  CHECK(result == std::vector<Support>{sup({0}, w)});
  CHECK(minimalize({}).empty());

  // Random inputs match pairwise brute-force filtering.
  std::mt19937 rng(12345);
  for (int round = 0; round < 50; ++round) {
    std::vector<Support> input;
    std::vector<Mask> raw;
    for (int i = 0; i < 12; ++i) {
      Mask m = rng() & full_mask(w);
      if (m == 0) m = 1;
      input.push_back(Support(m, w));
      raw.push_back(m);
    }
    auto got = minimalize(input);
    auto expected = oracle::minimal_elements(raw);
    CHECK(gen_masks(SquarefreeIdeal(w, got)) ==
          std::set<Mask>(expected.begin(), expected.end()));
    // Antichain and normal order.
    for (size_t i = 0; i < got.size(); ++i)
      for (size_t j = 0; j < got.size(); ++j)
        if (i != j) CHECK_FALSE(got[i].subset_of(got[j]));
    for (size_t i = 0; i + 1 < got.size(); ++i) CHECK(normal_less(got[i], got[i + 1]));
  }
}

TEST_CASE("membership") {
  SquarefreeIdeal i(3, {sup({0, 1}, 3)});
  CHECK(i.contains(sup({0, 1, 2}, 3)));
  CHECK_FALSE(i.contains(sup({0}, 3)));

  std::mt19937 rng(999);
  for (int round = 0; round < 40; ++round) {
    std::vector<Support> gens;
    std::vector<Mask> raw;
    for (int g = 0; g < 5; ++g) {
      Mask m = rng() & full_mask(6);
      if (m == 0) continue;
      gens.push_back(Support(m, 6));
      raw.push_back(m);
    }
    SquarefreeIdeal ideal(6, gens);
    for (Mask s = 0; s < 64; ++s)
      CHECK(ideal.contains(s) == oracle::member(raw, s));
  }
}

TEST_CASE("edge ideal") {
  CHECK(gen_masks(edge_ideal(build_path(2))) == std::set<Mask>{0b11});
  CHECK(gen_masks(edge_ideal(build_cycle(3))) == std::set<Mask>{0b011, 0b110, 0b101});
  CHECK_THROWS(edge_ideal(build_path(1)));

  // Two-layer grid generators match the displayed union.
  for (int n = 2; n <= 6; ++n) {
    XYZ v{n};
    std::set<Mask> expected;
    auto pair = [&](int a, int b) { return bit(a) | bit(b); };
    for (int i = 1; i < n; ++i) {
      expected.insert(pair(v.x(i), v.y(i)));
      expected.insert(pair(v.x(i), v.y(i + 1)));
      expected.insert(pair(v.x(i), v.x(i + 1)));
      expected.insert(pair(v.x(i + 1), v.y(i)));
      expected.insert(pair(v.y(i), v.y(i + 1)));
    }
    expected.insert(pair(v.x(n), v.y(n)));
    FamilyGraph fam = build_family(FamilySpec{Family::P, {n, 2}});
    CHECK(gen_masks(edge_ideal(fam.graph)) == expected);
  }
}

TEST_CASE("formula and product agree on every grid shape") {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= 4 && n * m <= 24; ++m) {
      if (n * m < 2) continue;
      FamilySpec spec{Family::P, {n, m}};
      CHECK(generators_formula(spec) == edge_ideal(build_family(spec).graph));
    }
  for (int n = 3; n <= 8; ++n)
    for (int m = 1; m <= 4 && n * m <= 24; ++m) {
      FamilySpec spec{Family::C, {n, m}};
      CHECK(generators_formula(spec) == edge_ideal(build_family(spec).graph));
    }
}

TEST_CASE("formula generator counts") {
  CHECK(generators_formula(FamilySpec{Family::P, {2, 1}}).gens().size() == 1);
  // The edge-count closed form fixes the generator count; at n = m = 4
  // that is 4*3*3 + 3 + 3 = 42.
  CHECK(generators_formula(FamilySpec{Family::P, {4, 4}}).gens().size() == 42);
  for (int n = 3; n <= 10; ++n) {
    CHECK(generators_formula(FamilySpec{Family::P, {n, 2}}).gens().size() ==
          static_cast<size_t>(5 * (n - 1) + 1));
    CHECK(generators_formula(FamilySpec{Family::C, {n, 2}}).gens().size() ==
          static_cast<size_t>(5 * (n - 1) + 1 + 4));
  }

  // C_{3,2} adds the four wrap generators to the two-layer path ideal.
  XYZ v{3};
  std::set<Mask> expected = gen_masks(generators_formula(FamilySpec{Family::P, {3, 2}}));
  expected.insert(bit(v.x(1)) | bit(v.y(3)));
  expected.insert(bit(v.x(1)) | bit(v.x(3)));
  expected.insert(bit(v.y(1)) | bit(v.x(3)));
  expected.insert(bit(v.y(1)) | bit(v.y(3)));
  CHECK(gen_masks(generators_formula(FamilySpec{Family::C, {3, 2}})) == expected);
}

TEST_CASE("colon") {
  SquarefreeIdeal i(2, {sup({0, 1}, 2)});
  CHECK(colon(i, sup({0}, 2)) == SquarefreeIdeal(2, {sup({1}, 2)}));
  CHECK_THROWS(colon(i, sup({0, 1}, 2)));  // u inside the ideal

  // Random ideals against the brute-force colon.
  std::mt19937 rng(777);
  for (int round = 0; round < 60; ++round) {
    const int w = 6;
    std::vector<Support> gens;
    std::vector<Mask> raw;
    for (int g = 0; g < 4; ++g) {
      Mask m = rng() & full_mask(w);
      if (m == 0) continue;
      gens.push_back(Support(m, w));
      raw.push_back(m);
    }
    if (gens.empty()) continue;
    SquarefreeIdeal ideal(w, gens);
    Mask u = rng() & full_mask(w);
    if (ideal.contains(u)) continue;
    auto got = gen_masks(colon(ideal, Support(u, w)));
    auto expected = oracle::colon(raw, u, w);
    CHECK(got == std::set<Mask>(expected.begin(), expected.end()));
  }
}

TEST_CASE("colon of the wrapped two-layer ideal matches the displayed form") {
  // (I(C_{5,2}) : x_5) = (x_2y_2, x_2y_3, x_2x_3, x_3y_2, y_2y_3, x_3y_3,
  //                        x_1, y_1, x_4, y_4, y_5)
  const int n = 5;
  XYZ v{n};
  SquarefreeIdeal cycle = generators_formula(FamilySpec{Family::C, {n, 2}});
  SquarefreeIdeal got = colon(cycle, Support::singleton(v.x(5), 2 * n));
  std::set<Mask> expected;
  auto pair = [&](int a, int b) { return bit(a) | bit(b); };
  for (int i = 2; i <= n - 3; ++i) {
    expected.insert(pair(v.x(i), v.y(i)));
    expected.insert(pair(v.x(i), v.y(i + 1)));
    expected.insert(pair(v.x(i), v.x(i + 1)));
    expected.insert(pair(v.x(i + 1), v.y(i)));
    expected.insert(pair(v.y(i), v.y(i + 1)));
  }
  expected.insert(pair(v.x(n - 2), v.y(n - 2)));
  for (int single : {v.x(1), v.y(1), v.x(n - 1), v.y(n - 1), v.y(n)})
    expected.insert(bit(single));
  CHECK(gen_masks(got) == expected);
}

TEST_CASE("add") {
  SquarefreeIdeal i(2, {sup({0, 1}, 2)});
  CHECK(add(i, sup({0}, 2)) == SquarefreeIdeal(2, {sup({0}, 2)}));
  CHECK_THROWS(add(i, Support::empty(2)));

  // Idempotence.
  SquarefreeIdeal j = add(i, sup({0}, 2));
  CHECK(add(j, sup({0}, 2)) == j);

  // (I(C_{5,2}), x_5) = (gens of P_{4,2}, x_5, x_4y_5, y_4y_5, y_1y_5, x_1y_5).
  const int n = 5;
  XYZ v{n};
  SquarefreeIdeal cycle = generators_formula(FamilySpec{Family::C, {n, 2}});
  SquarefreeIdeal got = add(cycle, Support::singleton(v.x(n), 2 * n));
  std::set<Mask> expected;
  for (const Support& g : generators_formula(FamilySpec{Family::P, {n - 1, 2}}).gens()) {
    Mask m = 0;  // reindex the (n-1)-column ideal into the n-column ring
    for (int idx : g.indices()) m |= bit(idx < n - 1 ? idx : idx + 1);
    expected.insert(m);
  }
  expected.insert(bit(v.x(n)));
  expected.insert(bit(v.x(n - 1)) | bit(v.y(n)));
  expected.insert(bit(v.y(n - 1)) | bit(v.y(n)));
  expected.insert(bit(v.y(1)) | bit(v.y(n)));
  expected.insert(bit(v.x(1)) | bit(v.y(n)));
  CHECK(gen_masks(got) == expected);
}

TEST_CASE("restrict") {
  SquarefreeIdeal i(3, {sup({0, 1}, 3), sup({1, 2}, 3)});
  CHECK(restrict_to(i, sup({0, 1}, 3)) == SquarefreeIdeal(3, {sup({0, 1}, 3)}));

  // restrict is generator-wise contained in the original.
  SquarefreeIdeal restricted = restrict_to(i, sup({0, 1}, 3));
  for (const Support& g : restricted.gens()) CHECK(i.contains(g));

  // I(P_{5,2}) restricted to the first three columns plus (x_5, y_5) has the
  // (gens of P_{3,2}, x_5y_5) pattern.
  const int n = 5;
  XYZ v{n};
  SquarefreeIdeal path = generators_formula(FamilySpec{Family::P, {n, 2}});
  Mask keep = 0;
  for (int i2 : {1, 2, 3, 5}) keep |= bit(v.x(i2)) | bit(v.y(i2));
  SquarefreeIdeal got = restrict_to(path, Support(keep, 2 * n));
  std::set<Mask> expected;
  for (const Support& g : generators_formula(FamilySpec{Family::P, {3, 2}}).gens()) {
    Mask m = 0;
    for (int idx : g.indices()) m |= bit(idx < 3 ? idx : idx + 2);
    expected.insert(m);
  }
  expected.insert(bit(v.x(5)) | bit(v.y(5)));
  CHECK(gen_masks(got) == expected);

  // Random instances against brute-force membership filtering.
  std::mt19937 rng(424242);
  for (int round = 0; round < 40; ++round) {
    const int w = 6;
    std::vector<Support> gens;
    std::vector<Mask> raw;
    for (int g = 0; g < 5; ++g) {
      Mask msk = rng() & full_mask(w);
      if (msk == 0) continue;
      gens.push_back(Support(msk, w));
      raw.push_back(msk);
    }
    if (gens.empty()) continue;
    SquarefreeIdeal ideal(w, gens);
    Mask vars = rng() & full_mask(w);
    SquarefreeIdeal got2 = restrict_to(ideal, Support(vars, w));
    std::vector<Mask> expect;
    for (Mask g : oracle::minimal_elements(raw))
      if ((g & ~vars) == 0) expect.push_back(g);
    CHECK(gen_masks(got2) == std::set<Mask>(expect.begin(), expect.end()));
  }
}

TEST_CASE("colon-membership duality, exhaustively on small rings") {
  std::mt19937 rng(31337);
  for (int round = 0; round < 25; ++round) {
    const int w = 5;
    std::vector<Support> gens;
    for (int g = 0; g < 4; ++g) {
      Mask m = rng() & full_mask(w);
      if (m != 0) gens.push_back(Support(m, w));
    }
    if (gens.empty()) continue;
    SquarefreeIdeal ideal(w, gens);
    for (Mask u = 0; u < (Mask{1} << w); ++u) {
      if (ideal.contains(u)) continue;
      SquarefreeIdeal q = colon(ideal, Support(u, w));
      for (Mask s = 0; s < (Mask{1} << w); ++s)
        CHECK(q.contains(s) == ideal.contains(s | u));
    }
  }
}

TEST_CASE("split by variable") {
  SquarefreeIdeal i(2, {sup({0, 1}, 2)});
  auto [rest, quot] = split_by_variable(i, 1);
  CHECK(rest.is_zero());
  CHECK(quot == SquarefreeIdeal(2, {sup({0}, 2)}));

  // The two displayed pieces at n = 4, split at x_3.
  const int n = 4;
  XYZ v{n};
  SquarefreeIdeal path = generators_formula(FamilySpec{Family::P, {n, 2}});
  auto [s_part, colon_part] = split_by_variable(path, v.x(3));
  std::set<Mask> expected_rest;
  auto pair = [&](int a, int b) { return bit(a) | bit(b); };
  for (Mask g : {pair(v.x(1), v.y(1)), pair(v.x(1), v.y(2)), pair(v.x(1), v.x(2)),
                 pair(v.x(2), v.y(1)), pair(v.y(1), v.y(2)), pair(v.x(2), v.y(2)),
                 pair(v.x(2), v.y(3)), pair(v.y(2), v.y(3)), pair(v.x(4), v.y(4)),
                 pair(v.y(3), v.x(4)), pair(v.y(3), v.y(4))})
    expected_rest.insert(g);
  CHECK(gen_masks(s_part) == expected_rest);
  std::set<Mask> expected_colon = {pair(v.x(1), v.y(1)), bit(v.x(2)), bit(v.y(2)),
                                   bit(v.y(3)), bit(v.x(4)), bit(v.y(4))};
  CHECK(gen_masks(colon_part) == expected_colon);

  // Every squarefree member of I lands in exactly one piece, split by
  // divisibility by the split variable.
  for (Mask s = 0; s < (Mask{1} << (2 * n)); ++s) {
    if (!path.contains(s)) continue;
    bool in_rest = s_part.contains(s) && !(s & bit(v.x(3)));
    bool in_colon = (s & bit(v.x(3))) && colon_part.contains(s & ~bit(v.x(3)));
    CHECK((in_rest ^ in_colon));
  }

  CHECK_THROWS(split_by_variable(SquarefreeIdeal(2, {sup({1}, 2)}), 1));
}

TEST_CASE("ladder ideal") {
  // n=5, l=3: the seven boundary variables.
  SquarefreeIdeal l3 = build_L(5, 3);
  XYZ v{5};
  std::set<Mask> expected;
  for (int s : {v.x(2), v.z(2), v.x(3), v.y(1), v.z(3), v.x(1), v.z(1)})
    expected.insert(bit(s));
  expected.insert(bit(v.x(4)) | bit(v.x(5)));
  expected.insert(bit(v.z(4)) | bit(v.z(5)));
  CHECK(gen_masks(l3) == expected);

  // n=6, l=3: trailing x-run contributes the single edge x_5x_6.
  SquarefreeIdeal l63 = build_L(6, 3);
  XYZ v6{6};
  CHECK(l63.contains(Support(bit(v6.x(5)) | bit(v6.x(6)), 18)));

  for (int n = 5; n <= 9; ++n)
    for (int l = 3; l <= n - 2; ++l)
      CHECK(build_L(n, l).gens().size() == static_cast<size_t>(7 + 2 * (l - 2)));

  CHECK_THROWS(build_L(5, 2));
  CHECK_THROWS(build_L(5, 4));
}

TEST_CASE("relabel") {
  SquarefreeIdeal i = generators_formula(FamilySpec{Family::P, {3, 2}});
  std::vector<int> identity{0, 1, 2, 3, 4, 5};
  CHECK(relabel(i, identity) == i);

  // The coordinate swap carries the 3x2 grid ideal to the 2x3 one.
  VarIndexer from{{3, 2}}, to{{2, 3}};
  std::vector<int> swap_perm(6);
  for (int flat = 0; flat < 6; ++flat) {
    auto [a, b] = from.coords(flat);
    swap_perm[static_cast<size_t>(flat)] = to.flat(b, a);
  }
  CHECK(relabel(i, swap_perm) == generators_formula(FamilySpec{Family::P, {2, 3}}));

  // A random permutation followed by its inverse is the identity.
  std::mt19937 rng(2024);
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> inverse(6);
  for (int k = 0; k < 6; ++k) inverse[static_cast<size_t>(perm[static_cast<size_t>(k)])] = k;
  CHECK(relabel(relabel(i, perm), inverse) == i);

  CHECK_THROWS(relabel(i, std::vector<int>{0, 0, 1, 2, 3, 4}));
}

TEST_CASE("module descriptors") {
  SquarefreeIdeal path = generators_formula(FamilySpec{Family::P, {3, 2}});
  SquarefreeIdeal cycle = generators_formula(FamilySpec{Family::C, {3, 2}});
  auto pair = ModuleDescriptor::pair(path, cycle);
  CHECK(pair.kind() == ModuleDescriptor::Kind::Pair);
  CHECK_THROWS(ModuleDescriptor::pair(cycle, path));  // not contained
  CHECK_THROWS(ModuleDescriptor::pair(path, path));   // equal
  CHECK_THROWS(ModuleDescriptor::ideal(SquarefreeIdeal::zero(4)));
  CHECK_NOTHROW(ModuleDescriptor::quotient(SquarefreeIdeal::zero(4)));
}
