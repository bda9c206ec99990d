#include "stanley/ideal.hpp"

#include <algorithm>

namespace stanley {

std::vector<Support> minimalize(std::vector<Support> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Support& a, const Support& b) { return normal_less(a, b); });
  std::vector<Support> kept;
  kept.reserve(gens.size());
  for (const Support& g : gens) {
    bool redundant = false;
    for (const Support& k : kept) {
      if (k.subset_of(g)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(g);
  }
  return kept;
}

SquarefreeIdeal::SquarefreeIdeal(int ambient, std::vector<Support> gens)
    : ambient_(ambient) {
  if (ambient < 0 || ambient > kMaxVars)
    throw std::invalid_argument("SquarefreeIdeal: ambient out of range");
  for (const Support& g : gens) {
    if (g.width() != ambient)
      throw std::invalid_argument("SquarefreeIdeal: generator width mismatch");
    if (g.is_empty())
      throw std::invalid_argument("SquarefreeIdeal: unit ideal is not representable");
  }
  gens_ = minimalize(std::move(gens));
}

bool SquarefreeIdeal::contains(const Support& s) const {
  if (s.width() != ambient_)
    throw std::invalid_argument("SquarefreeIdeal::contains: width mismatch");
  return contains(s.bits());
}

bool SquarefreeIdeal::contains(Mask s) const {
  for (const Support& g : gens_)
    if ((g.bits() & ~s) == 0) return true;
  return false;
}

SquarefreeIdeal edge_ideal(const Graph& g) {
  if (g.edge_count() == 0)
    throw std::invalid_argument("edge_ideal: graph has no edges (zero ideal)");
  std::vector<Support> gens;
  gens.reserve(static_cast<size_t>(g.edge_count()));
  for (auto [u, v] : g.edges())
    gens.push_back(Support(bit(u) | bit(v), g.vertex_count()));
  return SquarefreeIdeal(g.vertex_count(), std::move(gens));
}

namespace {

// Generator unions for the two-parameter families, transcribed as displayed:
// pair helpers address variables by grid coordinates.
SquarefreeIdeal formula_P(int n, int m) {
  const int width = n * m;
  VarIndexer ix{{n, m}};
  auto mono = [&](int i1, int j1, int i2, int j2) {
    return Support(bit(ix.flat(i1, j1)) | bit(ix.flat(i2, j2)), width);
  };
  std::vector<Support> gens;

  if (n == 1) {
    // P_{1,m} is the m-vertex path in the single column; under layer-major
    // flattening its generators coincide with those of P_{m,1}.
    for (int j = 1; j < m; ++j) gens.push_back(mono(1, j, 1, j + 1));
    return SquarefreeIdeal(width, std::move(gens));
  }

  if (m == 1) {
    for (int i = 1; i < n; ++i) gens.push_back(mono(i, 1, i + 1, 1));
    return SquarefreeIdeal(width, std::move(gens));
  }

  if (m == 2) {
    for (int i = 1; i < n; ++i) {
      gens.push_back(mono(i, 1, i, 2));          // x_i y_i
      gens.push_back(mono(i, 1, i + 1, 2));      // x_i y_{i+1}
      gens.push_back(mono(i, 1, i + 1, 1));      // x_i x_{i+1}
      gens.push_back(mono(i + 1, 1, i, 2));      // x_{i+1} y_i
      gens.push_back(mono(i, 2, i + 1, 2));      // y_i y_{i+1}
    }
    gens.push_back(mono(n, 1, n, 2));            // x_n y_n
    return SquarefreeIdeal(width, std::move(gens));
  }

  if (m == 3) {
    for (int i = 1; i < n; ++i) {
      gens.push_back(mono(i, 1, i, 2));          // x_i y_i
      gens.push_back(mono(i, 1, i + 1, 2));      // x_i y_{i+1}
      gens.push_back(mono(i, 1, i + 1, 1));      // x_i x_{i+1}
      gens.push_back(mono(i + 1, 1, i, 2));      // x_{i+1} y_i
      gens.push_back(mono(i, 2, i + 1, 2));      // y_i y_{i+1}
      gens.push_back(mono(i, 2, i, 3));          // y_i z_i
      gens.push_back(mono(i, 2, i + 1, 3));      // y_i z_{i+1}
      gens.push_back(mono(i + 1, 2, i, 3));      // y_{i+1} z_i
      gens.push_back(mono(i, 3, i + 1, 3));      // z_i z_{i+1}
    }
    gens.push_back(mono(n, 1, n, 2));            // x_n y_n
    gens.push_back(mono(n, 2, n, 3));            // y_n z_n
    return SquarefreeIdeal(width, std::move(gens));
  }

  // General m >= 4: the nested union over 1 <= i <= n-1, 1 <= j <= m-1.
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < m; ++j) {
      gens.push_back(mono(i, j, i, j + 1));
      gens.push_back(mono(i, j, i + 1, j + 1));
      gens.push_back(mono(i, j, i + 1, j));
      gens.push_back(mono(i + 1, j, i, j + 1));
      gens.push_back(mono(n, j, n, j + 1));
    }
    gens.push_back(mono(i, m, i + 1, m));
  }
  return SquarefreeIdeal(width, std::move(gens));
}

SquarefreeIdeal formula_C(int n, int m) {
  SquarefreeIdeal base = formula_P(n, m);
  const int width = n * m;
  VarIndexer ix{{n, m}};
  auto mono = [&](int i1, int j1, int i2, int j2) {
    return Support(bit(ix.flat(i1, j1)) | bit(ix.flat(i2, j2)), width);
  };
  std::vector<Support> gens = base.gens();
  if (m == 2) {
    gens.push_back(mono(1, 1, n, 2));  // x_1 y_n
    gens.push_back(mono(1, 1, n, 1));  // x_1 x_n
    gens.push_back(mono(1, 2, n, 1));  // y_1 x_n
    gens.push_back(mono(1, 2, n, 2));  // y_1 y_n
  } else if (m == 3) {
    gens.push_back(mono(1, 1, n, 2));  // x_1 y_n
    gens.push_back(mono(1, 1, n, 1));  // x_1 x_n
    gens.push_back(mono(1, 2, n, 1));  // y_1 x_n
    gens.push_back(mono(1, 2, n, 2));  // y_1 y_n
    gens.push_back(mono(1, 2, n, 3));  // y_1 z_n
    gens.push_back(mono(1, 3, n, 2));  // z_1 y_n
    gens.push_back(mono(1, 3, n, 3));  // z_1 z_n
  } else {
    for (int j = 1; j < m; ++j) {
      gens.push_back(mono(1, j, n, j + 1));
      gens.push_back(mono(1, j, n, j));
      gens.push_back(mono(1, j + 1, n, j));
    }
    gens.push_back(mono(1, m, n, m));
  }
  return SquarefreeIdeal(width, std::move(gens));
}

}  // namespace

SquarefreeIdeal generators_formula(const FamilySpec& spec) {
  spec.validate();
  switch (spec.family) {
    case Family::P: return formula_P(spec.shape.n, spec.shape.m);
    case Family::C: return formula_C(spec.shape.n, spec.shape.m);
    default:
      throw std::invalid_argument(
          "generators_formula: only the P and C families have closed generator unions");
  }
}

SquarefreeIdeal colon(const SquarefreeIdeal& ideal, const Support& u) {
  if (u.width() != ideal.ambient())
    throw std::invalid_argument("colon: width mismatch");
  if (ideal.contains(u))
    throw std::invalid_argument("colon: u lies in the ideal (unit colon)");
  std::vector<Support> gens;
  gens.reserve(ideal.gens().size());
  for (const Support& g : ideal.gens()) gens.push_back(g.minus(u));
  return SquarefreeIdeal(ideal.ambient(), std::move(gens));
}

SquarefreeIdeal add(const SquarefreeIdeal& ideal, const Support& u) {
  if (u.width() != ideal.ambient())
    throw std::invalid_argument("add: width mismatch");
  if (u.is_empty())
    throw std::invalid_argument("add: adjoining 1 gives the unit ideal");
  std::vector<Support> gens = ideal.gens();
  gens.push_back(u);
  return SquarefreeIdeal(ideal.ambient(), std::move(gens));
}

SquarefreeIdeal restrict_to(const SquarefreeIdeal& ideal, const Support& vars) {
  if (vars.width() != ideal.ambient())
    throw std::invalid_argument("restrict_to: width mismatch");
  std::vector<Support> gens;
  for (const Support& g : ideal.gens())
    if (g.subset_of(vars)) gens.push_back(g);
  return SquarefreeIdeal(ideal.ambient(), std::move(gens));
}

std::pair<SquarefreeIdeal, SquarefreeIdeal> split_by_variable(
    const SquarefreeIdeal& ideal, int v) {
  Support var = Support::singleton(v, ideal.ambient());
  if (ideal.contains(var))
    throw std::invalid_argument("split_by_variable: variable lies in the ideal");
  return {restrict_to(ideal, var.complement()), colon(ideal, var)};
}

SquarefreeIdeal build_L(int n, int l) {
  if (l < 3 || l > n - 2)
    throw std::invalid_argument("build_L: need 3 <= l <= n-2");
  const int width = 3 * n;
  auto x = [&](int i) { return i - 1; };
  auto y = [&](int i) { return n + i - 1; };
  auto z = [&](int i) { return 2 * n + i - 1; };
  auto single = [&](int v) { return Support(bit(v), width); };
  auto edge = [&](int a, int b) { return Support(bit(a) | bit(b), width); };

  std::vector<Support> gens = {
      single(x(n - l)),     single(z(n - l)),     single(x(n - l + 1)),
      single(y(n - l - 1)), single(z(n - l + 1)), single(x(n - l - 1)),
      single(z(n - l - 1))};
  for (int i = n - l + 2; i < n; ++i) {
    gens.push_back(edge(x(i), x(i + 1)));
    gens.push_back(edge(z(i), z(i + 1)));
  }
  return SquarefreeIdeal(width, std::move(gens));
}

SquarefreeIdeal relabel(const SquarefreeIdeal& ideal, const std::vector<int>& perm) {
  const int n = ideal.ambient();
  if (static_cast<int>(perm.size()) != n)
    throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<size_t>(p)])
      throw std::invalid_argument("relabel: not a bijection");
    seen[static_cast<size_t>(p)] = true;
  }
  std::vector<Support> gens;
  gens.reserve(ideal.gens().size());
  for (const Support& g : ideal.gens()) {
    Mask out = 0;
    for (int i : g.indices()) out |= bit(perm[static_cast<size_t>(i)]);
    gens.push_back(Support(out, n));
  }
  return SquarefreeIdeal(n, std::move(gens));
}

std::pair<SquarefreeIdeal, std::vector<int>> compress_to_support(
    const SquarefreeIdeal& ideal) {
  Mask used = 0;
  for (const Support& g : ideal.gens()) used |= g.bits();
  std::vector<int> map;
  for (Mask m = used; m; m &= m - 1) map.push_back(std::countr_zero(m));
  std::vector<int> inverse(static_cast<size_t>(ideal.ambient()), -1);
  for (size_t k = 0; k < map.size(); ++k) inverse[static_cast<size_t>(map[k])] = static_cast<int>(k);
  const int width = static_cast<int>(map.size());
  std::vector<Support> gens;
  gens.reserve(ideal.gens().size());
  for (const Support& g : ideal.gens()) {
    Mask out = 0;
    for (int i : g.indices()) out |= bit(inverse[static_cast<size_t>(i)]);
    gens.push_back(Support(out, width));
  }
  return {SquarefreeIdeal(width, std::move(gens)), std::move(map)};
}

ModuleDescriptor::ModuleDescriptor(Kind kind, SquarefreeIdeal inner,
                                   std::optional<SquarefreeIdeal> outer)
    : kind_(kind), inner_(std::move(inner)), outer_(std::move(outer)) {}

ModuleDescriptor ModuleDescriptor::ideal(SquarefreeIdeal i) {
  if (i.is_zero())
    throw std::invalid_argument("ModuleDescriptor::ideal: zero ideal");
  return ModuleDescriptor(Kind::Ideal, std::move(i), std::nullopt);
}

ModuleDescriptor ModuleDescriptor::quotient(SquarefreeIdeal i) {
  return ModuleDescriptor(Kind::Quotient, std::move(i), std::nullopt);
}

ModuleDescriptor ModuleDescriptor::pair(SquarefreeIdeal inner, SquarefreeIdeal outer) {
  if (inner.ambient() != outer.ambient())
    throw std::invalid_argument("ModuleDescriptor::pair: ambient mismatch");
  for (const Support& g : inner.gens())
    if (!outer.contains(g))
      throw std::invalid_argument("ModuleDescriptor::pair: inner not contained in outer");
  if (inner == outer)
    throw std::invalid_argument("ModuleDescriptor::pair: inner equals outer");
  return ModuleDescriptor(Kind::Pair, std::move(inner), std::move(outer));
}

const SquarefreeIdeal& ModuleDescriptor::outer() const& {
  if (!outer_) throw std::logic_error("ModuleDescriptor::outer: not a pair");
  return *outer_;
}

bool ModuleDescriptor::member(Mask sigma) const {
  switch (kind_) {
    case Kind::Ideal: return inner_.contains(sigma);
    case Kind::Quotient: return !inner_.contains(sigma);
    case Kind::Pair: return outer_->contains(sigma) && !inner_.contains(sigma);
  }
  return false;
}

}  // namespace stanley
