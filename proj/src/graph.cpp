#include "stanley/graph.hpp"

#include <algorithm>
#include <deque>

namespace stanley {

Graph::Graph(int vertex_count) {
  if (vertex_count < 0 || vertex_count > kMaxVars)
    throw std::invalid_argument("Graph: vertex count out of range");
  adj_.assign(static_cast<size_t>(vertex_count), 0);
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count())
    throw std::invalid_argument("Graph::add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("Graph::add_edge: self-loop");
  if (adjacent(u, v)) return;
  adj_[u] |= bit(v);
  adj_[v] |= bit(u);
  ++edge_count_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<size_t>(edge_count_));
  for (int u = 0; u < vertex_count(); ++u)
    for (Mask m = adj_[u] & ~(full_mask(u + 1)); m; m &= m - 1)
      out.emplace_back(u, std::countr_zero(m));
  std::sort(out.begin(), out.end());
  return out;
}

std::string family_name(Family f) {
  switch (f) {
    case Family::P: return "P";
    case Family::C: return "C";
    case Family::Pstar: return "Pstar";
    case Family::Pstarstar: return "Pstarstar";
    case Family::Cdiamond: return "Cdiamond";
  }
  return "?";
}

FamilySpec FamilySpec::parse(const std::string& dsl) {
  auto colon = dsl.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("family spec: expected FAMILY:n[,m] in '" + dsl + "'");
  std::string name = dsl.substr(0, colon);
  std::string rest = dsl.substr(colon + 1);

  Family fam;
  if (name == "P") fam = Family::P;
  else if (name == "C") fam = Family::C;
  else if (name == "Pstar") fam = Family::Pstar;
  else if (name == "Pstarstar") fam = Family::Pstarstar;
  else if (name == "Cdiamond") fam = Family::Cdiamond;
  else throw std::invalid_argument("family spec: unknown family '" + name + "'");

  auto parse_int = [&](const std::string& s) {
    size_t pos = 0;
    int value = 0;
    try {
      value = std::stoi(s, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("family spec: bad integer in '" + dsl + "'");
    }
    if (pos != s.size())
      throw std::invalid_argument("family spec: bad integer in '" + dsl + "'");
    return value;
  };

  FamilySpec spec;
  spec.family = fam;
  auto comma = rest.find(',');
  bool two_params = fam == Family::P || fam == Family::C;
  if (two_params) {
    if (comma == std::string::npos)
      throw std::invalid_argument("family spec: '" + name + "' needs n,m");
    spec.shape.n = parse_int(rest.substr(0, comma));
    spec.shape.m = parse_int(rest.substr(comma + 1));
  } else {
    if (comma != std::string::npos)
      throw std::invalid_argument("family spec: '" + name + "' takes a single n");
    spec.shape.n = parse_int(rest);
    spec.shape.m = 3;
  }
  spec.validate();
  return spec;
}

std::string FamilySpec::dsl() const {
  std::string out = family_name(family) + ":" + std::to_string(shape.n);
  if (family == Family::P || family == Family::C)
    out += "," + std::to_string(shape.m);
  return out;
}

void FamilySpec::validate() const {
  const int n = shape.n, m = shape.m;
  switch (family) {
    case Family::P:
      if (n < 1 || m < 1 || n * m < 2)
        throw invalid_shape_error("P family needs n,m >= 1 and n*m >= 2");
      break;
    case Family::C:
      if (n < 3 || m < 1)
        throw invalid_shape_error("C family needs n >= 3 and m >= 1");
      break;
    case Family::Pstar:
    case Family::Pstarstar:
      if (m != 3 || n < 2)
        throw invalid_shape_error(family_name(family) + " needs m = 3 and n >= 2");
      break;
    case Family::Cdiamond:
      if (m != 3 || n < 6)
        throw invalid_shape_error("Cdiamond needs m = 3 and n >= 6");
      break;
  }
  if (static_cast<long long>(n) * m + 2 > kMaxVars + 2 || n * m > kMaxVars)
    throw invalid_shape_error("family exceeds the 64-variable limit");
}

Graph build_path(int n) {
  if (n < 1) throw invalid_shape_error("path needs n >= 1");
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

Graph build_cycle(int n) {
  if (n < 3) throw invalid_shape_error("cycle needs n >= 3");
  Graph g = build_path(n);
  g.add_edge(0, n - 1);
  return g;
}

Graph strong_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  if (n1 == 0 || n2 == 0)
    throw std::invalid_argument("strong_product: factors must be nonempty");
  Graph g(n1 * n2);
  for (int a1 = 0; a1 < n1; ++a1)
    for (int a2 = 0; a2 < n2; ++a2)
      for (int b1 = 0; b1 < n1; ++b1)
        for (int b2 = 0; b2 < n2; ++b2) {
          if (a1 == b1 && a2 == b2) continue;
          bool eq1 = a1 == b1, eq2 = a2 == b2;
          bool adj1 = g1.adjacent(a1, b1), adj2 = g2.adjacent(a2, b2);
          bool joined = (adj1 && eq2) || (eq1 && adj2) || (adj1 && adj2);
          int u = a2 * n1 + a1, v = b2 * n1 + b1;
          if (joined && u < v) g.add_edge(u, v);
        }
  return g;
}

std::string grid_label(int v, int n, int m) {
  int i = v % n + 1, j = v / n + 1;
  if (m <= 3) {
    static const char* row[] = {"x", "y", "z"};
    return std::string(row[j - 1]) + std::to_string(i);
  }
  return "x" + std::to_string(i) + "_" + std::to_string(j);
}

int FamilyGraph::var(const std::string& label) const {
  for (size_t k = 0; k < labels.size(); ++k)
    if (labels[k] == label) return static_cast<int>(k);
  throw std::invalid_argument("no variable labeled '" + label + "'");
}

FamilyGraph build_family(const FamilySpec& spec) {
  spec.validate();
  const int n = spec.shape.n, m = spec.shape.m;

  auto grid_labels = [&](int count) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(count));
    for (int v = 0; v < count; ++v) labels.push_back(grid_label(v, n, m));
    return labels;
  };

  switch (spec.family) {
    case Family::P: {
      Graph g = n == 1 ? strong_product(build_path(1), build_path(m))
                       : strong_product(build_path(n), build_path(m));
      return FamilyGraph{spec, std::move(g), grid_labels(n * m)};
    }
    case Family::C: {
      Graph g = strong_product(build_cycle(n), build_path(m));
      return FamilyGraph{spec, std::move(g), grid_labels(n * m)};
    }
    case Family::Pstar:
    case Family::Pstarstar: {
      Graph base = strong_product(build_path(n), build_path(3));
      int extra = spec.family == Family::Pstar ? 1 : 2;
      Graph g(3 * n + extra);
      for (auto [u, v] : base.edges()) g.add_edge(u, v);
      const int yn = n + (n - 1), zn = 2 * n + (n - 1);
      const int y1 = n, z1 = 2 * n;
      g.add_edge(zn, 3 * n);      // z_n z_{n+1}
      g.add_edge(yn, 3 * n);      // y_n z_{n+1}
      if (extra == 2) {
        g.add_edge(z1, 3 * n + 1);  // z_1 z_{n+2}
        g.add_edge(y1, 3 * n + 1);  // y_1 z_{n+2}
      }
      std::vector<std::string> labels = grid_labels(3 * n);
      labels.push_back("z" + std::to_string(n + 1));
      if (extra == 2) labels.push_back("z" + std::to_string(n + 2));
      return FamilyGraph{spec, std::move(g), std::move(labels)};
    }
    case Family::Cdiamond: {
      Graph base = strong_product(build_cycle(n), build_path(3));
      // Delete x and y at indices 1, 2, n-1, n; the ambient ring shrinks
      // to the surviving 3n - 8 vertices.
      std::vector<int> keep;
      std::vector<std::string> labels;
      for (int v = 0; v < 3 * n; ++v) {
        int i = v % n + 1, j = v / n + 1;
        bool deleted = (j == 1 || j == 2) && (i <= 2 || i >= n - 1);
        if (!deleted) {
          keep.push_back(v);
          labels.push_back(grid_label(v, n, 3));
        }
      }
      std::vector<int> compressed(static_cast<size_t>(3 * n), -1);
      for (size_t k = 0; k < keep.size(); ++k) compressed[static_cast<size_t>(keep[k])] = static_cast<int>(k);
      Graph g(static_cast<int>(keep.size()));
      for (auto [u, v] : base.edges())
        if (compressed[static_cast<size_t>(u)] >= 0 && compressed[static_cast<size_t>(v)] >= 0)
          g.add_edge(compressed[static_cast<size_t>(u)], compressed[static_cast<size_t>(v)]);
      return FamilyGraph{spec, std::move(g), std::move(labels)};
    }
  }
  throw std::logic_error("build_family: unreachable");
}

std::optional<int> diameter(const Graph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  int best = 0;
  std::vector<int> dist(static_cast<size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::deque<int> queue{s};
    dist[static_cast<size_t>(s)] = 0;
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (Mask m = g.neighbors(u); m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (dist[static_cast<size_t>(v)] < 0) {
          dist[static_cast<size_t>(v)] = dist[static_cast<size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (dist[static_cast<size_t>(v)] < 0) return std::nullopt;
      best = std::max(best, dist[static_cast<size_t>(v)]);
    }
  }
  return best;
}

}  // namespace stanley
