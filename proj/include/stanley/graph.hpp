#ifndef STANLEY_GRAPH_HPP
#define STANLEY_GRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "stanley/support.hpp"

namespace stanley {

// Thrown when a family spec violates its shape constraints.
class invalid_shape_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Simple undirected graph on at most kMaxVars vertices, adjacency kept as
// one neighbor mask per vertex.
class Graph {
 public:
  explicit Graph(int vertex_count);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return edge_count_; }

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return (adj_[u] & bit(v)) != 0; }
  Mask neighbors(int v) const { return adj_[v]; }

  // Edges as (u, v) with u < v, sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  std::vector<Mask> adj_;
  int edge_count_ = 0;
};

struct GridShape {
  int n = 0;  // extent along the path/cycle factor
  int m = 0;  // number of layers
};

// Bijection between grid coordinates (i, j), 1 <= i <= n, 1 <= j <= m, and
// flat variable indices (j-1)*n + (i-1). Layer-major so each layer's
// variables stay contiguous.
struct VarIndexer {
  GridShape shape;

  int total() const { return shape.n * shape.m; }
  int flat(int i, int j) const { return (j - 1) * shape.n + (i - 1); }
  std::pair<int, int> coords(int flat) const {
    return {flat % shape.n + 1, flat / shape.n + 1};
  }
};

enum class Family { P, C, Pstar, Pstarstar, Cdiamond };

std::string family_name(Family f);

struct FamilySpec {
  Family family = Family::P;
  GridShape shape{0, 0};

  // Parses the CLI grammar FAMILY ":" INT ["," INT], e.g. "P:6,4",
  // "Pstar:5", "Cdiamond:8". The one-parameter families fix m = 3.
  static FamilySpec parse(const std::string& dsl);
  std::string dsl() const;

  // Throws invalid_shape_error unless the shape constraints hold:
  //   P: n,m >= 1 and n*m >= 2;  C: n >= 3, m >= 1;
  //   Pstar/Pstarstar: m = 3, n >= 2;  Cdiamond: m = 3, n >= 6.
  void validate() const;
};

// A constructed family graph together with its variable labeling.
struct FamilyGraph {
  FamilySpec spec;
  Graph graph;
  std::vector<std::string> labels;  // one label per flat vertex index

  // Index of a labeled variable ("x3", "y1", "z6", "x3_2"); throws if absent.
  int var(const std::string& label) const;
};

Graph build_path(int n);
Graph build_cycle(int n);

// Vertices are pairs (v1, v2) flattened as v2 * |g1| + v1; pairs are
// adjacent when each coordinate is adjacent or equal, but not both equal.
Graph strong_product(const Graph& g1, const Graph& g2);

FamilyGraph build_family(const FamilySpec& spec);

// Max over vertex pairs of BFS distance; nullopt when disconnected.
std::optional<int> diameter(const Graph& g);

// Label for flat index `v` in an n-by-m grid: x/y/z rows for m <= 3,
// "x{i}_{j}" otherwise.
std::string grid_label(int v, int n, int m);

}  // namespace stanley

#endif
