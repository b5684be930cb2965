#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "stress/error.hpp"

namespace stress {

using Vertex = int;
using Distance = int;
using Count = std::uint64_t;

/// Distance to a vertex in another component. Never valid as an operand.
inline constexpr Distance kUnreachable = -1;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Overflow-checked arithmetic on path counts; throws CountOverflow.
Count checked_add(Count a, Count b);
Count checked_mul(Count a, Count b);

/// Immutable simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
class Graph {
 public:
  Graph() = default;

  /// Duplicate edges collapse; self-loops and out-of-range endpoints throw.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges);

  int order() const { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const { return edge_count_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex u, Vertex v) const;

  /// All edges with u < v, in ascending order.
  std::vector<Edge> edges() const;

  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::size_t edge_count_ = 0;
};

struct BfsResult {
  Vertex source = 0;
  std::vector<Distance> dist;
  std::vector<Count> sigma;
  std::vector<Vertex> order;
};

/// Single-source distances and shortest-path counts.
BfsResult bfs(const Graph& g, Vertex source);

/// Throws Disconnected if some vertex is unreachable from v.
int eccentricity(const Graph& g, Vertex v);
std::vector<int> eccentricities(const Graph& g);
int diameter(const Graph& g);

bool is_connected(const Graph& g);
std::vector<std::vector<Vertex>> components(const Graph& g);

bool induced_is_clique(const Graph& g, std::span<const Vertex> s);

/// Graph with vertex v removed; vertices above v shift down by one.
Graph delete_vertex(const Graph& g, Vertex v);

/// Image of g under the labeling old vertex i -> perm[i].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace stress
