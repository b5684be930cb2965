#include "stress/graph.hpp"

#include <algorithm>
#include <string>

namespace stress {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::CountOverflow: return "CountOverflow";
    case ErrorCode::OutputLimitExceeded: return "OutputLimitExceeded";
    case ErrorCode::BadParameter: return "BadParameter";
    case ErrorCode::UnknownFixture: return "UnknownFixture";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::InfeasibleParameters: return "InfeasibleParameters";
    case ErrorCode::WrongDiameter: return "WrongDiameter";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::CountOverflow, "path count exceeds 64 bits");
  return r;
}

Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::CountOverflow, "path count exceeds 64 bits");
  return r;
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  if (n < 0) throw Error(ErrorCode::BadParameter, "negative vertex count");
  Graph g;
  g.adj_.resize(static_cast<std::size_t>(n));
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," + std::to_string(n) + ")");
    }
    if (u == v) throw Error(ErrorCode::SelfLoop, "self-loop at vertex " + std::to_string(u));
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    g.edge_count_ += nbrs.size();
  }
  g.edge_count_ /= 2;
  return g;
}

Graph Graph::from_edge_list(int n, std::initializer_list<Edge> edges) {
  return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " outside [0," + std::to_string(order()) + ")");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

BfsResult bfs(const Graph& g, Vertex source) {
  g.check_vertex(source);
  const auto n = static_cast<std::size_t>(g.order());
  BfsResult r;
  r.source = source;
  r.dist.assign(n, kUnreachable);
  r.sigma.assign(n, 0);
  r.order.reserve(n);
  r.dist[source] = 0;
  r.sigma[source] = 1;
  r.order.push_back(source);
  for (std::size_t head = 0; head < r.order.size(); ++head) {
    const Vertex u = r.order[head];
    for (Vertex w : g.neighbors(u)) {
      if (r.dist[w] == kUnreachable) {
        r.dist[w] = r.dist[u] + 1;
        r.order.push_back(w);
      }
      if (r.dist[w] == r.dist[u] + 1) r.sigma[w] = checked_add(r.sigma[w], r.sigma[u]);
    }
  }
  return r;
}

int eccentricity(const Graph& g, Vertex v) {
  const auto r = bfs(g, v);
  if (static_cast<int>(r.order.size()) != g.order()) {
    throw Error(ErrorCode::Disconnected, "vertex " + std::to_string(v) + " does not reach every vertex");
  }
  return r.dist[r.order.back()];
}

std::vector<int> eccentricities(const Graph& g) {
  std::vector<int> ecc(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) ecc[v] = eccentricity(g, v);
  return ecc;
}

int diameter(const Graph& g) {
  int d = 0;
  for (int e : eccentricities(g)) d = std::max(d, e);
  return d;
}

bool is_connected(const Graph& g) {
  return g.order() == 0 || static_cast<int>(bfs(g, 0).order.size()) == g.order();
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> parts;
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    auto part = bfs(g, s).order;
    for (Vertex v : part) seen[v] = true;
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

bool induced_is_clique(const Graph& g, std::span<const Vertex> s) {
  for (Vertex v : s) g.check_vertex(v);
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (s[i] != s[j] && !g.adjacent(s[i], s[j])) return false;
    }
  }
  return true;
}

Graph delete_vertex(const Graph& g, Vertex v) {
  g.check_vertex(v);
  std::vector<Edge> kept;
  for (auto [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    kept.push_back({a > v ? a - 1 : a, b > v ? b - 1 : b});
  }
  return Graph::from_edge_list(g.order() - 1, kept);
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw Error(ErrorCode::BadParameter, "permutation size mismatch");
  std::vector<bool> hit(perm.size(), false);
  for (Vertex p : perm) {
    g.check_vertex(p);
    if (hit[p]) throw Error(ErrorCode::BadParameter, "labeling is not a permutation");
    hit[p] = true;
  }
  std::vector<Edge> mapped;
  for (auto [a, b] : g.edges()) mapped.push_back({perm[a], perm[b]});
  return Graph::from_edge_list(g.order(), mapped);
}

}  // namespace stress
