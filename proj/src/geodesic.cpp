#include "stress/geodesic.hpp"

#include <algorithm>
#include <string>

namespace stress {

GeodesicCensus::GeodesicCensus(const Graph& g) : n_(g.order()) {
  const auto cells = static_cast<std::size_t>(n_) * n_;
  dist_.resize(cells);
  sigma_.resize(cells);
  for (Vertex s = 0; s < n_; ++s) {
    auto row = bfs(g, s);
    std::copy(row.dist.begin(), row.dist.end(), dist_.begin() + index(s, 0));
    std::copy(row.sigma.begin(), row.sigma.end(), sigma_.begin() + index(s, 0));
  }
}

void GeodesicCensus::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::IndexOutOfRange, "vertex " + std::to_string(v) + " outside [0," + std::to_string(n_) + ")");
  }
}

GeodesicCensus census(const Graph& g) { return GeodesicCensus(g); }

Count stress(const GeodesicCensus& c, Vertex v) {
  c.check_vertex(v);
  Count ordered = 0;
  for (Vertex s = 0; s < c.order(); ++s) {
    if (s == v || !c.reachable(s, v)) continue;
    for (Vertex t = 0; t < c.order(); ++t) {
      if (t == v || t == s || !c.reachable(v, t)) continue;
      if (c.dist(s, v) + c.dist(v, t) != c.dist(s, t)) continue;
      ordered = checked_add(ordered, checked_mul(c.sigma(s, v), c.sigma(v, t)));
    }
  }
  return ordered / 2;
}

StressProfile stress_profile(const Graph& g) {
  const auto c = census(g);
  StressProfile p;
  p.stress.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    p.stress[v] = stress(c, v);
    p.total = checked_add(p.total, p.stress[v]);
  }
  return p;
}

StressProfile stress_profile_accumulated(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<Count> ordered(n, 0);
  std::vector<Count> below(n);
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto r = bfs(g, s);
    std::fill(below.begin(), below.end(), 0);
    // Deepest layer first, so children are finished before their parents.
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
      const Vertex v = *it;
      for (Vertex w : g.neighbors(v)) {
        if (r.dist[w] == r.dist[v] + 1) below[v] = checked_add(below[v], checked_add(1, below[w]));
      }
      if (v != s) ordered[v] = checked_add(ordered[v], checked_mul(r.sigma[v], below[v]));
    }
  }
  StressProfile p;
  p.stress.resize(n);
  for (std::size_t v = 0; v < n; ++v) {
    p.stress[v] = ordered[v] / 2;
    p.total = checked_add(p.total, p.stress[v]);
  }
  return p;
}

GeodesicHistogram geodesic_histogram(const GeodesicCensus& c) {
  GeodesicHistogram h;
  h.f.assign(1, 0);
  for (Vertex u = 0; u < c.order(); ++u) {
    for (Vertex v = u + 1; v < c.order(); ++v) {
      if (!c.reachable(u, v)) continue;
      const auto len = static_cast<std::size_t>(c.dist(u, v));
      if (h.f.size() <= len) h.f.resize(len + 1, 0);
      h.f[len] = checked_add(h.f[len], c.sigma(u, v));
    }
  }
  return h;
}

Count total_stress_from_histogram(const GeodesicHistogram& h) {
  Count total = 0;
  for (std::size_t i = 1; i < h.f.size(); ++i) total = checked_add(total, checked_mul(i - 1, h.f[i]));
  return total;
}

bool imposes_stress(const Graph& g, Vertex u, Vertex v) {
  g.check_vertex(u);
  g.check_vertex(v);
  if (u == v) throw Error(ErrorCode::BadParameter, "imposes_stress needs distinct vertices");
  const auto r = bfs(g, u);
  if (static_cast<int>(r.order.size()) != g.order()) throw Error(ErrorCode::Disconnected, "graph is not connected");
  const auto nbrs = g.neighbors(v);
  return std::any_of(nbrs.begin(), nbrs.end(), [&](Vertex w) { return r.dist[w] == r.dist[v] + 1; });
}

namespace {

// Extends partial (written target-first) back toward the source along predecessor edges.
void expand_back(const Graph& g, const BfsResult& r, Path& partial, std::vector<Path>& out, std::size_t cap) {
  const Vertex tip = partial.back();
  if (tip == r.source) {
    if (out.size() >= cap) {
      throw Error(ErrorCode::OutputLimitExceeded, "more than " + std::to_string(cap) + " geodesics");
    }
    out.emplace_back(partial.rbegin(), partial.rend());
    return;
  }
  for (Vertex p : g.neighbors(tip)) {
    if (r.dist[p] != r.dist[tip] - 1) continue;
    partial.push_back(p);
    expand_back(g, r, partial, out, cap);
    partial.pop_back();
  }
}

}  // namespace

std::vector<Path> enumerate_geodesics(const Graph& g, std::size_t cap) {
  std::vector<Path> out;
  Path partial;
  for (Vertex s = 0; s < g.order(); ++s) {
    const auto r = bfs(g, s);
    for (Vertex t = s + 1; t < g.order(); ++t) {
      if (r.dist[t] == kUnreachable) continue;
      partial.assign(1, t);
      expand_back(g, r, partial, out, cap);
    }
  }
  return out;
}

Count stress_oracle(std::span<const Path> geodesics, Vertex v) {
  Count hits = 0;
  for (const auto& path : geodesics) {
    if (path.size() > 2 && std::find(path.begin() + 1, path.end() - 1, v) != path.end() - 1) ++hits;
  }
  return hits;
}

Count stress_oracle(const Graph& g, Vertex v, std::size_t cap) {
  g.check_vertex(v);
  return stress_oracle(enumerate_geodesics(g, cap), v);
}

StressProfile stress_profile_oracle(const Graph& g, std::size_t cap) {
  const auto paths = enumerate_geodesics(g, cap);
  StressProfile p;
  p.stress.assign(static_cast<std::size_t>(g.order()), 0);
  for (const auto& path : paths) {
    for (std::size_t i = 1; i + 1 < path.size(); ++i) ++p.stress[path[i]];
  }
  for (Count s : p.stress) p.total += s;
  return p;
}

bool imposes_stress_oracle(std::span<const Path> geodesics, Vertex u, Vertex v) {
  for (const auto& path : geodesics) {
    if (path.size() < 3 || (path.front() != u && path.back() != u)) continue;
    if (std::find(path.begin() + 1, path.end() - 1, v) != path.end() - 1) return true;
  }
  return false;
}

}  // namespace stress
