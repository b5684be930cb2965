#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stress/graph.hpp"

namespace stress {

/// All-pairs distances and shortest-path counts, stored row-major.
class GeodesicCensus {
 public:
  GeodesicCensus() = default;
  explicit GeodesicCensus(const Graph& g);

  int order() const { return n_; }
  Distance dist(Vertex u, Vertex v) const { return dist_[index(u, v)]; }
  Count sigma(Vertex u, Vertex v) const { return sigma_[index(u, v)]; }
  bool reachable(Vertex u, Vertex v) const { return dist(u, v) != kUnreachable; }

  void check_vertex(Vertex v) const;

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_ = 0;
  std::vector<Distance> dist_;
  std::vector<Count> sigma_;
};

GeodesicCensus census(const Graph& g);

struct StressProfile {
  std::vector<Count> stress;
  Count total = 0;

  friend bool operator==(const StressProfile&, const StressProfile&) = default;
};

/// f[i] is the number of geodesics of length i; f[0] is always 0.
struct GeodesicHistogram {
  std::vector<Count> f;

  int max_length() const { return f.empty() ? 0 : static_cast<int>(f.size()) - 1; }
};

/// Geodesics through v as an internal vertex, from the ordered-pair sum
///   (1/2) * sum_{s,t != v, s != t, d(s,v)+d(v,t)=d(s,t)} sigma(s,v) * sigma(v,t).
Count stress(const GeodesicCensus& c, Vertex v);

StressProfile stress_profile(const Graph& g);

/// Same result as stress_profile, accumulated over each source's shortest-path DAG:
/// a vertex v at depth >= 1 below source s gains sigma(s,v) * (number of downward DAG paths leaving v).
StressProfile stress_profile_accumulated(const Graph& g);

GeodesicHistogram geodesic_histogram(const GeodesicCensus& c);
Count total_stress_from_histogram(const GeodesicHistogram& h);

/// Lemma-style criterion: some neighbor w of v has d(u,w) = d(u,v) + 1.
bool imposes_stress(const Graph& g, Vertex u, Vertex v);

// Enumeration oracle. Paths list the smaller endpoint first.

using Path = std::vector<Vertex>;

inline constexpr std::size_t kDefaultPathCap = 1'000'000;

std::vector<Path> enumerate_geodesics(const Graph& g, std::size_t cap = kDefaultPathCap);

Count stress_oracle(const Graph& g, Vertex v, std::size_t cap = kDefaultPathCap);
Count stress_oracle(std::span<const Path> geodesics, Vertex v);
StressProfile stress_profile_oracle(const Graph& g, std::size_t cap = kDefaultPathCap);

/// Definition-level check: an enumerated geodesic has u as an endpoint and v strictly inside.
bool imposes_stress_oracle(std::span<const Path> geodesics, Vertex u, Vertex v);

}  // namespace stress
