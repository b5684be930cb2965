#include "stress/classify.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "stress/enumerate.hpp"
#include "stress/generators.hpp"

namespace stress {

std::vector<Vertex> simplicial_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (induced_is_clique(g, g.neighbors(v))) out.push_back(v);
  return out;
}

BlockCutDecomposition block_cut_decomposition(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> disc(n, -1);
  std::vector<int> low(n, 0);
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Edge> edgeStack;
  int timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };

  for (Vertex root = 0; root < g.order(); ++root) {
    if (disc[root] != -1) continue;
    disc[root] = low[root] = timer++;
    if (g.degree(root) == 0) {
      blocks.push_back({root});
      continue;
    }
    std::vector<Frame> frames{{root, -1, 0}};
    while (!frames.empty()) {
      Frame& f = frames.back();
      const auto nbrs = g.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        if (disc[w] == -1) {
          edgeStack.push_back({f.v, w});
          disc[w] = low[w] = timer++;
          frames.push_back({w, f.v, 0});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edgeStack.push_back({f.v, w});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      frames.pop_back();
      if (frames.empty()) break;
      const Vertex u = frames.back().v;
      low[u] = std::min(low[u], low[v]);
      if (low[v] >= disc[u]) {
        // u separates the subtree at v: pop that block's edges.
        std::vector<Vertex> block;
        while (true) {
          const Edge e = edgeStack.back();
          edgeStack.pop_back();
          block.push_back(e.u);
          block.push_back(e.v);
          if (e.u == u && e.v == v) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }

  std::sort(blocks.begin(), blocks.end());
  std::vector<int> membership(n, 0);
  for (const auto& b : blocks)
    for (Vertex v : b) ++membership[v];
  BlockCutDecomposition out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (membership[v] >= 2) out.cut_vertices.push_back(v);
  out.blocks = std::move(blocks);
  return out;
}

namespace {

void require_theorem_domain(const Graph& g) {
  if (g.order() < 3) throw Error(ErrorCode::TooSmall, "needs at least 3 vertices");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "graph is not connected");
}

}  // namespace

std::optional<Vertex> is_unique_cutvertex_complete_blocks(const Graph& g) {
  require_theorem_domain(g);
  const auto bc = block_cut_decomposition(g);
  if (bc.cut_vertices.size() != 1) return std::nullopt;
  for (const auto& b : bc.blocks)
    if (!induced_is_clique(g, b)) return std::nullopt;
  return bc.cut_vertices.front();
}

std::optional<Vertex> has_single_positive_stress_vertex(const Graph& g, const StressProfile& p) {
  require_theorem_domain(g);
  std::optional<Vertex> found;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (p.stress[v] == 0) continue;
    if (found) return std::nullopt;
    found = v;
  }
  return found;
}

std::optional<Vertex> has_single_positive_stress_vertex(const Graph& g) {
  return has_single_positive_stress_vertex(g, stress_profile_accumulated(g));
}

bool is_star_by_stress(const Graph& g, const StressProfile& p) {
  require_theorem_domain(g);
  const Count leaves = static_cast<Count>(g.order() - 1);
  const Count target = leaves * (leaves - 1) / 2;
  int hits = 0;
  for (Count s : p.stress) {
    if (s == target) {
      ++hits;
    } else if (s != 0) {
      return false;
    }
  }
  return hits == 1;
}

bool is_star_by_stress(const Graph& g) { return is_star_by_stress(g, stress_profile_accumulated(g)); }

bool is_star(const Graph& g) {
  const int n = g.order();
  if (n < 2 || g.edge_count() != static_cast<std::size_t>(n - 1)) return false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) return true;
  return false;
}

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - 1) / 2;
}

std::optional<SrgParameters> detect_srg(const Graph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  const int k = g.degree(0);
  for (Vertex v = 1; v < n; ++v)
    if (g.degree(v) != k) return std::nullopt;
  std::optional<int> lambda;
  std::optional<int> mu;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      const auto a = g.neighbors(u);
      const auto b = g.neighbors(v);
      std::vector<Vertex> common;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      auto& slot = g.adjacent(u, v) ? lambda : mu;
      const int c = static_cast<int>(common.size());
      if (slot && *slot != c) return std::nullopt;
      slot = c;
    }
  }
  if (!lambda || !mu) return std::nullopt;
  return SrgParameters{n, k, *lambda, *mu};
}

std::optional<Count> stress_regularity(const StressProfile& p) {
  if (p.stress.empty()) return std::nullopt;
  const Count k = p.stress.front();
  for (Count s : p.stress)
    if (s != k) return std::nullopt;
  return k;
}

std::optional<Count> stress_regularity(const Graph& g) { return stress_regularity(stress_profile_accumulated(g)); }

std::string_view to_string(RecognizedFamily f) {
  switch (f) {
    case RecognizedFamily::Complete: return "COMPLETE";
    case RecognizedFamily::C4: return "C4";
    case RecognizedFamily::C5: return "C5";
    case RecognizedFamily::Fig2TwoStressRegular: return "FIG2_2SR";
    case RecognizedFamily::Prism: return "PRISM";
    case RecognizedFamily::Octahedron: return "OCTAHEDRON";
    case RecognizedFamily::Star: return "STAR";
    case RecognizedFamily::None: return "NONE";
  }
  return "NONE";
}

namespace {

struct Target {
  RecognizedFamily family;
  Count stress;
  CanonicalKey key;
};

const std::vector<Target>& stress_regular_targets() {
  static const std::vector<Target> targets{
      {RecognizedFamily::C4, 1, canonical_form(cycle(4))},
      {RecognizedFamily::C5, 1, canonical_form(cycle(5))},
      {RecognizedFamily::Fig2TwoStressRegular, 2, canonical_form(named(Fixture::Fig2TwoStressRegular))},
      {RecognizedFamily::Prism, 2, canonical_form(named(Fixture::Fig3Prism))},
      {RecognizedFamily::Octahedron, 2, canonical_form(named(Fixture::Fig4Octahedron))},
  };
  return targets;
}

}  // namespace

ClassificationReport classify(const Graph& g) {
  ClassificationReport r;
  r.n = g.order();
  r.is_connected = is_connected(g);
  if (r.is_connected) r.diameter = diameter(g);
  r.stress = stress_profile_accumulated(g);
  r.stress_regular_k = stress_regularity(r.stress);
  r.simplicial = simplicial_vertices(g);
  r.srg = detect_srg(g);

  auto finding = [&](std::string text) { r.findings.push_back(std::move(text)); };

  std::vector<Vertex> zeroStress;
  for (Vertex v = 0; v < g.order(); ++v)
    if (r.stress.stress[v] == 0) zeroStress.push_back(v);
  if (zeroStress != r.simplicial) finding("zero-stress vertices differ from simplicial vertices");

  const bool complete = is_complete(g);
  if (r.is_connected && complete != (r.stress_regular_k == Count{0})) {
    finding("0-stress regularity disagrees with completeness");
  }

  std::optional<Target> match;
  if (g.order() <= kMaxCanonicalOrder && r.is_connected) {
    const auto key = canonical_form(g);
    for (const auto& t : stress_regular_targets())
      if (t.key == key) match = t;
  }
  if (match && r.stress_regular_k != match->stress) {
    finding(std::string(to_string(match->family)) + " is not " + std::to_string(match->stress) + "-stress regular");
  }
  if (r.is_connected && r.stress_regular_k && (*r.stress_regular_k == 1 || *r.stress_regular_k == 2) && !match) {
    finding(std::to_string(*r.stress_regular_k) + "-stress regular graph outside the characterized list");
  }

  if (r.is_connected && g.order() >= 3) {
    r.one_stress_center = has_single_positive_stress_vertex(g, r.stress);
    const auto structural = is_unique_cutvertex_complete_blocks(g);
    if (r.one_stress_center != structural) {
      finding("single stressed vertex disagrees with unique cut vertex with complete blocks");
    }
    if (is_star_by_stress(g, r.stress) != is_star(g)) finding("star stress pattern disagrees with star structure");
  }

  if (r.srg) {
    if (!r.stress_regular_k) {
      finding("strongly regular but not stress regular");
    } else if (r.srg->feasible() && *r.stress_regular_k != predict_srg(*r.srg)) {
      finding("strongly regular stress differs from k(k-1-lambda)/2");
    }
  }

  if (r.is_connected && complete) {
    r.recognized_family = RecognizedFamily::Complete;
  } else if (match && r.stress_regular_k == match->stress) {
    r.recognized_family = match->family;
  } else if (r.is_connected && is_star(g)) {
    r.recognized_family = RecognizedFamily::Star;
  }
  return r;
}

}  // namespace stress
