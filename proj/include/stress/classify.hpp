#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stress/closed_forms.hpp"
#include "stress/geodesic.hpp"
#include "stress/graph.hpp"

namespace stress {

struct BlockCutDecomposition {
  std::vector<Vertex> cut_vertices;
  /// Vertex sets of the blocks, each sorted; isolated vertices are singleton blocks.
  std::vector<std::vector<Vertex>> blocks;
};

std::vector<Vertex> simplicial_vertices(const Graph& g);

BlockCutDecomposition block_cut_decomposition(const Graph& g);

// The two sides of the unique-stressed-vertex characterization. Both require a
// connected graph with at least 3 vertices (Disconnected / TooSmall otherwise).

/// The cut vertex, if g has exactly one and every block induces a clique.
std::optional<Vertex> is_unique_cutvertex_complete_blocks(const Graph& g);

/// The only vertex with positive stress, if there is exactly one.
std::optional<Vertex> has_single_positive_stress_vertex(const Graph& g);
std::optional<Vertex> has_single_positive_stress_vertex(const Graph& g, const StressProfile& p);

/// With n + 1 vertices: one vertex of stress n(n-1)/2, all others zero.
bool is_star_by_stress(const Graph& g);
bool is_star_by_stress(const Graph& g, const StressProfile& p);

/// Structural test for K_{1,n}.
bool is_star(const Graph& g);
bool is_complete(const Graph& g);

/// Empty unless g is regular with both adjacent and non-adjacent pairs and
/// constant common-neighbor counts on each.
std::optional<SrgParameters> detect_srg(const Graph& g);

std::optional<Count> stress_regularity(const Graph& g);
std::optional<Count> stress_regularity(const StressProfile& p);

enum class RecognizedFamily { Complete, C4, C5, Fig2TwoStressRegular, Prism, Octahedron, Star, None };

std::string_view to_string(RecognizedFamily f);

struct ClassificationReport {
  int n = 0;
  bool is_connected = false;
  std::optional<int> diameter;  // empty when disconnected
  StressProfile stress;
  std::optional<Count> stress_regular_k;
  std::vector<Vertex> simplicial;
  std::optional<SrgParameters> srg;
  std::optional<Vertex> one_stress_center;
  RecognizedFamily recognized_family = RecognizedFamily::None;
  /// Disagreements between a stress-based predicate and its structural counterpart.
  std::vector<std::string> findings;
};

ClassificationReport classify(const Graph& g);

}  // namespace stress
