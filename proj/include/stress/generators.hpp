#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stress/graph.hpp"

namespace stress {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
/// K_{1,n}: center 0, leaves 1..n.
Graph star(int n);
/// Sides are 0..m-1 and m..m+n-1.
Graph complete_bipartite(int m, int n);

/// m copies of K_n glued at vertex 0; copy j occupies 1 + j(n-1) .. (j+1)(n-1).
Graph windmill(int n, int m);

/// Vertices 0..g1.n-1 are g1; copy i of g2 starts at g1.n + i * g2.n.
Graph corona(const Graph& g1, const Graph& g2);

/// u ~ w iff 1 <= d(u,w) <= k. Requires a connected graph.
Graph power(const Graph& g, int k);

/// K_{2k+2} minus the matching {2i, 2i+1}.
Graph cocktail_party(int k);

enum class Fixture { Fig1Reg3, Fig2TwoStressRegular, Fig3Prism, Fig4Octahedron, Petersen };

Graph named(Fixture id);
std::string_view to_string(Fixture id);
/// Accepts the CLI tags (FIG1_REG3, FIG2_2SR, FIG3_PRISM, FIG4_OCTAHEDRON, PETERSEN), case-insensitive.
Fixture fixture_from_string(std::string_view tag);

/// Uniform labeled tree from a Pruefer sequence drawn with std::mt19937_64.
Graph random_tree(int n, std::uint64_t seed);

enum class Family { Complete, Cycle, Path, CompleteBipartite, Star, Windmill, CocktailParty, Named, RandomTree };

struct FamilySpec {
  Family family = Family::Complete;
  std::vector<std::int64_t> params;
  std::optional<Fixture> fixture;
  std::optional<std::uint64_t> seed;
};

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);

/// Parses "FAMILY PARAMS..." as given on the command line, e.g. {"windmill","3","2"}.
FamilySpec parse_family_spec(const std::vector<std::string>& words);
Graph generate(const FamilySpec& spec);

}  // namespace stress
