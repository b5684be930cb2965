#pragma once

#include "stress/graph.hpp"

namespace stress {

// Closed-form stress predictions for standard families. All results are exact
// counts; a non-integral quotient is reported as InfeasibleParameters.

enum class Side { A, B };

Count predict_complete_bipartite(int m, int n, Side side);
Count predict_complete_bipartite_total(int m, int n);

Count predict_cycle(int n);
Count predict_cycle_total(int n);

/// Center of Wd(n, m): m(m-1)(n-1)^2 / 2.
Count predict_windmill_center(int n, int m);
/// Any vertex of windmill(n, m) in generator numbering; only the center is stressed.
Count predict_windmill(int n, int m, Vertex v);

/// Sum over pairs of components of T - v of the product of their sizes.
Count predict_tree_vertex(const Graph& t, Vertex v);

struct SrgParameters {
  int v = 0;
  int k = 0;
  int lambda = 0;
  int mu = 0;

  bool feasible() const;
  friend bool operator==(const SrgParameters&, const SrgParameters&) = default;
};

/// k(k-1-lambda)/2 when mu >= 1, else 0 (disjoint equal cliques).
Count predict_srg(const SrgParameters& p);

/// Vertex of the K_m copy in K_m o G with |G| = n, as stated: mn(m-1)(n+1)/2.
Count predict_corona_hub(int m, int n);
/// Vertex v of a copy of G: non-adjacent pairs inside N_G(v).
Count predict_corona_leaf(const Graph& g, Vertex v);

/// Diameter-2 graphs: stress(v) is the number of non-adjacent pairs in N(v).
Count predict_diameter2(const Graph& g, Vertex v);

Count nonadjacent_neighbor_pairs(const Graph& g, Vertex v);

}  // namespace stress
