#include "stress/closed_forms.hpp"

#include <string>

namespace stress {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::BadParameter, what);
}

Count exact_div(Count num, Count den) {
  if (num % den != 0) {
    throw Error(ErrorCode::InfeasibleParameters,
                std::to_string(num) + " is not divisible by " + std::to_string(den));
  }
  return num / den;
}

Count c(std::int64_t x) { return static_cast<Count>(x); }

}  // namespace

Count predict_complete_bipartite(int m, int n, Side side) {
  require(m >= 1 && n >= 1, "K_{m,n} needs m, n >= 1");
  const Count other = side == Side::A ? c(n) : c(m);
  return exact_div(other * (other - 1), 2);
}

Count predict_complete_bipartite_total(int m, int n) {
  require(m >= 1 && n >= 1, "K_{m,n} needs m, n >= 1");
  return exact_div(checked_mul(c(m) * c(n), c(m + n - 2)), 2);
}

Count predict_cycle(int n) {
  require(n >= 3, "C_n needs n >= 3");
  if (n % 2 == 1) return exact_div(c(n - 1) * c(n - 3), 8);
  return exact_div(c(n) * c(n - 2), 8);
}

Count predict_cycle_total(int n) {
  require(n >= 3, "C_n needs n >= 3");
  if (n % 2 == 1) return exact_div(checked_mul(c(n) * c(n - 1), c(n - 3)), 8);
  return exact_div(checked_mul(c(n) * c(n), c(n - 2)), 8);
}

Count predict_windmill_center(int n, int m) {
  require(n >= 2 && m >= 2, "Wd(n, m) needs n, m >= 2");
  return exact_div(checked_mul(c(m) * c(m - 1), c(n - 1) * c(n - 1)), 2);
}

Count predict_windmill(int n, int m, Vertex v) {
  require(v >= 0 && v <= m * (n - 1), "vertex outside windmill");
  return v == 0 ? predict_windmill_center(n, m) : 0;
}

Count predict_tree_vertex(const Graph& t, Vertex v) {
  t.check_vertex(v);
  if (t.edge_count() + 1 != static_cast<std::size_t>(t.order()) || !is_connected(t)) {
    throw Error(ErrorCode::NotATree, "graph is not a tree");
  }
  // Each neighbor of v roots one component of T - v.
  Count sum = 0;
  Count seen = 0;
  for (Vertex root : t.neighbors(v)) {
    Count size = 0;
    std::vector<Vertex> stack{root};
    std::vector<bool> visited(static_cast<std::size_t>(t.order()), false);
    visited[v] = visited[root] = true;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex y : t.neighbors(x)) {
        if (!visited[y]) {
          visited[y] = true;
          stack.push_back(y);
        }
      }
    }
    sum = checked_add(sum, checked_mul(seen, size));
    seen += size;
  }
  return sum;
}

bool SrgParameters::feasible() const {
  if (v < 1 || k < 0 || k >= v) return false;
  if (lambda < 0 || lambda > k - 1) return false;
  if (mu < 0 || mu > k) return false;
  return static_cast<std::int64_t>(k) * (k - lambda - 1) == static_cast<std::int64_t>(v - k - 1) * mu;
}

Count predict_srg(const SrgParameters& p) {
  if (!p.feasible()) {
    throw Error(ErrorCode::InfeasibleParameters,
                "srg(" + std::to_string(p.v) + "," + std::to_string(p.k) + "," + std::to_string(p.lambda) + "," +
                    std::to_string(p.mu) + ")");
  }
  if (p.mu == 0) return 0;
  return exact_div(c(p.k) * c(p.k - 1 - p.lambda), 2);
}

Count predict_corona_hub(int m, int n) {
  require(m >= 2 && n >= 1, "K_m o G needs m >= 2 and |G| >= 1");
  return exact_div(checked_mul(c(m) * c(n), c(m - 1) * c(n + 1)), 2);
}

Count nonadjacent_neighbor_pairs(const Graph& g, Vertex v) {
  const auto nbrs = g.neighbors(v);
  Count pairs = 0;
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.adjacent(nbrs[i], nbrs[j])) ++pairs;
  return pairs;
}

Count predict_corona_leaf(const Graph& g, Vertex v) { return nonadjacent_neighbor_pairs(g, v); }

Count predict_diameter2(const Graph& g, Vertex v) {
  g.check_vertex(v);
  if (!is_connected(g) || diameter(g) != 2) throw Error(ErrorCode::WrongDiameter, "graph does not have diameter 2");
  return nonadjacent_neighbor_pairs(g, v);
}

}  // namespace stress
