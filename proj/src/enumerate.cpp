#include "stress/enumerate.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace stress {

std::uint64_t edge_mask(const Graph& g) {
  if (g.order() > 11) throw Error(ErrorCode::TooLarge, "edge masks hold at most 11 vertices");
  std::uint64_t mask = 0;
  for (auto [u, v] : g.edges()) mask |= std::uint64_t{1} << pair_index(u, v);
  return mask;
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u)
      if (mask >> pair_index(u, v) & 1) e.push_back({u, v});
  return Graph::from_edge_list(n, e);
}

namespace detail {

MaskGraph decode_mask(int n, std::uint64_t mask) {
  MaskGraph m{n, {}};
  int bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (mask >> bit & 1) {
        m.rows[u] |= 1u << v;
        m.rows[v] |= 1u << u;
      }
    }
  }
  return m;
}

bool connected(const MaskGraph& m) {
  if (m.n <= 1) return true;
  std::uint32_t reached = 1;
  std::uint32_t frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (std::uint32_t f = frontier; f; f &= f - 1) next |= m.rows[std::countr_zero(f)];
    frontier = next & ~reached;
    reached |= next;
  }
  return reached == (1u << m.n) - 1;
}

int min_degree(const MaskGraph& m) {
  int d = m.n;
  for (int v = 0; v < m.n; ++v) d = std::min(d, std::popcount(m.rows[v]));
  return d;
}

}  // namespace detail

Graph CanonicalKey::graph() const {
  const int total = pair_count(n);
  std::uint64_t mask = 0;
  for (int i = 0; i < total; ++i)
    if (bits >> (total - 1 - i) & 1) mask |= std::uint64_t{1} << i;
  return graph_from_mask(n, mask);
}

namespace {

// Branch-and-bound over relabelings that list vertices by non-increasing degree.
// Position p receives a vertex; the column of pairs (q, p), q < p, is then fixed,
// so keys can be compared prefix by prefix.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()), total_(pair_count(n_)) {
    rows_.assign(static_cast<std::size_t>(n_), 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbors(v)) rows_[v] |= 1u << w;
    std::vector<Vertex> byDegree(static_cast<std::size_t>(n_));
    for (Vertex v = 0; v < n_; ++v) byDegree[v] = v;
    std::stable_sort(byDegree.begin(), byDegree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    slotDegree_.resize(static_cast<std::size_t>(n_));
    for (int p = 0; p < n_; ++p) slotDegree_[p] = g.degree(byDegree[p]);
    placed_.assign(static_cast<std::size_t>(n_), 0);
  }

  CanonicalKey run() {
    if (n_ > 0) place(0, 0, 0);
    return {n_, best_};
  }

 private:
  void place(int p, std::uint64_t prefix, std::uint32_t used) {
    if (p == n_) {
      if (!haveBest_ || prefix < best_) {
        best_ = prefix;
        haveBest_ = true;
      }
      return;
    }
    const int prefixLen = pair_count(p + 1);
    for (Vertex v = 0; v < n_; ++v) {
      if (used >> v & 1 || g_.degree(v) != slotDegree_[p]) continue;
      std::uint64_t next = prefix;
      for (int q = 0; q < p; ++q) next = next << 1 | (rows_[placed_[q]] >> v & 1);
      if (haveBest_) {
        const std::uint64_t bestPrefix = best_ >> (total_ - prefixLen);
        if (next > bestPrefix) continue;
      }
      placed_[p] = v;
      place(p + 1, next, used | 1u << v);
    }
  }

  const Graph& g_;
  int n_;
  int total_;
  std::vector<std::uint32_t> rows_;
  std::vector<int> slotDegree_;
  std::vector<Vertex> placed_;
  std::uint64_t best_ = 0;
  bool haveBest_ = false;
};

}  // namespace

CanonicalKey canonical_form(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error(ErrorCode::TooLarge, "canonical form supports at most " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  return Canonizer(g).run();
}

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b);
}

void check_enumeration_order(int n, bool allow_order8) {
  if (n < 1 || n > 8) throw Error(ErrorCode::BadParameter, "enumeration supports 1 <= n <= 8");
  if (n == 8 && !allow_order8) throw Error(ErrorCode::BadParameter, "n = 8 needs the explicit long-running flag");
}

std::uint64_t count_connected(int n, std::optional<int> min_degree, bool allow_order8) {
  check_enumeration_order(n, allow_order8);
  std::uint64_t count = 0;
  const std::uint64_t end = std::uint64_t{1} << pair_count(n);
  for (std::uint64_t mask = 0; mask < end; ++mask) {
    const auto m = detail::decode_mask(n, mask);
    if (detail::connected(m) && (!min_degree || detail::min_degree(m) >= *min_degree)) ++count;
  }
  return count;
}

}  // namespace stress
