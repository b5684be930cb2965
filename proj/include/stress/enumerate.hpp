#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>

#include "stress/graph.hpp"

namespace stress {

inline constexpr int kMaxCanonicalOrder = 8;
inline constexpr int kMaxDefaultEnumerationOrder = 7;

constexpr int pair_count(int n) { return n * (n - 1) / 2; }

/// Index of the unordered pair {u, v} (u < v) in column order (0,1),(0,2),(1,2),(0,3),...
constexpr int pair_index(Vertex u, Vertex v) { return v * (v - 1) / 2 + u; }

/// Edge mask with bit pair_index(u, v) set for each edge. Requires n <= 11.
std::uint64_t edge_mask(const Graph& g);
Graph graph_from_mask(int n, std::uint64_t mask);

/// Isomorphism-invariant key: the lexicographically least adjacency bit string
/// (pairs in column order, first pair most significant) over all relabelings.
struct CanonicalKey {
  int n = 0;
  std::uint64_t bits = 0;

  /// The graph whose edge string is this key.
  Graph graph() const;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;
};

/// Throws TooLarge above kMaxCanonicalOrder vertices.
CanonicalKey canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

namespace detail {
// Adjacency rows as bitsets, from an edge mask.
struct MaskGraph {
  int n;
  std::uint32_t rows[16];
};
MaskGraph decode_mask(int n, std::uint64_t mask);
bool connected(const MaskGraph& m);
int min_degree(const MaskGraph& m);
}  // namespace detail

void check_enumeration_order(int n, bool allow_order8);

/// Calls fn(graph, mask) for each connected labeled graph on n vertices whose
/// edge mask lies in [lo, hi), in ascending mask order.
template <class Fn>
void for_each_connected_in_range(int n, std::optional<int> min_degree, std::uint64_t lo, std::uint64_t hi, Fn&& fn) {
  for (std::uint64_t mask = lo; mask < hi; ++mask) {
    const auto m = detail::decode_mask(n, mask);
    if (!detail::connected(m)) continue;
    if (min_degree && detail::min_degree(m) < *min_degree) continue;
    fn(graph_from_mask(n, mask), mask);
  }
}

/// Every connected labeled graph on n vertices, each once, ascending edge mask.
/// n = 8 requires allow_order8.
template <class Fn>
void for_each_connected(int n, std::optional<int> min_degree, Fn&& fn, bool allow_order8 = false) {
  check_enumeration_order(n, allow_order8);
  for_each_connected_in_range(n, min_degree, 0, std::uint64_t{1} << pair_count(n), std::forward<Fn>(fn));
}

std::uint64_t count_connected(int n, std::optional<int> min_degree = std::nullopt, bool allow_order8 = false);

}  // namespace stress
