#include "stress/generators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <random>
#include <set>

#include "stress/geodesic.hpp"

namespace stress {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::BadParameter, what);
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& ch : out) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

// Unbiased draw in [0, bound) from raw engine output.
std::uint64_t draw_below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

Graph complete(int n) {
  require(n >= 1, "complete(n) needs n >= 1");
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph::from_edge_list(n, e);
}

Graph cycle(int n) {
  require(n >= 3, "cycle(n) needs n >= 3");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph::from_edge_list(n, e);
}

Graph path(int n) {
  require(n >= 1, "path(n) needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph::from_edge_list(n, e);
}

Graph star(int n) {
  require(n >= 1, "star(n) needs n >= 1");
  std::vector<Edge> e;
  for (Vertex i = 1; i <= n; ++i) e.push_back({0, i});
  return Graph::from_edge_list(n + 1, e);
}

Graph complete_bipartite(int m, int n) {
  require(m >= 1 && n >= 1, "complete_bipartite(m, n) needs m, n >= 1");
  std::vector<Edge> e;
  for (Vertex a = 0; a < m; ++a)
    for (Vertex b = m; b < m + n; ++b) e.push_back({a, b});
  return Graph::from_edge_list(m + n, e);
}

Graph windmill(int n, int m) {
  require(n >= 2 && m >= 2, "windmill(n, m) needs n, m >= 2");
  std::vector<Edge> e;
  for (int copy = 0; copy < m; ++copy) {
    std::vector<Vertex> block{0};
    for (int i = 0; i < n - 1; ++i) block.push_back(1 + copy * (n - 1) + i);
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) e.push_back({block[i], block[j]});
  }
  return Graph::from_edge_list(m * (n - 1) + 1, e);
}

Graph corona(const Graph& g1, const Graph& g2) {
  require(g2.order() >= 1, "corona needs a non-empty second factor");
  const int n1 = g1.order();
  const int n2 = g2.order();
  auto e = g1.edges();
  const auto inner = g2.edges();
  for (Vertex hub = 0; hub < n1; ++hub) {
    const Vertex base = n1 + hub * n2;
    for (auto [a, b] : inner) e.push_back({base + a, base + b});
    for (Vertex j = 0; j < n2; ++j) e.push_back({hub, base + j});
  }
  return Graph::from_edge_list(n1 + n1 * n2, e);
}

Graph power(const Graph& g, int k) {
  require(k >= 1, "power(g, k) needs k >= 1");
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "power() needs a connected graph");
  const auto c = census(g);
  std::vector<Edge> e;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (c.dist(u, v) <= k) e.push_back({u, v});
  return Graph::from_edge_list(g.order(), e);
}

Graph cocktail_party(int k) {
  require(k >= 1, "cocktail_party(k) needs k >= 1");
  const int n = 2 * k + 2;
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (u / 2 != v / 2) e.push_back({u, v});
  return Graph::from_edge_list(n, e);
}

Graph named(Fixture id) {
  switch (id) {
    case Fixture::Fig1Reg3:
      return Graph::from_edge_list(10, {{0, 5}, {0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
                                        {5, 6}, {5, 7}, {6, 8}, {6, 9}, {7, 8}, {7, 9}, {8, 9}});
    case Fixture::Fig2TwoStressRegular:
      return Graph::from_edge_list(
          6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {0, 4}, {0, 5}, {3, 5}, {1, 5}, {4, 5}});
    case Fixture::Fig3Prism:
      return Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
    case Fixture::Fig4Octahedron: {
      std::vector<Edge> e;
      for (Vertex u = 0; u < 6; ++u)
        for (Vertex v = u + 1; v < 6; ++v)
          if (!(u % 2 == 0 && v == u + 1)) e.push_back({u, v});
      return Graph::from_edge_list(6, e);
    }
    case Fixture::Petersen: {
      std::vector<Edge> e;
      for (Vertex i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({i, i + 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
      }
      return Graph::from_edge_list(10, e);
    }
  }
  throw Error(ErrorCode::UnknownFixture, "unhandled fixture");
}

namespace {

constexpr std::array<std::pair<Fixture, std::string_view>, 5> kFixtureNames{{
    {Fixture::Fig1Reg3, "FIG1_REG3"},
    {Fixture::Fig2TwoStressRegular, "FIG2_2SR"},
    {Fixture::Fig3Prism, "FIG3_PRISM"},
    {Fixture::Fig4Octahedron, "FIG4_OCTAHEDRON"},
    {Fixture::Petersen, "PETERSEN"},
}};

constexpr std::array<std::pair<Family, std::string_view>, 9> kFamilyNames{{
    {Family::Complete, "complete"},
    {Family::Cycle, "cycle"},
    {Family::Path, "path"},
    {Family::CompleteBipartite, "complete_bipartite"},
    {Family::Star, "star"},
    {Family::Windmill, "windmill"},
    {Family::CocktailParty, "cocktail_party"},
    {Family::Named, "named"},
    {Family::RandomTree, "random_tree"},
}};

}  // namespace

std::string_view to_string(Fixture id) {
  for (auto [f, name] : kFixtureNames)
    if (f == id) return name;
  return "UNKNOWN";
}

Fixture fixture_from_string(std::string_view tag) {
  const auto key = upper(tag);
  for (auto [f, name] : kFixtureNames)
    if (name == key) return f;
  throw Error(ErrorCode::UnknownFixture, "no fixture named '" + std::string(tag) + "'");
}

std::string_view to_string(Family f) {
  for (auto [fam, name] : kFamilyNames)
    if (fam == f) return name;
  return "unknown";
}

Family family_from_string(std::string_view name) {
  std::string key(name);
  for (auto& ch : key) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  for (auto [fam, n] : kFamilyNames)
    if (n == key) return fam;
  throw Error(ErrorCode::BadParameter, "unknown family '" + std::string(name) + "'");
}

Graph random_tree(int n, std::uint64_t seed) {
  require(n >= 1, "random_tree(n) needs n >= 1");
  if (n == 1) return Graph::from_edge_list(1, std::span<const Edge>{});
  std::mt19937_64 rng(seed);
  std::vector<Vertex> code(static_cast<std::size_t>(n - 2));
  for (auto& c : code) c = static_cast<Vertex>(draw_below(rng, static_cast<std::uint64_t>(n)));

  std::vector<int> remaining(static_cast<std::size_t>(n), 1);
  for (Vertex c : code) ++remaining[c];
  std::set<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v)
    if (remaining[v] == 1) leaves.insert(v);

  std::vector<Edge> e;
  for (Vertex c : code) {
    const Vertex leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    e.push_back({leaf, c});
    if (--remaining[c] == 1) leaves.insert(c);
  }
  e.push_back({*leaves.begin(), *std::next(leaves.begin())});
  return Graph::from_edge_list(n, e);
}

FamilySpec parse_family_spec(const std::vector<std::string>& words) {
  require(!words.empty(), "missing family name");
  FamilySpec spec;
  spec.family = family_from_string(words[0]);
  std::vector<std::string> rest(words.begin() + 1, words.end());
  if (spec.family == Family::Named) {
    require(rest.size() == 1, "named takes exactly one fixture tag");
    spec.fixture = fixture_from_string(rest[0]);
    return spec;
  }
  for (const auto& w : rest) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), value);
    if (ec != std::errc() || ptr != w.data() + w.size()) throw Error(ErrorCode::BadParameter, "'" + w + "' is not an integer");
    spec.params.push_back(value);
  }
  if (spec.family == Family::RandomTree && spec.params.size() == 2) {
    require(spec.params[1] >= 0, "seed must be non-negative");
    spec.seed = static_cast<std::uint64_t>(spec.params[1]);
    spec.params.pop_back();
  }
  return spec;
}

Graph generate(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto arity = [&](std::size_t k) {
    require(p.size() == k, std::string(to_string(spec.family)) + " takes " + std::to_string(k) + " parameter(s)");
    for (auto v : p) require(v >= 0 && v <= 1'000'000, "parameter out of range");
  };
  switch (spec.family) {
    case Family::Complete: arity(1); return complete(static_cast<int>(p[0]));
    case Family::Cycle: arity(1); return cycle(static_cast<int>(p[0]));
    case Family::Path: arity(1); return path(static_cast<int>(p[0]));
    case Family::Star: arity(1); return star(static_cast<int>(p[0]));
    case Family::CompleteBipartite: arity(2); return complete_bipartite(static_cast<int>(p[0]), static_cast<int>(p[1]));
    case Family::Windmill: arity(2); return windmill(static_cast<int>(p[0]), static_cast<int>(p[1]));
    case Family::CocktailParty: arity(1); return cocktail_party(static_cast<int>(p[0]));
    case Family::Named:
      require(spec.fixture.has_value(), "named needs a fixture tag");
      return named(*spec.fixture);
    case Family::RandomTree:
      arity(1);
      require(spec.seed.has_value(), "random_tree needs a seed");
      return random_tree(static_cast<int>(p[0]), *spec.seed);
  }
  throw Error(ErrorCode::BadParameter, "unhandled family");
}

}  // namespace stress
