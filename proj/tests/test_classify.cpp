#include "doctest.h"
#include "stress/classify.hpp"
#include "stress/closed_forms.hpp"
#include "stress/enumerate.hpp"
#include "stress/generators.hpp"
#include "stress/geodesic.hpp"
#include "support/oracles.hpp"

using namespace stress;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::BadParameter;
}

std::vector<Vertex> all_vertices(int n) {
  std::vector<Vertex> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

TEST_CASE("simplicial vertices") {
  CHECK(simplicial_vertices(complete(5)) == all_vertices(5));
  CHECK(simplicial_vertices(path(4)) == std::vector<Vertex>{0, 3});
  CHECK(simplicial_vertices(cycle(4)).empty());
  CHECK(simplicial_vertices(Graph::from_edge_list(3, {{0, 1}})) == all_vertices(3));
}

TEST_CASE("block cut decomposition examples") {
  auto d = block_cut_decomposition(windmill(3, 2));
  CHECK(d.cut_vertices == std::vector<Vertex>{0});
  CHECK(d.blocks.size() == 2);

  d = block_cut_decomposition(cycle(5));
  CHECK(d.cut_vertices.empty());
  CHECK(d.blocks.size() == 1);

  d = block_cut_decomposition(path(4));
  CHECK(d.cut_vertices == std::vector<Vertex>{1, 2});
  CHECK(d.blocks.size() == 3);
  for (const auto& b : d.blocks) CHECK(b.size() == 2);

  d = block_cut_decomposition(Graph::from_edge_list(4, {{0, 1}}));
  CHECK(d.blocks.size() == 3);
}

TEST_CASE("block cut decomposition invariants") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 10;
    const auto g = testing::random_graph(n, trial % 2 ? 0.25 : 0.45, rng);
    const auto d = block_cut_decomposition(g);
    const auto base = components(g).size();

    std::vector<int> membership(static_cast<std::size_t>(n), 0);
    for (const auto& b : d.blocks)
      for (Vertex v : b) ++membership[v];
    for (Vertex v = 0; v < n; ++v) {
      const bool cut = std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), v);
      CHECK(cut == (membership[v] >= 2));
      // Removing v drops v's own component if v is isolated, so count relative to that.
      const auto after = components(delete_vertex(g, v)).size();
      const std::size_t expected = g.degree(v) == 0 ? base - 1 : base;
      if (cut) {
        CHECK(after > expected);
      } else {
        CHECK(after == expected);
      }
    }

    for (auto [u, v] : g.edges()) {
      int holders = 0;
      for (const auto& b : d.blocks)
        holders += std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v);
      CHECK(holders == 1);
    }
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
      for (std::size_t j = i + 1; j < d.blocks.size(); ++j) {
        std::vector<Vertex> shared;
        std::set_intersection(d.blocks[i].begin(), d.blocks[i].end(), d.blocks[j].begin(), d.blocks[j].end(),
                              std::back_inserter(shared));
        CHECK(shared.size() <= 1);
        for (Vertex s : shared) CHECK(std::binary_search(d.cut_vertices.begin(), d.cut_vertices.end(), s));
      }
  }
}

TEST_CASE("unique cut vertex with complete blocks") {
  CHECK(is_unique_cutvertex_complete_blocks(windmill(4, 3)) == std::optional<Vertex>{0});
  CHECK(is_unique_cutvertex_complete_blocks(star(5)) == std::optional<Vertex>{0});
  CHECK_FALSE(is_unique_cutvertex_complete_blocks(cycle(5)).has_value());
  CHECK_FALSE(is_unique_cutvertex_complete_blocks(path(4)).has_value());
  CHECK(code_of([] { is_unique_cutvertex_complete_blocks(complete(2)); }) == ErrorCode::TooSmall);
  CHECK(code_of([] { is_unique_cutvertex_complete_blocks(Graph::from_edge_list(3, {{0, 1}})); }) ==
        ErrorCode::Disconnected);
}

TEST_CASE("single positive stress vertex") {
  CHECK(has_single_positive_stress_vertex(windmill(3, 2)) == std::optional<Vertex>{0});
  CHECK(stress_profile(windmill(3, 2)).stress[0] == 4);
  CHECK_FALSE(has_single_positive_stress_vertex(path(4)).has_value());
  CHECK_FALSE(has_single_positive_stress_vertex(complete(5)).has_value());
  CHECK(code_of([] { has_single_positive_stress_vertex(path(2)); }) == ErrorCode::TooSmall);
  CHECK(code_of([] { has_single_positive_stress_vertex(Graph::from_edge_list(4, {{0, 1}, {2, 3}})); }) ==
        ErrorCode::Disconnected);
}

TEST_CASE("star recognition by stress") {
  CHECK(is_star_by_stress(star(4)));
  CHECK_FALSE(is_star_by_stress(windmill(3, 2)));
  CHECK(is_star_by_stress(path(3)));
  CHECK_FALSE(is_star_by_stress(cycle(4)));
  CHECK(code_of([] { is_star_by_stress(Graph::from_edge_list(3, {{0, 1}})); }) == ErrorCode::Disconnected);
  CHECK(is_star(star(6)));
  CHECK_FALSE(is_star(path(4)));
  CHECK(is_complete(complete(4)));
  CHECK_FALSE(is_complete(cycle(4)));
}

TEST_CASE("strongly regular detection") {
  CHECK(detect_srg(named(Fixture::Petersen)) == SrgParameters{10, 3, 0, 1});
  CHECK(detect_srg(named(Fixture::Fig4Octahedron)) == SrgParameters{6, 4, 2, 4});
  CHECK_FALSE(detect_srg(named(Fixture::Fig2TwoStressRegular)).has_value());
  CHECK_FALSE(detect_srg(complete(5)).has_value());
  CHECK_FALSE(detect_srg(Graph::from_edge_list(4, std::span<const Edge>{})).has_value());
  CHECK_FALSE(detect_srg(named(Fixture::Fig3Prism)).has_value());
  CHECK(detect_srg(cycle(5)) == SrgParameters{5, 2, 0, 1});
  // Two disjoint triangles: mu = 0.
  const auto twoK3 = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(detect_srg(twoK3) == SrgParameters{6, 2, 1, 0});
}

TEST_CASE("every detected strongly regular graph is stress regular with the predicted value") {
  for (int n = 2; n <= 6; ++n)
    for_each_connected(n, std::nullopt, [&](const Graph& g, std::uint64_t) {
      const auto srg = detect_srg(g);
      if (!srg) return;
      const auto k = stress_regularity(g);
      REQUIRE(k.has_value());
      CHECK(*k == predict_srg(*srg));
    });
}

TEST_CASE("stress regularity") {
  CHECK(stress_regularity(cycle(5)) == std::optional<Count>{1});
  CHECK_FALSE(stress_regularity(named(Fixture::Fig1Reg3)).has_value());
  CHECK(stress_regularity(complete(7)) == std::optional<Count>{0});
  CHECK(stress_regularity(Graph::from_edge_list(3, {{0, 1}})) == std::optional<Count>{0});
}

TEST_CASE("classification reports") {
  auto r = classify(cycle(4));
  CHECK(r.stress_regular_k == std::optional<Count>{1});
  CHECK(r.recognized_family == RecognizedFamily::C4);
  CHECK(r.diameter == std::optional<int>{2});
  CHECK(r.findings.empty());

  r = classify(named(Fixture::Fig3Prism));
  CHECK(r.stress_regular_k == std::optional<Count>{2});
  CHECK(r.recognized_family == RecognizedFamily::Prism);

  r = classify(complete(6));
  CHECK(r.stress_regular_k == std::optional<Count>{0});
  CHECK(r.recognized_family == RecognizedFamily::Complete);
  CHECK(r.simplicial == all_vertices(6));

  r = classify(star(4));
  CHECK(r.recognized_family == RecognizedFamily::Star);
  CHECK(r.one_stress_center == std::optional<Vertex>{0});

  r = classify(named(Fixture::Fig4Octahedron));
  CHECK(r.recognized_family == RecognizedFamily::Octahedron);
  CHECK(r.srg == SrgParameters{6, 4, 2, 4});

  r = classify(named(Fixture::Fig2TwoStressRegular));
  CHECK(r.recognized_family == RecognizedFamily::Fig2TwoStressRegular);
  CHECK(classify(cycle(5)).recognized_family == RecognizedFamily::C5);

  r = classify(named(Fixture::Fig1Reg3));
  CHECK(r.recognized_family == RecognizedFamily::None);
  CHECK_FALSE(r.stress_regular_k.has_value());
  CHECK(r.findings.empty());

  r = classify(Graph::from_edge_list(4, {{0, 1}, {2, 3}}));
  CHECK_FALSE(r.is_connected);
  CHECK_FALSE(r.diameter.has_value());
  CHECK_FALSE(r.one_stress_center.has_value());

  CHECK(to_string(RecognizedFamily::Fig2TwoStressRegular) == "FIG2_2SR");
  CHECK(to_string(RecognizedFamily::None) == "NONE");
}

TEST_CASE("classification finds no disagreements on small graphs") {
  for (int n = 1; n <= 6; ++n)
    for_each_connected(n, std::nullopt, [&](const Graph& g, std::uint64_t) {
      const auto r = classify(g);
      CHECK(r.findings.empty());
      if (r.stress_regular_k && *r.stress_regular_k <= 2) CHECK(r.recognized_family != RecognizedFamily::None);
    });
}
