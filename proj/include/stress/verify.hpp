#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "stress/enumerate.hpp"
#include "stress/graph.hpp"

namespace stress {

enum class Theorem {
  T2_4,  // zero stress iff simplicial
  C2_5,  // 0-stress regular iff complete
  P2_6,  // total stress = sum (i-1) f_i
  T4_1,  // one stressed vertex iff unique cut vertex with complete blocks
  C4_2,  // star characterization by stress
  T6_5,  // 1-stress regular iff C4 or C5
  T6_6,  // 2-stress regular iff one of the three 6-vertex graphs
  L6_1,  // minimum degree bound for diameter-2 stress-regular graphs
  L6_2,  // geodesic length bound
  L6_3,  // universal vertex has the largest stress
  C6_4,  // k >= 1 stress regular implies every eccentricity >= 2
};

std::string_view to_string(Theorem t);
/// Accepts the tag ("T6_5") or the CLI number ("6.5").
Theorem theorem_from_string(std::string_view s);

struct Counterexample {
  int n = 0;
  std::vector<Edge> edges;
  std::string reason;
};

struct VerificationReport {
  Theorem theorem = Theorem::T2_4;
  int max_n = 0;
  std::optional<int> min_degree;
  /// Set when the report covers one supplied graph rather than a scan.
  bool single_graph = false;
  /// graphs_per_n[n] = connected labeled graphs scanned with that order.
  std::vector<std::uint64_t> graphs_per_n;
  std::uint64_t graphs_scanned = 0;
  /// Labeled graphs for which the statement was non-vacuous.
  std::uint64_t applicable = 0;
  /// graph6 strings of canonical forms, sorted and deduplicated.
  std::vector<std::string> witnesses;
  /// In ascending (n, edge mask) order, at most kMaxStoredCounterexamples.
  std::vector<Counterexample> counterexamples;
  std::uint64_t violations = 0;
  std::chrono::milliseconds elapsed{0};

  bool verified() const { return violations == 0; }
  std::string scope() const;
};

inline constexpr std::size_t kMaxStoredCounterexamples = 100;

struct ScanOptions {
  int jobs = 1;
  /// Skip graphs below this minimum degree (only sound where the statement allows it).
  std::optional<int> min_degree;
  bool allow_order8 = false;
};

/// k in {0, 1, 2}: scans all connected graphs up to max_n and compares the
/// k-stress-regular ones against the characterized list.
VerificationReport verify_k_stress_characterization(int k, int max_n, const ScanOptions& opts = {});
VerificationReport verify_unique_stress_theorem(int max_n, const ScanOptions& opts = {});
VerificationReport verify_star_characterization(int max_n, const ScanOptions& opts = {});

/// Reports for T2_4, P2_6, L6_1, L6_2, L6_3, C6_4 in that order.
std::vector<VerificationReport> verify_invariant_battery(int max_n, const ScanOptions& opts = {});

/// Runs any set of statements over one shared scan.
std::vector<VerificationReport> verify_theorems(std::span<const Theorem> theorems, int max_n, const ScanOptions& opts = {});

/// Battery on a single graph (any order); graphs_scanned is 1.
std::vector<VerificationReport> check_invariant_battery(const Graph& g);

std::vector<Theorem> battery_theorems();

}  // namespace stress
