#include "stress/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "stress/classify.hpp"
#include "stress/generators.hpp"
#include "stress/geodesic.hpp"
#include "stress/io.hpp"

namespace stress {

namespace {

constexpr std::array<std::pair<Theorem, std::string_view>, 11> kTheoremNames{{
    {Theorem::T2_4, "T2_4"},
    {Theorem::C2_5, "C2_5"},
    {Theorem::P2_6, "P2_6"},
    {Theorem::T4_1, "T4_1"},
    {Theorem::C4_2, "C4_2"},
    {Theorem::T6_5, "T6_5"},
    {Theorem::T6_6, "T6_6"},
    {Theorem::L6_1, "L6_1"},
    {Theorem::L6_2, "L6_2"},
    {Theorem::L6_3, "L6_3"},
    {Theorem::C6_4, "C6_4"},
}};

// Lazily computed quantities shared by all statements checked on one graph.
class Facts {
 public:
  explicit Facts(const Graph& g) : g_(g) {}

  const Graph& graph() const { return g_; }

  const StressProfile& profile() {
    if (!profile_) profile_ = stress_profile_accumulated(g_);
    return *profile_;
  }

  const GeodesicCensus& census() {
    if (!census_) census_ = GeodesicCensus(g_);
    return *census_;
  }

  bool connected() {
    if (!connected_) connected_ = is_connected(g_);
    return *connected_;
  }

  /// Requires a connected graph.
  const std::vector<int>& eccentricity() {
    if (!ecc_) {
      const auto& c = census();
      ecc_.emplace(static_cast<std::size_t>(g_.order()), 0);
      for (Vertex v = 0; v < g_.order(); ++v)
        for (Vertex w = 0; w < g_.order(); ++w) (*ecc_)[v] = std::max((*ecc_)[v], c.dist(v, w));
    }
    return *ecc_;
  }

  int diameter() {
    const auto& e = eccentricity();
    return e.empty() ? 0 : *std::max_element(e.begin(), e.end());
  }

  std::optional<Count> regularity() { return stress_regularity(profile()); }

  const CanonicalKey& key() {
    if (!key_) key_ = canonical_form(g_);
    return *key_;
  }

 private:
  const Graph& g_;
  std::optional<StressProfile> profile_;
  std::optional<GeodesicCensus> census_;
  std::optional<bool> connected_;
  std::optional<std::vector<int>> ecc_;
  std::optional<CanonicalKey> key_;
};

struct Outcome {
  bool applicable = false;
  bool witness = false;
  std::optional<std::string> violation;
};

struct CharacterizationTarget {
  int n;
  std::size_t edges;
  CanonicalKey key;
};

const std::vector<CharacterizationTarget>& targets_for(int k) {
  auto build = [](std::vector<Graph> gs) {
    std::vector<CharacterizationTarget> out;
    for (const auto& g : gs) out.push_back({g.order(), g.edge_count(), canonical_form(g)});
    return out;
  };
  static const auto one = build({cycle(4), cycle(5)});
  static const auto two = build({named(Fixture::Fig2TwoStressRegular), named(Fixture::Fig3Prism),
                                 named(Fixture::Fig4Octahedron)});
  return k == 1 ? one : two;
}

Outcome check_k_regular(int k, Facts& f) {
  Outcome o;
  const auto& g = f.graph();
  const auto reg = f.regularity();
  const bool isK = reg == static_cast<Count>(k);
  bool inList = false;
  if (k == 0) {
    inList = is_complete(g);
  } else {
    for (const auto& t : targets_for(k))
      if (t.n == g.order() && t.edges == g.edge_count() && t.key == f.key()) inList = true;
  }
  o.applicable = isK || inList;
  o.witness = isK;
  if (isK && !inList) o.violation = std::to_string(k) + "-stress regular but not in the characterized list";
  if (!isK && inList) o.violation = "characterized graph is not " + std::to_string(k) + "-stress regular";
  return o;
}

Outcome check_unique_stress(Facts& f) {
  Outcome o;
  const auto& g = f.graph();
  if (g.order() < 3) return o;
  const auto stressSide = has_single_positive_stress_vertex(g, f.profile());
  const auto structSide = is_unique_cutvertex_complete_blocks(g);
  o.applicable = stressSide || structSide;
  o.witness = stressSide && structSide;
  if (stressSide != structSide) {
    auto show = [](const std::optional<Vertex>& v) { return v ? std::to_string(*v) : std::string("none"); };
    o.violation = "stress side " + show(stressSide) + ", structure side " + show(structSide);
  }
  return o;
}

Outcome check_star(Facts& f) {
  Outcome o;
  const auto& g = f.graph();
  if (g.order() < 3) return o;
  const bool byStress = is_star_by_stress(g, f.profile());
  bool structural = false;
  if (g.edge_count() + 1 == static_cast<std::size_t>(g.order())) structural = f.key() == canonical_form(star(g.order() - 1));
  o.applicable = byStress || structural;
  o.witness = byStress && structural;
  if (byStress != structural) o.violation = byStress ? "star stress pattern on a non-star" : "star without the star stress pattern";
  return o;
}

Outcome check_simplicial(Facts& f) {
  Outcome o{true, false, std::nullopt};
  const auto& g = f.graph();
  const auto& p = f.profile();
  for (Vertex v = 0; v < g.order(); ++v) {
    const bool simplicial = induced_is_clique(g, g.neighbors(v));
    if (simplicial != (p.stress[v] == 0)) {
      o.violation = "vertex " + std::to_string(v) + ": stress " + std::to_string(p.stress[v]) +
                    (simplicial ? ", simplicial" : ", not simplicial");
      break;
    }
  }
  return o;
}

Outcome check_total_stress(Facts& f) {
  Outcome o{true, false, std::nullopt};
  const Count byVertex = f.profile().total;
  const Count byLength = total_stress_from_histogram(geodesic_histogram(f.census()));
  if (byVertex != byLength) o.violation = "sum of stress " + std::to_string(byVertex) + " vs histogram " + std::to_string(byLength);
  return o;
}

Outcome check_min_degree(Facts& f) {
  Outcome o;
  const auto reg = f.regularity();
  if (!f.connected() || !reg || *reg < 1 || f.diameter() != 2) return o;
  o.applicable = true;
  Count m = 1;
  while (*reg > m * (m - 1) / 2) ++m;
  const auto& g = f.graph();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (static_cast<Count>(g.degree(v)) < m) {
      o.violation = "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) + " < " + std::to_string(m);
      break;
    }
  }
  return o;
}

Outcome check_length_bound(Facts& f) {
  Outcome o;
  const auto& c = f.census();
  int longest = 0;
  for (Vertex u = 0; u < c.order(); ++u)
    for (Vertex v = 0; v < c.order(); ++v) longest = std::max(longest, c.dist(u, v));
  if (longest < 2) return o;
  o.applicable = true;
  const auto& s = f.profile().stress;
  const Count maxStress = *std::max_element(s.begin(), s.end());
  const Count centre = static_cast<Count>(longest / 2) * static_cast<Count>((longest + 1) / 2);
  if (centre > maxStress) {
    o.violation = "geodesic of length " + std::to_string(longest) + " but max stress " + std::to_string(maxStress);
  }
  return o;
}

Outcome check_universal_vertex(Facts& f) {
  Outcome o;
  const auto& g = f.graph();
  if (!f.connected() || is_complete(g)) return o;
  const auto& ecc = f.eccentricity();
  const auto& s = f.profile().stress;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (ecc[v] != 1) continue;
    o.applicable = true;
    bool smaller = false;
    for (Vertex w = 0; w < g.order(); ++w) {
      if (s[w] > s[v]) {
        o.violation = "vertex " + std::to_string(w) + " outstresses universal vertex " + std::to_string(v);
        return o;
      }
      if ((s[w] == s[v]) != (ecc[w] == 1)) {
        o.violation = "equality with universal vertex " + std::to_string(v) + " mismatched at " + std::to_string(w);
        return o;
      }
      smaller = smaller || s[w] < s[v];
    }
    if (s[v] >= 1 && !smaller) {
      o.violation = "no vertex below universal vertex " + std::to_string(v);
      return o;
    }
  }
  return o;
}

Outcome check_eccentricity(Facts& f) {
  Outcome o;
  const auto reg = f.regularity();
  if (!f.connected() || !reg || *reg < 1) return o;
  o.applicable = true;
  const auto& ecc = f.eccentricity();
  for (Vertex v = 0; v < f.graph().order(); ++v) {
    if (ecc[v] < 2) {
      o.violation = "vertex " + std::to_string(v) + " has eccentricity " + std::to_string(ecc[v]);
      break;
    }
  }
  return o;
}

Outcome check(Theorem t, Facts& f) {
  switch (t) {
    case Theorem::T2_4: return check_simplicial(f);
    case Theorem::C2_5: return check_k_regular(0, f);
    case Theorem::P2_6: return check_total_stress(f);
    case Theorem::T4_1: return check_unique_stress(f);
    case Theorem::C4_2: return check_star(f);
    case Theorem::T6_5: return check_k_regular(1, f);
    case Theorem::T6_6: return check_k_regular(2, f);
    case Theorem::L6_1: return check_min_degree(f);
    case Theorem::L6_2: return check_length_bound(f);
    case Theorem::L6_3: return check_universal_vertex(f);
    case Theorem::C6_4: return check_eccentricity(f);
  }
  return {};
}

bool keeps_witnesses(Theorem t) {
  return t == Theorem::C2_5 || t == Theorem::T4_1 || t == Theorem::C4_2 || t == Theorem::T6_5 || t == Theorem::T6_6;
}

// Largest minimum-degree filter that cannot hide a witness or violation.
int sound_min_degree(Theorem t) {
  switch (t) {
    case Theorem::T6_5: return 2;
    case Theorem::T6_6: return 3;
    default: return 0;
  }
}

struct Tally {
  std::uint64_t applicable = 0;
  std::uint64_t violations = 0;
  std::set<CanonicalKey> witnesses;
  std::vector<Counterexample> counterexamples;
};

struct Chunk {
  int n;
  std::uint64_t lo;
  std::uint64_t hi;
  std::uint64_t scanned = 0;
  std::vector<Tally> tallies;
};

void record(Tally& tally, Theorem t, const Outcome& o, Facts& f) {
  if (o.applicable) ++tally.applicable;
  if (o.witness && keeps_witnesses(t)) tally.witnesses.insert(f.key());
  if (o.violation) {
    ++tally.violations;
    if (tally.counterexamples.size() < kMaxStoredCounterexamples) {
      tally.counterexamples.push_back({f.graph().order(), f.graph().edges(), *o.violation});
    }
  }
}

void run_chunk(Chunk& chunk, std::span<const Theorem> theorems, std::optional<int> minDegree) {
  chunk.tallies.assign(theorems.size(), {});
  for_each_connected_in_range(chunk.n, minDegree, chunk.lo, chunk.hi, [&](const Graph& g, std::uint64_t) {
    ++chunk.scanned;
    Facts facts(g);
    for (std::size_t i = 0; i < theorems.size(); ++i) record(chunk.tallies[i], theorems[i], check(theorems[i], facts), facts);
  });
}

VerificationReport finish(Theorem t, int maxN, const ScanOptions& opts) {
  VerificationReport r;
  r.theorem = t;
  r.max_n = maxN;
  r.min_degree = opts.min_degree;
  r.graphs_per_n.assign(static_cast<std::size_t>(maxN) + 1, 0);
  return r;
}

void merge_witnesses(VerificationReport& r, const std::set<CanonicalKey>& keys) {
  for (const auto& k : keys) r.witnesses.push_back(to_graph6(k.graph()));
}

}  // namespace

std::string_view to_string(Theorem t) {
  for (auto [th, name] : kTheoremNames)
    if (th == t) return name;
  return "UNKNOWN";
}

Theorem theorem_from_string(std::string_view s) {
  std::string key(s);
  for (auto& ch : key) {
    if (ch == '.') ch = '_';
    ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  }
  for (auto [th, name] : kTheoremNames) {
    if (name == key || name.substr(1) == key) return th;
  }
  throw Error(ErrorCode::BadParameter, "unknown theorem '" + std::string(s) + "'");
}

std::string VerificationReport::scope() const {
  if (single_graph) return "one input graph on " + std::to_string(max_n) + " vertices";
  std::string s = "all connected labeled graphs with 1 <= n <= " + std::to_string(max_n);
  if (min_degree) s += " and minimum degree >= " + std::to_string(*min_degree);
  return s;
}

std::vector<Theorem> battery_theorems() {
  return {Theorem::T2_4, Theorem::P2_6, Theorem::L6_1, Theorem::L6_2, Theorem::L6_3, Theorem::C6_4};
}

std::vector<VerificationReport> verify_theorems(std::span<const Theorem> theorems, int maxN, const ScanOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  if (maxN < 1 || maxN > 8) throw Error(ErrorCode::BadParameter, "max_n must be in 1..8");
  if (maxN == 8) {
    if (!opts.allow_order8) throw Error(ErrorCode::BadParameter, "n = 8 needs the explicit long-running flag");
    if (!opts.min_degree) throw Error(ErrorCode::BadParameter, "n = 8 needs minimum-degree pruning");
  }
  if (opts.min_degree) {
    for (Theorem t : theorems) {
      if (*opts.min_degree > sound_min_degree(t)) {
        throw Error(ErrorCode::BadParameter,
                    "minimum-degree pruning at " + std::to_string(*opts.min_degree) + " is unsound for " + std::string(to_string(t)));
      }
    }
  }
  if (opts.jobs < 1) throw Error(ErrorCode::BadParameter, "jobs must be >= 1");

  // Contiguous mask ranges, ordered by (n, mask), so concatenation preserves scan order.
  std::vector<Chunk> chunks;
  for (int n = 1; n <= maxN; ++n) {
    const std::uint64_t end = std::uint64_t{1} << pair_count(n);
    const std::uint64_t pieces = std::min<std::uint64_t>(end, static_cast<std::uint64_t>(opts.jobs) * 8);
    for (std::uint64_t i = 0; i < pieces; ++i) chunks.push_back({n, end * i / pieces, end * (i + 1) / pieces, 0, {}});
  }

  std::atomic<std::size_t> nextChunk{0};
  auto worker = [&] {
    for (std::size_t i; (i = nextChunk.fetch_add(1)) < chunks.size();) run_chunk(chunks[i], theorems, opts.min_degree);
  };
  if (opts.jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < opts.jobs; ++j) pool.emplace_back(worker);
  }

  std::vector<VerificationReport> reports;
  for (std::size_t i = 0; i < theorems.size(); ++i) {
    auto r = finish(theorems[i], maxN, opts);
    std::set<CanonicalKey> keys;
    for (const auto& c : chunks) {
      r.graphs_per_n[c.n] += c.scanned;
      r.graphs_scanned += c.scanned;
      const auto& t = c.tallies[i];
      r.applicable += t.applicable;
      r.violations += t.violations;
      keys.insert(t.witnesses.begin(), t.witnesses.end());
      for (const auto& ce : t.counterexamples) {
        if (r.counterexamples.size() < kMaxStoredCounterexamples) r.counterexamples.push_back(ce);
      }
    }
    merge_witnesses(r, keys);
    reports.push_back(std::move(r));
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  for (auto& r : reports) r.elapsed = elapsed;
  return reports;
}

VerificationReport verify_k_stress_characterization(int k, int maxN, const ScanOptions& opts) {
  static constexpr std::array<Theorem, 3> kByK{Theorem::C2_5, Theorem::T6_5, Theorem::T6_6};
  if (k < 0 || k > 2) throw Error(ErrorCode::BadParameter, "k must be 0, 1 or 2");
  const std::array<Theorem, 1> one{kByK[static_cast<std::size_t>(k)]};
  return verify_theorems(one, maxN, opts).front();
}

VerificationReport verify_unique_stress_theorem(int maxN, const ScanOptions& opts) {
  if (maxN < 3 || maxN > 7) throw Error(ErrorCode::BadParameter, "max_n must be in 3..7");
  const std::array<Theorem, 1> one{Theorem::T4_1};
  return verify_theorems(one, maxN, opts).front();
}

VerificationReport verify_star_characterization(int maxN, const ScanOptions& opts) {
  if (maxN < 3 || maxN > 7) throw Error(ErrorCode::BadParameter, "max_n must be in 3..7");
  const std::array<Theorem, 1> one{Theorem::C4_2};
  return verify_theorems(one, maxN, opts).front();
}

std::vector<VerificationReport> verify_invariant_battery(int maxN, const ScanOptions& opts) {
  if (maxN < 1 || maxN > 7) throw Error(ErrorCode::BadParameter, "max_n must be in 1..7");
  const auto theorems = battery_theorems();
  return verify_theorems(theorems, maxN, opts);
}

std::vector<VerificationReport> check_invariant_battery(const Graph& g) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<VerificationReport> reports;
  Facts facts(g);
  for (Theorem t : battery_theorems()) {
    auto r = finish(t, g.order(), {});
    r.graphs_per_n[g.order()] = 1;
    r.graphs_scanned = 1;
    r.single_graph = true;
    Tally tally;
    record(tally, t, check(t, facts), facts);
    r.applicable = tally.applicable;
    r.violations = tally.violations;
    r.counterexamples = std::move(tally.counterexamples);
    reports.push_back(std::move(r));
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  for (auto& r : reports) r.elapsed = elapsed;
  return reports;
}

}  // namespace stress
