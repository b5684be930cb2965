#include "stress/report_json.hpp"

namespace stress {

using nlohmann::ordered_json;

namespace {

template <class T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

}  // namespace

ordered_json to_json(const StressProfile& p) {
  ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["n"] = p.stress.size();
  j["stress"] = p.stress;
  j["total"] = p.total;
  return j;
}

ordered_json to_json(const ClassificationReport& r) {
  ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["n"] = r.n;
  j["is_connected"] = r.is_connected;
  j["diameter"] = optional_json(r.diameter);
  j["stress"] = r.stress.stress;
  j["total"] = r.stress.total;
  j["stress_regular_k"] = optional_json(r.stress_regular_k);
  j["simplicial"] = r.simplicial;
  if (r.srg) {
    j["srg"] = ordered_json{{"v", r.srg->v}, {"k", r.srg->k}, {"lambda", r.srg->lambda}, {"mu", r.srg->mu}};
  } else {
    j["srg"] = nullptr;
  }
  j["one_stress_center"] = optional_json(r.one_stress_center);
  j["recognized_family"] = to_string(r.recognized_family);
  j["findings"] = r.findings;
  return j;
}

ordered_json to_json(const VerificationReport& r, bool include_timing) {
  ordered_json j;
  j["schema"] = kJsonSchemaVersion;
  j["theorem"] = to_string(r.theorem);
  j["max_n"] = r.max_n;
  j["min_degree"] = optional_json(r.min_degree);
  j["scope"] = r.scope();
  j["graphs_per_n"] = r.graphs_per_n;
  j["graphs_scanned"] = r.graphs_scanned;
  j["applicable"] = r.applicable;
  j["witnesses"] = r.witnesses;
  j["violations"] = r.violations;
  ordered_json ces = ordered_json::array();
  for (const auto& c : r.counterexamples) {
    ordered_json edges = ordered_json::array();
    for (auto [u, v] : c.edges) edges.push_back({u, v});
    ces.push_back(ordered_json{{"n", c.n}, {"edges", edges}, {"reason", c.reason}});
  }
  j["counterexamples"] = ces;
  j["verified"] = r.verified();
  if (include_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

std::string emit_json(const StressProfile& p) { return to_json(p).dump(); }
std::string emit_json(const ClassificationReport& r) { return to_json(r).dump(); }
std::string emit_json(const VerificationReport& r, bool include_timing) { return to_json(r, include_timing).dump(); }

}  // namespace stress
