// stress: command-line front end for stress computation, classification,
// family generation and exhaustive theorem checks.
//
// Exit status: 0 success, 1 domain error (or a verification with violations),
// 2 parse or usage error.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stress/classify.hpp"
#include "stress/generators.hpp"
#include "stress/geodesic.hpp"
#include "stress/io.hpp"
#include "stress/report_json.hpp"
#include "stress/verify.hpp"

namespace {

using namespace stress;

constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

// Errors raised while reading input count as parse errors.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputOptions {
  std::string path = "-";
  std::string format = "auto";
};

void add_input_options(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("--input,-i", in.path, "Graph file, '-' for standard input")->capture_default_str();
  cmd->add_option("--format,-f", in.format, "Input format")
      ->check(CLI::IsMember({"auto", "edgelist", "adjmatrix", "graph6"}))
      ->capture_default_str();
}

std::vector<Graph> read_graphs(const InputOptions& in) {
  std::string text;
  if (in.path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream file(in.path);
    if (!file) throw InputError("cannot open '" + in.path + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    text = ss.str();
  }
  try {
    return parse_graphs(text, input_format_from_string(in.format));
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

std::string dash_or(const std::optional<int>& v) { return v ? std::to_string(*v) : "-"; }

void print_table(const Graph& g, const StressProfile& p) {
  const bool connected = is_connected(g);
  std::cout << std::left << std::setw(8) << "vertex" << std::setw(8) << "degree" << std::setw(14) << "eccentricity"
            << "stress\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    const std::optional<int> ecc = connected ? std::optional<int>(eccentricity(g, v)) : std::nullopt;
    std::cout << std::setw(8) << v << std::setw(8) << g.degree(v) << std::setw(14) << dash_or(ecc) << p.stress[v]
              << '\n';
  }
  std::cout << "total " << p.total << '\n';
}

void print_profiles(const std::vector<Graph>& graphs, bool json, StressProfile (*engine)(const Graph&)) {
  for (const auto& g : graphs) {
    const auto p = engine(g);
    if (json) {
      std::cout << emit_json(p) << '\n';
    } else {
      print_table(g, p);
    }
  }
}

template <class T>
std::string join(const std::vector<T>& items) {
  std::ostringstream os;
  for (std::size_t i = 0; i < items.size(); ++i) os << (i ? " " : "") << items[i];
  return os.str();
}

void print_classification(const ClassificationReport& r) {
  std::cout << "vertices          " << r.n << '\n'
            << "connected         " << (r.is_connected ? "yes" : "no") << '\n'
            << "diameter          " << dash_or(r.diameter) << '\n'
            << "stress            " << join(r.stress.stress) << '\n'
            << "total stress      " << r.stress.total << '\n'
            << "stress regular    " << (r.stress_regular_k ? std::to_string(*r.stress_regular_k) : "no") << '\n'
            << "simplicial        " << join(r.simplicial) << '\n';
  std::cout << "strongly regular  ";
  if (r.srg) {
    std::cout << "srg(" << r.srg->v << "," << r.srg->k << "," << r.srg->lambda << "," << r.srg->mu << ")\n";
  } else {
    std::cout << "no\n";
  }
  std::cout << "one stressed      " << dash_or(r.one_stress_center) << '\n'
            << "family            " << to_string(r.recognized_family) << '\n';
  for (const auto& f : r.findings) std::cout << "FINDING           " << f << '\n';
}

void print_report(const VerificationReport& r) {
  std::cout << to_string(r.theorem) << ": " << (r.verified() ? "verified" : "VIOLATED") << " over " << r.scope() << '\n'
            << "  graphs scanned  " << r.graphs_scanned << " (per n: " << join(r.graphs_per_n) << ")\n"
            << "  applicable      " << r.applicable << '\n'
            << "  violations      " << r.violations << '\n';
  if (!r.witnesses.empty()) std::cout << "  witnesses       " << join(r.witnesses) << '\n';
  for (const auto& c : r.counterexamples) {
    std::cout << "  counterexample  n=" << c.n << " edges:";
    for (auto [u, v] : c.edges) std::cout << ' ' << u << '-' << v;
    std::cout << "  (" << c.reason << ")\n";
  }
  std::cout << "  elapsed         " << r.elapsed.count() << " ms\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stress centrality toolkit"};
  app.require_subcommand(1);

  InputOptions input;
  bool json = false;

  auto* compute = app.add_subcommand("compute", "Stress of every vertex");
  add_input_options(compute, input);
  compute->add_flag("--json", json, "Emit JSON");

  auto* classifyCmd = app.add_subcommand("classify", "Structural classification report");
  add_input_options(classifyCmd, input);
  classifyCmd->add_flag("--json", json, "Emit JSON");

  auto* oracle = app.add_subcommand("oracle", "Stress by explicit geodesic enumeration");
  add_input_options(oracle, input);
  oracle->add_flag("--json", json, "Emit JSON");
  bool listPaths = false;
  oracle->add_flag("--list", listPaths, "Print every geodesic");

  auto* generateCmd = app.add_subcommand("generate", "Emit a graph from a named family");
  std::vector<std::string> familyWords;
  std::string emit = "edgelist";
  generateCmd->add_option("family", familyWords, "FAMILY PARAMS...")->required();
  generateCmd->add_option("--emit", emit, "Output format")
      ->check(CLI::IsMember({"edgelist", "graph6", "adjmatrix"}))
      ->capture_default_str();

  auto* verifyCmd = app.add_subcommand("verify", "Exhaustive check of a characterization over small graphs");
  std::string theorem;
  int maxN = 0;
  std::optional<int> pruneMinDegree;
  int jobs = 1;
  bool allowN8 = false;
  std::optional<std::string> batteryGraph;
  verifyCmd->add_option("--theorem", theorem, "2.4, 2.5, 2.6, 4.1, 4.2, 6.5, 6.6, 6.1, 6.2, 6.3, 6.4 or battery")
      ->required();
  verifyCmd->add_option("--max-n", maxN, "Largest vertex count scanned");
  verifyCmd->add_option("--prune-min-degree", pruneMinDegree, "Skip graphs below this minimum degree");
  verifyCmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  verifyCmd->add_flag("--allow-n8", allowN8, "Permit the long n = 8 scan");
  verifyCmd->add_option("--input", batteryGraph, "Run the battery on this one graph instead of a scan");
  verifyCmd->add_flag("--json", json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (compute->parsed()) {
      print_profiles(read_graphs(input), json, &stress_profile_accumulated);
    } else if (oracle->parsed()) {
      const auto graphs = read_graphs(input);
      if (listPaths) {
        for (const auto& g : graphs)
          for (const auto& p : enumerate_geodesics(g)) std::cout << join(p) << '\n';
      } else {
        print_profiles(graphs, json, [](const Graph& g) { return stress_profile_oracle(g); });
      }
    } else if (classifyCmd->parsed()) {
      for (const auto& g : read_graphs(input)) {
        const auto r = classify(g);
        if (json) {
          std::cout << emit_json(r) << '\n';
        } else {
          print_classification(r);
        }
      }
    } else if (generateCmd->parsed()) {
      FamilySpec spec;
      try {
        spec = parse_family_spec(familyWords);
      } catch (const Error& e) {
        throw InputError(e.what());
      }
      const auto g = generate(spec);
      if (emit == "graph6") {
        std::cout << to_graph6(g) << '\n';
      } else if (emit == "adjmatrix") {
        std::cout << to_adjacency_matrix(g);
      } else {
        std::cout << to_edge_list(g);
      }
    } else if (verifyCmd->parsed()) {
      std::vector<VerificationReport> reports;
      ScanOptions opts;
      opts.jobs = jobs;
      opts.min_degree = pruneMinDegree;
      opts.allow_order8 = allowN8;
      if (theorem == "battery") {
        if (batteryGraph) {
          const auto graphs = read_graphs({*batteryGraph, "auto"});
          for (const auto& g : graphs) {
            auto rs = check_invariant_battery(g);
            reports.insert(reports.end(), rs.begin(), rs.end());
          }
        } else {
          reports = verify_invariant_battery(maxN, opts);
        }
      } else {
        Theorem which;
        try {
          which = theorem_from_string(theorem);
        } catch (const Error& e) {
          throw InputError(e.what());
        }
        const std::array<Theorem, 1> one{which};
        reports = verify_theorems(one, maxN, opts);
      }
      bool ok = true;
      for (const auto& r : reports) {
        ok = ok && r.verified();
        if (json) {
          std::cout << emit_json(r) << '\n';
        } else {
          print_report(r);
        }
      }
      return ok ? 0 : kExitDomain;
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::ParseError ? kExitUsage : kExitDomain;
  }
  return 0;
}
