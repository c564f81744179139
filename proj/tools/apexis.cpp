#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "apexis/apex.hpp"
#include "apexis/catalog.hpp"
#include "apexis/error.hpp"
#include "apexis/graph6.hpp"
#include "apexis/planarity.hpp"
#include "apexis/report.hpp"
#include "apexis/spatial/diagram.hpp"
#include "apexis/sweep.hpp"

using namespace apexis;

namespace {

struct Outcome {
  Json parameters;
  Json result;
  int exit_code = 0;
  bool emit_report = true;
};

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

Graph read_graph(const std::string& arg) {
  std::string text = arg;
  if (arg == "-") {
    std::getline(std::cin, text);
  }
  text = trim(text);
  if (text.rfind(">>graph6<<", 0) == 0) text.erase(0, 10);
  return from_graph6(text);
}

Json vertex_names(const SpatialDiagram& d, const std::vector<int>& cycle) {
  Json out = Json::array();
  for (int v : cycle) out.push_back(d.vertex_names()[v]);
  return out;
}

void print_table1(const Table1Report& r) {
  std::fprintf(stderr, "%4s %4s %9s %9s  %s\n", "n", "e", "expected", "computed", "status");
  for (const Table1Cell& c : r.cells) {
    std::fprintf(stderr, "%4d %4d %9lld %9lld  %s\n", c.order, c.edges, static_cast<long long>(c.expected),
                 static_cast<long long>(c.computed), c.matches() ? "ok" : "MISMATCH");
  }
}

Graph family_seed(const std::string& seed) {
  if (seed == "K7") return complete(7);
  if (seed.size() == 2 && seed[0] == 'K' && seed[1] >= '1' && seed[1] <= '9') return complete(seed[1] - '0');
  return read_graph(seed);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"apex and intrinsic-knotting checks for small graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  int jobs = default_jobs();
  std::string checkpoint;
  std::string report_path;
  app.add_option("--jobs,-j", jobs, "worker threads (default APEXIS_JOBS or 1)")->check(CLI::Range(1, 256));
  app.add_option("--checkpoint", checkpoint, "directory for per-shard checkpoints; reruns resume from it");
  app.add_option("--report", report_path, "also write the JSON report to this file");

  std::string graph_arg;
  auto* planar_cmd = app.add_subcommand("planar", "planarity with embedding or Kuratowski certificate");
  planar_cmd->add_option("graph", graph_arg, "graph6 string, or - for stdin")->required();

  int level = 2;
  auto* apex_cmd = app.add_subcommand("apex", "l-apex certificate or verdict");
  apex_cmd->add_option("-l", level, "apex level")->check(CLI::Range(1, kMaxApexLevel))->required();
  apex_cmd->add_option("graph", graph_arg, "graph6 string, or - for stdin")->required();

  int order = 0, edges = 0, min_degree = 0;
  std::string filter = "none";
  std::string out_path;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "isomorphism classes with n vertices and e edges");
  enumerate_cmd->add_option("-n", order, "vertices")->check(CLI::Range(0, 32))->required();
  enumerate_cmd->add_option("-e", edges, "edges")->check(CLI::NonNegativeNumber)->required();
  enumerate_cmd->add_option("--min-deg", min_degree, "minimum degree")->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--filter", filter, "keep only these")->check(CLI::IsMember({"nonplanar", "none"}));
  enumerate_cmd->add_option("-o", out_path, "write graph6 lines here instead of stdout");

  auto* table1_cmd = app.add_subcommand("table1", "census of non-planar graphs without isolated vertices");

  int max_n = 10;
  auto* main_cmd = app.add_subcommand("verify-main", "every min-degree-3 graph with at most 20 edges is 2-apex");
  main_cmd->add_option("--max-n", max_n, "largest vertex count")->check(CLI::Range(4, 13))->required();

  auto* classify_cmd = app.add_subcommand("classify", "non-2-apex classes with exactly n vertices and e edges");
  classify_cmd->add_option("-n", order, "vertices")->check(CLI::Range(1, 13))->required();
  classify_cmd->add_option("-e", edges, "edges")->check(CLI::NonNegativeNumber)->required();
  classify_cmd->add_option("--min-deg", min_degree, "minimum degree")->check(CLI::NonNegativeNumber);

  std::string seed = "K7";
  std::string out_dir;
  auto* family_cmd = app.add_subcommand("family", "closure of a seed under triangle-Y moves");
  family_cmd->add_option("--seed", seed, "K<n> or a graph6 string");
  family_cmd->add_option("--out-dir", out_dir, "write <name>.g6 per member and manifest.json");

  auto* edge_bound_cmd = app.add_subcommand("edge-bound", "edge lower bound for non-planar graphs, 6 <= n <= 11");
  auto* one_apex_cmd = app.add_subcommand("one-apex", "every min-degree-3 graph with at most 14 edges is 1-apex");

  std::string diagram_path;
  auto* unknot_cmd = app.add_subcommand("unknot-check", "certify every cycle of a spatial graph diagram");
  unknot_cmd->add_option("diagram", diagram_path, "diagram file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  SweepOptions options;
  options.jobs = jobs;
  if (!checkpoint.empty()) options.checkpoint_dir = checkpoint;

  CLI::App* cmd = app.get_subcommands().front();
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    if (cmd == planar_cmd) {
      const Graph g = read_graph(graph_arg);
      const PlanarityCertificate cert = is_planar(g);
      const bool is = std::holds_alternative<PlanarEmbedding>(cert);
      Json c = to_json(cert);
      out.parameters = {{"graph6", to_graph6(g)}};
      out.result = {{"planar", is}, {"certificate", c}, {"digest", digest(c)}};
      out.exit_code = is ? 0 : 1;
    } else if (cmd == apex_cmd) {
      const Graph g = read_graph(graph_arg);
      const ApexResult r = is_l_apex(g, level);
      out.parameters = {{"graph6", to_graph6(g)}, {"l", level}};
      out.result = to_json(r);
      out.exit_code = std::holds_alternative<ApexCertificate>(r) ? 0 : 1;
    } else if (cmd == enumerate_cmd) {
      SweepSpec spec;
      spec.gen = GenSpec{.order = order, .min_edges = edges, .max_edges = edges, .min_degree = min_degree};
      if (filter == "nonplanar") {
        spec.hit = [](const Graph& g) { return !planar(g); };
      } else {
        spec.hit = [](const Graph&) { return true; };
      }
      spec.tag = "enumerate-n" + std::to_string(order) + "-e" + std::to_string(edges) + "-d" + std::to_string(min_degree) + "-" + filter;
      const SweepResult r = run_sweep(spec, options);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw Error("cannot write " + out_path);
      }
      std::ostream& lines = out_path.empty() ? std::cout : file;
      for (const Graph& g : r.hits) lines << to_graph6(g) << '\n';
      out.parameters = {{"n", order}, {"e", edges}, {"min_degree", min_degree}, {"filter", filter}};
      out.result = to_json(r);
      if (out_path.empty()) {
        std::fprintf(stderr, "count %lld\n", static_cast<long long>(r.total_hits()));
        out.emit_report = false;
      }
    } else if (cmd == table1_cmd) {
      const Table1Report r = verify_table1(options);
      print_table1(r);
      out.parameters = Json::object();
      out.result = to_json(r);
      out.exit_code = r.passed() ? 0 : 1;
    } else if (cmd == main_cmd) {
      const MainTheoremReport r = verify_main_theorem(max_n, options);
      out.parameters = {{"max_n", max_n}, {"max_edges", 20}, {"min_degree", 3}};
      out.result = to_json(r);
      out.exit_code = r.passed() ? 0 : 1;
    } else if (cmd == classify_cmd) {
      const ClassificationReport r = classify(order, edges, min_degree, options);
      out.parameters = {{"n", order}, {"e", edges}, {"min_degree", min_degree}};
      out.result = to_json(r);
    } else if (cmd == family_cmd) {
      const Graph g = family_seed(seed);
      const auto& members = g == complete(7) ? k7_family() : delta_y_closure(g);
      out.parameters = {{"seed", seed}};
      out.result = to_json(members);
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        for (const auto& m : members) std::ofstream(std::filesystem::path(out_dir) / (m.name + ".g6")) << to_graph6(m.graph) << '\n';
        std::ofstream(std::filesystem::path(out_dir) / "manifest.json") << out.result.dump(2) << '\n';
      }
    } else if (cmd == edge_bound_cmd) {
      const EdgeBoundReport r = verify_edge_bound(options);
      out.parameters = {{"min_order", 6}, {"max_order", 11}, {"max_edges", 13}};
      out.result = to_json(r);
      out.exit_code = r.passed() ? 0 : 1;
    } else if (cmd == one_apex_cmd) {
      const OneApexReport r = verify_1apex_threshold(options);
      out.parameters = {{"max_edges", 14}, {"min_degree", 3}};
      out.result = to_json(r);
      out.exit_code = r.passed() ? 0 : 1;
    } else if (cmd == unknot_cmd) {
      const SpatialDiagram d = load_diagram_file(diagram_path);
      const auto sets = cycle_crossing_sets(d);
      const auto maximal = maximal_sets(sets);
      const auto verdicts = certify_unknotted(d);
      Json cycles = Json::array();
      bool all = true;
      for (const CycleVerdict& v : verdicts) {
        Json j = to_json(v);
        j["cycle_names"] = vertex_names(d, v.cycle);
        cycles.push_back(std::move(j));
        all = all && v.kind == CycleVerdict::Kind::kUnknot;
      }
      out.parameters = {{"diagram", std::filesystem::path(diagram_path).filename().string()},
                        {"vertices", d.graph().order()},
                        {"edges", d.graph().edge_count()},
                        {"crossings", d.crossing_signs().size()}};
      out.result = {{"cycle_count", verdicts.size()},
                    {"maximal_crossing_sets", maximal},
                    {"all_unknotted", all},
                    {"cycles", cycles}};
      out.exit_code = all ? 0 : 1;
    }
  } catch (const ParseError& e) {
    std::fprintf(stderr, "apexis: parse error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "apexis: %s\n", e.what());
    return 2;
  }

  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const Json report = make_report(cmd->get_name(), out.parameters, out.result, seconds, jobs);
  if (out.emit_report) std::cout << report.dump(2) << '\n';
  if (!report_path.empty()) {
    std::ofstream file(report_path);
    if (!file) {
      std::fprintf(stderr, "apexis: cannot write %s\n", report_path.c_str());
      return 2;
    }
    file << report.dump(2) << '\n';
  }
  return out.exit_code;
}
