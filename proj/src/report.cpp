#include "apexis/report.hpp"

#include <cstdio>

#include "apexis/canon.hpp"
#include "apexis/graph6.hpp"

namespace apexis {

namespace {

Json vertex_list(VertexSet s) { return Json(s.to_vector()); }

Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

std::string pattern_name(const Graph& p) {
  if (are_isomorphic(p, complete(5))) return "K5";
  if (are_isomorphic(p, complete_bipartite(3, 3))) return "K3,3";
  return to_graph6(p);
}

std::string step_kind(ReductionStep::Kind k) {
  switch (k) {
    case ReductionStep::Kind::kDeleteIsolated:
      return "delete-isolated";
    case ReductionStep::Kind::kDeleteLeaf:
      return "delete-leaf";
    case ReductionStep::Kind::kSmooth:
      break;
  }
  return "smooth";
}

Json strata_json(const std::vector<Stratum>& strata, const char* classes_key, const char* failures_key) {
  Json out = Json::array();
  for (const Stratum& s : strata) {
    out.push_back({{"n", s.order}, {"e", s.edges}, {classes_key, s.classes}, {failures_key, s.failures}});
  }
  return out;
}

Json graph_list(const std::vector<Graph>& graphs) {
  Json out = Json::array();
  for (const Graph& g : graphs) out.push_back(to_graph6(g));
  return out;
}

}  // namespace

std::string digest(const Json& j) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json to_json(const PlanarEmbedding& e) { return {{"kind", "embedding"}, {"rotation", e.rotation}}; }

Json to_json(const MinorModel& m) {
  Json sets = Json::array();
  for (VertexSet s : m.branch_sets) sets.push_back(vertex_list(s));
  return {{"kind", "minor"},
          {"pattern", pattern_name(m.pattern)},
          {"pattern_graph6", to_graph6(m.pattern)},
          {"branch_sets", sets},
          {"realization", edge_list(m.realization)}};
}

Json to_json(const PlanarityCertificate& c) {
  return std::visit([](const auto& x) { return to_json(x); }, c);
}

Json to_json(const ApexCertificate& c) {
  return {{"apex_set", vertex_list(c.apex_set)}, {"embedding", to_json(c.embedding)}};
}

Json to_json(const NonApexVerdict& v) {
  Json steps = Json::array();
  for (const ReductionStep& s : v.reduction.steps) {
    Json step{{"kind", step_kind(s.kind)}, {"vertex", s.vertex}};
    if (s.kind == ReductionStep::Kind::kSmooth) {
      step["d"] = s.d;
      step["e"] = s.e;
      step["simplified"] = s.simplified;
    }
    steps.push_back(std::move(step));
  }
  Json records = Json::array();
  for (const CandidateRecord& r : v.records) {
    Json rec{{"set", vertex_list(r.set)}};
    if (r.reason == CandidateRecord::Reason::kEdgeBound) {
      rec["reason"] = "edge-bound";
      rec["surviving_edges"] = r.surviving_edges;
    } else {
      rec["reason"] = "minor";
      rec["model"] = to_json(*r.model);
    }
    records.push_back(std::move(rec));
  }
  return {{"l", v.l},
          {"reduction", steps},
          {"set_size", v.set_size},
          {"whole_block", v.whole_block},
          {"removable_capacity", v.removable_capacity},
          {"records", records}};
}

Json to_json(const ApexResult& r) {
  if (const auto* cert = std::get_if<ApexCertificate>(&r)) {
    Json c = to_json(*cert);
    return {{"apex", true}, {"certificate", c}, {"digest", digest(c)}};
  }
  Json v = to_json(std::get<NonApexVerdict>(r));
  return {{"apex", false}, {"verdict", v}, {"digest", digest(v)}};
}

Json to_json(const GenK33Partition& p) {
  return {{"apex", p.apex},
          {"V2", vertex_list(p.v2)},
          {"V3", vertex_list(p.v3)},
          {"W", {vertex_list(p.w[0]), vertex_list(p.w[1]), vertex_list(p.w[2])}}};
}

Json to_json(const ClassificationReport& r) {
  Json classes = Json::array();
  for (const ClassifiedGraph& c : r.non_apex) {
    Json verdict = to_json(c.verdict);
    Json family = nullptr;
    if (c.family) {
      Json model = to_json(c.family->model);
      family = {{"member", c.family->member}, {"model", model}, {"digest", digest(model)}};
    }
    classes.push_back({{"graph6", to_graph6(c.graph)},
                       {"degree_sequence", c.graph.degree_sequence()},
                       {"name", c.name ? Json(*c.name) : Json(nullptr)},
                       {"intrinsically_knotted", c.family ? Json("yes: contains a K7-family minor") : Json("not certified")},
                       {"family_minor", family},
                       {"verdict_digest", digest(verdict)},
                       {"verdict", verdict}});
  }
  return {{"n", r.order},
          {"e", r.edges},
          {"min_degree", r.min_degree},
          {"total_classes", r.total_classes},
          {"non_2_apex_count", r.non_apex.size()},
          {"classes", classes}};
}

Json to_json(const MainTheoremReport& r) {
  std::int64_t total = 0;
  for (const Stratum& s : r.strata) total += s.classes;
  return {{"max_n", r.max_order},
          {"strata", strata_json(r.strata, "classes", "non_2_apex")},
          {"total_classes", total},
          {"counterexamples", graph_list(r.counterexamples)},
          {"passed", r.passed()}};
}

Json to_json(const Table1Report& r) {
  Json cells = Json::array();
  for (const Table1Cell& c : r.cells) {
    cells.push_back({{"n", c.order}, {"e", c.edges}, {"expected", c.expected}, {"computed", c.computed}, {"match", c.matches()}});
  }
  return {{"cells", cells}, {"passed", r.passed()}};
}

Json to_json(const EdgeBoundReport& r) {
  Json bounds = Json::array();
  for (int n = 6; n <= 11; ++n) bounds.push_back({{"n", n}, {"min_edges", nonplanar_edge_lower_bound(n)}});
  return {{"bounds", bounds},
          {"strata", strata_json(r.strata, "non_planar_classes", "violations")},
          {"violations", graph_list(r.violations)},
          {"passed", r.passed()}};
}

Json to_json(const OneApexReport& r) {
  return {{"strata", strata_json(r.strata, "classes", "non_1_apex")},
          {"counterexamples", graph_list(r.counterexamples)},
          {"j1_not_1_apex", r.j1_not_1_apex},
          {"two_k33_not_1_apex", r.two_k33_not_1_apex},
          {"passed", r.passed()}};
}

Json to_json(const std::vector<FamilyMember>& family) {
  Json members = Json::array();
  for (std::size_t i = 0; i < family.size(); ++i) {
    const FamilyMember& m = family[i];
    members.push_back({{"index", i},
                       {"name", m.name},
                       {"graph6", to_graph6(m.graph)},
                       {"canonical_graph6", to_graph6(canonical_graph(m.graph))},
                       {"order", m.graph.order()},
                       {"edges", m.graph.edge_count()},
                       {"degree_sequence", m.graph.degree_sequence()},
                       {"parent", m.parent},
                       {"triangle", m.parent < 0 ? Json(nullptr) : Json(m.triangle)}});
  }
  return {{"count", family.size()}, {"members", members}};
}

Json to_json(const CycleVerdict& v) {
  Json moves = Json::array();
  for (const ReidemeisterMove& m : v.moves) {
    moves.push_back({{"kind", m.kind == ReidemeisterMove::Kind::kR1 ? "R1" : "R2"}, {"crossings", m.crossings}});
  }
  return {{"cycle", v.cycle},
          {"code", v.code.to_string()},
          {"crossings", v.code.crossing_count()},
          {"verdict", to_string(v.kind)},
          {"moves", moves},
          {"jones", v.jones ? Json(v.jones->to_string()) : Json(nullptr)},
          {"reason", v.reason.empty() ? Json(nullptr) : Json(v.reason)}};
}

Json to_json(const SweepResult& r) {
  return {{"n", r.order},
          {"classes_by_edges", r.classes_by_edges},
          {"hits_by_edges", r.hits_by_edges},
          {"total_classes", r.total_classes()},
          {"count", r.total_hits()}};
}

Json make_report(const std::string& command, Json parameters, Json result, double wall_seconds, int jobs) {
  return {{"format_version", kReportFormatVersion},
          {"command", command},
          {"parameters", std::move(parameters)},
          {"result", std::move(result)},
          {"run", {{"wall_seconds", wall_seconds}, {"jobs", jobs}}}};
}

}  // namespace apexis
