#include "apexis/spatial/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "apexis/error.hpp"

namespace apexis {

namespace {

struct Token {
  std::string text;
  int column = 0;
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    out.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return out;
}

std::optional<int> parse_int(const std::string& s) {
  if (s.empty()) return std::nullopt;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return std::nullopt;
  for (std::size_t k = i; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
  }
  if (s.size() - i > 9) return std::nullopt;
  return std::stoi(s);
}

struct Location {
  int line = 0;
  int column = 0;
};

}  // namespace

int SpatialDiagram::edge_index(int u, int v) const {
  auto it = edge_lookup_.find(std::minmax(u, v));
  return it == edge_lookup_.end() ? -1 : it->second;
}

SpatialDiagram load_diagram(std::string_view text) {
  SpatialDiagram d;
  std::map<std::string, int> vertex_index;
  std::set<std::string> edge_names;
  std::map<int, Location> declared_at;
  std::map<int, std::pair<int, int>> uses;  // crossing -> (over count, under count)
  std::map<int, Location> first_use;
  std::vector<std::pair<int, int>> raw_edges;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::vector<Token> tok = tokenize(line);
    if (tok.empty()) {
      if (end == text.size()) break;
      continue;
    }
    const auto fail = [&](const Token& t, const std::string& msg) -> void { throw ParseError(line_no, t.column, msg); };
    const std::string& kw = tok[0].text;
    if (kw == "vertex") {
      if (tok.size() != 2) fail(tok[0], "expected: vertex <name>");
      if (vertex_index.contains(tok[1].text)) fail(tok[1], "duplicate vertex '" + tok[1].text + "'");
      if (static_cast<int>(vertex_index.size()) >= kMaxVertices) fail(tok[1], "more than 32 vertices");
      vertex_index.emplace(tok[1].text, static_cast<int>(d.vertex_names_.size()));
      d.vertex_names_.push_back(tok[1].text);
    } else if (kw == "edge") {
      if (tok.size() < 4) fail(tok[0], "expected: edge <name> <u> <v> : <passage>*");
      DiagramEdge e;
      e.name = tok[1].text;
      if (!edge_names.insert(e.name).second) fail(tok[1], "duplicate edge '" + e.name + "'");
      for (int k : {2, 3}) {
        if (!vertex_index.contains(tok[k].text)) fail(tok[k], "unknown vertex '" + tok[k].text + "'");
      }
      e.u = vertex_index[tok[2].text];
      e.v = vertex_index[tok[3].text];
      if (e.u == e.v) fail(tok[3], "loop edges are not supported");
      if (d.edge_lookup_.contains(std::minmax(e.u, e.v))) fail(tok[1], "parallel edge between " + tok[2].text + " and " + tok[3].text);
      std::size_t k = 4;
      if (k < tok.size()) {
        if (tok[k].text != ":") fail(tok[k], "expected ':' before passages");
        ++k;
      }
      for (; k < tok.size(); ++k) {
        const std::string& p = tok[k].text;
        const char side = p.empty() ? '\0' : p.back();
        const auto id = parse_int(p.substr(0, p.size() - 1));
        if ((side != 'o' && side != 'u') || !id || p[0] == '+' || p[0] == '-') {
          fail(tok[k], "passage must look like <crossing id><o|u>, got '" + p + "'");
        }
        e.passages.push_back({*id, side == 'o'});
        auto& [over, under] = uses[*id];
        (side == 'o' ? over : under)++;
        first_use.emplace(*id, Location{line_no, tok[k].column});
      }
      d.edge_lookup_.emplace(std::minmax(e.u, e.v), static_cast<int>(d.edges_.size()));
      d.edges_.push_back(std::move(e));
    } else if (kw == "crossing") {
      if (tok.size() != 3) fail(tok[0], "expected: crossing <id> <sign>");
      const auto id = parse_int(tok[1].text);
      if (!id) fail(tok[1], "crossing id must be an integer");
      int sign = 0;
      if (tok[2].text == "+" || tok[2].text == "+1" || tok[2].text == "1") sign = 1;
      if (tok[2].text == "-" || tok[2].text == "-1") sign = -1;
      if (sign == 0) fail(tok[2], "crossing sign must be +1 or -1");
      if (declared_at.contains(*id)) fail(tok[1], "crossing " + std::to_string(*id) + " declared twice");
      declared_at.emplace(*id, Location{line_no, tok[1].column});
      d.signs_.emplace(*id, sign);
    } else {
      fail(tok[0], "unknown directive '" + kw + "'");
    }
    if (end == text.size()) break;
  }

  for (const auto& [id, loc] : first_use) {
    if (!declared_at.contains(id)) {
      throw ParseError(loc.line, loc.column, "crossing " + std::to_string(id) + " is used but never declared");
    }
  }
  for (const auto& [id, loc] : declared_at) {
    const auto [over, under] = uses[id];
    if (over != 1 || under != 1) {
      throw ParseError(loc.line, loc.column,
                       "crossing " + std::to_string(id) + " must be passed once over and once under, found " +
                           std::to_string(over) + " over and " + std::to_string(under) + " under");
    }
  }

  d.graph_ = Graph(static_cast<int>(d.vertex_names_.size()));
  for (const DiagramEdge& e : d.edges_) d.graph_.add_edge(e.u, e.v);
  return d;
}

SpatialDiagram load_diagram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open diagram file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return load_diagram(buf.str());
}

std::vector<std::vector<int>> cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> path;
  std::function<void(int, int, VertexSet)> extend = [&](int start, int v, VertexSet used) {
    for (int w : g.neighbors(v)) {
      if (w == start && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
      if (w <= start || used.contains(w)) continue;
      path.push_back(w);
      extend(start, w, used | VertexSet::single(w));
      path.pop_back();
    }
  };
  for (int s = 0; s < g.order(); ++s) {
    path = {s};
    extend(s, s, VertexSet::single(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Edge indices along a cycle, with whether each is walked in drawn direction.
std::vector<std::pair<int, bool>> cycle_edges(const SpatialDiagram& d, const std::vector<int>& cycle) {
  if (cycle.size() < 3) throw DomainError("a cycle needs at least three vertices");
  std::set<int> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size()) throw DomainError("cycle repeats a vertex");
  std::vector<std::pair<int, bool>> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int u = cycle[i];
    const int v = cycle[(i + 1) % cycle.size()];
    if (u < 0 || v < 0 || u >= d.graph().order() || v >= d.graph().order()) throw DomainError("cycle vertex out of range");
    const int e = d.edge_index(u, v);
    if (e < 0) throw DomainError("cycle uses a missing edge");
    out.emplace_back(e, d.edges()[e].u == u);
  }
  return out;
}

CrossingSet self_crossings(const SpatialDiagram& d, const std::vector<std::pair<int, bool>>& walk) {
  std::map<int, int> hits;
  for (auto [e, forward] : walk) {
    for (const Passage& p : d.edges()[e].passages) hits[p.crossing]++;
  }
  CrossingSet out;
  for (auto [id, count] : hits) {
    if (count == 2) out.push_back(id);
  }
  return out;
}

}  // namespace

std::vector<CycleCrossings> cycle_crossing_sets(const SpatialDiagram& d) {
  std::vector<CycleCrossings> out;
  for (auto& c : cycles(d.graph())) {
    CrossingSet s = self_crossings(d, cycle_edges(d, c));
    out.push_back({std::move(c), std::move(s)});
  }
  return out;
}

std::vector<CrossingSet> maximal_sets(const std::vector<CycleCrossings>& sets) {
  std::set<CrossingSet> distinct;
  for (const auto& s : sets) distinct.insert(s.crossings);
  std::vector<CrossingSet> out;
  for (const CrossingSet& a : distinct) {
    bool dominated = false;
    for (const CrossingSet& b : distinct) {
      if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end())) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(a);
  }
  return out;
}

SignedGaussCode extract_knot(const SpatialDiagram& d, const std::vector<int>& cycle) {
  const auto walk = cycle_edges(d, cycle);
  const CrossingSet self = self_crossings(d, walk);
  std::map<int, int> direction_product;
  SignedGaussCode code;
  for (auto [e, forward] : walk) {
    std::vector<Passage> passages = d.edges()[e].passages;
    if (!forward) std::reverse(passages.begin(), passages.end());
    for (const Passage& p : passages) {
      if (!std::binary_search(self.begin(), self.end(), p.crossing)) continue;
      code.entries.push_back({p.crossing, p.over, 1});
      auto [it, fresh] = direction_product.emplace(p.crossing, 1);
      it->second *= forward ? 1 : -1;
    }
  }
  for (GaussEntry& g : code.entries) g.sign = d.crossing_signs().at(g.crossing) * direction_product.at(g.crossing);
  return code;
}

std::string to_string(CycleVerdict::Kind kind) {
  switch (kind) {
    case CycleVerdict::Kind::kUnknot:
      return "unknot";
    case CycleVerdict::Kind::kKnotted:
      return "knotted";
    case CycleVerdict::Kind::kUnknown:
      break;
  }
  return "unknown";
}

std::vector<CycleVerdict> certify_unknotted(const SpatialDiagram& d) {
  std::vector<CycleVerdict> out;
  for (const auto& c : cycles(d.graph())) {
    CycleVerdict v;
    v.cycle = c;
    v.code = extract_knot(d, c);
    const Simplification s = simplify(v.code);
    if (s.reached_unknot) {
      v.kind = CycleVerdict::Kind::kUnknot;
      v.moves = s.moves;
    } else if (s.result.crossing_count() > kMaxBracketCrossings) {
      v.reason = "simplification stalled at " + std::to_string(s.result.crossing_count()) +
                 " crossings, above the bracket budget of " + std::to_string(kMaxBracketCrossings);
    } else {
      const LaurentPolynomial p = jones(s.result);
      v.moves = s.moves;
      if (!p.is_one()) {
        v.kind = CycleVerdict::Kind::kKnotted;
        v.jones = p;
      } else {
        v.reason = "Jones polynomial is 1 but Reidemeister removals stalled at " +
                   std::to_string(s.result.crossing_count()) + " crossings";
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool verify_cycle_verdict(const CycleVerdict& v) {
  try {
    switch (v.kind) {
      case CycleVerdict::Kind::kUnknot:
        return replay_moves(v.code, v.moves).entries.empty();
      case CycleVerdict::Kind::kKnotted:
        return v.jones && !v.jones->is_one() && jones(replay_moves(v.code, v.moves)) == *v.jones;
      case CycleVerdict::Kind::kUnknown:
        return !v.reason.empty();
    }
  } catch (const Error&) {
    return false;
  }
  return false;
}

}  // namespace apexis
