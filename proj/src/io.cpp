#include "midlevel/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "midlevel/error.hpp"
#include "midlevel/tree.hpp"

namespace midlevel {

using nlohmann::json;

namespace {

json header(int k) { return json{{"format", 1}, {"k", k}}; }

}  // namespace

std::string to_json(const MiddleLevelsGraph& g) {
  json j = header(g.k);
  j["graph"] = "M_k";
  json verts = json::array();
  for (int i = 0; i < g.vertex_count(); ++i) {
    const auto& w = g.vertices[static_cast<std::size_t>(i)];
    verts.push_back({{"id", i}, {"rep", w.to_string()}, {"aleph_rep", aleph(w).to_string()}});
  }
  json edges = json::array();
  for (int v = 0; v < g.lower_count(); ++v) {
    const auto& w = g.vertices[static_cast<std::size_t>(v)];
    for (int c = 0; c <= g.k; ++c) {
      const int u = g.neighbor(v, c);
      const bool horizontal = necklace_of(g.vertices[static_cast<std::size_t>(u)]) == necklace_of(aleph(w));
      edges.push_back({{"u", v}, {"v", u}, {"kind", horizontal ? "horizontal" : "skew"}, {"color", c}, {"loop", false}});
    }
  }
  j["vertices"] = std::move(verts);
  j["edges"] = std::move(edges);
  return j.dump(1) + "\n";
}

std::string to_json(const QuotientGraph& g) {
  json j = header(g.k);
  j["graph"] = "M_k/pi";
  json verts = json::array();
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    const auto& c = g.vertices[i];
    verts.push_back({{"id", i}, {"rep", c.to_string()}, {"aleph_rep", necklace_of(aleph(c.rep())).to_string()}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"u", e.lower}, {"v", e.upper}, {"kind", kind_name(e.kind)}, {"color", e.color}, {"loop", false}});
  }
  j["vertices"] = std::move(verts);
  j["edges"] = std::move(edges);
  return j.dump(1) + "\n";
}

std::string to_json(const ReducedGraph& g) {
  json j = header(g.k);
  j["graph"] = "R_k";
  json verts = json::array();
  for (int i = 0; i < g.vertex_count(); ++i) {
    verts.push_back({{"id", i},
                     {"rep", g.lower[static_cast<std::size_t>(i)].to_string()},
                     {"aleph_rep", g.upper[static_cast<std::size_t>(i)].to_string()},
                     {"delta", g.delta[static_cast<std::size_t>(i)].to_string()}});
  }
  json edges = json::array();
  for (const auto& e : g.edges) {
    edges.push_back({{"u", e.u}, {"v", e.v}, {"kind", e.loop ? "horizontal" : "skew"}, {"color", e.color}, {"loop", e.loop}});
  }
  j["vertices"] = std::move(verts);
  j["edges"] = std::move(edges);
  return j.dump(1) + "\n";
}

std::string to_dot(const MiddleLevelsGraph& g) {
  std::ostringstream os;
  os << "graph M" << g.k << " {\n";
  for (int i = 0; i < g.vertex_count(); ++i)
    os << "  v" << i << " [label=\"" << g.vertices[static_cast<std::size_t>(i)].to_string() << "\"];\n";
  for (int v = 0; v < g.lower_count(); ++v)
    for (int c = 0; c <= g.k; ++c) os << "  v" << v << " -- v" << g.neighbor(v, c) << " [label=\"" << c << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_dot(const QuotientGraph& g) {
  std::ostringstream os;
  os << "graph Mpi" << g.k << " {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    os << "  c" << i << " [label=\"" << g.vertices[i].to_string() << "\"];\n";
  for (const auto& e : g.edges) {
    os << "  c" << e.lower << " -- c" << e.upper << " [label=\"" << e.color << "\""
       << (e.kind == EdgeKind::kHorizontal ? ", style=bold" : "") << "];\n";
  }
  os << "}\n";
  return os.str();
}

std::string to_dot(const ReducedGraph& g) {
  std::ostringstream os;
  os << "graph R" << g.k << " {\n";
  for (int i = 0; i < g.vertex_count(); ++i)
    os << "  r" << i << " [label=\"" << g.delta[static_cast<std::size_t>(i)].to_string() << "\"];\n";
  for (const auto& e : g.edges) os << "  r" << e.u << " -- r" << e.v << " [label=\"" << e.color << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string format_cycle(const std::vector<BinaryWord>& cycle) {
  std::string out;
  for (const auto& w : cycle) out += w.to_string() + "\n";
  return out;
}

std::vector<BinaryWord> parse_cycle(const std::string& text) {
  std::vector<BinaryWord> out;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    out.push_back(BinaryWord::parse(line));
  }
  return out;
}

std::string format_color_word(int k, const ColorWord& cw) {
  std::string s = std::to_string(k) + " " + std::to_string(cw.start + 1) + " ";
  for (int c : cw.colors) s += color_char(c);
  return s + "\n";
}

std::pair<int, ColorWord> parse_color_word(const std::string& text) {
  std::istringstream is(text);
  int k = 0, start = 0;
  std::string colors;
  if (!(is >> k >> start)) throw InvalidInput("colour word must read \"k start colours\"");
  is >> colors;
  if (start < 1) throw InvalidInput("start id is 1-based");
  ColorWord cw;
  cw.start = start - 1;
  for (char ch : colors) {
    auto sym = DeltaString::parse(std::string(1, ch));
    if (sym[0] == DeltaString::kStar) throw InvalidInput("star inside a colour word");
    cw.colors.push_back(sym[0]);
  }
  return {k, cw};
}

std::string catalog_manifest(const K6Catalog& cat) {
  json j{{"format", 1}, {"k", 6}};
  j["hat_cycle_length"] = cat.hat_cycle_length;
  j["hat_cycle_is_hamilton"] = cat.hat_cycle_is_hamilton;
  j["removable_edges_with_terminal_loops"] = cat.doubly_terminal_edges;
  j["recipe_attempts"] = cat.recipe_attempts;
  j["recipe_successes"] = cat.recipe_successes;
  j["signatures_distinct"] = cat.signatures_distinct;
  json entries = json::array();
  for (const auto& e : cat.entries) {
    entries.push_back({{"entry", e.entry},
                       {"source", e.source},
                       {"provenance", e.provenance},
                       {"removed_edge", e.removed_edge},
                       {"verified", e.verified},
                       {"length", e.length},
                       {"signature_hash", hex64(fnv1a64(e.signature))},
                       {"color_word", format_color_word(6, e.path).substr(0, format_color_word(6, e.path).size() - 1)}});
  }
  j["entries"] = std::move(entries);
  json listed = json::array();
  for (const auto& d : cat.listed) {
    listed.push_back({{"edge", d.edge},
                      {"loops_at_both_ends", d.loops_at_both_ends},
                      {"combinations", d.combinations},
                      {"lifted", d.lifted},
                      {"notes", d.notes}});
  }
  j["listed_removals"] = std::move(listed);
  j["notes"] = cat.notes;
  return j.dump(1) + "\n";
}

std::string tree_nodes_json(int depth) {
  json rows = json::array();
  for (int l = 0; l <= depth; ++l) {
    for (const auto& a : level_nodes(l)) {
      rows.push_back({{"level", l},
                      {"delta", render_node(a, TreeNotation::kDelta)},
                      {"a", render_node(a, TreeNotation::kA)},
                      {"b", render_node(a, TreeNotation::kB)}});
    }
  }
  json j{{"format", 1}, {"depth", depth}, {"nodes", rows}};
  return j.dump(1) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

}  // namespace midlevel
