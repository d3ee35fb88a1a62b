#include "midlevel/quotient.hpp"

#include <algorithm>
#include <map>

#include "midlevel/error.hpp"
#include "midlevel/tree.hpp"

namespace midlevel {

int checked_graph_k(int k) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  if (k > kMaxGraphK) {
    throw CapacityError("k = " + std::to_string(k) + " exceeds the supported bound " + std::to_string(kMaxGraphK));
  }
  return k;
}

int MiddleLevelsGraph::index_of(const BinaryWord& w) const {
  if (w.size() != n) return -1;
  return index[static_cast<std::size_t>(w.packed())];
}

bool MiddleLevelsGraph::adjacent(const BinaryWord& a, const BinaryWord& b) const {
  int ia = index_of(a), ib = index_of(b);
  if (ia < 0 || ib < 0) return false;
  for (int c = 0; c <= k; ++c)
    if (neighbor(ia, c) == ib) return true;
  return false;
}

MiddleLevelsGraph build_mk(int k) {
  checked_graph_k(k);
  MiddleLevelsGraph g;
  g.k = k;
  g.n = 2 * k + 1;
  g.vertices = words_of_weight(g.n, k);
  auto up = words_of_weight(g.n, k + 1);
  g.vertices.insert(g.vertices.end(), up.begin(), up.end());
  g.index.assign(std::size_t{1} << g.n, -1);
  for (int i = 0; i < g.vertex_count(); ++i) g.index[static_cast<std::size_t>(g.vertices[i].packed())] = i;

  const std::size_t slots = static_cast<std::size_t>(k + 1);
  g.by_color.assign(g.vertices.size() * slots, -1);
  for (int v = 0; v < g.lower_count(); ++v) {
    const BinaryWord& w = g.vertices[static_cast<std::size_t>(v)];
    for (int p = 0; p < g.n; ++p) {
      if (w.bit(p)) continue;
      const int c = lower_edge_color(w, p);
      const int u = g.index_of(w.flipped(p));
      auto& a = g.by_color[static_cast<std::size_t>(v) * slots + static_cast<std::size_t>(c)];
      auto& b = g.by_color[static_cast<std::size_t>(u) * slots + static_cast<std::size_t>(c)];
      if (a != -1 || b != -1) throw InvalidInput("colour clash while building M_k");  // cannot happen
      a = u;
      b = v;
    }
  }
  return g;
}

const char* kind_name(EdgeKind kind) { return kind == EdgeKind::kHorizontal ? "horizontal" : "skew"; }

int QuotientGraph::vertex_id(const Necklace& c) const {
  auto it = id_of_rep.find(c.rep().packed());
  if (it == id_of_rep.end() || c.size() != 2 * k + 1) return -1;
  return it->second;
}

int QuotientGraph::multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  int m = 0;
  for (const auto& e : edges)
    if (e.lower == u && e.upper == v) ++m;
  return m;
}

namespace {

std::vector<Necklace> presentation_order(int k) {
  std::vector<Necklace> out;
  for (const auto& node : rk_nodes_in_order(k)) out.push_back(necklace_of(word_of(node.delta)));
  return out;
}

}  // namespace

QuotientGraph build_mk_pi(int k) {
  checked_graph_k(k);
  QuotientGraph g;
  g.k = k;
  auto lower = presentation_order(k);
  g.lower_count = static_cast<int>(lower.size());
  g.vertices = lower;
  for (const auto& c : lower) g.vertices.push_back(aleph_pi(c));
  for (int i = 0; i < static_cast<int>(g.vertices.size()); ++i)
    g.id_of_rep.emplace(g.vertices[static_cast<std::size_t>(i)].rep().packed(), i);

  g.edges.resize(static_cast<std::size_t>(g.lower_count) * static_cast<std::size_t>(k + 1));
  for (int i = 0; i < g.lower_count; ++i) {
    const BinaryWord w = delta_representative(lower[static_cast<std::size_t>(i)]);
    for (int p = 0; p < w.size(); ++p) {
      if (w.bit(p)) continue;
      QuotientEdge e;
      e.color = lower_edge_color(w, p);
      e.id = g.edge_id(i, e.color);
      e.lower = i;
      e.upper = g.vertex_id(necklace_of(w.flipped(p)));
      e.kind = e.upper == g.lower_count + i ? EdgeKind::kHorizontal : EdgeKind::kSkew;
      e.lower_word = w;
      e.position = p;
      g.edges[static_cast<std::size_t>(e.id)] = e;
    }
  }
  return g;
}

std::vector<int> ReducedGraph::loop_colors(int v) const {
  std::vector<int> out;
  for (int c = 0; c <= k; ++c)
    if (is_loop(v, c)) out.push_back(c);
  return out;
}

int ReducedGraph::loop_count() const {
  int total = 0;
  for (const auto& e : edges) total += e.loop ? 1 : 0;
  return total;
}

int ReducedGraph::vertex_of(const Necklace& c) const {
  auto it = id_of_rep.find(c.rep().packed());
  if (it == id_of_rep.end() || c.size() != 2 * k + 1) return -1;
  return it->second;
}

int ReducedGraph::color_between(int u, int v) const {
  for (int c = 0; c <= k; ++c)
    if (neighbor(u, c) == v) return c;
  return -1;
}

ReducedGraph build_rk(int k) {
  const QuotientGraph q = build_mk_pi(k);
  ReducedGraph r;
  r.k = k;
  const int count = q.lower_count;
  for (int i = 0; i < count; ++i) {
    r.lower.push_back(q.vertices[static_cast<std::size_t>(i)]);
    r.upper.push_back(q.vertices[static_cast<std::size_t>(count + i)]);
    r.delta.push_back(delta(r.lower.back()));
    r.id_of_rep.emplace(r.lower.back().rep().packed(), i);
  }
  const std::size_t slots = static_cast<std::size_t>(k + 1);
  r.nbr.assign(static_cast<std::size_t>(count) * slots, -1);
  r.slot_edge.assign(static_cast<std::size_t>(count) * slots, -1);
  for (const auto& e : q.edges) {
    // The upper endpoint's class is the aleph image of the R_k neighbour.
    const int v = e.upper - count;
    r.nbr[static_cast<std::size_t>(e.lower) * slots + static_cast<std::size_t>(e.color)] = v;
  }
  for (int u = 0; u < count; ++u) {
    for (int c = 0; c <= k; ++c) {
      const int v = r.neighbor(u, c);
      if (v < u) continue;
      if (r.neighbor(v, c) != u) throw InvalidInput("specular partner carries another colour");  // cannot happen
      RkEdge e{static_cast<int>(r.edges.size()), u, v, c, u == v};
      r.slot_edge[static_cast<std::size_t>(u) * slots + static_cast<std::size_t>(c)] = e.id;
      r.slot_edge[static_cast<std::size_t>(v) * slots + static_cast<std::size_t>(c)] = e.id;
      r.edges.push_back(e);
    }
  }
  return r;
}

EdgeKind classify_edge(const QuotientGraph& g, int edge_id) {
  if (edge_id < 0 || edge_id >= static_cast<int>(g.edges.size())) throw InvalidInput("unknown quotient edge");
  const auto& e = g.edges[static_cast<std::size_t>(edge_id)];
  return g.vertices[static_cast<std::size_t>(e.upper)] == aleph_pi(g.vertices[static_cast<std::size_t>(e.lower)])
             ? EdgeKind::kHorizontal
             : EdgeKind::kSkew;
}

namespace {

std::pair<BinaryWord, int> mirrored_fibre(const QuotientEdge& e) {
  const int n = e.lower_word.size();
  const BinaryWord upper = e.lower_word.flipped(e.position);
  return {aleph(upper), n - 1 - e.position};
}

}  // namespace

int mirrored_fibre_color(const QuotientGraph& g, int edge_id) {
  if (edge_id < 0 || edge_id >= static_cast<int>(g.edges.size())) throw InvalidInput("unknown quotient edge");
  auto [w, p] = mirrored_fibre(g.edges[static_cast<std::size_t>(edge_id)]);
  return lower_edge_color(w, p);
}

int skew_mirror(const QuotientGraph& g, int edge_id) {
  if (classify_edge(g, edge_id) != EdgeKind::kSkew) throw InvalidInput("horizontal edges have no skew mirror");
  auto [w, p] = mirrored_fibre(g.edges[static_cast<std::size_t>(edge_id)]);
  return project_edge(g, w, p);
}

int project_edge(const QuotientGraph& g, const BinaryWord& lower, int p) {
  const int id = g.vertex_id(necklace_of(lower));
  if (id < 0 || id >= g.lower_count) throw InvalidInput("word is not in the lower level");
  return g.edge_id(id, lower_edge_color(lower, p));
}

bool has_horizontal_form(const BinaryWord& w) {
  const int k = level_of_length(w.size());
  if (w.bit(k)) return false;
  for (int i = 1; i <= k; ++i)
    if (w.bit(k - i) == w.bit(k + i)) return false;
  return true;
}

int horizontal_degree(const Necklace& c) {
  const int k = level_of_length(c.size());
  if (c.weight() != k) throw InvalidInput("horizontal degree needs a weight-k necklace");
  int d = 0;
  for (const auto& m : members(c)) d += has_horizontal_form(m) ? 1 : 0;
  return d;
}

LoopCensus loop_census(int k) {
  checked_graph_k(k);
  LoopCensus out;
  out.k = k;
  for (const auto& c : necklaces_of_weight(2 * k + 1, k)) {
    ++out.vertices;
    const int h = horizontal_degree(c);
    out.loops += h;
    out.singly += h == 1;
    out.doubly += h == 2;
  }
  return out;
}

std::vector<std::pair<std::string, int>> feasible_substrings(int n_max) {
  if (n_max < 3 || n_max % 2 == 0) throw InvalidInput("n_max must be odd and at least 3");
  if (n_max > 19) throw CapacityError("feasible substring scan is bounded by n = 19");
  std::map<std::string, int> least;
  for (int n = 3; n <= n_max; n += 2) {
    const int k = (n - 1) / 2;
    for (const auto& c : necklaces_of_weight(n, k)) {
      std::vector<int> witness;
      for (int s = 0; s < n; ++s) {
        if (has_horizontal_form(rotate(c.rep(), s))) witness.push_back(reduce_mod(k - s, n));
      }
      if (witness.size() != 2) continue;
      int i = witness[0], j = witness[1];
      if (reduce_mod(j - i, n) > k) std::swap(i, j);
      const int gap = reduce_mod(j - i, n);
      std::string sub;
      for (int t = 1; t < gap; ++t) sub += c.rep().bit(i + t) ? '1' : '0';
      least.emplace(sub, n);
    }
  }
  std::vector<std::pair<std::string, int>> out(least.begin(), least.end());
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

}  // namespace midlevel
