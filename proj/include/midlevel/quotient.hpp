#pragma once

// The middle-levels graph M_k, its rotation quotient M_k/pi and the reduced
// graph R_k obtained by also identifying each class with its aleph image.

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "midlevel/lexical.hpp"
#include "midlevel/words.hpp"

namespace midlevel {

inline constexpr int kMaxGraphK = 8;

int checked_graph_k(int k);

struct MiddleLevelsGraph {
  int k = 0;
  int n = 0;
  /// Weight-k words first, then weight-(k+1) words, each block in lexicographic order.
  std::vector<BinaryWord> vertices;
  /// by_color[v * (k+1) + c] is the neighbour of v along colour c.
  std::vector<int> by_color;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  long long edge_count() const { return static_cast<long long>(vertices.size() / 2) * (k + 1); }
  int lower_count() const { return static_cast<int>(vertices.size() / 2); }

  /// -1 when the word is not a vertex.
  int index_of(const BinaryWord& w) const;
  int neighbor(int v, int color) const { return by_color[static_cast<std::size_t>(v * (k + 1) + color)]; }
  bool adjacent(const BinaryWord& a, const BinaryWord& b) const;

  std::vector<std::int32_t> index;  // packed word -> vertex id, -1 elsewhere
};

MiddleLevelsGraph build_mk(int k);

enum class EdgeKind { kHorizontal, kSkew };
const char* kind_name(EdgeKind kind);

struct QuotientEdge {
  int id = 0;
  int lower = 0;  // vertex id of the weight-k class
  int upper = 0;  // vertex id of the weight-(k+1) class
  int color = 0;
  EdgeKind kind = EdgeKind::kSkew;
  BinaryWord lower_word;  // a fibre representative: flipping `position` of it
  int position = 0;
};

struct QuotientGraph {
  int k = 0;
  /// ids 0..C-1: weight-k classes in tree presentation order;
  /// id C+i: the aleph image of class i.
  std::vector<Necklace> vertices;
  int lower_count = 0;
  /// Edge id = lower * (k+1) + color.
  std::vector<QuotientEdge> edges;

  int vertex_id(const Necklace& c) const;
  int edge_id(int lower, int color) const { return lower * (k + 1) + color; }
  int multiplicity(int u, int v) const;

  std::unordered_map<std::uint64_t, int> id_of_rep;
};

QuotientGraph build_mk_pi(int k);

struct RkEdge {
  int id = 0;
  int u = 0;
  int v = 0;  // equals u for a loop
  int color = 0;
  bool loop = false;
};

struct ReducedGraph {
  int k = 0;
  std::vector<Necklace> lower;  // presentation order
  std::vector<Necklace> upper;  // aleph_pi(lower[i])
  std::vector<DeltaString> delta;
  /// nbr[v * (k+1) + c]: the vertex reached from v along colour c.
  std::vector<int> nbr;
  /// slot_edge[v * (k+1) + c]: the RkEdge occupying that slot.
  std::vector<int> slot_edge;
  std::vector<RkEdge> edges;

  int vertex_count() const { return static_cast<int>(lower.size()); }
  int neighbor(int v, int color) const { return nbr[static_cast<std::size_t>(v * (k + 1) + color)]; }
  bool is_loop(int v, int color) const { return neighbor(v, color) == v; }
  std::vector<int> loop_colors(int v) const;
  int loop_count() const;
  /// -1 when not a weight-k class of this graph.
  int vertex_of(const Necklace& c) const;
  /// Colour of the edge joining u and v, or -1 if they are not adjacent (u != v).
  int color_between(int u, int v) const;

  std::unordered_map<std::uint64_t, int> id_of_rep;
};

ReducedGraph build_rk(int k);

EdgeKind classify_edge(const QuotientGraph& g, int edge_id);

/// Quotient edge holding the aleph images of the fibre of a skew edge.
int skew_mirror(const QuotientGraph& g, int edge_id);

/// Colour carried by the mirrored fibre, computed from the mirrored words.
int mirrored_fibre_color(const QuotientGraph& g, int edge_id);

/// True when the word reads b~_k..b~_1 0 b_1..b_k around its middle entry.
bool has_horizontal_form(const BinaryWord& w);

/// Number of members of c with the horizontal form.
int horizontal_degree(const Necklace& c);

/// Quotient edge id of the M_k edge flipping zero `p` of `lower`.
int project_edge(const QuotientGraph& g, const BinaryWord& lower, int p);

struct LoopCensus {
  int k = 0;
  long long vertices = 0;
  long long loops = 0;
  long long singly = 0;
  long long doubly = 0;
};
LoopCensus loop_census(int k);

/// Substrings lying strictly between the two horizontal witnesses of a
/// doubly-looped class, with the least n where each occurs. Ordered by length
/// then lexicographically.
std::vector<std::pair<std::string, int>> feasible_substrings(int n_max);

}  // namespace midlevel
