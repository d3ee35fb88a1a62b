#pragma once

// Hamilton paths in R_k, their colour encodings, and their lift to Hamilton
// cycles of M_k.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "midlevel/quotient.hpp"

namespace midlevel {

struct RkPath {
  std::vector<int> vertices;
  /// colors[i] joins vertices[i] and vertices[i+1].
  std::vector<int> colors;
  std::optional<int> start_loop;
  std::optional<int> end_loop;

  bool covers(const ReducedGraph& g) const;
  friend bool operator==(const RkPath&, const RkPath&) = default;
};

/// Checks adjacency, distinctness and that the loop colours are loops.
bool is_valid_path(const ReducedGraph& g, const RkPath& p, std::string* why = nullptr);

struct ColorWord {
  int start = 0;  // 0-based vertex id
  std::vector<int> colors;
  friend bool operator==(const ColorWord&, const ColorWord&) = default;
};

/// Terminal loops, when present, are emitted as the first / last colour.
ColorWord encode_colors(const ReducedGraph& g, const RkPath& p);

struct DecodeOutcome {
  std::optional<RkPath> path;
  int failed_step = -1;  // index into the colour list
  std::string reason;
  /// Vertices visited before the failure (whole walk when successful).
  std::vector<int> walked;
};

/// Follows the unique slot of each colour. A loop colour is accepted only as
/// the first or last symbol.
DecodeOutcome decode_colors(const ReducedGraph& g, const ColorWord& cw);

/// Walk that must return to its start after the last colour.
DecodeOutcome decode_cycle(const ReducedGraph& g, int start, const std::vector<int>& colors);

std::vector<int> parse_color_symbols(const std::string& text);

enum class HatStrategy { kColor, kCoordinate, kFramedCoordinate };
const char* strategy_name(HatStrategy s);
const char* strategy_letter(HatStrategy s);

struct HatDiagnostic {
  HatStrategy strategy = HatStrategy::kColor;
  bool hamilton = false;       // path visits every vertex exactly once
  bool terminal_loops = false; // both ends carry a loop of colour 0
  int end_vertex = -1;
  DecodeOutcome outcome;
  std::string summary;
};

/// Decodes a hat sequence from `start` under one interpretation.
HatDiagnostic decode_hats(const ReducedGraph& g, const std::vector<int>& hats, HatStrategy strategy, int start);

std::vector<HatDiagnostic> decode_hats_all(const ReducedGraph& g, const std::vector<int>& hats, int start);

/// Presentation id of the smallest (0...0) and largest (01...k-1) sequences.
int phi0_vertex(const ReducedGraph& g);
int phi1_vertex(const ReducedGraph& g);

struct SearchOptions {
  int start = 0;
  int end = -1;  // -1: any end vertex
  bool require_terminal_loops = true;
  long long node_budget = 0;     // 0: unlimited
  double seconds_budget = 0.0;   // 0: unlimited
  bool connectivity_pruning = true;
  int jobs = 1;
};

enum class SearchStatus { kFound, kExhausted, kBudget };
const char* status_name(SearchStatus s);

struct SearchResult {
  SearchStatus status = SearchStatus::kExhausted;
  std::optional<RkPath> path;
  long long nodes = 0;
};

/// Depth-first search, neighbours taken by ascending colour. Loops of the
/// returned path are the least loop colours at each end.
SearchResult find_hamilton_path(const ReducedGraph& g, const SearchOptions& opt);

/// Calls `visit` for each Hamilton path in search order until it returns false.
SearchResult enumerate_hamilton_paths(const ReducedGraph& g, const SearchOptions& opt,
                                      const std::function<bool(const RkPath&)>& visit);

struct QuotientCycle {
  std::vector<int> vertices;  // M_k/pi vertex ids
  std::vector<int> edges;     // quotient edge ids, edges[i] joins vertices[i], vertices[i+1 mod len]
  std::vector<int> colors;
};

/// Doubles a Hamilton path with terminal loops into a Hamilton cycle of M_k/pi.
QuotientCycle lift_to_quotient(const QuotientGraph& q, const ReducedGraph& g, const RkPath& p);

bool is_hamilton_quotient_cycle(const QuotientGraph& q, const QuotientCycle& z, std::string* why = nullptr);

struct MkLift {
  bool success = false;
  std::vector<int> cycle;     // M_k vertex ids
  long long closed_length = 0;  // length reached when the walk returned or repeated
  int passes = 0;               // traversals of the quotient cycle
  int translation = 0;          // rotation carrying the start to the walk after one pass
  std::string reason;
};

/// Repeats the quotient cycle's colours in M_k from the colourful
/// representative of its first class until the walk closes.
MkLift lift_to_mk(const MiddleLevelsGraph& mk, const QuotientGraph& q, const QuotientCycle& z);

struct LiftAttempt {
  int start_loop = 0;
  int end_loop = 0;
  MkLift lift;
};

/// Tries every pair of terminal loop colours in ascending order.
std::vector<LiftAttempt> lift_path_all_loops(const MiddleLevelsGraph& mk, const QuotientGraph& q,
                                             const ReducedGraph& g, RkPath p, bool stop_at_first = true);

struct VerifyReport {
  bool ok = false;
  std::string violation;
};

VerifyReport verify_hamilton(const MiddleLevelsGraph& g, const std::vector<BinaryWord>& cycle);
VerifyReport verify_hamilton(const MiddleLevelsGraph& g, const std::vector<int>& cycle);

std::vector<BinaryWord> cycle_words(const MiddleLevelsGraph& g, const std::vector<int>& cycle);

/// Start of the least rotation of a cyclic sequence.
std::size_t least_rotation_start(const std::vector<int>& s);

/// Least rotation over both traversal directions of the cyclic colour
/// sequence along the cycle, one character per colour.
std::string cycle_signature(const MiddleLevelsGraph& g, const std::vector<int>& cycle);

std::uint64_t fnv1a64(const std::string& s);
std::string hex64(std::uint64_t v);

/// Cyclic hat sequence for k = 6, read as colours from the largest node.
const std::string& k6_hat_cycle();
/// Edge order numbers listed with that sequence.
const std::vector<int>& k6_listed_removals();

/// Hamilton paths obtained from `p` by one end rotation: when the last vertex
/// is adjacent to v_i, the tail after v_i is reversed and joined to v_i. The
/// same move is applied at the first vertex. Loops are dropped.
std::vector<RkPath> posa_rotations(const ReducedGraph& g, const RkPath& p);

struct CatalogEntry {
  int entry = 0;
  std::string source;  // "hat-removal" or "search"
  std::string provenance;
  int removed_edge = 0;  // 1-based order number in the hat cycle, 0 for search entries
  int start_loop = 0;
  int end_loop = 0;
  bool verified = false;
  long long length = 0;
  std::string signature;
  std::vector<int> cycle;  // M_6 vertex ids
  ColorWord path;
};

struct RemovalDiagnostic {
  int edge = 0;
  bool loops_at_both_ends = false;
  int combinations = 0;
  int lifted = 0;
  std::vector<std::string> notes;
};

struct K6Catalog {
  bool hat_cycle_is_hamilton = false;
  int hat_cycle_length = 0;
  std::vector<CatalogEntry> entries;
  std::vector<int> doubly_terminal_edges;  // edges with loops at both ends after removal
  std::vector<RemovalDiagnostic> listed;   // diagnostics for the listed order numbers
  int recipe_attempts = 0;
  int recipe_successes = 0;
  std::vector<std::string> notes;
  bool signatures_distinct = false;
};

struct CatalogOptions {
  int target = 29;
  int jobs = 1;
  int rotation_budget = 200'000;
  long long search_node_budget = 50'000'000;
  double seconds_budget = 0.0;
};

K6Catalog k6_catalog(const CatalogOptions& opt);

}  // namespace midlevel
