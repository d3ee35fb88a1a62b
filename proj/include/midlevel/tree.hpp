#pragma once

// The binary tree whose nodes are the colourful strings of every R_k, its
// integer-sequence notations, and the counting tables derived from it.

#include <optional>
#include <string>
#include <vector>

#include "midlevel/lexical.hpp"

namespace midlevel {

/// a_0..a_{k-1} with a_0 = 0 and a_{i-1} <= a_i <= i.
using ASeq = std::vector<int>;
/// b_1..b_{k-1} with b_i = a_i - a_{i-1}.
using BSeq = std::vector<int>;

DeltaString tree_root();

DeltaString left_child(const DeltaString& d);
std::optional<DeltaString> right_child(const DeltaString& d);

bool is_valid_aseq(const ASeq& a);
bool is_valid_bseq(const BSeq& b);

struct AChildren {
  ASeq left;
  std::optional<ASeq> right;
};
AChildren children_aseq(const ASeq& a);

/// Node reached from the root by, for each i >= 1, one left step followed by
/// a_i - a_{i-1} right steps.
DeltaString phi(const ASeq& a);
/// Inverse of phi; throws InvalidInput when d is not a node of the tree.
ASeq phi_inverse(const DeltaString& d);

BSeq psi(const ASeq& a);
ASeq psi_inverse(const BSeq& b);

/// Number of edges between the root and the node named by `a`.
int tree_level(const ASeq& a);

struct TreeNode {
  DeltaString delta;
  ASeq aseq;
  BSeq bseq;
};

/// All nodes with k leading symbol, in lexicographic order of their sequences.
std::vector<TreeNode> rk_nodes_in_order(int k);

/// All lower-level words, class by class in presentation order, each paired
/// with its aleph image. Each class starts at its colourful representative
/// and proceeds by rotation +1.
std::vector<std::pair<BinaryWord, BinaryWord>> mk_vertex_listing(int k);

using CatalanTriangle = std::vector<std::vector<long long>>;
CatalanTriangle catalan_triangle(int j_max);

/// Node count at levels 0..depth.
std::vector<long long> level_counts(int depth);

/// Tally of second symbols over the nodes of R_k, indexed 0..k-1.
std::vector<long long> second_symbol_counts(int k);

/// Maximal right-descending chains of the tree restricted to R_k, ordered by
/// the sequence of their first node.
std::vector<std::vector<TreeNode>> tk_components(int k);

/// S_1..S_{k-1}: chain lengths, then repeated sums of maximal strictly
/// decreasing runs.
std::vector<std::vector<long long>> s_sequences(int k);

/// "5, 4, 3, 2; 4, 3, 2;" with ';' closing each maximal decreasing run.
std::string format_run_sequence(const std::vector<long long>& s);

enum class TreeNotation { kDelta, kPair, kA, kB };

/// Nodes at one level, left subtree before right subtree.
std::vector<ASeq> level_nodes(int level);

/// Rendering of a node in the requested notation ("" for the root under kB is
/// shown as "()").
std::string render_node(const ASeq& a, TreeNotation notation);

/// Indented text rendering of levels 0..depth.
std::string render_tree(int depth, TreeNotation notation);

/// Graphviz rendering of levels 0..depth.
std::string render_tree_dot(int depth, TreeNotation notation);

std::string sequence_string(const std::vector<int>& s);

}  // namespace midlevel
