#pragma once

// Serialization of graphs, cycles, colour words and the k = 6 catalog.

#include <string>
#include <utility>
#include <vector>

#include "midlevel/hamilton.hpp"

namespace midlevel {

std::string to_json(const MiddleLevelsGraph& g);
std::string to_json(const QuotientGraph& g);
std::string to_json(const ReducedGraph& g);

std::string to_dot(const MiddleLevelsGraph& g);
std::string to_dot(const QuotientGraph& g);
std::string to_dot(const ReducedGraph& g);

/// One bit string per line; the cycle closes from the last line to the first.
std::string format_cycle(const std::vector<BinaryWord>& cycle);
std::vector<BinaryWord> parse_cycle(const std::string& text);

/// "k start c1c2...cm" with a 1-based start id.
std::string format_color_word(int k, const ColorWord& cw);
std::pair<int, ColorWord> parse_color_word(const std::string& text);

std::string catalog_manifest(const K6Catalog& cat);

/// Rows {level, delta, a, b} for every node down to `depth`.
std::string tree_nodes_json(int depth);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace midlevel
