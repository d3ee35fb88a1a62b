#pragma once

// Validation of the lexical colouring as a 1-factorization at every level of
// the M_k -> M_k/pi -> R_k tower, and the R_k adjacency table.

#include <string>
#include <vector>

#include "midlevel/quotient.hpp"

namespace midlevel {

struct FactorizationReport {
  bool ok = true;
  long long checked = 0;  // edges or slots inspected
  std::string violation;  // first failure, empty when ok

  void fail(std::string what) {
    if (ok) violation = std::move(what);
    ok = false;
  }
};

/// Every vertex has one edge per colour and both endpoint computations agree.
FactorizationReport one_factorization(const MiddleLevelsGraph& g);
/// Every class sees each colour exactly once among its incident quotient edges.
FactorizationReport one_factorization(const QuotientGraph& g);
/// Every vertex has one slot per colour; proper edges are seen from both ends.
FactorizationReport one_factorization(const ReducedGraph& g);

/// Colour of each M_k edge equals the colour of its quotient edge and of the
/// R_k edge it collapses to; every quotient edge has a fibre of exactly n edges.
FactorizationReport covering_consistency(const MiddleLevelsGraph& mk, const QuotientGraph& q,
                                         const ReducedGraph& rk);

/// The colour classes of M_k as edge lists (lower id, upper id), colour 0..k.
std::vector<std::vector<std::pair<int, int>>> color_classes(const MiddleLevelsGraph& g);

struct AdjacencyCell {
  HattedLabel label;
  int neighbor = 0;  // 1-based presentation id
};

struct AdjacencyTable {
  int k = 0;
  std::vector<DeltaString> headers;
  /// rows[r][v] for colour k - r.
  std::vector<std::vector<AdjacencyCell>> rows;

  /// Neighbour ids per vertex, colours k..0, comma separated, one vertex per line.
  std::string id_matrix_csv() const;
  std::string to_text() const;
};

AdjacencyTable adjacency_table(const ReducedGraph& g);

}  // namespace midlevel
