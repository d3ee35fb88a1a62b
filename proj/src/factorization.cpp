#include "midlevel/factorization.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace midlevel {

FactorizationReport one_factorization(const MiddleLevelsGraph& g) {
  FactorizationReport rep;
  const int slots = g.k + 1;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int c = 0; c < slots; ++c) {
      const int u = g.neighbor(v, c);
      if (u < 0) {
        rep.fail("vertex " + g.vertices[static_cast<std::size_t>(v)].to_string() + " lacks colour " +
                 std::to_string(c));
        continue;
      }
      if (g.neighbor(u, c) != v) {
        rep.fail("colour " + std::to_string(c) + " is not symmetric at " + g.vertices[static_cast<std::size_t>(v)].to_string());
        continue;
      }
      if (v >= g.lower_count()) continue;
      ++rep.checked;
      const BinaryWord& lo = g.vertices[static_cast<std::size_t>(v)];
      const BinaryWord& hi = g.vertices[static_cast<std::size_t>(u)];
      const std::uint64_t diff = lo.packed() ^ hi.packed();
      const int p = g.n - 1 - std::countr_zero(diff);
      const int from_lower = lower_edge_color(lo, p);
      const int from_upper = upper_edge_color(hi, p);
      if (from_lower != c || from_upper != c) {
        rep.fail("edge " + lo.to_string() + "-" + hi.to_string() + " coloured " + std::to_string(from_lower) + "/" +
                 std::to_string(from_upper) + " but stored as " + std::to_string(c));
      }
    }
  }
  if (rep.checked != g.edge_count()) rep.fail("edge count mismatch");
  return rep;
}

FactorizationReport one_factorization(const QuotientGraph& g) {
  FactorizationReport rep;
  const int slots = g.k + 1;
  std::vector<int> seen(g.vertices.size() * static_cast<std::size_t>(slots), 0);
  for (const auto& e : g.edges) {
    ++rep.checked;
    ++seen[static_cast<std::size_t>(e.lower * slots + e.color)];
    ++seen[static_cast<std::size_t>(e.upper * slots + e.color)];
  }
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    for (int c = 0; c < slots; ++c) {
      const int s = seen[v * static_cast<std::size_t>(slots) + static_cast<std::size_t>(c)];
      if (s != 1) {
        rep.fail(g.vertices[v].to_string() + " sees colour " + std::to_string(c) + " " + std::to_string(s) + " times");
      }
    }
  }
  return rep;
}

FactorizationReport one_factorization(const ReducedGraph& g) {
  FactorizationReport rep;
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (int c = 0; c <= g.k; ++c) {
      ++rep.checked;
      const int u = g.neighbor(v, c);
      if (u < 0 || u >= g.vertex_count()) {
        rep.fail("slot " + std::to_string(c) + " empty at " + g.delta[static_cast<std::size_t>(v)].to_string());
      } else if (g.neighbor(u, c) != v) {
        rep.fail("slot " + std::to_string(c) + " not symmetric at " + g.delta[static_cast<std::size_t>(v)].to_string());
      } else {
        const auto& e = g.edges[static_cast<std::size_t>(g.slot_edge[static_cast<std::size_t>(v * (g.k + 1) + c)])];
        if (e.color != c) rep.fail("slot edge carries the wrong colour");
      }
    }
  }
  return rep;
}

FactorizationReport covering_consistency(const MiddleLevelsGraph& mk, const QuotientGraph& q,
                                         const ReducedGraph& rk) {
  FactorizationReport rep;
  std::vector<int> fibre(q.edges.size(), 0);
  for (int v = 0; v < mk.lower_count(); ++v) {
    const BinaryWord& lo = mk.vertices[static_cast<std::size_t>(v)];
    for (int c = 0; c <= mk.k; ++c) {
      ++rep.checked;
      const BinaryWord& hi = mk.vertices[static_cast<std::size_t>(mk.neighbor(v, c))];
      const int p = mk.n - 1 - std::countr_zero(lo.packed() ^ hi.packed());
      const int id = project_edge(q, lo, p);
      const auto& e = q.edges[static_cast<std::size_t>(id)];
      ++fibre[static_cast<std::size_t>(id)];
      if (e.color != c) rep.fail("quotient colour differs on " + lo.to_string() + "-" + hi.to_string());
      if (q.vertex_id(necklace_of(hi)) != e.upper) rep.fail("upper class differs on " + lo.to_string());
      const int rv = e.upper - q.lower_count;
      if (rk.neighbor(e.lower, c) != rv) rep.fail("R_k neighbour differs on " + lo.to_string());
    }
  }
  for (std::size_t i = 0; i < fibre.size(); ++i) {
    if (fibre[i] != mk.n) rep.fail("quotient edge " + std::to_string(i) + " has fibre " + std::to_string(fibre[i]));
  }
  return rep;
}

std::vector<std::vector<std::pair<int, int>>> color_classes(const MiddleLevelsGraph& g) {
  std::vector<std::vector<std::pair<int, int>>> out(static_cast<std::size_t>(g.k + 1));
  for (int v = 0; v < g.lower_count(); ++v)
    for (int c = 0; c <= g.k; ++c) out[static_cast<std::size_t>(c)].emplace_back(v, g.neighbor(v, c));
  return out;
}

AdjacencyTable adjacency_table(const ReducedGraph& g) {
  AdjacencyTable t;
  t.k = g.k;
  t.headers = g.delta;
  for (int c = g.k; c >= 0; --c) {
    std::vector<AdjacencyCell> row;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const BinaryWord w = word_of(g.delta[static_cast<std::size_t>(v)]);
      const auto& sym = g.delta[static_cast<std::size_t>(v)].symbols();
      const int p = static_cast<int>(std::find(sym.begin(), sym.end(), c) - sym.begin());
      row.push_back(AdjacencyCell{adjacency_entry(w, p), g.neighbor(v, c) + 1});
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::string AdjacencyTable::id_matrix_csv() const {
  std::ostringstream os;
  for (int c = k; c >= 0; --c) os << 'c' << c << (c > 0 ? "," : "\n");
  for (std::size_t v = 0; v < headers.size(); ++v) {
    for (std::size_t r = 0; r < rows.size(); ++r) os << rows[r][v].neighbor << (r + 1 < rows.size() ? "," : "\n");
  }
  return os.str();
}

std::string AdjacencyTable::to_text() const {
  std::ostringstream os;
  const int width = 2 * k + 1 + 2 + 4;
  auto pad = [&](std::string s) {
    if (static_cast<int>(s.size()) < width) s.append(static_cast<std::size_t>(width) - s.size(), ' ');
    return s;
  };
  os << pad("colour");
  for (std::size_t v = 0; v < headers.size(); ++v) os << pad(headers[v].to_string() + " #" + std::to_string(v + 1));
  os << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << pad(std::to_string(k - static_cast<int>(r)));
    for (const auto& cell : rows[r]) os << pad(cell.label.to_string() + " #" + std::to_string(cell.neighbor));
    os << '\n';
  }
  return os.str();
}

}  // namespace midlevel
