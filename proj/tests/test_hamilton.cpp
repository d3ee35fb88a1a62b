#include <numeric>
#include <random>

#include "doctest.h"
#include "midlevel/hamilton.hpp"
#include "midlevel/io.hpp"
#include "oracles.hpp"

using namespace midlevel;

namespace {

std::vector<std::string> words_of(const MiddleLevelsGraph& mk, const std::vector<int>& cycle) {
  std::vector<std::string> out;
  for (const auto& w : cycle_words(mk, cycle)) out.push_back(w.to_string());
  return out;
}

struct K2 {
  ReducedGraph g = build_rk(2);
  QuotientGraph q = build_mk_pi(2);
  MiddleLevelsGraph mk = build_mk(2);
};

}  // namespace

TEST_CASE("k=2 lift reproduces the 20-cycle") {
  K2 s;
  RkPath p{{0, 1}, {1}, 2, 0};
  REQUIRE(is_valid_path(s.g, p));
  auto z = lift_to_quotient(s.q, s.g, p);
  CHECK(z.vertices.size() == 4);
  CHECK(is_hamilton_quotient_cycle(s.q, z));
  auto lift = lift_to_mk(s.mk, s.q, z);
  REQUIRE(lift.success);
  const std::vector<std::string> want{"00101", "00111", "00011", "01011", "01010", "01110", "00110",
                                      "10110", "10100", "11100", "01100", "01101", "01001", "11001",
                                      "11000", "11010", "10010", "10011", "10001", "10101"};
  CHECK(words_of(s.mk, lift.cycle) == want);
  CHECK(verify_hamilton(s.mk, lift.cycle).ok);
  CHECK(lift.passes == 5);
}

TEST_CASE("search finds the k=2 and k=3 paths with looped ends") {
  for (int k = 2; k <= 3; ++k) {
    auto g = build_rk(k);
    SearchOptions o;
    o.start = phi0_vertex(g);
    o.end = phi1_vertex(g);
    auto r = find_hamilton_path(g, o);
    REQUIRE(r.path);
    CHECK(r.status == SearchStatus::kFound);
    CHECK(r.path->covers(g));
    CHECK(r.path->start_loop.has_value());
    CHECK(r.path->end_loop.has_value());
    auto mk = build_mk(k);
    auto q = build_mk_pi(k);
    auto attempts = lift_path_all_loops(mk, q, g, *r.path, true);
    REQUIRE_FALSE(attempts.empty());
    CHECK(attempts.back().lift.success);
    CHECK(static_cast<long long>(attempts.back().lift.cycle.size()) == 2 * oracle::binom(2 * k + 1, k));
  }
}

TEST_CASE("parallel search agrees with the serial search") {
  auto g = build_rk(4);
  SearchOptions o;
  o.start = phi0_vertex(g);
  o.end = phi1_vertex(g);
  auto serial = find_hamilton_path(g, o);
  o.jobs = 4;
  auto par = find_hamilton_path(g, o);
  REQUIRE(serial.path);
  REQUIRE(par.path);
  CHECK(*serial.path == *par.path);
}

TEST_CASE("budgets stop the search") {
  auto g = build_rk(6);
  SearchOptions o;
  o.start = phi1_vertex(g);
  o.node_budget = 1000;
  o.end = phi0_vertex(g);
  auto r = find_hamilton_path(g, o);
  if (!r.path) CHECK(r.status == SearchStatus::kBudget);
  CHECK(r.nodes <= 1001);
}

TEST_CASE("hat sequences") {
  auto g3 = build_rk(3);
  auto d = decode_hats(g3, {1, 3, 0, 1}, HatStrategy::kColor, phi0_vertex(g3));
  CHECK(d.hamilton);
  CHECK(d.terminal_loops);
  CHECK(d.end_vertex == phi1_vertex(g3));
  auto g4 = build_rk(4);
  auto d4 = decode_hats(g4, parse_color_symbols("1241201234032"), HatStrategy::kColor, phi0_vertex(g4));
  CHECK(d4.hamilton);
  CHECK(decode_hats_all(g4, parse_color_symbols("1241201234032"), phi0_vertex(g4)).size() == 3);
}

TEST_CASE("colour words round trip on random walks in R_5") {
  auto g = build_rk(5);
  std::mt19937 rng(12345);
  int produced = 0;
  while (produced < 1000) {
    RkPath p;
    p.vertices.push_back(static_cast<int>(rng() % static_cast<unsigned>(g.vertex_count())));
    std::set<int> used{p.vertices[0]};
    const int len = 1 + static_cast<int>(rng() % 30);
    for (int s = 0; s < len; ++s) {
      std::vector<int> options;
      for (int c = 0; c <= g.k; ++c) {
        const int u = g.neighbor(p.vertices.back(), c);
        if (!used.count(u)) options.push_back(c);
      }
      if (options.empty()) break;
      const int c = options[rng() % options.size()];
      p.colors.push_back(c);
      p.vertices.push_back(g.neighbor(p.vertices.back(), c));
      used.insert(p.vertices.back());
    }
    auto sl = g.loop_colors(p.vertices.front());
    if (!sl.empty() && rng() % 2) p.start_loop = sl[0];
    auto el = g.loop_colors(p.vertices.back());
    if (!el.empty() && rng() % 2 && p.vertices.size() > 1) p.end_loop = el.back();
    REQUIRE(is_valid_path(g, p));
    auto cw = encode_colors(g, p);
    auto back = decode_colors(g, cw);
    REQUIRE(back.path);
    CHECK(*back.path == p);
    auto [k, parsed] = parse_color_word(format_color_word(5, cw));
    CHECK(k == 5);
    CHECK(parsed == cw);
    ++produced;
  }
}

TEST_CASE("decoding rejects revisits and interior loops") {
  auto g = build_rk(3);
  auto bad = decode_colors(g, ColorWord{0, {1, 1}});
  CHECK_FALSE(bad.path);
  CHECK(bad.failed_step == 1);
  auto loop_inside = decode_colors(g, ColorWord{1, {3, 0, 1}});
  CHECK_FALSE(loop_inside.path);
}

TEST_CASE("verifier rejects constructed negatives") {
  auto mk = build_mk(3);
  auto q = build_mk_pi(3);
  auto g = build_rk(3);
  auto d = decode_hats(g, {1, 3, 0, 1}, HatStrategy::kColor, phi0_vertex(g));
  RkPath p = *d.outcome.path;
  p.start_loop = 0;
  p.end_loop = 0;
  auto lift = lift_to_mk(mk, q, lift_to_quotient(q, g, p));
  REQUIRE(lift.success);
  auto words = cycle_words(mk, lift.cycle);
  REQUIRE(verify_hamilton(mk, words).ok);

  SUBCASE("two swapped vertices") {
    auto w = words;
    std::swap(w[3], w[10]);
    CHECK_FALSE(verify_hamilton(mk, w).ok);
  }
  SUBCASE("a non-edge") {
    auto w = words;
    w[5] = w[5].flipped(0).flipped(1);  // same level, off the cycle's edges
    CHECK_FALSE(verify_hamilton(mk, w).ok);
  }
  SUBCASE("a short cycle that misses vertices") {
    std::vector<BinaryWord> cyc{BinaryWord::parse("0000111"), BinaryWord::parse("0001111"),
                                BinaryWord::parse("0001011"), BinaryWord::parse("0011011"),
                                BinaryWord::parse("0010011"), BinaryWord::parse("0010111")};
    REQUIRE(mk.adjacent(cyc.back(), cyc.front()));
    auto r = verify_hamilton(mk, cyc);
    CHECK_FALSE(r.ok);
    CHECK_FALSE(r.violation.empty());
  }
}

TEST_CASE("translation structure of produced cycles") {
  for (int k = 2; k <= 4; ++k) {
    auto g = build_rk(k);
    auto mk = build_mk(k);
    auto q = build_mk_pi(k);
    SearchOptions o;
    o.start = phi0_vertex(g);
    o.end = phi1_vertex(g);
    auto r = find_hamilton_path(g, o);
    REQUIRE(r.path);
    auto at = lift_path_all_loops(mk, q, g, *r.path, true);
    REQUIRE(at.back().lift.success);
    const auto& lift = at.back().lift;
    const int n = 2 * k + 1;
    const int C = g.vertex_count();
    CHECK(std::gcd(lift.translation, n) == 1);
    auto w = cycle_words(mk, lift.cycle);
    for (std::size_t i = 0; i + 2 * C < w.size(); ++i) CHECK(w[i + 2 * C] == rotate(w[i], lift.translation));
  }
}

TEST_CASE("signatures") {
  auto g = build_rk(3);
  auto mk = build_mk(3);
  auto q = build_mk_pi(3);
  auto d = decode_hats(g, {1, 3, 0, 1}, HatStrategy::kColor, phi0_vertex(g));
  RkPath p = *d.outcome.path;
  p.start_loop = 0;
  p.end_loop = 0;
  auto cyc = lift_to_mk(mk, q, lift_to_quotient(q, g, p)).cycle;
  const auto sig = cycle_signature(mk, cyc);
  std::string colours;
  for (std::size_t i = 0; i < cyc.size(); ++i) {
    const auto& a = mk.vertices[static_cast<std::size_t>(cyc[i])];
    const auto& b = mk.vertices[static_cast<std::size_t>(cyc[(i + 1) % cyc.size()])];
    colours += static_cast<char>('0' + mk_edge_color(a, b));
  }
  CHECK(sig == oracle::brute_signature(colours));
  auto rotated = cyc;
  std::rotate(rotated.begin(), rotated.begin() + 17, rotated.end());
  CHECK(cycle_signature(mk, rotated) == sig);
  std::reverse(rotated.begin(), rotated.end());
  CHECK(cycle_signature(mk, rotated) == sig);
  CHECK(least_rotation_start({2, 1, 0, 1, 0, 2}) == 2);
}

TEST_CASE("the two k=5 hat sequences give distinct cycles") {
  auto g = build_rk(5);
  auto mk = build_mk(5);
  auto q = build_mk_pi(5);
  std::set<std::string> sigs;
  for (const char* h : {"15152031515052323425153545251501313531353", "40403524040503232130402010304054242024202"}) {
    auto d = decode_hats(g, parse_color_symbols(h), HatStrategy::kColor, phi0_vertex(g));
    REQUIRE(d.hamilton);
    RkPath p = *d.outcome.path;
    auto at = lift_path_all_loops(mk, q, g, p, true);
    REQUIRE(at.back().lift.success);
    CHECK(verify_hamilton(mk, at.back().lift.cycle).ok);
    sigs.insert(cycle_signature(mk, at.back().lift.cycle));
  }
  CHECK(sigs.size() == 2);
}

TEST_CASE("end rotations keep Hamilton paths") {
  auto g = build_rk(4);
  SearchOptions o;
  o.start = phi0_vertex(g);
  auto r = find_hamilton_path(g, o);
  REQUIRE(r.path);
  RkPath p = *r.path;
  p.start_loop.reset();
  p.end_loop.reset();
  auto rot = posa_rotations(g, p);
  CHECK_FALSE(rot.empty());
  for (const auto& x : rot) {
    CHECK(is_valid_path(g, x));
    CHECK(x.covers(g));
  }
}

TEST_CASE("cycle and colour-word files") {
  auto cyc = std::vector<BinaryWord>{BinaryWord::parse("00101"), BinaryWord::parse("00111")};
  CHECK(format_cycle(cyc) == "00101\n00111\n");
  CHECK(parse_cycle("00101\n00111\n") == cyc);
  CHECK(format_color_word(3, ColorWord{0, {0, 1, 3, 0, 1, 0}}) == "3 1 013010\n");
  CHECK_THROWS(parse_color_word("3 x 01"));
}
