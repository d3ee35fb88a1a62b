#include "midlevel/selftest.hpp"

#include <functional>
#include <set>

#include "midlevel/factorization.hpp"
#include "midlevel/hamilton.hpp"
#include "midlevel/tree.hpp"

namespace midlevel {

namespace {

BinaryWord W(const char* s) { return BinaryWord::parse(s); }

template <class T>
std::string show(const T& v) {
  if constexpr (std::is_same_v<T, std::string>) {
    return v;
  } else {
    return std::to_string(v);
  }
}

}  // namespace

std::vector<SelfTestResult> run_selftest(DiagonalRule rule) {
  std::vector<SelfTestResult> out;
  auto check = [&](const std::string& group, const std::string& name, const std::function<std::string()>& body) {
    SelfTestResult r{group, name, false, {}};
    try {
      r.detail = body();
      r.pass = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(r));
  };
  auto expect = [](auto got, auto want) -> std::string {
    if (got == want) return {};
    return "got " + show(got) + ", expected " + show(want);
  };

  check("words", "rotation and class listings", [&] {
    if (rotate(W("00011"), 1) != W("10001")) return std::string("rotate(00011,1)");
    std::set<std::string> m;
    for (const auto& w : members(necklace_of(W("00101")))) m.insert(w.to_string());
    return expect(m == std::set<std::string>{"00101", "10010", "01001", "10100", "01010"}, true);
  });
  check("words", "aleph images of the two k=2 classes", [&] {
    if (aleph_pi(necklace_of(W("00011"))).rep() != W("00111")) return std::string("(00011)");
    return expect(aleph_pi(necklace_of(W("00101"))).rep().to_string(), std::string("01011"));
  });

  const std::vector<std::pair<const char*, int>> colour_goldens{{"00011", 2}, {"00110", 1}, {"01100", 0},
                                                                 {"00101", 2}, {"01010", 0}, {"01001", 1}};
  for (const auto& [w, c] : colour_goldens) {
    check("lexical colour", std::string(w) + " -> " + std::to_string(c),
          [&, w = w, c = c] { return expect(lexical_color(W(w), rule), c); });
  }
  const std::vector<std::pair<const char*, int>> upper_goldens{{"00111", 2}, {"10011", 1}, {"11001", 0}};
  for (const auto& [w, c] : upper_goldens) {
    check("lexical colour", std::string("upper ") + w + " -> " + std::to_string(c),
          [&, w = w, c = c] { return expect(lexical_color_upper(W(w)), c); });
  }
  check("colourful notation", "k=2 classes", [&] {
    auto a = delta(necklace_of(W("00011"))).to_string();
    auto b = delta(necklace_of(W("00101"))).to_string();
    return expect(a + " " + b, std::string("210** 20*1*"));
  });
  check("colourful notation", "R_3 headers", [&] {
    std::string s;
    for (const auto& d : build_rk(3).delta) s += d.to_string() + " ";
    return expect(s, std::string("30*1*2* 31*20** 320*1** 310**2* 3210*** "));
  });
  check("adjacency table", "R_3 id-matrix", [&] {
    return expect(adjacency_table(build_rk(3)).id_matrix_csv(),
                  std::string("c3,c2,c1,c0\n1,3,4,1\n4,2,2,3\n3,1,5,2\n2,5,1,4\n5,4,3,5\n"));
  });
  check("quotient", "R_2 and R_3 loops", [&] {
    auto r2 = build_rk(2), r3 = build_rk(3);
    std::string got = std::to_string(r2.loop_count()) + " " + std::to_string(r3.loop_count());
    for (int v = 0; v < 5; ++v)
      if (r3.loop_colors(v).size() == 2) got += " " + std::to_string(v + 1);
    return expect(got, std::string("4 8 1 2 5"));
  });
  check("tree", "children and sequence notations", [&] {
    std::string got = left_child(tree_root()).to_string() + " " + right_child(DeltaString::parse("30*1*2*"))->to_string() +
                      " " + phi({0, 0, 1, 2}).to_string() + " " + sequence_string(phi_inverse(DeltaString::parse("41*20**3*")));
    return expect(got, std::string("20*1* 31*20** 420**31** 0011"));
  });
  check("tree", "S-sequences for k=4", [&] {
    std::string got;
    for (const auto& s : s_sequences(4)) got += format_run_sequence(s) + " | ";
    return expect(got, std::string("4, 3, 2; 3, 2; | 9, 5; | 14; | "));
  });
  check("tree", "Catalan triangle row 5", [&] {
    return expect(catalan_triangle(5)[5] == std::vector<long long>{1, 5, 14, 28, 42, 42}, true);
  });
  check("hamilton", "hat sequence 1301 on R_3", [&] {
    auto g = build_rk(3);
    auto d = decode_hats(g, {1, 3, 0, 1}, HatStrategy::kColor, phi0_vertex(g));
    return expect(d.hamilton && d.terminal_loops && d.end_vertex == phi1_vertex(g), true);
  });
  check("hamilton", "k=2 lift reproduces the 20-cycle", [&] {
    auto g = build_rk(2);
    auto q = build_mk_pi(2);
    auto mk = build_mk(2);
    RkPath p{{0, 1}, {1}, 2, 0};
    auto lift = lift_to_mk(mk, q, lift_to_quotient(q, g, p));
    if (!lift.success) return lift.reason;
    auto words = cycle_words(mk, lift.cycle);
    std::string head;
    for (int i = 0; i < 5; ++i) head += words[static_cast<std::size_t>(i)].to_string() + " ";
    return expect(head, std::string("00101 00111 00011 01011 01010 "));
  });
  check("hamilton", "k=3 lift has 70 vertices", [&] {
    auto g = build_rk(3);
    auto q = build_mk_pi(3);
    auto mk = build_mk(3);
    auto d = decode_hats(g, {0, 1, 3, 0, 1, 0}, HatStrategy::kColor, phi0_vertex(g));
    auto lift = lift_to_mk(mk, q, lift_to_quotient(q, g, *d.outcome.path));
    return expect(lift.success && verify_hamilton(mk, lift.cycle).ok && lift.cycle.size() == 70, true);
  });
  return out;
}

}  // namespace midlevel
