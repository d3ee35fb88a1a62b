#include "midlevel/cli.hpp"

#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "midlevel/error.hpp"
#include "midlevel/factorization.hpp"
#include "midlevel/hamilton.hpp"
#include "midlevel/io.hpp"
#include "midlevel/selftest.hpp"
#include "midlevel/tree.hpp"

namespace midlevel {

namespace {

// Thrown for a failed search or verification; mapped to kExitDomain.
struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  int k = 0;
  std::string target = "rk";
  std::string format;
  std::string notation = "delta";
  int depth = 4;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  long long budget_nodes = 0;
  double budget_seconds = 0.0;
  std::string out;
  std::string strategy = "all";
  std::string hats;
  std::string input;
  std::string colorword;
  int start = 0;  // 1-based, 0 = default
  int end = -1;   // 1-based, 0 = any, -1 = default
  bool no_loops = false;
  bool mutate = false;
};

void emit(const Config& cfg, std::ostream& out, const std::string& text) {
  if (cfg.out.empty()) out << text;
  else write_text_file(cfg.out, text);
}

int start_id(const Config& cfg, const ReducedGraph& g) {
  if (cfg.start == 0) return phi0_vertex(g);
  if (cfg.start < 1 || cfg.start > g.vertex_count()) throw InvalidInput("--start must lie in 1.." + std::to_string(g.vertex_count()));
  return cfg.start - 1;
}

std::string path_text(const ReducedGraph& g, const RkPath& p) {
  std::ostringstream os;
  if (p.start_loop) os << "(loop " << *p.start_loop << ") ";
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    os << g.delta[static_cast<std::size_t>(p.vertices[i])].to_string();
    if (i < p.colors.size()) os << " -" << p.colors[i] << "- ";
  }
  if (p.end_loop) os << " (loop " << *p.end_loop << ")";
  return os.str();
}

int cmd_build(const Config& cfg, std::ostream& out) {
  const std::string fmt = cfg.format.empty() ? "json" : cfg.format;
  if (fmt != "json" && fmt != "dot") throw InvalidInput("--format must be json or dot");
  std::string text;
  if (cfg.target == "mk") {
    auto g = build_mk(cfg.k);
    text = fmt == "json" ? to_json(g) : to_dot(g);
  } else if (cfg.target == "mkpi") {
    auto g = build_mk_pi(cfg.k);
    text = fmt == "json" ? to_json(g) : to_dot(g);
  } else if (cfg.target == "rk") {
    auto g = build_rk(cfg.k);
    text = fmt == "json" ? to_json(g) : to_dot(g);
  } else {
    throw InvalidInput("--target must be mk, mkpi or rk");
  }
  emit(cfg, out, text);
  return kExitOk;
}

int cmd_table(const Config& cfg, std::ostream& out) {
  if (cfg.k > 6) throw CapacityError("adjacency tables are produced for k <= 6");
  const auto t = adjacency_table(build_rk(cfg.k));
  const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
  std::string text;
  if (fmt == "csv") text = t.id_matrix_csv();
  else if (fmt == "text") text = t.to_text() + "\n" + t.id_matrix_csv();
  else throw InvalidInput("--format must be text or csv");
  emit(cfg, out, text);
  return kExitOk;
}

int cmd_tree(const Config& cfg, std::ostream& out) {
  TreeNotation n;
  if (cfg.notation == "delta") n = TreeNotation::kDelta;
  else if (cfg.notation == "pair") n = TreeNotation::kPair;
  else if (cfg.notation == "a") n = TreeNotation::kA;
  else if (cfg.notation == "b") n = TreeNotation::kB;
  else throw InvalidInput("--notation must be delta, pair, a or b");
  if (cfg.depth > 12) throw CapacityError("tree rendering is limited to depth 12");
  const std::string fmt = cfg.format.empty() ? "text" : cfg.format;
  std::string text;
  if (fmt == "text") text = render_tree(cfg.depth, n);
  else if (fmt == "dot") text = render_tree_dot(cfg.depth, n);
  else if (fmt == "json") text = tree_nodes_json(cfg.depth);
  else throw InvalidInput("--format must be text, dot or json");
  emit(cfg, out, text);
  return kExitOk;
}

int cmd_counts(const Config& cfg, std::ostream& out) {
  const int k = cfg.k;
  checked_graph_k(k);
  std::ostringstream os;
  const auto g = build_rk(k);
  int doubly = 0, singly = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto n = g.loop_colors(v).size();
    doubly += n == 2;
    singly += n == 1;
  }
  os << "k = " << k << "\n";
  os << "vertices of R_k: " << g.vertex_count() << "\n";
  os << "loops: " << g.loop_count() << " (doubly looped vertices: " << doubly << ", singly looped: " << singly << ")\n";
  os << "second symbols:";
  for (auto c : second_symbol_counts(k)) os << ' ' << c;
  os << "\nCatalan triangle:\n";
  const auto tri = catalan_triangle(k);
  for (std::size_t j = 0; j < tri.size(); ++j) {
    os << "  " << j << ":";
    for (auto v : tri[j]) os << ' ' << v;
    os << '\n';
  }
  os << "nodes per level 0.." << 2 * k << ":";
  for (auto c : level_counts(2 * k)) os << ' ' << c;
  os << '\n';
  if (k >= 2) {
    const auto s = s_sequences(k);
    for (std::size_t i = 0; i < s.size(); ++i) os << "S" << i + 1 << ": " << format_run_sequence(s[i]) << '\n';
  }
  emit(cfg, out, os.str());
  return kExitOk;
}

RkPath search_path(const Config& cfg, const ReducedGraph& g, std::ostream& out) {
  SearchOptions so;
  so.start = start_id(cfg, g);
  if (cfg.end == -1) so.end = g.vertex_count() > 1 ? phi1_vertex(g) : -1;
  else if (cfg.end == 0) so.end = -1;
  else so.end = cfg.end - 1;
  so.require_terminal_loops = !cfg.no_loops;
  so.node_budget = cfg.budget_nodes;
  so.seconds_budget = cfg.budget_seconds;
  so.jobs = cfg.jobs;
  auto res = find_hamilton_path(g, so);
  out << "search: " << status_name(res.status) << " after " << res.nodes << " nodes\n";
  if (!res.path) throw DomainFailure("no Hamilton path found");
  return *res.path;
}

int cmd_ham_search(const Config& cfg, std::ostream& out) {
  if (cfg.k > 6) throw CapacityError("Hamilton search is limited to k <= 6");
  const auto g = build_rk(cfg.k);
  RkPath p = search_path(cfg, g, out);
  out << "path: " << path_text(g, p) << "\n";
  const std::string cw = format_color_word(cfg.k, encode_colors(g, p));
  out << "colour word: " << cw;
  if (!cfg.out.empty()) write_text_file(cfg.out, cw);
  return kExitOk;
}

int cmd_ham_decode(const Config& cfg, std::ostream& out) {
  if (cfg.k > 6) throw CapacityError("hat decoding is limited to k <= 6");
  if (cfg.hats.empty()) throw InvalidInput("--hats is required");
  const auto g = build_rk(cfg.k);
  const auto hats = parse_color_symbols(cfg.hats);
  const int start = start_id(cfg, g);
  std::vector<HatDiagnostic> diags;
  if (cfg.strategy == "all") diags = decode_hats_all(g, hats, start);
  else if (cfg.strategy == "A") diags.push_back(decode_hats(g, hats, HatStrategy::kColor, start));
  else if (cfg.strategy == "B") diags.push_back(decode_hats(g, hats, HatStrategy::kCoordinate, start));
  else if (cfg.strategy == "C") diags.push_back(decode_hats(g, hats, HatStrategy::kFramedCoordinate, start));
  else throw InvalidInput("--strategy must be A, B, C or all");
  bool any = false;
  for (const auto& d : diags) {
    out << d.summary << "\n";
    any = any || d.hamilton;
  }
  out << (any ? "validated by: " : "no strategy validates");
  for (const auto& d : diags)
    if (d.hamilton) out << strategy_letter(d.strategy) << ' ';
  out << "\n";
  return any ? kExitOk : kExitDomain;
}

int cmd_ham_lift(const Config& cfg, std::ostream& out) {
  if (cfg.k > 6) throw CapacityError("lifting is limited to k <= 6");
  const auto g = build_rk(cfg.k);
  RkPath p;
  if (!cfg.colorword.empty()) {
    auto [k, cw] = parse_color_word(read_text_file(cfg.colorword));
    if (k != cfg.k) throw InvalidInput("colour word file is for k = " + std::to_string(k));
    auto d = decode_colors(g, cw);
    if (!d.path) throw DomainFailure("colour word fails at step " + std::to_string(d.failed_step + 1) + ": " + d.reason);
    p = *d.path;
  } else if (!cfg.hats.empty()) {
    auto d = decode_colors(g, ColorWord{start_id(cfg, g), parse_color_symbols(cfg.hats)});
    if (!d.path) throw DomainFailure("hat colours fail at step " + std::to_string(d.failed_step + 1) + ": " + d.reason);
    p = *d.path;
  } else {
    p = search_path(cfg, g, out);
  }
  if (!p.covers(g)) throw DomainFailure("path is not Hamilton in R_k");
  const auto q = build_mk_pi(cfg.k);
  const auto mk = build_mk(cfg.k);
  std::vector<LiftAttempt> attempts;
  if (p.start_loop && p.end_loop) {
    attempts.push_back(LiftAttempt{*p.start_loop, *p.end_loop, lift_to_mk(mk, q, lift_to_quotient(q, g, p))});
  } else {
    attempts = lift_path_all_loops(mk, q, g, p, true);
  }
  if (attempts.empty()) throw DomainFailure("a terminal vertex of the path has no loop");
  for (const auto& at : attempts) {
    out << "loops " << at.start_loop << "/" << at.end_loop << ": "
        << (at.lift.success ? "Hamilton cycle of length " + std::to_string(at.lift.closed_length) : at.lift.reason)
        << "\n";
  }
  const auto& last = attempts.back();
  if (!last.lift.success) throw DomainFailure("no loop choice lifts to a Hamilton cycle");
  const auto report = verify_hamilton(mk, last.lift.cycle);
  out << "verified: " << (report.ok ? "yes" : "no (" + report.violation + ")") << "\n";
  out << "translation per pass: x^" << last.lift.translation << ", passes: " << last.lift.passes << "\n";
  if (!cfg.out.empty()) write_text_file(cfg.out, format_cycle(cycle_words(mk, last.lift.cycle)));
  return report.ok ? kExitOk : kExitDomain;
}

int cmd_ham_verify(const Config& cfg, std::ostream& out) {
  if (cfg.input.empty()) throw InvalidInput("--in is required");
  const auto mk = build_mk(cfg.k);
  const auto cycle = parse_cycle(read_text_file(cfg.input));
  const auto r = verify_hamilton(mk, cycle);
  out << (r.ok ? "Hamilton cycle of M_" + std::to_string(cfg.k) + " with " + std::to_string(cycle.size()) + " vertices"
               : "not a Hamilton cycle: " + r.violation)
      << "\n";
  return r.ok ? kExitOk : kExitDomain;
}

int cmd_ham_catalog(const Config& cfg, std::ostream& out) {
  if (cfg.k != 6) throw InvalidInput("the catalog is defined for k = 6");
  CatalogOptions opt;
  opt.jobs = cfg.jobs;
  opt.seconds_budget = cfg.budget_seconds;
  if (cfg.budget_nodes > 0) opt.search_node_budget = cfg.budget_nodes;
  const auto cat = k6_catalog(opt);
  const std::string manifest = catalog_manifest(cat);
  int verified = 0;
  for (const auto& e : cat.entries) verified += e.verified && e.length == 3432;
  if (cfg.out.empty()) {
    out << manifest;
  } else {
    write_text_file(cfg.out, manifest);
    out << "entries: " << cat.entries.size() << ", verified: " << verified
        << ", distinct signatures: " << (cat.signatures_distinct ? "yes" : "no") << "\n";
  }
  return verified >= opt.target && cat.signatures_distinct ? kExitOk : kExitDomain;
}

int cmd_selftest(const Config& cfg, std::ostream& out) {
  const auto results = run_selftest(cfg.mutate ? DiagonalRule::kStrictlyBelow : DiagonalRule::kOnOrBelow);
  int failed = 0;
  for (const auto& r : results) {
    out << (r.pass ? "PASS " : "FAIL ") << r.group << ": " << r.name;
    if (!r.pass) out << " (" << r.detail << ")";
    out << "\n";
    failed += !r.pass;
  }
  out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " passed\n";
  return failed == 0 ? kExitOk : kExitDomain;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Middle-levels graph quotients, lexical colouring and Hamilton cycle tools", "midlevel"};
  app.require_subcommand(1);
  Config cfg;

  auto add_k = [&](CLI::App* sub, bool required) {
    auto* o = sub->add_option("--k", cfg.k, "level parameter, n = 2k+1");
    if (required) o->required();
  };
  auto add_out = [&](CLI::App* sub) { sub->add_option("--out", cfg.out, "write the result to this file"); };
  auto add_budgets = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", cfg.budget_nodes, "search node budget (0 = unlimited)")->check(CLI::NonNegativeNumber);
    sub->add_option("--budget-seconds", cfg.budget_seconds, "search time budget (0 = unlimited)")->check(CLI::NonNegativeNumber);
    sub->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* build = app.add_subcommand("build", "emit M_k, M_k/pi or R_k as JSON or DOT");
  add_k(build, true);
  build->add_option("--target", cfg.target, "mk, mkpi or rk");
  build->add_option("--format", cfg.format, "json or dot");
  add_out(build);

  auto* table = app.add_subcommand("table", "adjacency table of R_k and its id-matrix");
  add_k(table, true);
  table->add_option("--format", cfg.format, "text or csv");
  add_out(table);

  auto* tree = app.add_subcommand("tree", "levels of the lexical tree");
  tree->add_option("--depth", cfg.depth, "deepest level shown")->check(CLI::NonNegativeNumber);
  tree->add_option("--notation", cfg.notation, "delta, pair, a or b");
  tree->add_option("--format", cfg.format, "text, dot or json");
  add_out(tree);

  auto* counts = app.add_subcommand("counts", "vertex, loop, level and S-sequence counts for R_k");
  add_k(counts, true);
  add_out(counts);

  auto* ham = app.add_subcommand("ham", "Hamilton path search, decoding, lifting and verification");
  ham->require_subcommand(1);
  auto* search = ham->add_subcommand("search", "find a Hamilton path in R_k");
  add_k(search, true);
  search->add_option("--start", cfg.start, "1-based start vertex (default: first in presentation order)");
  search->add_option("--end", cfg.end, "1-based end vertex, 0 for any (default: last in presentation order)");
  search->add_flag("--no-loops", cfg.no_loops, "do not require loops at the terminal vertices");
  add_budgets(search);
  add_out(search);

  auto* decode = ham->add_subcommand("decode", "decode a hat sequence under each interpretation");
  add_k(decode, true);
  decode->add_option("--hats", cfg.hats, "hat symbols")->required();
  decode->add_option("--start", cfg.start, "1-based start vertex");
  decode->add_option("--strategy", cfg.strategy, "A, B, C or all");

  auto* lift = ham->add_subcommand("lift", "lift a Hamilton path of R_k to a Hamilton cycle of M_k");
  add_k(lift, true);
  lift->add_option("--colorword", cfg.colorword, "colour word file \"k start colours\"");
  lift->add_option("--hats", cfg.hats, "colours of the path, terminal loops included");
  lift->add_option("--start", cfg.start, "1-based start vertex");
  lift->add_option("--end", cfg.end, "1-based end vertex for the search");
  add_budgets(lift);
  add_out(lift);

  auto* verify = ham->add_subcommand("verify", "check a cycle file against M_k");
  add_k(verify, true);
  verify->add_option("--in", cfg.input, "cycle file, one bit string per line")->required();

  auto* catalog = ham->add_subcommand("catalog", "Hamilton cycles of M_6 with distinct colour signatures");
  add_k(catalog, true);
  add_budgets(catalog);
  add_out(catalog);

  auto* selftest = app.add_subcommand("selftest", "run the built-in golden checks");
  selftest->add_flag("--mutate-diagonal", cfg.mutate, "count only steps strictly below the diagonal");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*build) return cmd_build(cfg, out);
    if (*table) return cmd_table(cfg, out);
    if (*tree) return cmd_tree(cfg, out);
    if (*counts) return cmd_counts(cfg, out);
    if (*selftest) return cmd_selftest(cfg, out);
    if (*search) return cmd_ham_search(cfg, out);
    if (*decode) return cmd_ham_decode(cfg, out);
    if (*lift) return cmd_ham_lift(cfg, out);
    if (*verify) return cmd_ham_verify(cfg, out);
    if (*catalog) return cmd_ham_catalog(cfg, out);
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainFailure& e) {
    err << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace midlevel
