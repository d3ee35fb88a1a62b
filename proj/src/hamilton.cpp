#include "midlevel/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <future>
#include <set>
#include <sstream>

#include "midlevel/error.hpp"

namespace midlevel {

bool RkPath::covers(const ReducedGraph& g) const {
  if (static_cast<int>(vertices.size()) != g.vertex_count()) return false;
  std::vector<char> seen(vertices.size(), 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.vertex_count() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

bool is_valid_path(const ReducedGraph& g, const RkPath& p, std::string* why) {
  auto bad = [&](std::string s) {
    if (why) *why = std::move(s);
    return false;
  };
  if (p.vertices.empty()) return bad("empty path");
  if (p.colors.size() + 1 != p.vertices.size()) return bad("colour count does not match vertex count");
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const int v = p.vertices[i];
    if (v < 0 || v >= g.vertex_count()) return bad("vertex id out of range at " + std::to_string(i));
    if (seen[static_cast<std::size_t>(v)]) return bad("vertex repeated at " + std::to_string(i));
    seen[static_cast<std::size_t>(v)] = 1;
    if (i + 1 < p.vertices.size()) {
      const int c = p.colors[i];
      if (c < 0 || c > g.k || g.neighbor(v, c) != p.vertices[i + 1] || g.neighbor(v, c) == v) {
        return bad("no edge of colour " + std::to_string(c) + " at step " + std::to_string(i));
      }
    }
  }
  if (p.start_loop && (*p.start_loop < 0 || *p.start_loop > g.k || !g.is_loop(p.vertices.front(), *p.start_loop)))
    return bad("start loop colour is not a loop");
  if (p.end_loop && (*p.end_loop < 0 || *p.end_loop > g.k || !g.is_loop(p.vertices.back(), *p.end_loop)))
    return bad("end loop colour is not a loop");
  return true;
}

ColorWord encode_colors(const ReducedGraph& g, const RkPath& p) {
  std::string why;
  if (!is_valid_path(g, p, &why)) throw InvalidInput("cannot encode invalid path: " + why);
  ColorWord cw;
  cw.start = p.vertices.front();
  if (p.start_loop) cw.colors.push_back(*p.start_loop);
  cw.colors.insert(cw.colors.end(), p.colors.begin(), p.colors.end());
  if (p.end_loop) cw.colors.push_back(*p.end_loop);
  return cw;
}

DecodeOutcome decode_colors(const ReducedGraph& g, const ColorWord& cw) {
  DecodeOutcome out;
  if (cw.start < 0 || cw.start >= g.vertex_count()) {
    out.failed_step = 0;
    out.reason = "start vertex out of range";
    return out;
  }
  RkPath p;
  p.vertices.push_back(cw.start);
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  seen[static_cast<std::size_t>(cw.start)] = 1;
  const int m = static_cast<int>(cw.colors.size());
  auto fail = [&](int i, std::string why) {
    out.failed_step = i;
    out.reason = std::move(why);
    out.walked = p.vertices;
    return out;
  };
  for (int i = 0; i < m; ++i) {
    const int c = cw.colors[static_cast<std::size_t>(i)];
    if (c < 0 || c > g.k) return fail(i, "colour " + std::to_string(c) + " outside 0.." + std::to_string(g.k));
    const int cur = p.vertices.back();
    const int nb = g.neighbor(cur, c);
    if (nb == cur) {
      if (i == 0 && !p.start_loop) {
        p.start_loop = c;
      } else if (i == m - 1) {
        p.end_loop = c;
      } else {
        return fail(i, "loop of colour " + std::to_string(c) + " inside the walk");
      }
      continue;
    }
    if (p.end_loop) return fail(i, "walk continues after a terminal loop");
    if (seen[static_cast<std::size_t>(nb)]) return fail(i, "vertex " + std::to_string(nb + 1) + " revisited");
    seen[static_cast<std::size_t>(nb)] = 1;
    p.vertices.push_back(nb);
    p.colors.push_back(c);
  }
  out.walked = p.vertices;
  out.path = std::move(p);
  return out;
}

DecodeOutcome decode_cycle(const ReducedGraph& g, int start, const std::vector<int>& colors) {
  DecodeOutcome out;
  RkPath p;
  p.vertices.push_back(start);
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  seen[static_cast<std::size_t>(start)] = 1;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    const int c = colors[i];
    const int cur = p.vertices.back();
    auto fail = [&](std::string why) {
      out.failed_step = static_cast<int>(i);
      out.reason = std::move(why);
      out.walked = p.vertices;
      return out;
    };
    if (c < 0 || c > g.k) return fail("colour out of range");
    const int nb = g.neighbor(cur, c);
    if (nb == cur) return fail("loop inside a cycle");
    if (i + 1 == colors.size()) {
      if (nb != start) return fail("walk does not return to its start");
      p.colors.push_back(c);
      break;
    }
    if (seen[static_cast<std::size_t>(nb)]) return fail("vertex " + std::to_string(nb + 1) + " revisited");
    seen[static_cast<std::size_t>(nb)] = 1;
    p.vertices.push_back(nb);
    p.colors.push_back(c);
  }
  out.walked = p.vertices;
  out.path = std::move(p);
  return out;
}

std::vector<int> parse_color_symbols(const std::string& text) {
  std::vector<int> out;
  for (char ch : text) {
    if (ch >= '0' && ch <= '9') out.push_back(ch - '0');
    else if (ch >= 'a' && ch <= 'z') out.push_back(ch - 'a' + 10);
    else if (ch == ' ' || ch == ',' || ch == ';' || ch == '\n' || ch == '\t' || ch == '(' || ch == ')') continue;
    else throw InvalidInput(std::string("unexpected symbol '") + ch + "'");
  }
  return out;
}

const char* strategy_name(HatStrategy s) {
  switch (s) {
    case HatStrategy::kColor: return "hat is the edge colour";
    case HatStrategy::kCoordinate: return "hat is a coordinate of the current colourful representative";
    case HatStrategy::kFramedCoordinate: return "hat is a coordinate of a running word carried through aleph";
  }
  return "";
}

const char* strategy_letter(HatStrategy s) {
  switch (s) {
    case HatStrategy::kColor: return "A";
    case HatStrategy::kCoordinate: return "B";
    case HatStrategy::kFramedCoordinate: return "C";
  }
  return "";
}

namespace {

// Converts hats into the colours they select, stopping at the first hat that
// names a one-coordinate. Returns the index of that hat or -1.
int hats_to_colors(const ReducedGraph& g, const std::vector<int>& hats, HatStrategy strategy, int start,
                   std::vector<int>& colors) {
  colors.clear();
  if (strategy == HatStrategy::kColor) {
    colors = hats;
    return -1;
  }
  const int n = 2 * g.k + 1;
  int cur = start;
  BinaryWord w = word_of(g.delta[static_cast<std::size_t>(start)]);
  for (std::size_t i = 0; i < hats.size(); ++i) {
    const int h = hats[i];
    if (h < 0 || h >= n) return static_cast<int>(i);
    if (strategy == HatStrategy::kCoordinate) w = word_of(g.delta[static_cast<std::size_t>(cur)]);
    if (w.bit(h)) return static_cast<int>(i);
    const int c = lower_edge_color(w, h);
    colors.push_back(c);
    w = aleph(w.flipped(h));
    cur = g.neighbor(cur, c);
  }
  return -1;
}

DecodeOutcome decode_under(const ReducedGraph& g, const std::vector<int>& hats, HatStrategy strategy, int start) {
  std::vector<int> colors;
  const int bad = hats_to_colors(g, hats, strategy, start, colors);
  DecodeOutcome out = decode_colors(g, ColorWord{start, colors});
  if (bad >= 0 && out.path) {
    out.path.reset();
    out.failed_step = bad;
    out.reason = "hat " + std::to_string(hats[static_cast<std::size_t>(bad)]) + " names a one-coordinate";
  }
  return out;
}

}  // namespace

HatDiagnostic decode_hats(const ReducedGraph& g, const std::vector<int>& hats, HatStrategy strategy, int start) {
  HatDiagnostic d;
  d.strategy = strategy;
  d.outcome = decode_under(g, hats, strategy, start);
  std::ostringstream os;
  os << strategy_letter(strategy) << ": ";
  if (d.outcome.path) {
    const auto& p = *d.outcome.path;
    d.end_vertex = p.vertices.back();
    d.hamilton = p.covers(g) && !p.start_loop && !p.end_loop;
    std::vector<int> framed{0};
    framed.insert(framed.end(), hats.begin(), hats.end());
    framed.push_back(0);
    auto with_loops = decode_under(g, framed, strategy, start);
    d.terminal_loops = with_loops.path && with_loops.path->start_loop && with_loops.path->end_loop;
    os << "walk of " << p.vertices.size() << "/" << g.vertex_count() << " vertices from "
       << g.delta[static_cast<std::size_t>(start)].to_string() << " to "
       << g.delta[static_cast<std::size_t>(d.end_vertex)].to_string();
    os << (d.hamilton ? ", Hamilton path" : ", not Hamilton");
    os << (d.terminal_loops ? ", hat 0 is a loop at both ends" : ", hat 0 is not a loop at both ends");
  } else {
    os << "fails at hat " << d.outcome.failed_step + 1 << " (" << d.outcome.reason << ") after "
       << d.outcome.walked.size() << " vertices";
  }
  d.summary = os.str();
  return d;
}

std::vector<HatDiagnostic> decode_hats_all(const ReducedGraph& g, const std::vector<int>& hats, int start) {
  return {decode_hats(g, hats, HatStrategy::kColor, start), decode_hats(g, hats, HatStrategy::kCoordinate, start),
          decode_hats(g, hats, HatStrategy::kFramedCoordinate, start)};
}

int phi0_vertex(const ReducedGraph& g) {
  (void)g;
  return 0;
}

int phi1_vertex(const ReducedGraph& g) { return g.vertex_count() - 1; }

const char* status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound: return "found";
    case SearchStatus::kExhausted: return "exhausted";
    case SearchStatus::kBudget: return "budget exhausted";
  }
  return "";
}

namespace {

class PathSearch {
 public:
  PathSearch(const ReducedGraph& g, const SearchOptions& opt) : g_(g), opt_(opt) {
    const int V = g.vertex_count();
    slots_.resize(static_cast<std::size_t>(V));
    distinct_.resize(static_cast<std::size_t>(V));
    for (int v = 0; v < V; ++v) {
      for (int c = 0; c <= g.k; ++c) {
        const int u = g.neighbor(v, c);
        if (u == v) continue;
        slots_[static_cast<std::size_t>(v)].emplace_back(u, c);
        auto& d = distinct_[static_cast<std::size_t>(v)];
        if (std::find(d.begin(), d.end(), u) == d.end()) d.push_back(u);
      }
    }
    began_ = std::chrono::steady_clock::now();
  }

  // Runs from the given prefix (at least the start vertex).
  SearchResult run(const std::vector<int>& prefix, const std::vector<int>& prefix_colors,
                   const std::function<bool(const RkPath&)>& visit) {
    SearchResult res;
    const int V = g_.vertex_count();
    if (opt_.require_terminal_loops && g_.loop_colors(prefix.front()).empty()) return res;
    if (opt_.end >= 0 && opt_.require_terminal_loops && g_.loop_colors(opt_.end).empty()) return res;
    visited_.assign(static_cast<std::size_t>(V), 0);
    avail_.assign(static_cast<std::size_t>(V), 0);
    for (int v = 0; v < V; ++v) avail_[static_cast<std::size_t>(v)] = static_cast<int>(distinct_[static_cast<std::size_t>(v)].size());
    zeros_ = ones_ = 0;
    for (int v = 0; v < V; ++v) count(v, +1);
    path_.clear();
    colors_.clear();
    enter(prefix.front());
    for (std::size_t i = 1; i < prefix.size(); ++i) {
      step(prefix[i]);
      colors_.push_back(prefix_colors[i - 1]);
    }
    if (!viable()) return finish(res);

    std::vector<std::size_t> next_slot{0};
    next_slot.resize(path_.size(), 0);
    const std::size_t floor = path_.size();
    while (!stop_) {
      if (static_cast<int>(path_.size()) == V) {
        if (accept()) {
          RkPath p = current_path();
          res.status = SearchStatus::kFound;
          res.path = p;
          if (!visit(p)) break;
        }
        if (!backtrack(next_slot, floor)) break;
        continue;
      }
      const int cur = path_.back();
      auto& idx = next_slot.back();
      const auto& sl = slots_[static_cast<std::size_t>(cur)];
      bool advanced = false;
      while (idx < sl.size()) {
        auto [u, c] = sl[idx++];
        if (visited_[static_cast<std::size_t>(u)]) continue;
        if (opt_.end >= 0 && u == opt_.end && static_cast<int>(path_.size()) + 1 < V) continue;
        if (++nodes_ % 1024 == 0 && over_budget()) {
          stop_ = true;
          budget_hit_ = true;
          break;
        }
        if (opt_.node_budget > 0 && nodes_ > opt_.node_budget) {
          stop_ = true;
          budget_hit_ = true;
          break;
        }
        step(u);
        colors_.push_back(c);
        if (viable()) {
          next_slot.push_back(0);
          advanced = true;
          break;
        }
        colors_.pop_back();
        unstep();
      }
      if (stop_) break;
      if (!advanced && !backtrack(next_slot, floor)) break;
    }
    return finish(res);
  }

 private:
  SearchResult finish(SearchResult& res) {
    res.nodes = nodes_;
    if (res.status != SearchStatus::kFound) res.status = budget_hit_ ? SearchStatus::kBudget : SearchStatus::kExhausted;
    else if (budget_hit_ && !res.path) res.status = SearchStatus::kBudget;
    return res;
  }

  bool over_budget() const {
    if (opt_.seconds_budget <= 0) return false;
    std::chrono::duration<double> el = std::chrono::steady_clock::now() - began_;
    return el.count() > opt_.seconds_budget;
  }

  // Pops one level; false once the search returns below the fixed prefix.
  bool backtrack(std::vector<std::size_t>& next_slot, std::size_t floor) {
    if (path_.size() <= floor) return false;
    next_slot.pop_back();
    colors_.pop_back();
    unstep();
    return true;
  }

  void count(int v, int sign) {
    const int a = avail_[static_cast<std::size_t>(v)];
    if (a == 0) zeros_ += sign;
    if (a == 1) ones_ += sign;
  }

  void enter(int v) {
    count(v, -1);
    visited_[static_cast<std::size_t>(v)] = 1;
    path_.push_back(v);
  }

  // Moves the head of the path to unvisited vertex x.
  void step(int x) {
    const int c = path_.back();
    enter(x);
    for (int u : distinct_[static_cast<std::size_t>(c)]) {
      const bool open = !visited_[static_cast<std::size_t>(u)];
      if (open) count(u, -1);
      --avail_[static_cast<std::size_t>(u)];
      if (open) count(u, +1);
    }
  }

  void unstep() {
    const int x = path_.back();
    const int c = path_[path_.size() - 2];
    for (int u : distinct_[static_cast<std::size_t>(c)]) {
      const bool open = !visited_[static_cast<std::size_t>(u)];
      if (open) count(u, -1);
      ++avail_[static_cast<std::size_t>(u)];
      if (open) count(u, +1);
    }
    path_.pop_back();
    visited_[static_cast<std::size_t>(x)] = 0;
    count(x, +1);
  }

  // Necessary conditions for the remaining vertices to admit a Hamilton
  // completion from the head of the path.
  bool viable() {
    const int V = g_.vertex_count();
    const int remaining = V - static_cast<int>(path_.size());
    if (remaining == 0) return true;
    if (zeros_ > 0) return false;
    if (opt_.end >= 0) {
      if (visited_[static_cast<std::size_t>(opt_.end)]) return false;
      const int end_ones = avail_[static_cast<std::size_t>(opt_.end)] == 1 ? 1 : 0;
      if (ones_ > end_ones) return false;
    } else if (ones_ > 1) {
      return false;
    }
    if (!opt_.connectivity_pruning) return true;
    bfs_mark_.assign(static_cast<std::size_t>(V), 0);
    queue_.clear();
    queue_.push_back(path_.back());
    bfs_mark_[static_cast<std::size_t>(path_.back())] = 1;
    int reached = 0;
    for (std::size_t h = 0; h < queue_.size(); ++h) {
      for (int u : distinct_[static_cast<std::size_t>(queue_[h])]) {
        if (visited_[static_cast<std::size_t>(u)] || bfs_mark_[static_cast<std::size_t>(u)]) continue;
        bfs_mark_[static_cast<std::size_t>(u)] = 1;
        ++reached;
        queue_.push_back(u);
      }
    }
    return reached == remaining;
  }

  bool accept() const {
    const int last = path_.back();
    if (opt_.end >= 0 && last != opt_.end) return false;
    if (opt_.require_terminal_loops && g_.loop_colors(last).empty()) return false;
    return true;
  }

  RkPath current_path() const {
    RkPath p;
    p.vertices = path_;
    p.colors = colors_;
    auto ls = g_.loop_colors(path_.front());
    auto le = g_.loop_colors(path_.back());
    if (!ls.empty()) p.start_loop = ls.front();
    if (!le.empty()) p.end_loop = le.front();
    return p;
  }

  const ReducedGraph& g_;
  SearchOptions opt_;
  std::vector<std::vector<std::pair<int, int>>> slots_;
  std::vector<std::vector<int>> distinct_;
  std::vector<char> visited_;
  std::vector<int> avail_;
  int zeros_ = 0, ones_ = 0;
  std::vector<int> path_, colors_;
  std::vector<char> bfs_mark_;
  std::vector<int> queue_;
  long long nodes_ = 0;
  bool stop_ = false;
  bool budget_hit_ = false;
  std::chrono::steady_clock::time_point began_;
};

void check_search_options(const ReducedGraph& g, const SearchOptions& opt) {
  if (opt.start < 0 || opt.start >= g.vertex_count()) throw InvalidInput("start vertex out of range");
  if (opt.end >= g.vertex_count()) throw InvalidInput("end vertex out of range");
  if (opt.end >= 0 && opt.end == opt.start && g.vertex_count() > 1) throw InvalidInput("start and end coincide");
}

}  // namespace

SearchResult enumerate_hamilton_paths(const ReducedGraph& g, const SearchOptions& opt,
                                      const std::function<bool(const RkPath&)>& visit) {
  check_search_options(g, opt);
  PathSearch s(g, opt);
  return s.run({opt.start}, {}, visit);
}

SearchResult find_hamilton_path(const ReducedGraph& g, const SearchOptions& opt) {
  check_search_options(g, opt);
  auto first_only = [](const RkPath&) { return false; };
  if (opt.jobs <= 1 || g.vertex_count() <= 2) {
    PathSearch s(g, opt);
    return s.run({opt.start}, {}, first_only);
  }
  // One task per first step; the earliest branch in colour order wins.
  std::vector<std::pair<int, int>> branches;
  for (int c = 0; c <= g.k; ++c) {
    const int u = g.neighbor(opt.start, c);
    if (u == opt.start) continue;
    if (opt.end >= 0 && u == opt.end && g.vertex_count() > 2) continue;
    branches.emplace_back(u, c);
  }
  std::vector<SearchResult> results(branches.size());
  std::size_t launched = 0;
  const std::size_t width = static_cast<std::size_t>(opt.jobs);
  std::size_t done = 0;
  std::vector<std::future<SearchResult>> running;
  while (done < branches.size()) {
    while (launched < branches.size() && launched - done < width) {
      auto b = branches[launched++];
      running.push_back(std::async(std::launch::async, [&g, opt, b, first_only] {
        PathSearch s(g, opt);
        return s.run({opt.start, b.first}, {b.second}, first_only);
      }));
    }
    results[done] = running[done].get();
    ++done;
  }
  SearchResult out;
  for (auto& r : results) {
    out.nodes += r.nodes;
    if (out.status == SearchStatus::kBudget || out.path) continue;
    if (r.status == SearchStatus::kFound) {
      out.status = SearchStatus::kFound;
      out.path = r.path;
    } else if (r.status == SearchStatus::kBudget) {
      out.status = SearchStatus::kBudget;
    }
  }
  return out;
}

QuotientCycle lift_to_quotient(const QuotientGraph& q, const ReducedGraph& g, const RkPath& p) {
  std::string why;
  if (!is_valid_path(g, p, &why)) throw InvalidInput("cannot lift invalid path: " + why);
  if (!p.start_loop || !p.end_loop) throw InvalidInput("lifting needs a loop at each end of the path");
  std::vector<int> seq = p.colors;
  seq.push_back(*p.end_loop);
  seq.insert(seq.end(), p.colors.rbegin(), p.colors.rend());
  seq.push_back(*p.start_loop);

  QuotientCycle z;
  const int C = q.lower_count;
  int v = p.vertices.front();
  int side = 0;
  for (int c : seq) {
    z.vertices.push_back(side == 0 ? v : C + v);
    const int u = g.neighbor(v, c);
    const int lower = side == 0 ? v : u;
    z.edges.push_back(q.edge_id(lower, c));
    z.colors.push_back(c);
    v = u;
    side = 1 - side;
  }
  if (v != p.vertices.front() || side != 0) throw InvalidInput("doubled walk does not close");  // cannot happen
  return z;
}

bool is_hamilton_quotient_cycle(const QuotientGraph& q, const QuotientCycle& z, std::string* why) {
  auto bad = [&](std::string s) {
    if (why) *why = std::move(s);
    return false;
  };
  const std::size_t len = z.vertices.size();
  if (len != q.vertices.size()) return bad("length " + std::to_string(len) + " differs from the class count");
  if (z.edges.size() != len) return bad("edge count differs from vertex count");
  std::vector<char> seen(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    const int v = z.vertices[i];
    if (v < 0 || v >= static_cast<int>(len) || seen[static_cast<std::size_t>(v)]) return bad("class repeated");
    seen[static_cast<std::size_t>(v)] = 1;
    const auto& e = q.edges.at(static_cast<std::size_t>(z.edges[i]));
    const int a = v, b = z.vertices[(i + 1) % len];
    const bool joins = (e.lower == a && e.upper == b) || (e.lower == b && e.upper == a);
    if (!joins) return bad("edge " + std::to_string(i) + " does not join consecutive classes");
  }
  return true;
}

MkLift lift_to_mk(const MiddleLevelsGraph& mk, const QuotientGraph& q, const QuotientCycle& z) {
  MkLift out;
  if (z.vertices.empty()) {
    out.reason = "empty quotient cycle";
    return out;
  }
  const BinaryWord start_word = delta_representative(q.vertices.at(static_cast<std::size_t>(z.vertices.front())));
  const int start = mk.index_of(start_word);
  std::vector<char> seen(static_cast<std::size_t>(mk.vertex_count()), 0);
  int w = start;
  for (int pass = 0; pass < mk.n; ++pass) {
    for (int c : z.colors) {
      if (seen[static_cast<std::size_t>(w)]) {
        out.closed_length = static_cast<long long>(out.cycle.size());
        out.passes = pass;
        out.reason = "walk repeats " + mk.vertices[static_cast<std::size_t>(w)].to_string() + " after " +
                     std::to_string(out.cycle.size()) + " vertices";
        return out;
      }
      seen[static_cast<std::size_t>(w)] = 1;
      out.cycle.push_back(w);
      w = mk.neighbor(w, c);
    }
    out.passes = pass + 1;
    if (pass == 0) {
      for (int t = 0; t < mk.n; ++t) {
        if (rotate(start_word, t) == mk.vertices[static_cast<std::size_t>(w)]) {
          out.translation = t;
          break;
        }
      }
    }
    if (w == start) break;
  }
  out.closed_length = static_cast<long long>(out.cycle.size());
  if (w != start) {
    out.reason = "walk did not close";
    return out;
  }
  if (out.closed_length != mk.vertex_count()) {
    out.reason = "walk closed early with " + std::to_string(out.closed_length) + " of " +
                 std::to_string(mk.vertex_count()) + " vertices";
    return out;
  }
  out.success = true;
  return out;
}

std::vector<LiftAttempt> lift_path_all_loops(const MiddleLevelsGraph& mk, const QuotientGraph& q,
                                             const ReducedGraph& g, RkPath p, bool stop_at_first) {
  std::vector<LiftAttempt> out;
  for (int a : g.loop_colors(p.vertices.front())) {
    for (int b : g.loop_colors(p.vertices.back())) {
      p.start_loop = a;
      p.end_loop = b;
      LiftAttempt at{a, b, lift_to_mk(mk, q, lift_to_quotient(q, g, p))};
      const bool ok = at.lift.success;
      out.push_back(std::move(at));
      if (ok && stop_at_first) return out;
    }
  }
  return out;
}

VerifyReport verify_hamilton(const MiddleLevelsGraph& g, const std::vector<int>& cycle) {
  VerifyReport r;
  const std::size_t len = cycle.size();
  std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
  for (std::size_t i = 0; i < len; ++i) {
    const int v = cycle[i];
    if (v < 0 || v >= g.vertex_count()) {
      r.violation = "entry " + std::to_string(i) + " is not a vertex";
      return r;
    }
    if (seen[static_cast<std::size_t>(v)]) {
      r.violation = "repeat: " + g.vertices[static_cast<std::size_t>(v)].to_string() + " at position " + std::to_string(i);
      return r;
    }
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (std::size_t i = 0; i < len; ++i) {
    const auto& a = g.vertices[static_cast<std::size_t>(cycle[i])];
    const auto& b = g.vertices[static_cast<std::size_t>(cycle[(i + 1) % len])];
    if (!g.adjacent(a, b)) {
      r.violation = "non-edge: " + a.to_string() + " - " + b.to_string() + " at position " + std::to_string(i);
      return r;
    }
  }
  if (static_cast<int>(len) != g.vertex_count()) {
    r.violation = "coverage gap: " + std::to_string(len) + " of " + std::to_string(g.vertex_count()) + " vertices";
    return r;
  }
  r.ok = true;
  return r;
}

VerifyReport verify_hamilton(const MiddleLevelsGraph& g, const std::vector<BinaryWord>& cycle) {
  std::vector<int> ids;
  ids.reserve(cycle.size());
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const int id = g.index_of(cycle[i]);
    if (id < 0) {
      VerifyReport r;
      r.violation = "entry " + std::to_string(i) + " (" + cycle[i].to_string() + ") is not a vertex";
      return r;
    }
    ids.push_back(id);
  }
  return verify_hamilton(g, ids);
}

std::vector<BinaryWord> cycle_words(const MiddleLevelsGraph& g, const std::vector<int>& cycle) {
  std::vector<BinaryWord> out;
  out.reserve(cycle.size());
  for (int v : cycle) out.push_back(g.vertices.at(static_cast<std::size_t>(v)));
  return out;
}

std::size_t least_rotation_start(const std::vector<int>& s) {
  // Booth's failure-function scan over the doubled sequence.
  const std::size_t n = s.size();
  if (n == 0) return 0;
  std::vector<long long> f(2 * n, -1);
  std::size_t k = 0;
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const int sj = s[j % n];
    long long i = f[j - k - 1];
    while (i != -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (i == -1 && sj != s[(k + static_cast<std::size_t>(i) + 1) % n]) {
      if (sj < s[(k + static_cast<std::size_t>(i) + 1) % n]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return k % n;
}

std::string cycle_signature(const MiddleLevelsGraph& g, const std::vector<int>& cycle) {
  const std::size_t len = cycle.size();
  std::vector<int> fwd(len), bwd(len);
  for (std::size_t i = 0; i < len; ++i) {
    fwd[i] = mk_edge_color(g.vertices[static_cast<std::size_t>(cycle[i])],
                           g.vertices[static_cast<std::size_t>(cycle[(i + 1) % len])]);
  }
  for (std::size_t i = 0; i < len; ++i) bwd[i] = fwd[len - 1 - i];
  auto render = [&](const std::vector<int>& s) {
    const std::size_t st = least_rotation_start(s);
    std::string out;
    out.reserve(len);
    for (std::size_t i = 0; i < len; ++i) out += color_char(s[(st + i) % len]);
    return out;
  };
  return std::min(render(fwd), render(bwd));
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

const std::string& k6_hat_cycle() {
  static const std::string s =
      "5346410301615303202314304323602520101042531"
      "53020101340341064340504012652536031501040520"
      "412340615016560510502320616135342030636304521";
  return s;
}

const std::vector<int>& k6_listed_removals() {
  static const std::vector<int> v{1,   28,  41,  42,  43,  44,  45,  60,  62,  100, 101, 107,
                                  108, 96,  104, 105, 114, 122, 127, 128, 129, 130, 131, 132};
  return v;
}

namespace {

struct RemovalLift {
  int edge = 0;
  RkPath path;
  std::vector<LiftAttempt> attempts;
};

RkPath path_without_edge(const RkPath& cyc, int e) {
  // cyc.vertices[i] precedes edge i+1; removing edge e starts the path at vertex e.
  const int len = static_cast<int>(cyc.vertices.size());
  RkPath p;
  for (int i = 0; i < len; ++i) p.vertices.push_back(cyc.vertices[static_cast<std::size_t>((e + i) % len)]);
  for (int i = 0; i < len - 1; ++i) p.colors.push_back(cyc.colors[static_cast<std::size_t>((e + i) % len)]);
  return p;
}

}  // namespace

std::vector<RkPath> posa_rotations(const ReducedGraph& g, const RkPath& p) {
  std::vector<RkPath> out;
  const int m = static_cast<int>(p.vertices.size()) - 1;
  if (m < 2) return out;
  std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
  for (int i = 0; i <= m; ++i) pos[static_cast<std::size_t>(p.vertices[static_cast<std::size_t>(i)])] = i;
  auto at_end = [&](const RkPath& path, bool flip) {
    for (int c = 0; c <= g.k; ++c) {
      const int last = path.vertices.back();
      const int u = g.neighbor(last, c);
      if (u == last) continue;
      int i = pos[static_cast<std::size_t>(u)];
      if (i < 0) continue;
      if (flip) i = m - i;
      if (i >= m - 1) continue;
      RkPath r;
      r.vertices.assign(path.vertices.begin(), path.vertices.begin() + i + 1);
      r.colors.assign(path.colors.begin(), path.colors.begin() + i);
      r.vertices.insert(r.vertices.end(), path.vertices.rbegin(), path.vertices.rend() - i - 1);
      r.colors.push_back(c);
      r.colors.insert(r.colors.end(), path.colors.rbegin(), path.colors.rend() - i - 1);
      if (flip) {
        std::reverse(r.vertices.begin(), r.vertices.end());
        std::reverse(r.colors.begin(), r.colors.end());
      }
      out.push_back(std::move(r));
    }
  };
  at_end(p, false);
  RkPath rev;
  rev.vertices.assign(p.vertices.rbegin(), p.vertices.rend());
  rev.colors.assign(p.colors.rbegin(), p.colors.rend());
  at_end(rev, true);
  return out;
}

K6Catalog k6_catalog(const CatalogOptions& opt) {
  K6Catalog cat;
  const auto began = std::chrono::steady_clock::now();
  const MiddleLevelsGraph mk = build_mk(6);
  const QuotientGraph q = build_mk_pi(6);
  const ReducedGraph g = build_rk(6);

  const auto colors = parse_color_symbols(k6_hat_cycle());
  cat.hat_cycle_length = static_cast<int>(colors.size());
  const auto decoded = decode_cycle(g, phi1_vertex(g), colors);
  if (!decoded.path) {
    cat.notes.push_back("hat cycle does not decode: " + decoded.reason);
  }
  cat.hat_cycle_is_hamilton = decoded.path && decoded.path->covers(g);
  std::set<std::string> signatures;
  int next_entry = 1;
  auto add_entry = [&](CatalogEntry e) {
    if (!signatures.insert(e.signature).second) return false;
    e.entry = next_entry++;
    cat.entries.push_back(std::move(e));
    return true;
  };

  if (cat.hat_cycle_is_hamilton) {
    const RkPath& cyc = *decoded.path;
    const int len = static_cast<int>(cyc.vertices.size());
    std::vector<RemovalLift> lifts(static_cast<std::size_t>(len));
    auto work = [&](int e) {
      RemovalLift r;
      r.edge = e;
      r.path = path_without_edge(cyc, e);
      const bool looped = !g.loop_colors(r.path.vertices.front()).empty() && !g.loop_colors(r.path.vertices.back()).empty();
      if (looped) r.attempts = lift_path_all_loops(mk, q, g, r.path, false);
      return r;
    };
    const int jobs = std::max(1, opt.jobs);
    for (int base = 1; base <= len; base += jobs) {
      std::vector<std::future<RemovalLift>> fut;
      for (int e = base; e < base + jobs && e <= len; ++e) fut.push_back(std::async(std::launch::async, work, e));
      for (auto& f : fut) {
        RemovalLift r = f.get();
        lifts[static_cast<std::size_t>(r.edge - 1)] = std::move(r);
      }
    }
    for (auto& r : lifts) {
      if (r.attempts.empty()) continue;
      cat.doubly_terminal_edges.push_back(r.edge);
      for (auto& at : r.attempts) {
        ++cat.recipe_attempts;
        if (!at.lift.success) continue;
        ++cat.recipe_successes;
        if (static_cast<int>(cat.entries.size()) >= opt.target) continue;
        CatalogEntry e;
        e.source = "hat-removal";
        e.removed_edge = r.edge;
        e.start_loop = at.start_loop;
        e.end_loop = at.end_loop;
        e.provenance = "hat cycle without edge " + std::to_string(r.edge) + ", loops " + std::to_string(at.start_loop) +
                       "/" + std::to_string(at.end_loop);
        e.verified = verify_hamilton(mk, at.lift.cycle).ok;
        e.length = at.lift.closed_length;
        e.signature = cycle_signature(mk, at.lift.cycle);
        e.cycle = std::move(at.lift.cycle);
        RkPath p = r.path;
        p.start_loop = at.start_loop;
        p.end_loop = at.end_loop;
        e.path = encode_colors(g, p);
        if (!add_entry(std::move(e))) cat.notes.push_back("edge " + std::to_string(r.edge) + " repeats a signature");
      }
    }
    for (int e : k6_listed_removals()) {
      RemovalDiagnostic d;
      d.edge = e;
      const auto& r = lifts[static_cast<std::size_t>(e - 1)];
      d.loops_at_both_ends = !r.attempts.empty();
      d.combinations = static_cast<int>(r.attempts.size());
      for (const auto& at : r.attempts) {
        d.lifted += at.lift.success ? 1 : 0;
        if (!at.lift.success) {
          d.notes.push_back("loops " + std::to_string(at.start_loop) + "/" + std::to_string(at.end_loop) + ": " +
                            at.lift.reason);
        }
      }
      if (!d.loops_at_both_ends) d.notes.push_back("a terminal vertex has no loop");
      cat.listed.push_back(std::move(d));
    }
  }

  if (cat.hat_cycle_is_hamilton && static_cast<int>(cat.entries.size()) < opt.target) {
    // Rotation-closure of the removal paths: each rotation keeps the vertex
    // set, so every path reached is again Hamilton in R_6.
    std::vector<RkPath> frontier;
    for (const auto& en : cat.entries)
      if (en.source == "hat-removal") {
        RkPath p = path_without_edge(*decoded.path, en.removed_edge);
        p.start_loop.reset();
        p.end_loop.reset();
        frontier.push_back(std::move(p));
      }
    std::set<std::vector<int>> seen;
    for (const auto& p : frontier) seen.insert(p.vertices);
    std::size_t head = 0;
    int explored = 0;
    const std::size_t before = cat.entries.size();
    while (head < frontier.size() && static_cast<int>(cat.entries.size()) < opt.target &&
           explored < opt.rotation_budget) {
      const RkPath base = frontier[head++];
      for (RkPath& r : posa_rotations(g, base)) {
        if (!seen.insert(r.vertices).second) continue;
        ++explored;
        if (!g.loop_colors(r.vertices.front()).empty() && !g.loop_colors(r.vertices.back()).empty()) {
          for (auto& at : lift_path_all_loops(mk, q, g, r, false)) {
            if (!at.lift.success || static_cast<int>(cat.entries.size()) >= opt.target) continue;
            CatalogEntry e;
            e.signature = cycle_signature(mk, at.lift.cycle);
            if (signatures.count(e.signature)) continue;
            e.source = "search";
            e.start_loop = at.start_loop;
            e.end_loop = at.end_loop;
            e.provenance = "end rotation #" + std::to_string(explored) + " of the hat-removal paths, loops " +
                           std::to_string(at.start_loop) + "/" + std::to_string(at.end_loop);
            e.verified = verify_hamilton(mk, at.lift.cycle).ok;
            e.length = at.lift.closed_length;
            e.cycle = std::move(at.lift.cycle);
            RkPath pp = r;
            pp.start_loop = at.start_loop;
            pp.end_loop = at.end_loop;
            e.path = encode_colors(g, pp);
            add_entry(std::move(e));
          }
        }
        frontier.push_back(std::move(r));
      }
    }
    cat.notes.push_back("rotation closure examined " + std::to_string(explored) + " Hamilton paths and added " +
                        std::to_string(cat.entries.size() - before) + " cycles");
  }

  if (static_cast<int>(cat.entries.size()) < opt.target) {
    const int missing = opt.target - static_cast<int>(cat.entries.size());
    cat.notes.push_back("hat cycle supplies " + std::to_string(cat.entries.size()) + " cycles; searching for " +
                        std::to_string(missing) + " more");
    SearchOptions so;
    so.start = phi1_vertex(g);
    so.require_terminal_loops = true;
    so.node_budget = opt.search_node_budget;
    if (opt.seconds_budget > 0) {
      std::chrono::duration<double> el = std::chrono::steady_clock::now() - began;
      so.seconds_budget = std::max(1.0, opt.seconds_budget - el.count());
    }
    long long found_paths = 0;
    auto res = enumerate_hamilton_paths(g, so, [&](const RkPath& p) {
      ++found_paths;
      for (auto& at : lift_path_all_loops(mk, q, g, p, false)) {
        if (!at.lift.success) continue;
        CatalogEntry e;
        e.source = "search";
        e.start_loop = at.start_loop;
        e.end_loop = at.end_loop;
        e.provenance = "Hamilton path #" + std::to_string(found_paths) + " of the depth-first search from " +
                       g.delta[static_cast<std::size_t>(so.start)].to_string() + ", loops " +
                       std::to_string(at.start_loop) + "/" + std::to_string(at.end_loop);
        e.signature = cycle_signature(mk, at.lift.cycle);
        if (signatures.count(e.signature)) continue;
        e.verified = verify_hamilton(mk, at.lift.cycle).ok;
        e.length = at.lift.closed_length;
        e.cycle = std::move(at.lift.cycle);
        RkPath pp = p;
        pp.start_loop = at.start_loop;
        pp.end_loop = at.end_loop;
        e.path = encode_colors(g, pp);
        add_entry(std::move(e));
        if (static_cast<int>(cat.entries.size()) >= opt.target) return false;
      }
      return true;
    });
    cat.notes.push_back("search examined " + std::to_string(res.nodes) + " nodes and " + std::to_string(found_paths) +
                        " Hamilton paths (" + status_name(res.status) + ")");
  }
  cat.signatures_distinct = signatures.size() == cat.entries.size();
  return cat;
}

}  // namespace midlevel
