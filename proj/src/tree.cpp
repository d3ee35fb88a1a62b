#include "midlevel/tree.hpp"

#include <deque>
#include <sstream>

#include "midlevel/error.hpp"

namespace midlevel {

namespace {

constexpr int kMaxTreeK = 12;
constexpr int kMaxTreeLevel = 24;

void require_node_shape(const DeltaString& d) {
  if (d.size() < 3 || d.size() % 2 == 0) throw InvalidInput("colour string must have odd length >= 3");
  if (d[0] != d.k()) throw InvalidInput("node name must start with its k: " + d.to_string());
}

// Index of the first occurrence of `symbol` at or after `from`, or -1.
int find_symbol(const DeltaString& d, int symbol, int from) {
  for (int i = from; i < d.size(); ++i)
    if (d[i] == symbol) return i;
  return -1;
}

void append_aseqs(int k, ASeq& prefix, std::vector<ASeq>& out) {
  if (static_cast<int>(prefix.size()) == k) {
    out.push_back(prefix);
    return;
  }
  const int i = static_cast<int>(prefix.size());
  for (int v = prefix.back(); v <= i; ++v) {
    prefix.push_back(v);
    append_aseqs(k, prefix, out);
    prefix.pop_back();
  }
}

std::vector<ASeq> all_aseqs(int k) {
  std::vector<ASeq> out;
  ASeq prefix{0};
  append_aseqs(k, prefix, out);
  return out;
}

std::optional<ASeq> phi_inverse_rec(const DeltaString& d) {
  const int n = d.size();
  const int k = d.k();
  if (k == 1) {
    if (d == tree_root()) return ASeq{0};
    return std::nullopt;
  }
  // Left child (k)|X|(k-1)|* of (k-1)|X.
  if (d[n - 1] == DeltaString::kStar && d[n - 2] == k - 1) {
    std::vector<int> parent{k - 1};
    for (int i = 1; i < n - 2; ++i) parent.push_back(d[i]);
    DeltaString p(parent);
    if (p.size() >= 3 && left_child(p) == d) {
      if (auto a = phi_inverse_rec(p)) {
        a->push_back(a->back());
        return a;
      }
    }
  }
  // Right child k|Y|X|* of k|X|Y|*, with Y starting at j+1 and X at j.
  if (d[n - 1] == DeltaString::kStar && d[1] != DeltaString::kStar && d[1] >= 1) {
    int q = find_symbol(d, d[1] - 1, 2);
    if (q > 1 && q < n - 1) {
      std::vector<int> parent{k};
      for (int i = q; i < n - 1; ++i) parent.push_back(d[i]);
      for (int i = 1; i < q; ++i) parent.push_back(d[i]);
      parent.push_back(DeltaString::kStar);
      DeltaString p(parent);
      auto rc = right_child(p);
      if (rc && *rc == d) {
        if (auto a = phi_inverse_rec(p)) {
          a->back() += 1;
          return a;
        }
      }
    }
  }
  return std::nullopt;
}

void check_k(int k, int lo, int hi) {
  if (k < lo) throw InvalidInput("k must be at least " + std::to_string(lo));
  if (k > hi) throw CapacityError("k = " + std::to_string(k) + " exceeds the bound " + std::to_string(hi));
}

}  // namespace

DeltaString tree_root() { return DeltaString({1, 0, DeltaString::kStar}); }

DeltaString left_child(const DeltaString& d) {
  require_node_shape(d);
  const int k = d.k();
  std::vector<int> s{k + 1};
  for (int i = 1; i < d.size(); ++i) s.push_back(d[i]);
  s.push_back(k);
  s.push_back(DeltaString::kStar);
  return DeltaString(std::move(s));
}

std::optional<DeltaString> right_child(const DeltaString& d) {
  require_node_shape(d);
  const int n = d.size();
  const int k = d.k();
  const int j = d[1];
  if (j == DeltaString::kStar || j >= k - 1) return std::nullopt;
  if (d[n - 1] != DeltaString::kStar) throw InvalidInput("node name must end with a star: " + d.to_string());
  const int y = find_symbol(d, j + 1, 2);
  if (y < 0 || y >= n - 1) throw InvalidInput("symbol " + std::to_string(j + 1) + " missing in " + d.to_string());
  std::vector<int> s{k};
  for (int i = y; i < n - 1; ++i) s.push_back(d[i]);
  for (int i = 1; i < y; ++i) s.push_back(d[i]);
  s.push_back(DeltaString::kStar);
  return DeltaString(std::move(s));
}

bool is_valid_aseq(const ASeq& a) {
  if (a.empty() || a[0] != 0) return false;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] < a[i - 1] || a[i] > static_cast<int>(i)) return false;
  }
  return true;
}

bool is_valid_bseq(const BSeq& b) {
  int sum = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (b[i] < 0) return false;
    sum += b[i];
    if (sum > static_cast<int>(i) + 1) return false;
  }
  return true;
}

AChildren children_aseq(const ASeq& a) {
  if (!is_valid_aseq(a)) throw InvalidInput("invalid sequence " + sequence_string(a));
  AChildren out;
  out.left = a;
  out.left.push_back(a.back());
  const int k = static_cast<int>(a.size());
  if (a.back() < k - 1) {
    ASeq r = a;
    r.back() += 1;
    out.right = std::move(r);
  }
  return out;
}

DeltaString phi(const ASeq& a) {
  if (!is_valid_aseq(a)) throw InvalidInput("invalid sequence " + sequence_string(a));
  DeltaString d = tree_root();
  for (std::size_t i = 1; i < a.size(); ++i) {
    d = left_child(d);
    for (int r = 0; r < a[i] - a[i - 1]; ++r) {
      auto next = right_child(d);
      if (!next) throw InvalidInput("right step unavailable along " + sequence_string(a));
      d = *next;
    }
  }
  return d;
}

ASeq phi_inverse(const DeltaString& d) {
  require_node_shape(d);
  auto a = phi_inverse_rec(d);
  if (!a) throw InvalidInput(d.to_string() + " is not a node of the tree");
  return *a;
}

BSeq psi(const ASeq& a) {
  if (!is_valid_aseq(a)) throw InvalidInput("invalid sequence " + sequence_string(a));
  BSeq b;
  for (std::size_t i = 1; i < a.size(); ++i) b.push_back(a[i] - a[i - 1]);
  return b;
}

ASeq psi_inverse(const BSeq& b) {
  if (!is_valid_bseq(b)) throw InvalidInput("invalid difference sequence " + sequence_string(b));
  ASeq a{0};
  for (int v : b) a.push_back(a.back() + v);
  return a;
}

int tree_level(const ASeq& a) {
  if (!is_valid_aseq(a)) throw InvalidInput("invalid sequence " + sequence_string(a));
  return static_cast<int>(a.size()) - 1 + a.back();
}

std::vector<TreeNode> rk_nodes_in_order(int k) {
  check_k(k, 1, kMaxTreeK);
  std::vector<TreeNode> out;
  for (auto& a : all_aseqs(k)) {
    TreeNode node{phi(a), a, psi(a)};
    out.push_back(std::move(node));
  }
  return out;
}

std::vector<std::pair<BinaryWord, BinaryWord>> mk_vertex_listing(int k) {
  check_k(k, 1, 8);
  std::vector<std::pair<BinaryWord, BinaryWord>> out;
  for (const auto& node : rk_nodes_in_order(k)) {
    const BinaryWord rep = word_of(node.delta);
    for (int i = 0; i < rep.size(); ++i) {
      BinaryWord w = rotate(rep, i);
      out.emplace_back(w, aleph(w));
    }
  }
  return out;
}

CatalanTriangle catalan_triangle(int j_max) {
  if (j_max < 0) throw InvalidInput("row index must be non-negative");
  if (j_max > 30) throw CapacityError("triangle rows beyond 30 overflow the entry type");
  CatalanTriangle t;
  for (int j = 0; j <= j_max; ++j) {
    std::vector<long long> row(static_cast<std::size_t>(j + 1), 1);
    for (int i = 1; i < j; ++i) {
      row[static_cast<std::size_t>(i)] = t[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(i)] +
                                         row[static_cast<std::size_t>(i - 1)];
    }
    if (j >= 1) row[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)];
    t.push_back(std::move(row));
  }
  return t;
}

std::vector<long long> level_counts(int depth) {
  if (depth < 0) throw InvalidInput("depth must be non-negative");
  if (depth > kMaxTreeLevel) throw CapacityError("depth exceeds " + std::to_string(kMaxTreeLevel));
  std::vector<long long> counts(static_cast<std::size_t>(depth + 1), 0);
  std::vector<ASeq> stack{ASeq{0}};
  while (!stack.empty()) {
    ASeq a = std::move(stack.back());
    stack.pop_back();
    const int lvl = tree_level(a);
    ++counts[static_cast<std::size_t>(lvl)];
    if (lvl == depth) continue;
    auto ch = children_aseq(a);
    stack.push_back(std::move(ch.left));
    if (ch.right) stack.push_back(std::move(*ch.right));
  }
  return counts;
}

std::vector<long long> second_symbol_counts(int k) {
  std::vector<long long> counts(static_cast<std::size_t>(k), 0);
  for (const auto& node : rk_nodes_in_order(k)) ++counts.at(static_cast<std::size_t>(node.delta[1]));
  return counts;
}

std::vector<std::vector<TreeNode>> tk_components(int k) {
  check_k(k, 1, kMaxTreeK);
  std::vector<std::vector<TreeNode>> out;
  for (auto& a : all_aseqs(k)) {
    // A chain starts at every node whose parent lies outside R_k.
    bool starts = k == 1 || a[static_cast<std::size_t>(k - 1)] == a[static_cast<std::size_t>(k - 2)];
    if (!starts) continue;
    std::vector<TreeNode> chain;
    std::optional<ASeq> cur = a;
    while (cur) {
      chain.push_back(TreeNode{phi(*cur), *cur, psi(*cur)});
      cur = children_aseq(*cur).right;
    }
    out.push_back(std::move(chain));
  }
  return out;
}

std::vector<std::vector<long long>> s_sequences(int k) {
  check_k(k, 2, kMaxTreeK);
  std::vector<std::vector<long long>> seqs;
  std::vector<long long> s1;
  for (const auto& c : tk_components(k)) s1.push_back(static_cast<long long>(c.size()));
  seqs.push_back(std::move(s1));
  while (static_cast<int>(seqs.size()) < k - 1) {
    const auto& prev = seqs.back();
    std::vector<long long> next;
    for (std::size_t i = 0; i < prev.size(); ++i) {
      if (i == 0 || prev[i] >= prev[i - 1]) next.push_back(0);
      next.back() += prev[i];
    }
    seqs.push_back(std::move(next));
  }
  return seqs;
}

std::string format_run_sequence(const std::vector<long long>& s) {
  std::ostringstream os;
  for (std::size_t i = 0; i < s.size(); ++i) {
    os << s[i];
    bool run_ends = i + 1 == s.size() || s[i + 1] >= s[i];
    os << (run_ends ? ";" : ",");
    if (i + 1 < s.size()) os << ' ';
  }
  return os.str();
}

std::vector<ASeq> level_nodes(int level) {
  if (level < 0) throw InvalidInput("level must be non-negative");
  if (level > kMaxTreeLevel) throw CapacityError("level exceeds " + std::to_string(kMaxTreeLevel));
  std::vector<ASeq> cur{ASeq{0}};
  for (int l = 0; l < level; ++l) {
    std::vector<ASeq> next;
    for (const auto& a : cur) {
      auto ch = children_aseq(a);
      next.push_back(std::move(ch.left));
      if (ch.right) next.push_back(std::move(*ch.right));
    }
    cur = std::move(next);
  }
  return cur;
}

std::string sequence_string(const std::vector<int>& s) {
  std::string out;
  for (int v : s) out += render_symbol(v);
  return out;
}

std::string render_node(const ASeq& a, TreeNotation notation) {
  switch (notation) {
    case TreeNotation::kDelta:
      return phi(a).to_string();
    case TreeNotation::kPair: {
      auto d = phi(a);
      return render_symbol(d[0]) + render_symbol(d[1]);
    }
    case TreeNotation::kA:
      return sequence_string(a);
    case TreeNotation::kB: {
      auto b = psi(a);
      return b.empty() ? std::string("()") : sequence_string(b);
    }
  }
  return {};
}

std::string render_tree(int depth, TreeNotation notation) {
  std::ostringstream os;
  for (int l = 0; l <= depth; ++l) {
    os << "level " << l << ":";
    for (const auto& a : level_nodes(l)) os << ' ' << render_node(a, notation);
    os << '\n';
  }
  return os.str();
}

std::string render_tree_dot(int depth, TreeNotation notation) {
  std::ostringstream os;
  os << "digraph T {\n";
  std::deque<std::pair<ASeq, int>> queue{{ASeq{0}, 0}};
  int next_id = 1;
  os << "  n0 [label=\"" << render_node(ASeq{0}, notation) << "\"];\n";
  while (!queue.empty()) {
    auto [a, id] = queue.front();
    queue.pop_front();
    if (tree_level(a) == depth) continue;
    auto ch = children_aseq(a);
    auto emit = [&](const ASeq& c, const char* side) {
      const int cid = next_id++;
      os << "  n" << cid << " [label=\"" << render_node(c, notation) << "\"];\n";
      os << "  n" << id << " -> n" << cid << " [label=\"" << side << "\"];\n";
      queue.emplace_back(c, cid);
    };
    emit(ch.left, "L");
    if (ch.right) emit(*ch.right, "R");
  }
  os << "}\n";
  return os.str();
}

}  // namespace midlevel
