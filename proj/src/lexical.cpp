#include "midlevel/lexical.hpp"

#include <algorithm>

#include "midlevel/error.hpp"

namespace midlevel {

int lexical_color(const BinaryWord& w, DiagonalRule rule) {
  const int n = w.size();
  const int k = level_of_length(n);
  if (w.weight() != k) throw InvalidInput("lexical_color expects a weight-k word, got " + w.to_string());
  if (w.bit(0)) throw InvalidInput("lexical_color expects b_0 = 0, got " + w.to_string());
  int x = 0, y = 0, count = 0;
  for (int i = 1; i < n; ++i) {
    if (w.bit(i)) {
      ++y;
      continue;
    }
    bool below = rule == DiagonalRule::kOnOrBelow ? y <= x : y < x;
    if (below) ++count;
    ++x;
  }
  return count;
}

int lexical_color_upper(const BinaryWord& w) {
  const int n = w.size();
  const int k = level_of_length(n);
  if (w.weight() != k + 1) throw InvalidInput("lexical_color_upper expects a weight-(k+1) word");
  if (!w.bit(n - 1)) throw InvalidInput("lexical_color_upper expects b_{n-1} = 1");
  return lexical_color(rotate(w.flipped(n - 1), 1));
}

int lower_edge_color(const BinaryWord& lower, int p) {
  if (lower.bit(p)) throw InvalidInput("position is not a zero of the lower word");
  return lexical_color(rotate(lower, -static_cast<long long>(p)));
}

int upper_edge_color(const BinaryWord& upper, int p) {
  if (!upper.bit(p)) throw InvalidInput("position is not a one of the upper word");
  const int n = upper.size();
  return lexical_color_upper(rotate(upper, static_cast<long long>(n - 1 - reduce_mod(p, n))));
}

int mk_edge_color(const BinaryWord& a, const BinaryWord& b) {
  if (a.size() != b.size()) throw InvalidInput("words of different lengths");
  std::uint64_t diff = a.packed() ^ b.packed();
  if (diff == 0 || (diff & (diff - 1)) != 0) throw InvalidInput("words are not adjacent");
  const int n = a.size();
  int p = 0;
  while (((diff >> (n - 1 - p)) & 1ULL) == 0) ++p;
  const BinaryWord& lower = a.weight() < b.weight() ? a : b;
  return lower_edge_color(lower, p);
}

char color_char(int color) {
  if (color < 0 || color >= 36) throw InvalidInput("colour out of printable range");
  return color < 10 ? static_cast<char>('0' + color) : static_cast<char>('a' + color - 10);
}

std::string render_symbol(int symbol) {
  return symbol == DeltaString::kStar ? std::string("*") : std::string(1, color_char(symbol));
}

DeltaString DeltaString::parse(std::string_view text) {
  std::vector<int> out;
  out.reserve(text.size());
  for (char ch : text) {
    if (ch == '*') out.push_back(kStar);
    else if (ch >= '0' && ch <= '9') out.push_back(ch - '0');
    else if (ch >= 'a' && ch <= 'z') out.push_back(ch - 'a' + 10);
    else throw InvalidInput(std::string("unexpected character '") + ch + "' in colour string");
  }
  return DeltaString(std::move(out));
}

std::string DeltaString::to_string() const {
  std::string s;
  for (int v : symbols_) s += render_symbol(v);
  return s;
}

BinaryWord delta_representative(const Necklace& c) {
  const int k = level_of_length(c.size());
  if (c.weight() != k) throw InvalidInput("colourful notation needs a weight-k necklace");
  for (const auto& m : members(c)) {
    if (!m.bit(0) && lexical_color(m) == k) return m;
  }
  throw InvalidInput("no rotation with leading colour k in " + c.to_string());
}

DeltaString delta_of_word(const BinaryWord& w) {
  const int n = w.size();
  std::vector<int> sym(static_cast<std::size_t>(n), DeltaString::kStar);
  for (int p = 0; p < n; ++p)
    if (!w.bit(p)) sym[static_cast<std::size_t>(p)] = lower_edge_color(w, p);
  return DeltaString(std::move(sym));
}

DeltaString delta(const Necklace& c) { return delta_of_word(delta_representative(c)); }

BinaryWord word_of(const DeltaString& d) {
  std::string bits;
  for (int v : d.symbols()) bits += (v == DeltaString::kStar ? '1' : '0');
  return BinaryWord::parse(bits);
}

bool is_well_formed(const DeltaString& d) {
  const int n = d.size();
  if (n < 3 || n % 2 == 0) return false;
  const int k = d.k();
  std::vector<int> seen(static_cast<std::size_t>(k + 1), 0);
  int stars = 0;
  for (int v : d.symbols()) {
    if (v == DeltaString::kStar) {
      ++stars;
    } else if (v < 0 || v > k || seen[static_cast<std::size_t>(v)]++) {
      return false;
    }
  }
  return stars == k;
}

std::string HattedLabel::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (static_cast<int>(i) == hat) s += "[" + render_symbol(symbols[i]) + "]";
    else s += render_symbol(symbols[i]);
  }
  return s;
}

HattedLabel HattedLabel::hat_leading() const {
  HattedLabel out;
  const int n = static_cast<int>(symbols.size());
  for (int i = 0; i < n; ++i) out.symbols.push_back(symbols[static_cast<std::size_t>((hat + i) % n)]);
  out.hat = 0;
  return out;
}

HattedLabel HattedLabel::reversed() const {
  HattedLabel out{std::vector<int>(symbols.rbegin(), symbols.rend()), -1};
  out.hat = static_cast<int>(symbols.size()) - 1 - hat;
  return out;
}

DeltaString upper_notation(const BinaryWord& upper) {
  const int n = upper.size();
  std::vector<int> sym(static_cast<std::size_t>(n), DeltaString::kStar);
  for (int p = 0; p < n; ++p)
    if (upper.bit(p)) sym[static_cast<std::size_t>(p)] = upper_edge_color(upper, p);
  return DeltaString(std::move(sym));
}

HattedLabel merged_label(const BinaryWord& lower, int p) {
  const int n = lower.size();
  p = reduce_mod(p, n);
  const BinaryWord upper = lower.flipped(p);
  HattedLabel out;
  out.hat = p;
  for (int i = 0; i < n; ++i) {
    out.symbols.push_back(upper.bit(i) ? upper_edge_color(upper, i) : lower_edge_color(lower, i));
  }
  return out;
}

HattedLabel adjacency_entry(const BinaryWord& lower, int p) {
  const int n = lower.size();
  p = reduce_mod(p, n);
  return HattedLabel{upper_notation(lower.flipped(p)).symbols(), p};
}

}  // namespace midlevel
