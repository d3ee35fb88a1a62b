#include "midlevel/words.hpp"

#include <bit>
#include <set>

#include "midlevel/error.hpp"

namespace midlevel {

namespace {

std::uint64_t mask_of(int n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1); }

}  // namespace

BinaryWord::BinaryWord(int length, std::uint64_t packed) : n_(length) {
  if (length < 1 || length > kMaxWordLength) {
    throw CapacityError("word length must lie in [1, 63], got " + std::to_string(length));
  }
  if ((packed & ~mask_of(length)) != 0) {
    throw InvalidInput("packed value has bits beyond the word length");
  }
  packed_ = packed;
  weight_ = std::popcount(packed);
}

BinaryWord BinaryWord::parse(std::string_view bits) {
  if (bits.empty() || bits.size() > static_cast<std::size_t>(kMaxWordLength)) {
    throw InvalidInput("bit string must have 1..63 characters");
  }
  std::uint64_t v = 0;
  for (char ch : bits) {
    if (ch != '0' && ch != '1') throw InvalidInput("bit string contains '" + std::string(1, ch) + "'");
    v = (v << 1) | static_cast<std::uint64_t>(ch == '1');
  }
  return BinaryWord(static_cast<int>(bits.size()), v);
}

bool BinaryWord::bit(int i) const noexcept {
  int p = reduce_mod(i, n_);
  return (packed_ >> (n_ - 1 - p)) & 1ULL;
}

BinaryWord BinaryWord::flipped(int i) const {
  int p = reduce_mod(i, n_);
  return BinaryWord(n_, packed_ ^ (1ULL << (n_ - 1 - p)));
}

std::string BinaryWord::to_string() const {
  std::string s(static_cast<std::size_t>(n_), '0');
  for (int i = 0; i < n_; ++i)
    if (bit(i)) s[static_cast<std::size_t>(i)] = '1';
  return s;
}

int reduce_mod(long long i, int n) noexcept {
  if (n <= 0) return 0;
  long long r = i % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

BinaryWord rotate(const BinaryWord& w, long long i) {
  const int n = w.size();
  const int s = reduce_mod(i, n);
  if (s == 0) return w;
  // Moving position j to j+s is a cyclic right shift of the packed integer.
  std::uint64_t v = w.packed();
  std::uint64_t r = ((v >> s) | (v << (n - s))) & mask_of(n);
  return BinaryWord(n, r);
}

BinaryWord aleph(const BinaryWord& w) {
  const int n = w.size();
  std::uint64_t v = w.packed();
  std::uint64_t r = 0;
  for (int i = 0; i < n; ++i) {
    r = (r << 1) | (v & 1ULL);
    v >>= 1;
  }
  return BinaryWord(n, (~r) & mask_of(n));
}

std::string Necklace::to_string() const { return "(" + rep_.to_string() + ")"; }

BinaryWord least_rotation(const BinaryWord& w) {
  BinaryWord best = w;
  for (int i = 1; i < w.size(); ++i) {
    BinaryWord r = rotate(w, i);
    if (r.packed() < best.packed()) best = r;
  }
  return best;
}

Necklace necklace_of(const BinaryWord& w) { return Necklace(least_rotation(w)); }

int level_of_length(int n) {
  if (n < 3 || n % 2 == 0) throw InvalidInput("word length must be odd and at least 3");
  return (n - 1) / 2;
}

std::vector<BinaryWord> members(const Necklace& c) {
  const int n = c.size();
  const int k = level_of_length(n);
  if (c.weight() != k && c.weight() != k + 1) {
    throw InvalidInput("necklace weight must be k or k+1");
  }
  std::vector<BinaryWord> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(rotate(c.rep(), i));
  return out;
}

Necklace aleph_pi(const Necklace& c) {
  const int k = level_of_length(c.size());
  if (c.weight() != k) throw InvalidInput("aleph_pi expects a weight-k necklace");
  return necklace_of(aleph(c.rep()));
}

Necklace aleph_pi_inverse(const Necklace& d) {
  const int k = level_of_length(d.size());
  if (d.weight() != k + 1) throw InvalidInput("aleph_pi_inverse expects a weight-(k+1) necklace");
  return necklace_of(aleph(d.rep()));
}

std::vector<BinaryWord> words_of_weight(int n, int weight) {
  if (n < 1 || n > kMaxWordLength) throw CapacityError("word length out of range");
  if (weight < 0 || weight > n) return {};
  std::vector<BinaryWord> out;
  if (weight == 0) {
    out.emplace_back(n, 0);
    return out;
  }
  // Gosper's hack visits same-popcount integers in increasing order.
  std::uint64_t v = (1ULL << weight) - 1;
  const std::uint64_t limit = mask_of(n);
  while (v <= limit) {
    out.emplace_back(n, v);
    std::uint64_t c = v & (~v + 1);
    std::uint64_t r = v + c;
    if (r == 0 || r > limit) break;
    v = (((r ^ v) >> 2) / c) | r;
  }
  return out;
}

std::vector<Necklace> necklaces_of_weight(int n, int weight) {
  std::set<BinaryWord> reps;
  for (const auto& w : words_of_weight(n, weight)) {
    if (least_rotation(w) == w) reps.insert(w);
  }
  std::vector<Necklace> out;
  out.reserve(reps.size());
  for (const auto& r : reps) out.emplace_back(r);
  return out;
}

}  // namespace midlevel
