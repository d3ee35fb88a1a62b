#pragma once

// Fixed-length binary words b_0..b_{n-1} and their rotation classes
// (necklaces). Words are immutable values; every position index is taken
// modulo the word length.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace midlevel {

inline constexpr int kMaxWordLength = 63;

class BinaryWord {
 public:
  BinaryWord() = default;

  /// `packed` holds b_0 in the most significant of the low `length` bits, so
  /// integer order on `packed` is lexicographic order on the bit string.
  BinaryWord(int length, std::uint64_t packed);

  /// Parses "00011"-style text. Throws InvalidInput on bad characters/length.
  static BinaryWord parse(std::string_view bits);

  int size() const noexcept { return n_; }
  int weight() const noexcept { return weight_; }
  std::uint64_t packed() const noexcept { return packed_; }

  /// b_i, with i reduced mod n.
  bool bit(int i) const noexcept;
  bool operator[](int i) const noexcept { return bit(i); }

  BinaryWord flipped(int i) const;

  std::string to_string() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend std::strong_ordering operator<=>(const BinaryWord& a, const BinaryWord& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.packed_ <=> b.packed_;
  }

 private:
  int n_ = 0;
  int weight_ = 0;
  std::uint64_t packed_ = 0;
};

int reduce_mod(long long i, int n) noexcept;

/// Cyclic shift by i: result bit j equals b_{j-i} (multiplication by x^i mod 1+x^n).
BinaryWord rotate(const BinaryWord& w, long long i);

/// Complemented reversal b_0..b_{n-1} -> ~b_{n-1}..~b_0.
BinaryWord aleph(const BinaryWord& w);

/// Rotation class of a word, stored by its lexicographically least rotation.
class Necklace {
 public:
  explicit Necklace(const BinaryWord& canonical_rep) : rep_(canonical_rep) {}

  const BinaryWord& rep() const noexcept { return rep_; }
  int size() const noexcept { return rep_.size(); }
  int weight() const noexcept { return rep_.weight(); }

  /// "(00011)"
  std::string to_string() const;

  friend bool operator==(const Necklace&, const Necklace&) = default;
  friend auto operator<=>(const Necklace&, const Necklace&) = default;

 private:
  BinaryWord rep_;
};

BinaryWord least_rotation(const BinaryWord& w);
Necklace necklace_of(const BinaryWord& w);

/// The n rotations of the representative by 0, 1, ..., n-1. Requires n odd and
/// weight in {k, k+1}, which makes all n rotations distinct.
std::vector<BinaryWord> members(const Necklace& c);

/// Necklace of aleph(any member). Requires weight k for n = 2k+1.
Necklace aleph_pi(const Necklace& c);
/// Inverse of aleph_pi: weight k+1 necklace to its weight k partner.
Necklace aleph_pi_inverse(const Necklace& d);

/// All words of length n and the given weight, in increasing lexicographic order.
std::vector<BinaryWord> words_of_weight(int n, int weight);

/// All necklaces of length n and the given weight, sorted by representative.
std::vector<Necklace> necklaces_of_weight(int n, int weight);

/// Validates n = 2k+1 with k >= 1 and returns k.
int level_of_length(int n);

}  // namespace midlevel
