#pragma once

// Lattice-walk edge colouring of the middle-levels graph and the colourful
// string notation built on it.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "midlevel/words.hpp"

namespace midlevel {

/// Which rightward steps of the lattice walk are counted.
enum class DiagonalRule {
  kOnOrBelow,      // step from (x,y) counts iff y <= x
  kStrictlyBelow,  // step from (x,y) counts iff y < x (kept for mutation testing)
};

/// Colour of the edge flipping b_0 of a weight-k word with b_0 = 0.
/// Entries b_1..b_{n-1} drive a walk from (0,0): 0 steps right, 1 steps up.
int lexical_color(const BinaryWord& w, DiagonalRule rule = DiagonalRule::kOnOrBelow);

/// Colour of the edge that clears b_{n-1} of a weight-(k+1) word with b_{n-1} = 1.
int lexical_color_upper(const BinaryWord& w);

/// Colour of the edge flipping zero position p of a weight-k word.
int lower_edge_color(const BinaryWord& lower, int p);
/// Colour of the edge clearing one position p of a weight-(k+1) word.
int upper_edge_color(const BinaryWord& upper, int p);

/// Colour of the M_k edge between two words differing in one bit.
int mk_edge_color(const BinaryWord& a, const BinaryWord& b);

/// Length-n string over colours and stars. kStar marks a one-position.
class DeltaString {
 public:
  static constexpr int kStar = -1;

  DeltaString() = default;
  explicit DeltaString(std::vector<int> symbols) : symbols_(std::move(symbols)) {}

  /// Accepts digits, lowercase base-36 letters for colours >= 10, and '*'.
  static DeltaString parse(std::string_view text);

  const std::vector<int>& symbols() const noexcept { return symbols_; }
  int size() const noexcept { return static_cast<int>(symbols_.size()); }
  int operator[](int i) const { return symbols_.at(static_cast<std::size_t>(i)); }
  int k() const noexcept { return (size() - 1) / 2; }

  std::string to_string() const;

  friend bool operator==(const DeltaString&, const DeltaString&) = default;
  friend auto operator<=>(const DeltaString&, const DeltaString&) = default;

 private:
  std::vector<int> symbols_;
};

char color_char(int color);
std::string render_symbol(int symbol);

/// Rotation of the class whose leading zero carries colour k.
BinaryWord delta_representative(const Necklace& c);

/// Colourful notation of a weight-k necklace.
DeltaString delta(const Necklace& c);
/// The same notation computed directly from a word whose b_0 colour is k.
DeltaString delta_of_word(const BinaryWord& w);

/// Bit pattern of a colourful string: stars become 1, colours become 0.
BinaryWord word_of(const DeltaString& d);

/// Structural check: n odd, k stars, colours 0..k each once.
bool is_well_formed(const DeltaString& d);

/// A colour string with one distinguished position.
struct HattedLabel {
  std::vector<int> symbols;
  int hat = -1;

  /// Hat rendered as brackets around the symbol, e.g. "2213[0]31".
  std::string to_string() const;
  /// Rotation that brings the hat to position 0.
  HattedLabel hat_leading() const;
  HattedLabel reversed() const;

  friend bool operator==(const HattedLabel&, const HattedLabel&) = default;
};

/// Upper-side notation of a weight-(k+1) word: colours at one positions,
/// stars at zero positions.
DeltaString upper_notation(const BinaryWord& upper);

/// Label of the edge flipping zero position p of `lower`: the lower colour at
/// every remaining zero, the upper colour at every one of the flipped word,
/// hat on p.
HattedLabel merged_label(const BinaryWord& lower, int p);

/// Upper notation of flip(lower, p) with the hat on p.
HattedLabel adjacency_entry(const BinaryWord& lower, int p);

}  // namespace midlevel
