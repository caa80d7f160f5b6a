#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "quandlekit/algebra.hpp"

namespace qk {

/// A braid on `strands` strands; letter +i is sigma_i, -i is sigma_i^-1 (1 <= i < strands).
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  /// Throws InputError on a zero or out-of-range letter.
  static BraidWord create(int strands, std::vector<int> letters);

  /// "k=2; 1 1 1"
  std::string str() const;
  bool operator==(const BraidWord&) const = default;
  auto operator<=>(const BraidWord&) const = default;
};

/// Parses "k=<strands>; <letters...>". ParseError carries the character offset.
BraidWord parse_braid(std::string_view text);

/// w followed by v (same strand count).
BraidWord concat(const BraidWord& w, const BraidWord& v);
/// The inverse braid: reversed, each letter negated.
BraidWord inverse(const BraidWord& w);

/// Colors of the k strands before the first letter and after each letter.
struct ColoringState {
  /// levels[0] is the bottom vector, levels[j] the colors after letter j.
  std::vector<std::vector<int>> levels;

  const std::vector<int>& bottom() const { return levels.front(); }
  const std::vector<int>& top() const { return levels.back(); }
};

/// Positive letter +i sends (u, v) at positions (i, i+1) to (v, u*v); negative
/// letter -i sends (u, v) to (v ∗̄ u, u).
ColoringState act(const FiniteQuandle& q, const BraidWord& w, std::span<const int> bottom);
std::vector<int> act_top(const FiniteQuandle& q, const BraidWord& w, std::span<const int> bottom);

struct EnumerationOptions {
  std::int64_t guard = 10'000'000;
  int jobs = 1;
};

/// Every bottom vector fixed by w, in lexicographic order. SizeLimitError when |X|^k
/// exceeds the guard.
std::vector<std::vector<int>> colorings_of_closure(const FiniteQuandle& q, const BraidWord& w,
                                                   const EnumerationOptions& opts = {});

/// M(w, x): the km x km action on module colors over the coloring started at `bottom`.
ModMatrix colored_matrix(const AlgebraRep& rep, const BraidWord& w, std::span<const int> bottom);

/// One crossing of a colored closed braid, read from the source side.
struct Crossing {
  int level = 0;      // letter index
  int position = 0;   // 0-based left strand of the crossing
  int sign = 1;
  int source = 0;     // under-arc color entering the crossing
  int over = 0;       // over-arc color
  ModMatrix path;     // rho(c_k) rho(c_{k-1}) ... rho(c_{i+2}) at that level
};

/// Requires a conjugation-type rep and a bottom vector fixed by w (InputError otherwise).
std::vector<Crossing> colored_crossings(const AlgebraRep& rep, const BraidWord& w, std::span<const int> coloring);

/// Coefficient of each basis pair (x, y), as an m x m matrix; zero coefficients are omitted.
using TwoChain = std::map<std::pair<int, int>, ModMatrix>;

/// sum over crossings of sign * path acting on (source, over).
TwoChain diagram_two_chain(const AlgebraRep& rep, const BraidWord& w, std::span<const int> coloring);

/// The m x |X|^2 m matrix P with <kappa, C> = P kappa for 2-cochains kappa.
ModMatrix chain_pairing_matrix(const AlgebraRep& rep, const TwoChain& chain);

/// Words with the same closure: conjugates sigma_i^e w sigma_i^-e, cyclic rotations,
/// the two stabilizations, and braid-relation / far-commutation rewrites. Sorted,
/// without duplicates and without w itself.
std::vector<BraidWord> markov_moves(const BraidWord& w);

/// perm[j] = the bottom position whose strand ends at top position j.
std::vector<int> strand_permutation(const BraidWord& w);
int component_count(const BraidWord& w);

}  // namespace qk
