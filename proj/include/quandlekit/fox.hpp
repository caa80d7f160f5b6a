#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "quandlekit/braid.hpp"
#include "quandlekit/laurent.hpp"
#include "quandlekit/linalg.hpp"

namespace qk {

/// A freely reduced word in generators x_0, x_1, ...
class FreeWord {
 public:
  struct Letter {
    int gen;
    int exp;  // +1 or -1
    auto operator<=>(const Letter&) const = default;
  };

  FreeWord() = default;
  /// Reduces the given letters; InputError on an exponent other than +-1 or a negative generator.
  explicit FreeWord(std::vector<Letter> letters);
  static FreeWord generator(int g, int exp = 1);

  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  /// Sum of exponents.
  int exponent_sum() const;

  FreeWord operator*(const FreeWord& o) const;
  FreeWord inverse() const;
  auto operator<=>(const FreeWord&) const = default;
  bool operator==(const FreeWord&) const = default;

  /// "x0 x1 x0^-1"; "1" for the empty word.
  std::string str() const;

 private:
  std::vector<Letter> letters_;
};

/// Element of the integral group ring of the free group.
class GroupRingElement {
 public:
  GroupRingElement() = default;
  GroupRingElement(const FreeWord& w, long coeff = 1);
  static GroupRingElement one() { return GroupRingElement(FreeWord()); }

  const std::map<FreeWord, long>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  GroupRingElement operator+(const GroupRingElement& o) const;
  GroupRingElement operator-(const GroupRingElement& o) const;
  GroupRingElement operator-() const;
  GroupRingElement operator*(const GroupRingElement& o) const;
  bool operator==(const GroupRingElement&) const = default;

  std::string str() const;

 private:
  void add(const FreeWord& w, long c);
  std::map<FreeWord, long> terms_;
};

/// The free derivative d w / d x_i.
GroupRingElement fox_derivative(const FreeWord& w, int i);

/// Relators x_s x_j x_s^-1 x_l^-1, one per crossing.
struct WirtingerPresentation {
  int generators = 0;
  std::vector<FreeWord> relators;
  /// For each generator, a (level, position) where its arc is visible in the braid:
  /// level 0 is the bottom, level j the strands after letter j.
  std::vector<std::pair<int, int>> arc_sites;
};

/// Arcs of the closed-braid diagram become generators (numbered by first appearance
/// along the bottom, then letter by letter); crossings follow the coloring convention
/// (u, v) -> (v, u*v) with x*y read as y x y^-1.
WirtingerPresentation wirtinger_from_braid(const BraidWord& w);

/// Color of each generator's arc under a closure coloring.
std::vector<int> arc_colors(const WirtingerPresentation& p, const ColoringState& state);

/// True if w = a b a^-1 c^-1 for generators a, b, c.
bool has_conjugation_shape(const FreeWord& w);

/// Laurent polynomial in t with m x m matrix coefficients over Z_N.
struct LaurentBlock {
  int dim = 1;
  Modulus modulus = 1;
  std::map<int, ModMatrix> terms;

  void add(int exponent, const ModMatrix& m);
  /// Substitutes t = t0 (a unit mod N).
  ModMatrix evaluate(std::int64_t t0) const;
};

/// Images rho(x_i), one per generator, in GL_m(Z_N).
struct TwistedMatrix {
  int rows = 0;
  int cols = 0;
  int dim = 1;
  Modulus modulus = 1;
  /// entries[i][j] = chi(d r_i / d x_j) with chi(x) = t rho(x).
  std::vector<std::vector<LaurentBlock>> entries;

  /// (rows*m) x (cols*m) matrix at t = t0; InputError unless t0 is a unit mod N.
  ModMatrix evaluate(std::int64_t t0) const;
};

/// ValidationError naming the first relator r with rho(r) != I.
TwistedMatrix twisted_matrix(const WirtingerPresentation& p, const std::vector<ModMatrix>& rho);

/// Fox matrix with trivial 1-dimensional rho over Q[t, t^-1].
LaurentMatrix alexander_matrix(const WirtingerPresentation& p);

/// Delete one generator column (the last by default), take the gcd of maximal minors
/// and normalize. InputError for closures with more than one component.
LaurentPoly alexander_polynomial(const BraidWord& w, int deleted_column = -1);

/// |Delta(-1)|.
BigInt knot_determinant(const LaurentPoly& delta);

}  // namespace qk
