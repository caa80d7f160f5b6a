#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "quandlekit/algebra.hpp"
#include "quandlekit/linalg.hpp"

namespace qk {

enum class Variant { Rack, Quandle };

const char* variant_name(Variant v);
/// "rack" or "quandle"; InputError otherwise.
Variant parse_variant(std::string_view text);

/// A chain complex with coefficients in `rep`. The rep must outlive the config.
class ComplexConfig {
 public:
  explicit ComplexConfig(const AlgebraRep& rep, int basepoint = 0, Variant variant = Variant::Rack);

  const AlgebraRep& rep() const noexcept { return *rep_; }
  int basepoint() const noexcept { return basepoint_; }
  Variant variant() const noexcept { return variant_; }

 private:
  const AlgebraRep* rep_;
  int basepoint_;
  Variant variant_;
};

/// Number of tuples in X^n, i.e. |X|^n.
std::int64_t tuple_count(int order, int degree);
/// Tuples are numbered lexicographically: (x_1, ..., x_n) -> sum x_i |X|^(n-i).
std::vector<int> decode_tuple(std::int64_t index, int order, int degree);
std::int64_t encode_tuple(std::span<const int> tuple, int order);
/// True when some x_i = x_{i+1}.
bool is_degenerate(std::span<const int> tuple);

/// A function X^n -> (Z_N)^m stored densely, one vector per tuple.
class Cochain {
 public:
  Cochain() = default;
  Cochain(int degree, int order, int dim, Modulus modulus);
  static Cochain zero(const AlgebraRep& rep, int degree);
  /// From a flat coordinate vector of length |X|^n * m.
  static Cochain from_vector(const AlgebraRep& rep, int degree, std::vector<std::int64_t> values);

  int degree() const noexcept { return degree_; }
  int order() const noexcept { return order_; }
  int dim() const noexcept { return dim_; }
  Modulus modulus() const noexcept { return modulus_; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  std::vector<std::int64_t> at(std::span<const int> tuple) const;
  std::vector<std::int64_t> at_index(std::int64_t tuple_index) const;
  void set(std::span<const int> tuple, std::span<const std::int64_t> value);
  bool is_zero() const;
  /// Vanishes on every degenerate tuple.
  bool vanishes_on_degenerate() const;

  Cochain operator+(const Cochain& o) const;
  bool operator==(const Cochain& o) const = default;

 private:
  int degree_ = 0;
  int order_ = 0;
  int dim_ = 0;
  Modulus modulus_ = 1;
  std::vector<std::int64_t> values_;
};

/// delta^n : C^n -> C^{n+1}, size |X|^{n+1} m x |X|^n m, over all tuples (both variants).
/// SizeLimitError if the matrix would exceed `max_entries`.
ModMatrix coboundary_matrix(const ComplexConfig& cfg, int n, std::int64_t max_entries = 50'000'000);

/// The boundary from (n+1)-chains to n-chains: the transpose of coboundary_matrix(cfg, n).
/// boundary_matrix(cfg, 0) is x -> -tau_{x ∗̄ x0, x0}.
ModMatrix boundary_matrix(const ComplexConfig& cfg, int n, std::int64_t max_entries = 50'000'000);

/// Applies delta to a cochain of degree n.
Cochain coboundary(const ComplexConfig& cfg, const Cochain& f);

/// eta_{x*y,z} k_{x,y} + k_{x*y,z} = eta_{x*z,y*z} k_{x,z} + tau_{x*z,y*z} k_{y,z} + k_{x*z,y*z}
/// for all x, y, z; with the quandle variant also k_{x,x} = 0.
bool is_cocycle_2(const ComplexConfig& cfg, const Cochain& kappa);

/// The 3-cocycle condition written for a conjugation-type action rho:
///   w k_{x,y,z} + k_{x*z,y*z,w} + ((y*z)*w) k_{x,z,w} + k_{y,z,w}
///     = (((x*y)*z)*w) k_{y,z,w} + k_{x*y,z,w} + (z*w) k_{x,y,w} + k_{x*w,y*w,z*w}
/// with the quandle variant also k_{x,x,y} = k_{x,y,y} = 0. InputError if the rep is
/// not of conjugation type.
bool is_cocycle_3(const ComplexConfig& cfg, const Cochain& kappa);

/// delta^n kappa = 0, plus the degenerate-tuple conditions for the quandle variant.
bool is_cocycle(const ComplexConfig& cfg, const Cochain& kappa);

/// Basis over Z_p of the n-cocycles (n in 1..3), restricted to non-degenerate
/// coordinates for the quandle variant. InputError if N is not prime.
std::vector<Cochain> cocycle_space(const ComplexConfig& cfg, int degree);

/// Invariant factors of ker delta^n / im delta^{n-1} for 0 <= n <= 3 (|X| <= 6).
/// The quandle variant works on cochains vanishing on degenerate tuples and throws
/// ValidationError if delta does not preserve that subspace.
InvariantFactors cohomology(const ComplexConfig& cfg, int degree);

}  // namespace qk
