#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quandlekit/braid.hpp"
#include "quandlekit/homology.hpp"

namespace qk {

struct InvariantMetadata {
  std::string quandle;
  std::string rep;
  std::string cocycle;
  std::string braid;
  Modulus modulus = 1;
  int dim = 1;
};

/// One vector of (Z_N)^m per closure coloring, sorted lexicographically.
struct InvariantMultiset {
  InvariantMetadata meta;
  std::vector<std::vector<std::int64_t>> entries;
};

/// One invariant-factor list per closure coloring, sorted lexicographically.
struct ModuleInvariant {
  InvariantMetadata meta;
  std::vector<InvariantFactors> entries;
};

/// ValidationError unless kappa is a quandle 2-cocycle for rep.
void require_quandle_2_cocycle(const AlgebraRep& rep, const Cochain& kappa);

/// sign * path * kappa(source, over) at crossing `crossing` (letter index).
std::vector<std::int64_t> boltzmann_weight(const AlgebraRep& rep, const Cochain& kappa, const BraidWord& w,
                                           std::span<const int> coloring, int crossing);

struct CocycleInvariantOptions {
  EnumerationOptions enumeration;
  /// Also evaluate <kappa, C(D)> through the diagram 2-chain and throw std::logic_error on disagreement.
  bool cross_check = false;
};

InvariantMultiset cocycle_invariant(const AlgebraRep& rep, const Cochain& kappa, const BraidWord& w,
                                    const CocycleInvariantOptions& opts = {});

/// Invariant factors of (Z_N)^{km} / Im(M(w, x) - I) for every closure coloring x.
ModuleInvariant module_invariant(const AlgebraRep& rep, const BraidWord& w, const EnumerationOptions& opts = {});

struct ExtensionResult {
  int size = 0;
  /// Row-major table on pairs (a, x) numbered enc(a) * |X| + x, with a in (Z_N)^m
  /// encoded base N, first coordinate most significant.
  std::vector<int> table;
  ValidationReport report;
  /// Present when every axiom passes.
  std::optional<FiniteQuandle> quandle;
};

/// (a, x) * (b, y) = (eta_{x,y} a + tau_{x,y} b + kappa_{x,y}, x * y); kappa may be null
/// (zero). SizeLimitError when N^m |X| exceeds the guard.
ExtensionResult dynamical_extension(const AlgebraRep& rep, const Cochain* kappa, std::int64_t guard = 64);

/// Support inclusion: every distinct entry of a occurs in b. InputError when the
/// coefficient groups differ.
bool multiset_contained(const InvariantMultiset& a, const InvariantMultiset& b);

}  // namespace qk
