#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quandlekit/error.hpp"

namespace qk {

/// Checks axioms I (idempotency), II (right invertibility) and III (right
/// self-distributivity) on a row-major n x n table, table[a*n+b] = a*b.
/// Each failing check carries its first violating tuple.
/// Throws InputError if the table has the wrong length or an entry is out of range.
ValidationReport verify_axioms(int n, std::span<const int> table);

/// A finite quandle on {0..n-1}. Immutable once built; only passing tables are accepted.
class FiniteQuandle {
 public:
  /// Throws InputError for malformed tables and ValidationError if an axiom fails.
  static FiniteQuandle from_table(int n, std::vector<int> table, std::string label = {});

  int size() const noexcept { return n_; }
  int op(int a, int b) const noexcept { return table_[a * n_ + b]; }
  /// a ∗̄ b: the unique c with c*b = a.
  int inv_op(int a, int b) const noexcept { return inverse_[a * n_ + b]; }
  const std::vector<int>& table() const noexcept { return table_; }
  const std::string& label() const noexcept { return label_; }

  bool operator==(const FiniteQuandle& o) const { return n_ == o.n_ && table_ == o.table_; }

 private:
  FiniteQuandle(int n, std::vector<int> table, std::string label);

  int n_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::string label_;
};

class FiniteGroup {
 public:
  /// Finds the identity and inverses; throws ValidationError if the table is not a group.
  static FiniteGroup from_table(int n, std::vector<int> mul, std::string label = {});

  int size() const noexcept { return n_; }
  int mul(int a, int b) const noexcept { return mul_[a * n_ + b]; }
  int inv(int a) const noexcept { return inv_[a]; }
  int identity() const noexcept { return id_; }
  int pow(int a, int k) const;
  const std::string& label() const noexcept { return label_; }

 private:
  FiniteGroup(int n, std::vector<int> mul, std::vector<int> inv, int id, std::string label)
      : n_(n), mul_(std::move(mul)), inv_(std::move(inv)), id_(id), label_(std::move(label)) {}

  int n_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  int id_;
  std::string label_;
};

FiniteGroup cyclic_group(int n);
/// Elements are the permutations of {0..n-1} in lexicographic order; see symmetric_permutations.
FiniteGroup symmetric_group(int n);
std::vector<std::vector<int>> symmetric_permutations(int n);
/// Indices of the transpositions in symmetric_group(n).
std::vector<int> transpositions(int n);
/// Symmetries of the regular n-gon, order 2n: r^i is element i, s r^i is element n+i.
FiniteGroup dihedral_group(int n);
FiniteGroup quaternion_group();
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// R_n: i*j = 2j - i mod n.
FiniteQuandle make_dihedral(int n);
/// a*b = t a + (1-t) b mod n; t must be a unit mod n.
FiniteQuandle make_alexander(int n, int t);
/// T_n: a*b = a.
FiniteQuandle make_trivial(int n);
/// a*b = b^m a b^-m on a closed subset of g; quandle element i is subset[i].
FiniteQuandle make_conj(const FiniteGroup& g, std::span<const int> subset, int power = 1);
/// a*b = b a^-1 b on all of g.
FiniteQuandle make_core(const FiniteGroup& g);

inline int inv_op(const FiniteQuandle& q, int a, int b) { return q.inv_op(a, b); }

/// Table-preserving bijection phi with phi(a*b) = phi(a)*phi(b), or nullopt.
/// Exhaustive search, capped at 12 elements (SizeLimitError beyond).
std::optional<std::vector<int>> is_isomorphic(const FiniteQuandle& q1, const FiniteQuandle& q2);

}  // namespace qk
