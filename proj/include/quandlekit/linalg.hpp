#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "quandlekit/mod_matrix.hpp"

namespace qk {

using BigInt = mpz_class;
/// Invariant factors d_1 | d_2 | ... with every factor > 1; empty means the trivial group.
using InvariantFactors = std::vector<std::int64_t>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);
  /// Lifts representatives in [0, N).
  static IntMatrix from_mod(const ModMatrix& m);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  BigInt& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const;
  /// Exact determinant (fraction-free elimination); square matrices only.
  BigInt det() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[dst] += k * row[src]
  void add_row(int dst, int src, const BigInt& k);
  void add_col(int dst, int src, const BigInt& k);
  void negate_row(int r);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

struct SnfResult {
  /// Nonzero diagonal entries d_1 | d_2 | ... | d_r, all positive; r is the rank.
  std::vector<BigInt> diag;
  /// Present when requested: U * M * V equals the diagonal matrix, both unimodular.
  std::optional<IntMatrix> U;
  std::optional<IntMatrix> V;

  std::size_t rank() const noexcept { return diag.size(); }
};

/// Smith normal form over Z, pivoting on the entry of least absolute value.
SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms = false);

/// Invariant factors of (Z_N)^rows / column span of m, via the integer SNF of [m | N*I].
InvariantFactors cokernel_mod(const IntMatrix& m, Modulus N);
InvariantFactors cokernel_mod(const ModMatrix& m);

bool is_prime(std::int64_t p);

/// Basis of the null space of m over Z_p in reduced echelon form: each vector has a
/// 1 in its own free column and 0 in the other free columns. Throws InputError if p
/// is not prime.
std::vector<std::vector<std::int64_t>> kernel_mod_p(const ModMatrix& m);
std::vector<std::vector<std::int64_t>> kernel_mod_p(const IntMatrix& m, std::int64_t p);
/// Rank over Z_p.
int rank_mod_p(const ModMatrix& m);

/// Smith form over the ring Z_N itself: U * m * V = diag(d_1, ..., d_r, 0, ...), with
/// U, V invertible mod N and each d_i a proper divisor chain of N (d_i | d_{i+1} | N, d_i < N).
struct ModSnfResult {
  std::vector<std::int64_t> diag;
  ModMatrix U;
  ModMatrix V;
};
/// With track_u = false, U is left empty (0 x 0).
ModSnfResult smith_normal_form_mod(const ModMatrix& m, bool track_u = true);

/// Same quotient as cokernel_mod, computed by elimination inside Z_N.
InvariantFactors cokernel_mod_ring(const ModMatrix& m);

}  // namespace qk
