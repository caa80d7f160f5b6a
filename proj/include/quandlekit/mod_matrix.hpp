#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quandlekit/error.hpp"

namespace qk {

inline std::int64_t mod_reduce(std::int64_t a, Modulus n) {
  std::int64_t r = a % n;
  return r < 0 ? r + n : r;
}

inline std::int64_t mod_mul(std::int64_t a, std::int64_t b, Modulus n) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
}

/// Inverse of a mod n, or nullopt when gcd(a, n) != 1.
std::optional<std::int64_t> mod_inverse(std::int64_t a, Modulus n);

/// Dense matrix over Z_N with entries kept in [0, N).
class ModMatrix {
 public:
  ModMatrix() = default;
  ModMatrix(int rows, int cols, Modulus modulus);

  static ModMatrix identity(int n, Modulus modulus);
  static ModMatrix scalar(int n, std::int64_t value, Modulus modulus);
  /// Row-major values, reduced mod N.
  static ModMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows, Modulus modulus);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  Modulus modulus() const noexcept { return n_; }

  std::int64_t operator()(int r, int c) const noexcept { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  void set(int r, int c, std::int64_t v) { data_[static_cast<std::size_t>(r) * cols_ + c] = mod_reduce(v, n_); }
  void add(int r, int c, std::int64_t v) { set(r, c, (*this)(r, c) + mod_reduce(v, n_)); }

  const std::vector<std::int64_t>& data() const noexcept { return data_; }
  std::vector<std::vector<std::int64_t>> to_rows() const;

  ModMatrix block(int r0, int c0, int rows, int cols) const;
  void set_block(int r0, int c0, const ModMatrix& b);
  void add_block(int r0, int c0, const ModMatrix& b, std::int64_t scale = 1);

  ModMatrix transpose() const;
  bool is_zero() const;
  /// Determinant computed exactly over Z on the stored representatives, then reduced.
  std::int64_t det() const;
  std::optional<ModMatrix> inverse() const;
  ModMatrix pow(int k) const;

  std::vector<std::int64_t> apply(const std::vector<std::int64_t>& v) const;

  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix operator+(const ModMatrix& o) const;
  ModMatrix operator-(const ModMatrix& o) const;
  ModMatrix operator-() const;
  ModMatrix scaled(std::int64_t s) const;
  bool operator==(const ModMatrix& o) const = default;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  Modulus n_ = 1;
  std::vector<std::int64_t> data_;
};

}  // namespace qk
