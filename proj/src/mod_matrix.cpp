#include "quandlekit/mod_matrix.hpp"

#include <numeric>

#include "quandlekit/linalg.hpp"

namespace qk {

std::optional<std::int64_t> mod_inverse(std::int64_t a, Modulus n) {
  if (n == 1) return 0;
  std::int64_t r0 = mod_reduce(a, n), r1 = n;
  std::int64_t s0 = 1, s1 = 0;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  if (r0 != 1) return std::nullopt;
  return mod_reduce(s0, n);
}

ModMatrix::ModMatrix(int rows, int cols, Modulus modulus)
    : rows_(rows), cols_(cols), n_(modulus), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (modulus <= 0) throw InputError("modulus must be positive");
}

ModMatrix ModMatrix::identity(int n, Modulus modulus) { return scalar(n, 1, modulus); }

ModMatrix ModMatrix::scalar(int n, std::int64_t value, Modulus modulus) {
  ModMatrix m(n, n, modulus);
  for (int i = 0; i < n; ++i) m.set(i, i, value);
  return m;
}

ModMatrix ModMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows, Modulus modulus) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  ModMatrix m(r, c, modulus);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("matrix rows have unequal lengths");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

std::vector<std::vector<std::int64_t>> ModMatrix::to_rows() const {
  std::vector<std::vector<std::int64_t>> out(rows_, std::vector<std::int64_t>(cols_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

ModMatrix ModMatrix::block(int r0, int c0, int rows, int cols) const {
  ModMatrix b(rows, cols, n_);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) b.data_[static_cast<std::size_t>(i) * cols + j] = (*this)(r0 + i, c0 + j);
  return b;
}

void ModMatrix::set_block(int r0, int c0, const ModMatrix& b) {
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) set(r0 + i, c0 + j, b(i, j));
}

void ModMatrix::add_block(int r0, int c0, const ModMatrix& b, std::int64_t scale) {
  const std::int64_t s = mod_reduce(scale, n_);
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) add(r0 + i, c0 + j, mod_mul(s, b(i, j), n_));
}

ModMatrix ModMatrix::transpose() const {
  ModMatrix t(cols_, rows_, n_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.data_[static_cast<std::size_t>(j) * rows_ + i] = (*this)(i, j);
  return t;
}

bool ModMatrix::is_zero() const {
  for (auto v : data_)
    if (v != 0) return false;
  return true;
}

std::int64_t ModMatrix::det() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  BigInt d = IntMatrix::from_mod(*this).det();
  BigInt r = d % BigInt(static_cast<long>(n_));
  if (r < 0) r += static_cast<long>(n_);
  return r.get_si();
}

std::optional<ModMatrix> ModMatrix::inverse() const {
  if (rows_ != cols_) throw InputError("inverse of a non-square matrix");
  if (rows_ == 0) return *this;
  if (!mod_inverse(det(), n_)) return std::nullopt;
  // U M V = D with D a diagonal of units, so M^-1 = V D^-1 U.
  ModSnfResult s = smith_normal_form_mod(*this);
  ModMatrix dinv(rows_, rows_, n_);
  for (int i = 0; i < rows_; ++i) dinv.set(i, i, *mod_inverse(s.diag[i], n_));
  return s.V * dinv * s.U;
}

ModMatrix ModMatrix::pow(int k) const {
  ModMatrix base = *this;
  if (k < 0) {
    auto inv = inverse();
    if (!inv) throw ValidationError("negative power of a non-invertible matrix");
    base = *inv;
    k = -k;
  }
  ModMatrix r = identity(rows_, n_);
  while (k > 0) {
    if (k & 1) r = r * base;
    base = base * base;
    k >>= 1;
  }
  return r;
}

std::vector<std::int64_t> ModMatrix::apply(const std::vector<std::int64_t>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InputError("matrix-vector size mismatch");
  std::vector<std::int64_t> out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    __int128 acc = 0;
    for (int j = 0; j < cols_; ++j) acc += static_cast<__int128>((*this)(i, j)) * mod_reduce(v[j], n_);
    out[i] = static_cast<std::int64_t>(acc % n_);
  }
  return out;
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  if (cols_ != o.rows_ || n_ != o.n_) throw InputError("matrix product shape or modulus mismatch");
  ModMatrix r(rows_, o.cols_, n_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const std::int64_t a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        auto& dst = r.data_[static_cast<std::size_t>(i) * o.cols_ + j];
        dst = (dst + mod_mul(a, o(k, j), n_)) % n_;
      }
    }
  return r;
}

ModMatrix ModMatrix::operator+(const ModMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || n_ != o.n_) throw InputError("matrix sum shape mismatch");
  ModMatrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = (data_[i] + o.data_[i]) % n_;
  return r;
}

ModMatrix ModMatrix::operator-(const ModMatrix& o) const { return *this + (-o); }

ModMatrix ModMatrix::operator-() const {
  ModMatrix r = *this;
  for (auto& v : r.data_) v = v ? n_ - v : 0;
  return r;
}

ModMatrix ModMatrix::scaled(std::int64_t s) const {
  ModMatrix r = *this;
  const std::int64_t k = mod_reduce(s, n_);
  for (auto& v : r.data_) v = mod_mul(v, k, n_);
  return r;
}

std::string ModMatrix::str() const {
  std::string s = "[";
  for (int i = 0; i < rows_; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) s += ',';
      s += std::to_string((*this)(i, j));
    }
    s += ']';
  }
  return s + "] mod " + std::to_string(n_);
}

}  // namespace qk
