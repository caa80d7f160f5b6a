#include "quandlekit/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace qk {

namespace {

int cmpabs(const BigInt& a, const BigInt& b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()); }

}  // namespace

// ---------------------------------------------------------------------------
// IntMatrix

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows[0].size()) : 0;
  IntMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw InputError("matrix rows have unequal lengths");
    for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_mod(const ModMatrix& m) {
  IntMatrix r(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r(i, j) = static_cast<long>(m(i, j));
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw InputError("matrix product shape mismatch");
  IntMatrix r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

BigInt IntMatrix::det() const {
  if (rows_ != cols_) throw InputError("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  BigInt prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (sgn(a(k, k)) == 0) {
      int p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        BigInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row(int dst, int src, const BigInt& k) {
  if (sgn(k) == 0) return;
  for (int j = 0; j < cols_; ++j)
    if (sgn((*this)(src, j)) != 0) (*this)(dst, j) += k * (*this)(src, j);
}

void IntMatrix::add_col(int dst, int src, const BigInt& k) {
  if (sgn(k) == 0) return;
  for (int i = 0; i < rows_; ++i)
    if (sgn((*this)(i, src)) != 0) (*this)(i, dst) += k * (*this)(i, src);
}

void IntMatrix::negate_row(int r) {
  for (int j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

// ---------------------------------------------------------------------------
// Smith normal form over Z

namespace {

class IntSnf {
 public:
  IntSnf(const IntMatrix& m, bool transforms)
      : a_(m), track_(transforms), rows_(m.rows()), cols_(m.cols()) {
    if (track_) {
      u_ = IntMatrix::identity(rows_);
      v_ = IntMatrix::identity(cols_);
    }
  }

  SnfResult run() {
    const int limit = std::min(rows_, cols_);
    SnfResult out;
    for (int t = 0; t < limit; ++t) {
      if (!move_min_to(t, t, t)) break;
      reduce_at(t);
      if (sgn(a_(t, t)) < 0) negate_row(t);
      out.diag.push_back(a_(t, t));
    }
    if (track_) {
      out.U = std::move(u_);
      out.V = std::move(v_);
    }
    return out;
  }

 private:
  // Moves the least nonzero |entry| of the block [r0.., c0..] to (t, t).
  bool move_min_to(int t, int r0, int c0) {
    int bi = -1, bj = -1;
    for (int i = r0; i < rows_; ++i)
      for (int j = c0; j < cols_; ++j) {
        const BigInt& v = a_(i, j);
        if (sgn(v) == 0) continue;
        if (bi < 0 || cmpabs(v, a_(bi, bj)) < 0) {
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_at(int t) {
    for (;;) {
      bool clean = true;
      const BigInt p = a_(t, t);
      int best_i = -1, best_j = -1;
      for (int i = t + 1; i < rows_; ++i) {
        if (sgn(a_(i, t)) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), a_(i, t).get_mpz_t(), p.get_mpz_t());
        add_row(i, t, -q);
        if (sgn(a_(i, t)) != 0) {
          clean = false;
          if (best_i < 0 || cmpabs(a_(i, t), a_(best_i, t)) < 0) best_i = i;
        }
      }
      for (int j = t + 1; j < cols_; ++j) {
        if (sgn(a_(t, j)) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), a_(t, j).get_mpz_t(), p.get_mpz_t());
        add_col(j, t, -q);
        if (sgn(a_(t, j)) != 0) {
          clean = false;
          if (best_j < 0 || cmpabs(a_(t, j), a_(t, best_j)) < 0) best_j = j;
        }
      }
      if (!clean) {
        // a remainder is smaller than the pivot; promote the smallest one
        bool use_row = best_i >= 0 && (best_j < 0 || cmpabs(a_(best_i, t), a_(t, best_j)) <= 0);
        if (use_row)
          swap_rows(t, best_i);
        else
          swap_cols(t, best_j);
        continue;
      }
      // row and column are clear; enforce divisibility of the remaining block
      int bad = -1;
      for (int i = t + 1; i < rows_ && bad < 0; ++i)
        for (int j = t + 1; j < cols_; ++j)
          if (!mpz_divisible_p(a_(i, j).get_mpz_t(), p.get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0) return;
      add_row(t, bad, 1);
    }
  }

  void swap_rows(int a, int b) {
    a_.swap_rows(a, b);
    if (track_) u_.swap_rows(a, b);
  }
  void swap_cols(int a, int b) {
    a_.swap_cols(a, b);
    if (track_) v_.swap_cols(a, b);
  }
  void add_row(int dst, int src, const BigInt& k) {
    a_.add_row(dst, src, k);
    if (track_) u_.add_row(dst, src, k);
  }
  void add_col(int dst, int src, const BigInt& k) {
    a_.add_col(dst, src, k);
    if (track_) v_.add_col(dst, src, k);
  }
  void negate_row(int r) {
    a_.negate_row(r);
    if (track_) u_.negate_row(r);
  }

  IntMatrix a_;
  bool track_;
  int rows_, cols_;
  IntMatrix u_, v_;
};

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m, bool with_transforms) {
  return IntSnf(m, with_transforms).run();
}

InvariantFactors cokernel_mod(const IntMatrix& m, Modulus N) {
  if (N <= 0) throw InputError("cokernel_mod: modulus must be positive, got " + std::to_string(N));
  IntMatrix aug(m.rows(), m.cols() + m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols() + i) = static_cast<long>(N);
  }
  SnfResult s = smith_normal_form(aug);
  InvariantFactors out;
  for (const auto& d : s.diag)
    if (d != 1) out.push_back(d.get_si());
  return out;
}

InvariantFactors cokernel_mod(const ModMatrix& m) { return cokernel_mod(IntMatrix::from_mod(m), m.modulus()); }

// ---------------------------------------------------------------------------
// prime-field kernels

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref_mod_p(ModMatrix& a) {
  const Modulus p = a.modulus();
  std::vector<int> pivots;
  int r = 0;
  std::vector<std::int64_t> rowbuf;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < a.cols(); ++j) {
        auto t = a(r, j);
        a.set(r, j, a(pr, j));
        a.set(pr, j, t);
      }
    const std::int64_t inv = *mod_inverse(a(r, c), p);
    for (int j = c; j < a.cols(); ++j) a.set(r, j, mod_mul(a(r, j), inv, p));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      const std::int64_t f = a(i, c);
      if (f == 0) continue;
      for (int j = c; j < a.cols(); ++j)
        if (a(r, j) != 0) a.set(i, j, a(i, j) - mod_mul(f, a(r, j), p));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<std::vector<std::int64_t>> kernel_mod_p(const ModMatrix& m) {
  const Modulus p = m.modulus();
  if (!is_prime(p)) throw InputError("kernel_mod_p: " + std::to_string(p) + " is not prime");
  ModMatrix a = m;
  std::vector<int> pivots = rref_mod_p(a);
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<std::int64_t>> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::int64_t> v(m.cols(), 0);
    v[f] = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = mod_reduce(-a(static_cast<int>(k), f), p);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<std::int64_t>> kernel_mod_p(const IntMatrix& m, std::int64_t p) {
  if (!is_prime(p)) throw InputError("kernel_mod_p: " + std::to_string(p) + " is not prime");
  ModMatrix a(m.rows(), m.cols(), p);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) {
      BigInt r = m(i, j) % BigInt(static_cast<long>(p));
      a.set(i, j, r.get_si());
    }
  return kernel_mod_p(a);
}

int rank_mod_p(const ModMatrix& m) {
  if (!is_prime(m.modulus())) throw InputError("rank_mod_p: modulus is not prime");
  ModMatrix a = m;
  return static_cast<int>(rref_mod_p(a).size());
}

// ---------------------------------------------------------------------------
// Smith form inside Z_N

namespace {

struct Egcd {
  std::int64_t g, s, t;  // s*a + t*b = g >= 0
};

Egcd egcd(std::int64_t a, std::int64_t b) {
  std::int64_t r0 = a, r1 = b, s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  if (r0 < 0) return {-r0, -s0, -t0};
  return {r0, s0, t0};
}

// Ideal generator of a in Z_N: gcd(a, N), with gcd(0, N) = N.
std::int64_t ideal(std::int64_t a, Modulus n) { return std::gcd(a, n); }

// A unit u with u*a = gcd(a, N) mod N.
std::int64_t normalizing_unit(std::int64_t a, Modulus n) {
  const std::int64_t g = ideal(a, n);
  const std::int64_t m = n / g;
  std::int64_t u0 = m == 1 ? 0 : *mod_inverse(a / g, m);
  for (std::int64_t u = u0; u < u0 + n + m; u += m)
    if (std::gcd(u % n, n) == 1) return u % n;
  throw std::logic_error("normalizing unit not found");
}

class RingSnf {
 public:
  RingSnf(const ModMatrix& m, bool track_u)
      : a_(m),
        n_(m.modulus()),
        u_(track_u ? ModMatrix::identity(m.rows(), n_) : ModMatrix(0, 0, n_)),
        v_(ModMatrix::identity(m.cols(), n_)) {}

  ModSnfResult run() {
    ModSnfResult out;
    const int limit = std::min(a_.rows(), a_.cols());
    for (int t = 0; t < limit; ++t) {
      if (!move_best_to(t)) break;
      reduce_at(t);
      out.diag.push_back(a_(t, t));
    }
    out.U = std::move(u_);
    out.V = std::move(v_);
    return out;
  }

 private:
  bool move_best_to(int t) {
    int bi = -1, bj = -1;
    std::int64_t best = n_;
    for (int i = t; i < a_.rows(); ++i)
      for (int j = t; j < a_.cols(); ++j) {
        std::int64_t g = ideal(a_(i, j), n_);
        if (g < best) {
          best = g;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) return false;
    swap_rows(t, bi);
    swap_cols(t, bj);
    return true;
  }

  void reduce_at(int t) {
    for (;;) {
      for (int i = t + 1; i < a_.rows(); ++i)
        if (a_(i, t) != 0) row_bezout(t, i, t);
      for (int j = t + 1; j < a_.cols(); ++j)
        if (a_(t, j) != 0) col_bezout(t, j, t);
      bool clean = true;
      for (int i = t + 1; i < a_.rows() && clean; ++i) clean = a_(i, t) == 0;
      if (!clean) continue;
      // normalize the pivot to a divisor of N
      if (a_(t, t) != 0) scale_row(t, normalizing_unit(a_(t, t), n_));
      const std::int64_t p = a_(t, t) == 0 ? n_ : a_(t, t);
      int bad = -1;
      for (int i = t + 1; i < a_.rows() && bad < 0; ++i)
        for (int j = t + 1; j < a_.cols(); ++j)
          if (a_(i, j) % p != 0) {
            bad = i;
            break;
          }
      if (bad < 0) return;
      add_row(t, bad, 1);
    }
  }

  // Combines rows r (pivot) and i so that column c of row i becomes 0.
  void row_bezout(int r, int i, int c) {
    const std::int64_t a = a_(r, c), b = a_(i, c);
    if (b % a == 0) {
      mix_rows(a_, r, i, 1, 0, -(b / a), 1);
      mix_rows(u_, r, i, 1, 0, -(b / a), 1);
      return;
    }
    Egcd e = egcd(a, b);
    const std::int64_t ag = a / e.g, bg = b / e.g;
    // [s t; -b/g a/g] has determinant 1
    mix_rows(a_, r, i, e.s, e.t, -bg, ag);
    mix_rows(u_, r, i, e.s, e.t, -bg, ag);
  }

  void col_bezout(int c, int j, int r) {
    const std::int64_t a = a_(r, c), b = a_(r, j);
    if (b % a == 0) {
      mix_cols(a_, c, j, 1, 0, -(b / a), 1);
      mix_cols(v_, c, j, 1, 0, -(b / a), 1);
      return;
    }
    Egcd e = egcd(a, b);
    const std::int64_t ag = a / e.g, bg = b / e.g;
    mix_cols(a_, c, j, e.s, e.t, -bg, ag);
    mix_cols(v_, c, j, e.s, e.t, -bg, ag);
  }

  void mix_rows(ModMatrix& m, int r, int i, std::int64_t p, std::int64_t q, std::int64_t x, std::int64_t y) {
    for (int k = 0; k < m.cols(); ++k) {
      const std::int64_t ar = m(r, k), ai = m(i, k);
      m.set(r, k, mod_reduce(mod_mul(mod_reduce(p, n_), ar, n_) + mod_mul(mod_reduce(q, n_), ai, n_), n_));
      m.set(i, k, mod_reduce(mod_mul(mod_reduce(x, n_), ar, n_) + mod_mul(mod_reduce(y, n_), ai, n_), n_));
    }
  }

  void mix_cols(ModMatrix& m, int c, int j, std::int64_t p, std::int64_t q, std::int64_t x, std::int64_t y) {
    for (int k = 0; k < m.rows(); ++k) {
      const std::int64_t ac = m(k, c), aj = m(k, j);
      m.set(k, c, mod_reduce(mod_mul(mod_reduce(p, n_), ac, n_) + mod_mul(mod_reduce(q, n_), aj, n_), n_));
      m.set(k, j, mod_reduce(mod_mul(mod_reduce(x, n_), ac, n_) + mod_mul(mod_reduce(y, n_), aj, n_), n_));
    }
  }

  void scale_row(int r, std::int64_t u) {
    for (int k = 0; k < a_.cols(); ++k) a_.set(r, k, mod_mul(a_(r, k), u, n_));
    for (int k = 0; k < u_.cols(); ++k) u_.set(r, k, mod_mul(u_(r, k), u, n_));
  }

  void add_row(int dst, int src, std::int64_t k) {
    for (int c = 0; c < a_.cols(); ++c) a_.add(dst, c, mod_mul(k, a_(src, c), n_));
    for (int c = 0; c < u_.cols(); ++c) u_.add(dst, c, mod_mul(k, u_(src, c), n_));
  }

  void swap_rows(int a, int b) {
    if (a == b) return;
    for (ModMatrix* m : {&a_, &u_})
      for (int k = 0; k < m->cols(); ++k) {
        auto t = (*m)(a, k);
        m->set(a, k, (*m)(b, k));
        m->set(b, k, t);
      }
  }

  void swap_cols(int a, int b) {
    if (a == b) return;
    for (ModMatrix* m : {&a_, &v_})
      for (int k = 0; k < m->rows(); ++k) {
        auto t = (*m)(k, a);
        m->set(k, a, (*m)(k, b));
        m->set(k, b, t);
      }
  }

  ModMatrix a_;
  Modulus n_;
  ModMatrix u_, v_;
};

}  // namespace

ModSnfResult smith_normal_form_mod(const ModMatrix& m, bool track_u) { return RingSnf(m, track_u).run(); }

InvariantFactors cokernel_mod_ring(const ModMatrix& m) {
  const Modulus n = m.modulus();
  ModSnfResult s = smith_normal_form_mod(m, false);
  InvariantFactors out;
  for (auto d : s.diag)
    if (d > 1) out.push_back(d);
  if (n > 1)
    for (int i = static_cast<int>(s.diag.size()); i < m.rows(); ++i) out.push_back(n);
  return out;
}

}  // namespace qk
