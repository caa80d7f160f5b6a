#include "quandlekit/laurent.hpp"

#include <stdexcept>

namespace qk {

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_[0] = constant;
}

LaurentPoly LaurentPoly::monomial(const mpq_class& coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::from_coeffs(std::vector<long> coeffs, int low) {
  LaurentPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) p.add_term(low + static_cast<int>(i), coeffs[i]);
  return p;
}

mpq_class LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void LaurentPoly::add_term(int e, const mpq_class& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

namespace {

// Long division of ordinary polynomials (lowest exponent >= 0), returns {quotient, remainder}.
std::pair<LaurentPoly, LaurentPoly> poly_divmod(LaurentPoly a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  LaurentPoly q;
  const int db = b.high();
  const mpq_class lead = b.coeff(db);
  while (!a.is_zero() && a.high() >= db) {
    const int shift = a.high() - db;
    LaurentPoly term = LaurentPoly::monomial(a.coeff(a.high()) / lead, shift);
    q += term;
    a = a - term * b;
  }
  return {q, a};
}

}  // namespace

LaurentPoly LaurentPoly::exact_div(const LaurentPoly& o) const {
  if (o.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return {};
  const int la = low(), lb = o.low();
  auto [q, r] = poly_divmod(shifted(-la), o.shifted(-lb));
  if (!r.is_zero()) throw std::domain_error("inexact Laurent division");
  return q.shifted(la - lb);
}

mpq_class LaurentPoly::evaluate(const mpq_class& t) const {
  mpq_class sum = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class p = 1;
    mpq_class base = e >= 0 ? t : mpq_class(1) / t;
    for (int i = 0; i < std::abs(e); ++i) p *= base;
    sum += c * p;
  }
  return sum;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  LaurentPoly r = shifted(-low());
  mpz_class den_lcm = 1, num_gcd = 0;
  for (const auto& [e, c] : r.terms_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
  }
  mpq_class scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (r.coeff(r.high()) < 0) scale = -scale;
  for (auto& [e, c] : r.terms_) c *= scale;
  return r;
}

std::string LaurentPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const int e = it->first;
    mpq_class c = it->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    const bool unit = c == 1;
    if (e == 0 || !unit) out += c.get_str();
    if (e == 1)
      out += "t";
    else if (e != 0)
      out += "t^" + std::to_string(e);
  }
  return out;
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  LaurentPoly x = a.shifted(-a.low()), y = b.shifted(-b.low());
  while (!y.is_zero()) {
    auto [q, r] = poly_divmod(x, y);
    x = y;
    y = r;
  }
  return x.normalized();
}

LaurentPoly laurent_det(const LaurentMatrix& m) {
  const int n = static_cast<int>(m.size());
  if (n == 0) return LaurentPoly(1);
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("laurent_det: matrix is not square");
  LaurentMatrix a = m;
  LaurentPoly prev(1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return {};
      std::swap(a[k], a[p]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]).exact_div(prev);
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

namespace {

bool next_combination(std::vector<int>& idx, int n) {
  const int k = static_cast<int>(idx.size());
  int i = k - 1;
  while (i >= 0 && idx[i] == n - k + i) --i;
  if (i < 0) return false;
  ++idx[i];
  for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  return true;
}

}  // namespace

LaurentPoly laurent_gcd_of_minors(const LaurentMatrix& m, int k) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  if (k < 0 || k > std::min(rows, cols)) throw std::invalid_argument("laurent_gcd_of_minors: bad minor size");
  if (k == 0) return LaurentPoly(1);
  LaurentPoly g;
  std::vector<int> ri(k), ci(k);
  for (int i = 0; i < k; ++i) ri[i] = i;
  do {
    for (int i = 0; i < k; ++i) ci[i] = i;
    do {
      LaurentMatrix sub(k, std::vector<LaurentPoly>(k));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub[a][b] = m[ri[a]][ci[b]];
      g = laurent_gcd(g, laurent_det(sub));
      if (g == LaurentPoly(1)) return g;
    } while (next_combination(ci, cols));
  } while (next_combination(ri, rows));
  return g.normalized();
}

}  // namespace qk
