#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qk {

/// Laurent polynomial in t with rational coefficients; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);
  static LaurentPoly monomial(const mpq_class& coeff, int exponent);
  /// Coefficients listed from exponent `low` upward.
  static LaurentPoly from_coeffs(std::vector<long> coeffs, int low = 0);

  bool is_zero() const noexcept { return terms_.empty(); }
  /// Lowest and highest exponents; only meaningful for nonzero polynomials.
  int low() const { return terms_.begin()->first; }
  int high() const { return terms_.rbegin()->first; }
  mpq_class coeff(int exponent) const;
  const std::map<int, mpq_class>& terms() const noexcept { return terms_; }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly shifted(int k) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  /// Exact division; throws std::domain_error when o does not divide *this.
  LaurentPoly exact_div(const LaurentPoly& o) const;
  mpq_class evaluate(const mpq_class& t) const;

  /// Unit-normal representative: lowest exponent 0, integer coprime coefficients,
  /// positive leading coefficient. Zero stays zero.
  LaurentPoly normalized() const;

  /// Human form like "t^2 - 3t + 1".
  std::string str() const;

 private:
  void add_term(int e, const mpq_class& c);
  std::map<int, mpq_class> terms_;
};

/// Greatest common divisor over Q[t, t^-1], normalized.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

LaurentPoly laurent_det(const LaurentMatrix& m);

/// gcd of all k x k minors, normalized; the zero polynomial if every minor vanishes.
/// k = 0 yields 1.
LaurentPoly laurent_gcd_of_minors(const LaurentMatrix& m, int k);

}  // namespace qk
