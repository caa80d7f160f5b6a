#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <set>

#include "quandlekit/laurent.hpp"
#include "quandlekit/linalg.hpp"
#include "support/testkit.hpp"

using namespace qk;
using testkit::Rng;

namespace {

// Plain cofactor determinant on small int64 matrices.
std::int64_t det_oracle(const std::vector<std::vector<std::int64_t>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * a[0][c] * det_oracle(minor);
  }
  return d;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask)
    if (std::popcount(static_cast<unsigned>(mask)) == k) {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) s.push_back(i);
      out.push_back(s);
    }
  return out;
}

// Invariant factors from determinantal divisors: d_k = D_k / D_{k-1}.
std::vector<std::int64_t> snf_oracle(const std::vector<std::vector<std::int64_t>>& a) {
  const int rows = static_cast<int>(a.size()), cols = static_cast<int>(a[0].size());
  std::vector<std::int64_t> out;
  std::int64_t prev = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::int64_t g = 0;
    for (const auto& rs : subsets(rows, k))
      for (const auto& cs : subsets(cols, k)) {
        std::vector<std::vector<std::int64_t>> sub(k, std::vector<std::int64_t>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) sub[i][j] = a[rs[i]][cs[j]];
        g = std::gcd(g, std::abs(det_oracle(sub)));
      }
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

std::vector<std::vector<std::int64_t>> to_int64(const IntMatrix& m) {
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) a[i][j] = m(i, j).get_si();
  return a;
}

// Order of the subgroup of (Z_N)^r spanned by the columns, by closure.
std::int64_t span_size(const ModMatrix& m) {
  std::set<std::vector<std::int64_t>> seen{std::vector<std::int64_t>(m.rows(), 0)};
  std::vector<std::vector<std::int64_t>> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (const auto& v : frontier)
      for (int c = 0; c < m.cols(); ++c) {
        auto w = v;
        for (int r = 0; r < m.rows(); ++r) w[r] = (w[r] + m(r, c)) % m.modulus();
        if (seen.insert(w).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return static_cast<std::int64_t>(seen.size());
}

std::int64_t product(const InvariantFactors& f) {
  std::int64_t p = 1;
  for (auto d : f) p *= d;
  return p;
}

bool is_divisor_chain(const InvariantFactors& f, Modulus n) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] <= 1 || n % f[i] != 0) return false;
    if (i + 1 < f.size() && f[i + 1] % f[i] != 0) return false;
  }
  return true;
}

IntMatrix random_unimodular(Rng& rng, int n) {
  IntMatrix u = IntMatrix::identity(n);
  for (int s = 0; s < 3 * n; ++s) {
    const int a = static_cast<int>(rng.uniform(0, n - 1)), b = static_cast<int>(rng.uniform(0, n - 1));
    if (a != b) u.add_row(a, b, BigInt(static_cast<long>(rng.uniform(-2, 2))));
  }
  return u;
}

}  // namespace

TEST_CASE("integer smith normal form examples") {
  const auto m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const SnfResult r = smith_normal_form(m);
  REQUIRE(r.rank() == 3);
  CHECK(r.diag[0] == 2);
  CHECK(r.diag[1] == 6);
  CHECK(r.diag[2] == 12);

  CHECK(smith_normal_form(IntMatrix(2, 3)).rank() == 0);
  CHECK(smith_normal_form(IntMatrix::from_rows({{0, 0}, {0, -7}})).diag == std::vector<BigInt>{7});
}

TEST_CASE("smith normal form agrees with determinantal divisors on 1000 random matrices") {
  Rng rng(7);
  for (int trial = 0; trial < 1000; ++trial) {
    const int rows = static_cast<int>(rng.uniform(1, 4)), cols = static_cast<int>(rng.uniform(1, 4));
    const IntMatrix m = rng.int_matrix(rows, cols, -9, 9);
    const SnfResult r = smith_normal_form(m, true);
    const auto expected = snf_oracle(to_int64(m));
    REQUIRE(r.rank() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(r.diag[i] == expected[i]);

    REQUIRE(r.U.has_value());
    REQUIRE(r.V.has_value());
    CHECK(abs(r.U->det()) == 1);
    CHECK(abs(r.V->det()) == 1);
    const IntMatrix d = *r.U * m * *r.V;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const BigInt want = (i == j && i < static_cast<int>(r.rank())) ? r.diag[i] : BigInt(0);
        CHECK(d(i, j) == want);
      }
  }
}

TEST_CASE("exact determinant") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 5));
    const IntMatrix m = rng.int_matrix(n, n, -20, 20);
    CHECK(m.det() == det_oracle(to_int64(m)));
  }
}

TEST_CASE("cokernel examples") {
  CHECK(cokernel_mod(IntMatrix::from_rows({{2}}), 6) == InvariantFactors{2});
  CHECK(cokernel_mod(IntMatrix::from_rows({{3}}), 6) == InvariantFactors{3});
  CHECK(cokernel_mod(IntMatrix(2, 1), 5) == InvariantFactors{5, 5});
  CHECK(cokernel_mod(IntMatrix::from_rows({{1, 0}, {0, 1}}), 7).empty());
  CHECK(cokernel_mod(IntMatrix::from_rows({{4, 0}, {0, 6}}), 12) == (InvariantFactors{2, 12}));
}

TEST_CASE("cokernel order matches column-span enumeration") {
  Rng rng(13);
  for (const Modulus n : {2, 3, 4, 5, 6, 8, 9, 12}) {
    for (int trial = 0; trial < 40; ++trial) {
      const int rows = static_cast<int>(rng.uniform(1, 3)), cols = static_cast<int>(rng.uniform(1, 3));
      const ModMatrix m = rng.mod_matrix(rows, cols, n);
      const InvariantFactors f = cokernel_mod(m);
      CHECK(is_divisor_chain(f, n));
      CHECK(product(f) * span_size(m) == testkit::ipow(n, rows));
      CHECK(cokernel_mod_ring(m) == f);
    }
  }
}

TEST_CASE("cokernel is invariant under unimodular changes of basis") {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Modulus n = rng.uniform(2, 30);
    const int rows = static_cast<int>(rng.uniform(1, 4)), cols = static_cast<int>(rng.uniform(1, 4));
    const IntMatrix m = rng.int_matrix(rows, cols, 0, n - 1);
    const IntMatrix moved = random_unimodular(rng, rows) * m * random_unimodular(rng, cols);
    CHECK(cokernel_mod(moved, n) == cokernel_mod(m, n));
  }
}

TEST_CASE("ring smith form over Z_N") {
  Rng rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const Modulus n = rng.uniform(2, 36);
    const int rows = static_cast<int>(rng.uniform(1, 4)), cols = static_cast<int>(rng.uniform(1, 4));
    const ModMatrix m = rng.mod_matrix(rows, cols, n);
    const ModSnfResult r = smith_normal_form_mod(m);
    CHECK(r.U.inverse().has_value());
    CHECK(r.V.inverse().has_value());
    const ModMatrix d = r.U * m * r.V;
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        const std::int64_t want = (i == j && i < static_cast<int>(r.diag.size())) ? r.diag[i] : 0;
        CHECK(d(i, j) == want);
      }
    for (std::size_t i = 0; i < r.diag.size(); ++i) {
      CHECK(n % r.diag[i] == 0);
      CHECK(r.diag[i] < n);
      if (i + 1 < r.diag.size()) CHECK(r.diag[i + 1] % r.diag[i] == 0);
    }
  }
}

TEST_CASE("every 2x2 matrix over Z_3 and Z_4") {
  for (const Modulus n : {3, 4}) {
    for (const auto& v : testkit::all_vectors(static_cast<int>(n), 4)) {
      const ModMatrix m = ModMatrix::from_rows({{v[0], v[1]}, {v[2], v[3]}}, n);
      const InvariantFactors f = cokernel_mod_ring(m);
      CHECK(product(f) * span_size(m) == n * n);
      CHECK(f == cokernel_mod(m));
    }
  }
}

TEST_CASE("kernels mod p") {
  Rng rng(23);
  for (const std::int64_t p : {2, 3, 5, 7}) {
    for (int trial = 0; trial < 30; ++trial) {
      const int rows = static_cast<int>(rng.uniform(1, 3)), cols = static_cast<int>(rng.uniform(1, 4));
      const ModMatrix m = rng.mod_matrix(rows, cols, p);
      const auto basis = kernel_mod_p(m);
      std::int64_t count = 0;
      for (const auto& v : testkit::all_vectors(static_cast<int>(p), cols)) {
        const std::vector<std::int64_t> x(v.begin(), v.end());
        bool zero = true;
        for (auto e : m.apply(x)) zero = zero && e == 0;
        count += zero;
      }
      CHECK(testkit::ipow(p, static_cast<int>(basis.size())) == count);
      CHECK(rank_mod_p(m) == cols - static_cast<int>(basis.size()));
      for (const auto& b : basis)
        for (auto e : m.apply(b)) CHECK(e == 0);
    }
  }
  CHECK_THROWS_AS(kernel_mod_p(ModMatrix(1, 1, 4)), InputError);
}

TEST_CASE("modular inverses") {
  CHECK(mod_inverse(3, 7) == 5);
  CHECK_FALSE(mod_inverse(2, 4).has_value());
  const ModMatrix a = ModMatrix::from_rows({{1, 2}, {3, 4}}, 5);
  REQUIRE(a.inverse().has_value());
  CHECK(*a.inverse() * a == ModMatrix::identity(2, 5));
  CHECK_FALSE(ModMatrix::from_rows({{2, 0}, {0, 1}}, 4).inverse().has_value());
  CHECK(a.pow(-1) == *a.inverse());
  CHECK(a.pow(3) == a * a * a);
}

TEST_CASE("laurent polynomials") {
  const LaurentPoly t = LaurentPoly::monomial(1, 1);
  const LaurentPoly tri = t * t - t + LaurentPoly(1);
  CHECK(tri.str() == "t^2 - t + 1");
  CHECK(LaurentPoly::from_coeffs({1, -3, 1}).str() == "t^2 - 3t + 1");
  CHECK((tri * (t - LaurentPoly(1))).exact_div(tri) == t - LaurentPoly(1));
  CHECK_THROWS_AS(tri.exact_div(t - LaurentPoly(1)), std::domain_error);
  CHECK(laurent_gcd(tri * (t + LaurentPoly(1)), tri.shifted(-3) * LaurentPoly(4)) == tri);
  CHECK((-tri.shifted(-2)).normalized() == tri);
  CHECK(tri.evaluate(-1) == 3);

  const LaurentMatrix m = {{LaurentPoly(1) - t, t}, {LaurentPoly(-1), LaurentPoly(1) - t}};
  CHECK(laurent_det(m) == (LaurentPoly(1) - t) * (LaurentPoly(1) - t) + t);
  CHECK(laurent_gcd_of_minors(m, 2) == tri);
  CHECK(laurent_gcd_of_minors(m, 1) == LaurentPoly(1));
  CHECK(laurent_gcd_of_minors(m, 0) == LaurentPoly(1));
}

TEST_CASE("laurent determinant agrees with evaluation") {
  Rng rng(29);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng.uniform(1, 4));
    LaurentMatrix m(n, std::vector<LaurentPoly>(n));
    for (auto& row : m)
      for (auto& e : row) e = LaurentPoly::from_coeffs({rng.uniform(-3, 3), rng.uniform(-3, 3)},
                                                       static_cast<int>(rng.uniform(-1, 1)));
    const LaurentPoly d = laurent_det(m);
    for (const long t0 : {2, 3, -2}) {
      std::vector<std::vector<std::int64_t>> a(n, std::vector<std::int64_t>(n));
      // scale by t0^n to clear negative exponents
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const mpq_class v = m[i][j].evaluate(t0) * t0;
          a[i][j] = mpz_class(v).get_si();
        }
      mpq_class expected = det_oracle(a);
      for (int i = 0; i < n; ++i) expected /= t0;
      CHECK(d.evaluate(t0) == expected);
    }
  }
}
