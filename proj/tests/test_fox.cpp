#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "quandlekit/fox.hpp"
#include "quandlekit/io.hpp"
#include "support/testkit.hpp"

using namespace qk;
using testkit::Rng;

namespace {

FreeWord x(int g, int e = 1) { return FreeWord::generator(g, e); }

FreeWord random_word(Rng& rng, int gens, int max_len) {
  std::vector<FreeWord::Letter> ls;
  const int len = static_cast<int>(rng.uniform(0, max_len));
  for (int i = 0; i < len; ++i) ls.push_back({static_cast<int>(rng.uniform(0, gens - 1)), rng.coin() ? 1 : -1});
  return FreeWord(ls);
}

GroupRingElement ring(const FreeWord& w) { return GroupRingElement(w); }

std::int64_t count_colorings(int p, const BraidWord& w) {
  return static_cast<std::int64_t>(colorings_of_closure(make_dihedral(p), w).size());
}

}  // namespace

TEST_CASE("free words reduce") {
  const FreeWord w({{0, 1}, {1, 1}, {1, -1}, {2, -1}});
  CHECK(w.str() == "x0 x2^-1");
  CHECK((w * w.inverse()).empty());
  CHECK(FreeWord().str() == "1");
  CHECK(w.exponent_sum() == 0);
  CHECK_THROWS_AS(FreeWord({{0, 2}}), InputError);
  CHECK_THROWS_AS(FreeWord({{-1, 1}}), InputError);
}

TEST_CASE("free derivatives of a conjugate") {
  const FreeWord c = x(1) * x(0) * x(1, -1);
  CHECK(fox_derivative(c, 0) == ring(x(1)));
  CHECK(fox_derivative(c, 1) == GroupRingElement::one() - ring(c));
  CHECK(fox_derivative(x(0, -1), 0) == -ring(x(0, -1)));
  CHECK(fox_derivative(x(0), 0) == GroupRingElement::one());
  CHECK(fox_derivative(x(0), 1).is_zero());
  CHECK(fox_derivative(FreeWord(), 0).is_zero());
}

TEST_CASE("product and inverse rules on 1000 random pairs") {
  Rng rng(79);
  for (int trial = 0; trial < 1000; ++trial) {
    const FreeWord u = random_word(rng, 3, 6), v = random_word(rng, 3, 6);
    const int i = static_cast<int>(rng.uniform(0, 2));
    CHECK(fox_derivative(u * v, i) == fox_derivative(u, i) + ring(u) * fox_derivative(v, i));
    CHECK(fox_derivative(u.inverse(), i) == -(ring(u.inverse()) * fox_derivative(u, i)));
  }
}

TEST_CASE("fundamental formula") {
  Rng rng(83);
  for (int trial = 0; trial < 300; ++trial) {
    const FreeWord w = random_word(rng, 4, 10);
    GroupRingElement sum;
    for (int j = 0; j < 4; ++j) sum = sum + fox_derivative(w, j) * (ring(x(j)) - GroupRingElement::one());
    CHECK(sum == ring(w) - GroupRingElement::one());
  }
  for (const auto& [name, w] : knot_table()) {
    const WirtingerPresentation p = wirtinger_from_braid(w);
    for (const FreeWord& r : p.relators) {
      GroupRingElement sum;
      for (int j = 0; j < p.generators; ++j)
        sum = sum + fox_derivative(r, j) * (ring(x(j)) - GroupRingElement::one());
      CHECK(sum == ring(r) - GroupRingElement::one());
    }
  }
}

TEST_CASE("wirtinger presentations") {
  const WirtingerPresentation unknot = wirtinger_from_braid(BraidWord::create(1, {}));
  CHECK(unknot.generators == 1);
  CHECK(unknot.relators.empty());

  const WirtingerPresentation tre = wirtinger_from_braid(BraidWord::create(2, {1, 1, 1}));
  CHECK(tre.generators == 3);
  CHECK(tre.relators.size() == 3);
  for (const auto& [name, w] : knot_table()) {
    const WirtingerPresentation p = wirtinger_from_braid(w);
    CHECK(p.arc_sites.size() == static_cast<std::size_t>(p.generators));
    for (const FreeWord& r : p.relators) {
      CHECK(has_conjugation_shape(r));
      CHECK(r.exponent_sum() == 0);
    }
  }
  CHECK_FALSE(has_conjugation_shape(x(0) * x(1)));
}

TEST_CASE("arc colors satisfy the relators") {
  const FiniteQuandle r3 = make_dihedral(3);
  for (const auto& [name, w] : knot_table()) {
    const WirtingerPresentation p = wirtinger_from_braid(w);
    for (const auto& c : colorings_of_closure(r3, w)) {
      const std::vector<int> colors = arc_colors(p, act(r3, w, c));
      for (const FreeWord& r : p.relators) {
        const auto& l = r.letters();
        CHECK(colors[l[3].gen] == r3.op(colors[l[1].gen], colors[l[0].gen]));
      }
    }
  }
}

TEST_CASE("twisted matrix with trivial rho") {
  const Modulus n = 101;
  const WirtingerPresentation p = wirtinger_from_braid(BraidWord::create(2, {1, 1, 1}));
  const TwistedMatrix m = twisted_matrix(p, std::vector<ModMatrix>(3, ModMatrix::identity(1, n)));
  REQUIRE(m.rows == 3);
  REQUIRE(m.cols == 3);
  for (int i = 0; i < 3; ++i) {
    std::vector<std::map<int, std::int64_t>> row;
    for (int j = 0; j < 3; ++j) {
      std::map<int, std::int64_t> poly;
      for (const auto& [e, c] : m.entries[i][j].terms)
        if (c(0, 0) != 0) poly[e] = c(0, 0);
      row.push_back(poly);
    }
    std::sort(row.begin(), row.end());
    std::vector<std::map<int, std::int64_t>> expected = {{{1, 1}}, {{0, n - 1}}, {{0, 1}, {1, n - 1}}};
    std::sort(expected.begin(), expected.end());
    CHECK(row == expected);
  }
  const ModMatrix at_one = m.evaluate(1);
  for (int i = 0; i < 3; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < 3; ++j) s += at_one(i, j);
    CHECK(s % n == 0);
  }
  CHECK_THROWS_AS(m.evaluate(0), InputError);
}

TEST_CASE("twisted matrix rows reproduce the conjugation rep") {
  const AlgebraRep rep = make_conj_rep(perm3_group_rep(5));
  const auto& rho = *rep.conj_action();
  const FiniteQuandle& r3 = rep.quandle();
  int checked = 0;
  for (const auto& [name, w] : knot_table()) {
    const WirtingerPresentation p = wirtinger_from_braid(w);
    for (const auto& c : colorings_of_closure(r3, w)) {
      const std::vector<int> colors = arc_colors(p, act(r3, w, c));
      std::vector<ModMatrix> images;
      for (int col : colors) images.push_back(rho[col]);
      const TwistedMatrix m = twisted_matrix(p, images);
      const ModMatrix e = m.evaluate(1);
      for (std::size_t i = 0; i < p.relators.size(); ++i) {
        const auto& l = p.relators[i].letters();
        const int s = l[0].gen, j = l[1].gen, ell = l[3].gen;
        if (s == j || j == ell || s == ell) continue;
        const int ri = static_cast<int>(i) * 3;
        CHECK(e.block(ri, j * 3, 3, 3) == rep.eta(colors[j], colors[s]));
        CHECK(e.block(ri, s * 3, 3, 3) == rep.tau(colors[j], colors[s]));
        ++checked;
      }
    }
  }
  CHECK(checked > 20);
}

TEST_CASE("inconsistent rho is rejected") {
  const WirtingerPresentation p = wirtinger_from_braid(BraidWord::create(2, {1, 1, 1}));
  const GroupRep g = perm3_group_rep(3);
  const std::vector<ModMatrix> bad = {g.rho(0), g.rho(0), g.rho(1)};
  CHECK_THROWS_AS(twisted_matrix(p, bad), ValidationError);
}

TEST_CASE("alexander polynomials") {
  CHECK(alexander_polynomial(BraidWord::create(1, {})) == LaurentPoly(1));
  CHECK(alexander_polynomial(parse_braid("k=2; 1 1 1")).str() == "t^2 - t + 1");
  CHECK(alexander_polynomial(parse_braid("k=3; 1 -2 1 -2")).str() == "t^2 - 3t + 1");
  CHECK(alexander_polynomial(parse_braid("k=2; 1 1 1 1 1")).str() == "t^4 - t^3 + t^2 - t + 1");
  CHECK_THROWS_AS(alexander_polynomial(parse_braid("k=2; 1 1")), InputError);
  for (const auto& [name, w] : knot_table()) {
    const LaurentPoly d = alexander_polynomial(w);
    CHECK_MESSAGE(d == testkit::burau_alexander(w), name);
    CHECK(alexander_polynomial(w, 0) == d);
    CHECK(alexander_matrix(wirtinger_from_braid(w)).size() == wirtinger_from_braid(w).relators.size());
  }
}

TEST_CASE("alexander polynomial agrees with the burau oracle on random knots") {
  Rng rng(89);
  int knots = 0;
  while (knots < 40) {
    const BraidWord w = rng.braid(static_cast<int>(rng.uniform(2, 4)), static_cast<int>(rng.uniform(1, 9)));
    if (component_count(w) != 1) continue;
    ++knots;
    const LaurentPoly d = alexander_polynomial(w);
    CHECK_MESSAGE(d == testkit::burau_alexander(w), w.str());
    CHECK(alexander_polynomial(w, 0) == d);
    CHECK(abs(d.evaluate(1)) == 1);
  }
}

TEST_CASE("determinants predict dihedral coloring counts") {
  CHECK(knot_determinant(LaurentPoly::from_coeffs({1, -1, 1})) == 3);
  for (const auto& [name, w] : knot_table()) {
    const BigInt det = knot_determinant(alexander_polynomial(w));
    for (int p : {3, 5, 7, 11}) {
      const bool divides = mpz_divisible_ui_p(det.get_mpz_t(), p) != 0;
      CHECK_MESSAGE(count_colorings(p, w) == (divides ? p * p : p), name << " mod " << p);
    }
  }
}
