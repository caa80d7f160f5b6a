#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "quandlekit/algebra.hpp"
#include "support/testkit.hpp"

using namespace qk;

namespace {

using QPtr = std::shared_ptr<const FiniteQuandle>;

QPtr share(FiniteQuandle q) { return std::make_shared<const FiniteQuandle>(std::move(q)); }

std::vector<QPtr> quandle_matrix() {
  return {share(make_dihedral(3)), share(make_dihedral(4)), share(make_dihedral(5)), share(make_trivial(2)),
          share(make_alexander(5, 2))};
}

void check_rep(const AlgebraRep& rep) {
  const ValidationReport r = verify_relations(rep);
  CHECK_MESSAGE(r.ok(), rep.label() << " on " << rep.quandle().label() << "\n" << r.summary());
  CHECK(testkit::oracle_relations_hold(rep));
}

struct NamedGroup {
  FiniteGroup group;
  std::vector<GroupHomomorphism> homs;
};

std::vector<NamedGroup> small_groups(Modulus n) {
  std::vector<NamedGroup> out;
  auto add = [&](FiniteGroup g) {
    NamedGroup e{g, {GroupHomomorphism::create(g, n, testkit::regular_matrices(g, n))}};
    out.push_back(std::move(e));
  };
  for (int k = 1; k <= 8; ++k) add(cyclic_group(k));
  add(symmetric_group(3));
  add(dihedral_group(4));
  add(quaternion_group());
  add(direct_product(cyclic_group(2), cyclic_group(2)));
  add(direct_product(cyclic_group(2), cyclic_group(4)));
  add(direct_product(cyclic_group(2), direct_product(cyclic_group(2), cyclic_group(2))));
  out[8].homs.push_back(permutation_homomorphism(3, n));
  for (int k = 2; k <= 8; ++k)
    for (std::int64_t u = 2; u < n; ++u)
      if (mod_inverse(u, n)) {
        // u must have multiplicative order dividing k
        std::int64_t p = 1;
        for (int i = 0; i < k; ++i) p = p * u % n;
        if (p == 1) out[k - 1].homs.push_back(cyclic_character(k, n, u));
      }
  return out;
}

}  // namespace

TEST_CASE("alexander reps") {
  for (const QPtr& q : quandle_matrix()) {
    for (const Modulus n : {2, 3, 5, 6, 7, 9})
      for (std::int64_t t = 1; t < n; ++t)
        if (mod_inverse(t, n)) check_rep(make_alexander_rep(q, n, 1, t));
    check_rep(make_alexander_rep(q, 5, ModMatrix::from_rows({{1, 2}, {0, 3}}, 5)));
  }
  const auto r = make_alexander_rep(share(make_dihedral(3)), 5, 1, 2);
  CHECK(r.eta(0, 1) == ModMatrix::scalar(1, 2, 5));
  CHECK(r.tau(2, 1) == ModMatrix::scalar(1, 4, 5));
  const auto trivial = make_alexander_rep(share(make_dihedral(3)), 5, 2, 1);
  CHECK(trivial.eta(1, 2) == ModMatrix::identity(2, 5));
  CHECK(trivial.tau(1, 2).is_zero());
  CHECK_THROWS_AS(make_alexander_rep(share(make_dihedral(3)), 6, 1, 2), InputError);
}

TEST_CASE("a rep with tau replaced by zero fails relation 4") {
  const QPtr q = share(make_dihedral(3));
  const int n = q->size();
  std::vector<ModMatrix> eta(n * n, ModMatrix::scalar(1, 2, 5)), tau(n * n, ModMatrix(1, 1, 5));
  const AlgebraRep rep = AlgebraRep::create(q, 5, 1, eta, tau);
  const ValidationReport r = verify_relations(rep);
  CHECK_FALSE(r.passed("relation-4"));
  CHECK_FALSE(testkit::oracle_relations_hold(rep));
}

TEST_CASE("singular eta is rejected") {
  const QPtr q = share(make_trivial(2));
  std::vector<ModMatrix> eta(4, ModMatrix::scalar(1, 1, 4)), tau(4, ModMatrix(1, 1, 4));
  eta[1] = ModMatrix::scalar(1, 2, 4);
  try {
    AlgebraRep::create(q, 4, 1, eta, tau);
    FAIL("expected ValidationError");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
  CHECK_THROWS_AS(AlgebraRep::create(q, 4, 1, std::vector<ModMatrix>(3, ModMatrix::scalar(1, 1, 4)), tau),
                  InputError);
}

TEST_CASE("conjugation reps") {
  for (const QPtr& q : quandle_matrix())
    for (const Modulus n : {2, 3, 5}) check_rep(make_conj_rep(testkit::inner_permutation_rep(q, n)));

  for (const Modulus n : {2, 3, 4, 7}) {
    const GroupRep g = perm3_group_rep(n);
    CHECK(g.quandle() == make_dihedral(3));
    const AlgebraRep rep = make_conj_rep(g);
    check_rep(rep);
    REQUIRE(rep.is_conj_type());
    for (int x = 0; x < 3; ++x) {
      CHECK(g.rho(x)(x, x) == 1);
      CHECK(rep.tau(x, x) + rep.eta(x, x) == ModMatrix::identity(3, n));
      for (int y = 0; y < 3; ++y) {
        CHECK(rep.eta(x, y) == g.rho(y));
        CHECK(rep.tau(x, y) == ModMatrix::identity(3, n) - g.rho(g.quandle().op(x, y)));
      }
    }
  }

  const QPtr t1 = share(make_trivial(1));
  const ModMatrix r0 = ModMatrix::from_rows({{0, 1}, {1, 0}}, 5);
  const AlgebraRep single = make_conj_rep(GroupRep::create(t1, 5, {r0}));
  CHECK(single.eta(0, 0) == r0);
  CHECK(single.tau(0, 0) == ModMatrix::identity(2, 5) - r0);

  const QPtr r3 = share(make_dihedral(3));
  const AlgebraRep id = make_conj_rep(GroupRep::create(r3, 5, std::vector<ModMatrix>(3, ModMatrix::identity(2, 5))));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) CHECK(id.tau(x, y).is_zero());
}

TEST_CASE("inconsistent group reps are rejected") {
  const QPtr r3 = share(make_dihedral(3));
  std::vector<ModMatrix> rho = perm3_group_rep(3).rho_table();
  rho[2] = ModMatrix::identity(3, 3);
  CHECK_THROWS_AS(GroupRep::create(r3, 3, rho), ValidationError);
  rho[2] = ModMatrix(3, 3, 3);
  CHECK_THROWS_AS(GroupRep::create(r3, 3, rho), ValidationError);
}

TEST_CASE("homomorphisms") {
  CHECK_NOTHROW(permutation_homomorphism(4, 3));
  CHECK_NOTHROW(cyclic_character(4, 5, 2));
  CHECK_THROWS_AS(cyclic_character(3, 5, 2), ValidationError);
  std::vector<ModMatrix> rho = testkit::regular_matrices(symmetric_group(3), 2);
  std::swap(rho[1], rho[2]);
  CHECK_THROWS(GroupHomomorphism::create(symmetric_group(3), 2, rho));
}

TEST_CASE("wada reps over every group of order at most 8") {
  int built = 0;
  for (const Modulus n : {2, 3, 5}) {
    for (const NamedGroup& ng : small_groups(n)) {
      std::vector<int> all(ng.group.size());
      for (int i = 0; i < ng.group.size(); ++i) all[i] = i;
      for (const WadaVariant v : {WadaVariant::core(), WadaVariant::conj_power(1), WadaVariant::conj_power(2),
                                  WadaVariant::conj_power(3), WadaVariant::conj_power(-1),
                                  WadaVariant::conj_power(-2)}) {
        const QPtr q = share(wada_quandle(ng.group, all, v));
        CHECK(verify_axioms(q->size(), q->table()).ok());
        for (const GroupHomomorphism& h : ng.homs) {
          const AlgebraRep rep = make_wada_rep(h, q, all, v);
          CHECK(testkit::oracle_relations_hold(rep));
          ++built;
        }
      }
    }
  }
  CHECK(built > 100);
}

TEST_CASE("wada conj_power 1 matches the conjugation rep") {
  const FiniteGroup s3 = symmetric_group(3);
  const std::vector<int> tr = transpositions(3);
  const GroupHomomorphism h = permutation_homomorphism(3, 5);
  const QPtr q = share(wada_quandle(s3, tr, WadaVariant::conj_power(1)));
  const AlgebraRep wada = make_wada_rep(h, q, tr, WadaVariant::conj_power(1));
  std::vector<ModMatrix> rho;
  for (int e : tr) rho.push_back(h.rho(e));
  const AlgebraRep conj = make_conj_rep(GroupRep::create(q, 5, rho));
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      CHECK(wada.eta(x, y) == conj.eta(x, y));
      CHECK(wada.tau(x, y) == conj.tau(x, y));
    }
}

TEST_CASE("wada core with trivial action is the t = -1 action") {
  for (int k = 2; k <= 7; ++k) {
    const FiniteGroup z = cyclic_group(k);
    std::vector<int> all(k);
    for (int i = 0; i < k; ++i) all[i] = i;
    const QPtr q = share(make_core(z));
    const AlgebraRep rep = make_wada_rep(cyclic_character(k, 7, 1), q, all, WadaVariant::core());
    check_rep(rep);
    for (int x = 0; x < k; ++x)
      for (int y = 0; y < k; ++y) {
        CHECK(rep.eta(x, y) == ModMatrix::scalar(1, -1, 7));
        CHECK(rep.tau(x, y) == ModMatrix::scalar(1, 2, 7));
      }
  }
}

TEST_CASE("wada variant must match the quandle") {
  const FiniteGroup z3 = cyclic_group(3);
  const std::vector<int> all = {0, 1, 2};
  const QPtr core = share(make_core(z3));
  CHECK_THROWS_AS(make_wada_rep(cyclic_character(3, 7, 2), core, all, WadaVariant::conj_power(1)), InputError);
}

TEST_CASE("bar elements") {
  const QPtr r3 = share(make_dihedral(3));
  const auto alex = make_alexander_rep(r3, 5, 1, 2);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      const BarPair b = bar(alex, x, y);
      CHECK(b.eta == ModMatrix::scalar(1, 3, 5));  // 2^-1
      CHECK(b.tau == ModMatrix::scalar(1, -3 * (1 - 2), 5));
    }
  const auto triv = make_alexander_rep(r3, 5, 1, 1);
  CHECK(bar(triv, 1, 2).eta == ModMatrix::identity(1, 5));
  CHECK(bar(triv, 1, 2).tau.is_zero());

  for (const QPtr& q : quandle_matrix()) {
    const AlgebraRep rep = make_conj_rep(testkit::inner_permutation_rep(q, 3));
    for (int x = 0; x < q->size(); ++x)
      for (int y = 0; y < q->size(); ++y)
        CHECK(rep.eta(q->inv_op(x, y), y) * bar(rep, x, y).eta == ModMatrix::identity(rep.dim(), 3));
  }
}

TEST_CASE("positive then negative crossing rule returns every colored pair") {
  const AlgebraRep rep = make_conj_rep(perm3_group_rep(3));
  const auto& q = rep.quandle();
  const auto vectors = testkit::all_vectors(3, 3);
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      const int u = y, v = q.op(x, y);
      const BarPair b = bar(rep, v, u);
      for (const auto& av : vectors)
        for (const auto& bv : vectors) {
          const std::vector<std::int64_t> a(av.begin(), av.end()), bb(bv.begin(), bv.end());
          const auto ea = rep.eta(x, y).apply(a), tb = rep.tau(x, y).apply(bb);
          std::vector<std::int64_t> second(3);
          for (int i = 0; i < 3; ++i) second[i] = (ea[i] + tb[i]) % 3;
          // negative rule on (first, second) = (bb, second)
          const auto e2 = b.eta.apply(second), t2 = b.tau.apply(bb);
          std::vector<std::int64_t> back(3);
          for (int i = 0; i < 3; ++i) back[i] = (e2[i] + t2[i]) % 3;
          CHECK(back == a);
        }
    }
}
