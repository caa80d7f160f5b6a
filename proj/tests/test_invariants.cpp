#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>
#include <set>

#include "quandlekit/invariants.hpp"
#include "support/testkit.hpp"

using namespace qk;
using testkit::Rng;

namespace {

using QPtr = std::shared_ptr<const FiniteQuandle>;
QPtr share(FiniteQuandle q) { return std::make_shared<const FiniteQuandle>(std::move(q)); }

BraidWord word(int k, std::vector<int> letters) { return BraidWord::create(k, std::move(letters)); }

const BraidWord trefoil = word(2, {1, 1, 1});
const BraidWord figure_eight = word(3, {1, -2, 1, -2});

std::vector<BraidWord> markov_family(const BraidWord& w) {
  std::set<BraidWord> out{w};
  for (const BraidWord& v : markov_moves(w)) {
    out.insert(v);
    for (const BraidWord& u : markov_moves(v)) out.insert(u);
  }
  return {out.begin(), out.end()};
}

// Sum over crossings of sign * rho(c_{k-1}) ... rho(c_{i+2}) * kappa(source, over).
std::vector<std::int64_t> state_sum_oracle(const AlgebraRep& rep, const Cochain& kappa, const BraidWord& w,
                                           std::vector<int> c) {
  const auto& q = rep.quandle();
  const auto& rho = *rep.conj_action();
  const Modulus n = rep.modulus();
  std::vector<std::int64_t> total(rep.dim(), 0);
  for (int e : w.letters) {
    const int i = std::abs(e) - 1;
    ModMatrix a = ModMatrix::identity(rep.dim(), n);
    for (int j = w.strands - 1; j >= i + 2; --j) a = a * rho[c[j]];
    const int u = c[i], v = c[i + 1];
    int src, over, sign;
    if (e > 0) {
      src = u, over = v, sign = 1;
      c[i] = v, c[i + 1] = q.op(u, v);
    } else {
      src = q.inv_op(v, u), over = u, sign = -1;
      c[i] = src, c[i + 1] = u;
    }
    const auto contrib = a.apply(kappa.at(std::vector<int>{src, over}));
    for (int r = 0; r < rep.dim(); ++r) total[r] = mod_reduce(total[r] + sign * contrib[r], n);
  }
  return total;
}

std::vector<Cochain> quandle_2_cocycles(const AlgebraRep& rep) {
  return cocycle_space(ComplexConfig(rep, 0, Variant::Quandle), 2);
}

InvariantMultiset multiset(std::vector<std::vector<std::int64_t>> entries, Modulus n = 3, int dim = 1) {
  InvariantMultiset m;
  m.meta.modulus = n;
  m.meta.dim = dim;
  std::sort(entries.begin(), entries.end());
  m.entries = std::move(entries);
  return m;
}

}  // namespace

TEST_CASE("zero cocycle gives zero weights") {
  const AlgebraRep rep = make_conj_rep(perm3_group_rep(3));
  const Cochain zero = Cochain::zero(rep, 2);
  for (const BraidWord& w : {trefoil, figure_eight}) {
    const auto colorings = colorings_of_closure(rep.quandle(), w);
    const InvariantMultiset phi = cocycle_invariant(rep, zero, w);
    CHECK(phi.entries.size() == colorings.size());
    for (const auto& e : phi.entries) CHECK(e == std::vector<std::int64_t>(3, 0));
    for (const auto& c : colorings)
      for (int r = 0; r < static_cast<int>(w.letters.size()); ++r)
        CHECK(boltzmann_weight(rep, zero, w, c, r) == std::vector<std::int64_t>(3, 0));
  }
}

TEST_CASE("constant colorings have zero weights under trivial action") {
  const AlgebraRep triv = make_alexander_rep(share(make_dihedral(3)), 2, 1, 1);
  for (const Cochain& k : quandle_2_cocycles(triv))
    for (int a = 0; a < 3; ++a)
      for (int r = 0; r < 3; ++r) CHECK(boltzmann_weight(triv, k, trefoil, std::vector<int>{a, a}, r)[0] == 0);
}

TEST_CASE("non-cocycles and unsuitable reps are rejected") {
  const AlgebraRep rep = make_conj_rep(perm3_group_rep(3));
  Cochain bad = Cochain::zero(rep, 2);
  bad.set(std::vector<int>{0, 1}, std::vector<std::int64_t>{1, 0, 0});
  CHECK_THROWS_AS(require_quandle_2_cocycle(rep, bad), ValidationError);
  CHECK_THROWS_AS(cocycle_invariant(rep, bad, trefoil), ValidationError);

  Cochain diagonal = Cochain::zero(rep, 2);
  diagonal.set(std::vector<int>{1, 1}, std::vector<std::int64_t>{1, 1, 1});
  CHECK_THROWS_AS(cocycle_invariant(rep, diagonal, trefoil), ValidationError);

  const FiniteGroup s3 = symmetric_group(3);
  const std::vector<int> all = {0, 1, 2, 3, 4, 5};
  const QPtr core = share(wada_quandle(s3, all, WadaVariant::core()));
  const AlgebraRep wada = make_wada_rep(permutation_homomorphism(3, 3), core, all, WadaVariant::core());
  CHECK_THROWS_AS(cocycle_invariant(wada, Cochain::zero(wada, 2), trefoil), InputError);
}

TEST_CASE("state sums agree with the oracle and the chain pairing") {
  const AlgebraRep rep = make_conj_rep(perm3_group_rep(3));
  const auto basis = quandle_2_cocycles(rep);
  REQUIRE_FALSE(basis.empty());
  Rng rng(71);
  std::vector<BraidWord> words = {trefoil, figure_eight, word(2, {1, 1, 1, 1, 1}), word(3, {1, 1, 1, 2, -1, 2})};
  for (int i = 0; i < 10; ++i) words.push_back(rng.braid(3, 5));
  for (const Cochain& k : basis)
    for (const BraidWord& w : words)
      for (const auto& c : colorings_of_closure(rep.quandle(), w)) {
        const auto expected = state_sum_oracle(rep, k, w, c);
        std::vector<std::int64_t> sum(3, 0);
        for (int r = 0; r < static_cast<int>(w.letters.size()); ++r) {
          const auto b = boltzmann_weight(rep, k, w, c, r);
          for (int i = 0; i < 3; ++i) sum[i] = (sum[i] + b[i]) % 3;
        }
        CHECK(sum == expected);
        CHECK(chain_pairing_matrix(rep, diagram_two_chain(rep, w, c)).apply(k.values()) == expected);
      }
}

TEST_CASE("cocycle invariant of the trefoil and figure-eight") {
  const AlgebraRep rep = make_conj_rep(perm3_group_rep(3));
  bool nontrivial = false;
  for (const Cochain& k : quandle_2_cocycles(rep)) {
    CocycleInvariantOptions opts;
    opts.cross_check = true;
    const InvariantMultiset t = cocycle_invariant(rep, k, trefoil, opts);
    CHECK(t.entries.size() == 9);
    CHECK(std::is_sorted(t.entries.begin(), t.entries.end()));
    for (const auto& e : t.entries) nontrivial = nontrivial || e != std::vector<std::int64_t>(3, 0);
    const InvariantMultiset f = cocycle_invariant(rep, k, figure_eight, opts);
    CHECK(f.entries.size() == 3);
  }
  CHECK(nontrivial);
}

TEST_CASE("cohomologous cocycles give equal invariants") {
  const AlgebraRep rep = make_conj_rep(perm3_group_rep(3));
  const ComplexConfig cfg(rep, 0, Variant::Quandle);
  Rng rng(73);
  const auto basis = quandle_2_cocycles(rep);
  for (const Cochain& k : basis) {
    const InvariantMultiset base = cocycle_invariant(rep, k, trefoil);
    for (int trial = 0; trial < 20; ++trial) {
      const Cochain moved = k + coboundary(cfg, rng.cochain(rep, 1));
      CHECK(cocycle_invariant(rep, moved, trefoil).entries == base.entries);
    }
  }
}

TEST_CASE("cocycle invariant is constant over markov variants") {
  const AlgebraRep rep = make_conj_rep(perm3_group_rep(3));
  for (const Cochain& k : quandle_2_cocycles(rep))
    for (const BraidWord& w : {trefoil, figure_eight}) {
      const auto base = cocycle_invariant(rep, k, w).entries;
      for (const BraidWord& v : markov_family(w)) CHECK_MESSAGE(cocycle_invariant(rep, k, v).entries == base, v.str());
    }
}

TEST_CASE("job count does not change results") {
  const AlgebraRep rep = make_conj_rep(perm3_group_rep(3));
  const Cochain k = quandle_2_cocycles(rep).back();
  const BraidWord w = word(4, {1, 1, 2, -1, -3, 2, -3});
  const auto serial = cocycle_invariant(rep, k, w);
  for (int jobs : {2, 4, 7}) {
    CocycleInvariantOptions opts;
    opts.enumeration.jobs = jobs;
    CHECK(cocycle_invariant(rep, k, w, opts).entries == serial.entries);
    CHECK(module_invariant(rep, w, opts.enumeration).entries == module_invariant(rep, w).entries);
  }
}

TEST_CASE("module invariant examples") {
  const AlgebraRep burau = make_alexander_rep(share(make_trivial(1)), 5, 1, 2);
  const ModuleInvariant m = module_invariant(burau, trefoil);
  REQUIRE(m.entries.size() == 1);
  CHECK(m.entries[0] == InvariantFactors{5});

  // B^3 - I for B = [[0,1],[2,4]] is [[2,3],[1,4]]; its columns span a line in (Z_5)^2.
  const ModMatrix b = ModMatrix::from_rows({{0, 1}, {2, 4}}, 5);
  CHECK(b * b * b - ModMatrix::identity(2, 5) == ModMatrix::from_rows({{2, 3}, {1, 4}}, 5));
  CHECK(ModMatrix::from_rows({{2, 3}, {1, 4}}, 5).det() == 0);

  const AlgebraRep perm = make_conj_rep(perm3_group_rep(4));
  const ModuleInvariant id = module_invariant(perm, word(1, {}));
  REQUIRE(id.entries.size() == 3);
  for (const auto& e : id.entries) CHECK(e == InvariantFactors{4, 4, 4});
}

TEST_CASE("module invariant is constant over markov variants") {
  const QPtr r3 = share(make_dihedral(3));
  const std::vector<AlgebraRep> reps = {make_alexander_rep(r3, 3, 1, 2), make_conj_rep(perm3_group_rep(3)),
                                        make_alexander_rep(share(make_trivial(1)), 9, 1, 2)};
  for (const AlgebraRep& rep : reps)
    for (const BraidWord& w : {trefoil, figure_eight}) {
      const auto base = module_invariant(rep, w);
      for (const auto& e : base.entries)
        for (std::size_t i = 0; i + 1 < e.size(); ++i) CHECK(e[i + 1] % e[i] == 0);
      for (const BraidWord& v : markov_family(w))
        CHECK_MESSAGE(module_invariant(rep, v).entries == base.entries, v.str());
    }
}

TEST_CASE("dynamical extension with zero cocycle") {
  const QPtr r3 = share(make_dihedral(3));
  const ExtensionResult e = dynamical_extension(make_alexander_rep(r3, 3, 1, 2), nullptr);
  CHECK(e.size == 9);
  CHECK(e.report.ok());
  REQUIRE(e.quandle.has_value());
  // (a, x) * (b, y) = (2a + 2b, x*y) with index a*3 + x
  CHECK(e.table[(1 * 3 + 0) * 9 + (2 * 3 + 1)] == ((2 + 4) % 3) * 3 + 2);

  CHECK(dynamical_extension(make_conj_rep(perm3_group_rep(2)), nullptr).report.ok());
  CHECK_THROWS_AS(dynamical_extension(make_conj_rep(perm3_group_rep(3)), nullptr), SizeLimitError);
}

TEST_CASE("extension is a quandle exactly when kappa is a quandle 2-cocycle") {
  const std::vector<AlgebraRep> reps = {make_alexander_rep(share(make_trivial(2)), 2, 1, 1),
                                        make_alexander_rep(share(make_trivial(2)), 3, 1, 2),
                                        make_alexander_rep(share(make_dihedral(3)), 2, 1, 1)};
  for (const AlgebraRep& rep : reps) {
    int passing = 0;
    for (const auto& v : testkit::all_vectors(static_cast<int>(rep.modulus()), rep.order() * rep.order())) {
      const Cochain k = Cochain::from_vector(rep, 2, std::vector<std::int64_t>(v.begin(), v.end()));
      const ExtensionResult e = dynamical_extension(rep, &k);
      const bool cocycle = testkit::oracle_is_quandle_2_cocycle(rep, k.values());
      CHECK(e.report.ok() == cocycle);
      CHECK(e.quandle.has_value() == cocycle);
      passing += cocycle;
    }
    CHECK(passing > 1);
  }
}

TEST_CASE("multiset containment is support inclusion") {
  const InvariantMultiset zeros = multiset({{0}, {0}, {0}});
  const InvariantMultiset mixed = multiset({{0}, {2}});
  CHECK(multiset_contained(zeros, zeros));
  CHECK(multiset_contained(mixed, mixed));
  CHECK(multiset_contained(zeros, mixed));
  CHECK_FALSE(multiset_contained(mixed, zeros));
  CHECK_THROWS_AS(multiset_contained(zeros, multiset({{0}}, 5)), InputError);
  CHECK_THROWS_AS(multiset_contained(zeros, multiset({{0, 0}}, 3, 2)), InputError);
}
