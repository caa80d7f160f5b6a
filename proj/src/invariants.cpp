#include "quandlekit/invariants.hpp"

#include <algorithm>
#include <exception>
#include <set>
#include <thread>

namespace qk {

void require_quandle_2_cocycle(const AlgebraRep& rep, const Cochain& kappa) {
  ComplexConfig cfg(rep, 0, Variant::Quandle);
  if (!is_cocycle_2(cfg, kappa))
    throw ValidationError("the cochain is not a quandle 2-cocycle for representation " + rep.label());
}

namespace {

std::vector<std::int64_t> crossing_weight(const AlgebraRep& rep, const Cochain& kappa, const Crossing& c) {
  const int pair[2] = {c.source, c.over};
  auto v = c.path.apply(kappa.at(pair));
  if (c.sign < 0)
    for (auto& x : v) x = mod_reduce(-x, rep.modulus());
  return v;
}

// Runs f(i) for i in [0, count) over `jobs` threads.
template <class F>
void parallel_for(std::size_t count, int jobs, F f) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::exception_ptr> errors(jobs);
  std::vector<std::thread> workers;
  for (int j = 0; j < jobs; ++j)
    workers.emplace_back([=, &f, &errors] {
      try {
        for (std::size_t i = j; i < count; i += jobs) f(i);
      } catch (...) {
        errors[j] = std::current_exception();
      }
    });
  for (auto& t : workers) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

InvariantMetadata metadata(const AlgebraRep& rep, const BraidWord& w) {
  InvariantMetadata m;
  m.quandle = rep.quandle().label();
  m.rep = rep.label();
  m.braid = w.str();
  m.modulus = rep.modulus();
  m.dim = rep.dim();
  return m;
}

}  // namespace

std::vector<std::int64_t> boltzmann_weight(const AlgebraRep& rep, const Cochain& kappa, const BraidWord& w,
                                           std::span<const int> coloring, int crossing) {
  require_quandle_2_cocycle(rep, kappa);
  if (crossing < 0 || crossing >= static_cast<int>(w.letters.size()))
    throw InputError("crossing index " + std::to_string(crossing) + " out of range");
  const auto crossings = colored_crossings(rep, w, coloring);
  return crossing_weight(rep, kappa, crossings[crossing]);
}

InvariantMultiset cocycle_invariant(const AlgebraRep& rep, const Cochain& kappa, const BraidWord& w,
                                    const CocycleInvariantOptions& opts) {
  require_quandle_2_cocycle(rep, kappa);
  if (!rep.is_conj_type()) throw InputError("the cocycle invariant needs a conjugation-type representation");
  const auto cols = colorings_of_closure(rep.quandle(), w, opts.enumeration);
  InvariantMultiset out;
  out.meta = metadata(rep, w);
  out.entries.resize(cols.size());
  const int m = rep.dim();
  parallel_for(cols.size(), opts.enumeration.jobs, [&](std::size_t i) {
    std::vector<std::int64_t> sum(m, 0);
    for (const Crossing& c : colored_crossings(rep, w, cols[i])) {
      const auto v = crossing_weight(rep, kappa, c);
      for (int k = 0; k < m; ++k) sum[k] = mod_reduce(sum[k] + v[k], rep.modulus());
    }
    if (opts.cross_check) {
      const ModMatrix p = chain_pairing_matrix(rep, diagram_two_chain(rep, w, cols[i]));
      if (p.apply(kappa.values()) != sum)
        throw std::logic_error("per-crossing weights disagree with the chain pairing at " + tuple_string(cols[i]));
    }
    out.entries[i] = std::move(sum);
  });
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

ModuleInvariant module_invariant(const AlgebraRep& rep, const BraidWord& w, const EnumerationOptions& opts) {
  const auto cols = colorings_of_closure(rep.quandle(), w, opts);
  ModuleInvariant out;
  out.meta = metadata(rep, w);
  out.entries.resize(cols.size());
  const int km = w.strands * rep.dim();
  const ModMatrix id = ModMatrix::identity(km, rep.modulus());
  parallel_for(cols.size(), opts.jobs, [&](std::size_t i) {
    out.entries[i] = cokernel_mod(IntMatrix::from_mod(colored_matrix(rep, w, cols[i]) - id), rep.modulus());
  });
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

ExtensionResult dynamical_extension(const AlgebraRep& rep, const Cochain* kappa, std::int64_t guard) {
  const int n = rep.order(), m = rep.dim();
  const Modulus mod = rep.modulus();
  if (kappa != nullptr && (kappa->degree() != 2 || kappa->order() != n || kappa->dim() != m || kappa->modulus() != mod))
    throw InputError("extension cocycle must be a 2-cochain matching the representation");
  std::int64_t g = 1;
  for (int i = 0; i < m; ++i) {
    g *= mod;
    if (g * n > guard) break;
  }
  if (g * n > guard)
    throw SizeLimitError("dynamical extension has more than " + std::to_string(guard) + " elements");

  auto decode = [&](std::int64_t a) {
    std::vector<std::int64_t> v(m);
    for (int i = m - 1; i >= 0; --i) {
      v[i] = a % mod;
      a /= mod;
    }
    return v;
  };
  auto encode = [&](const std::vector<std::int64_t>& v) {
    std::int64_t a = 0;
    for (auto x : v) a = a * mod + mod_reduce(x, mod);
    return a;
  };

  ExtensionResult r;
  r.size = static_cast<int>(g * n);
  r.table.resize(static_cast<std::size_t>(r.size) * r.size);
  for (std::int64_t a = 0; a < g; ++a)
    for (int x = 0; x < n; ++x)
      for (std::int64_t b = 0; b < g; ++b)
        for (int y = 0; y < n; ++y) {
          auto va = rep.eta(x, y).apply(decode(a));
          const auto vb = rep.tau(x, y).apply(decode(b));
          for (int i = 0; i < m; ++i) va[i] += vb[i];
          if (kappa != nullptr) {
            const int pair[2] = {x, y};
            const auto vk = kappa->at(pair);
            for (int i = 0; i < m; ++i) va[i] += vk[i];
          }
          const std::int64_t lhs = a * n + x, rhs = b * n + y;
          r.table[lhs * r.size + rhs] = static_cast<int>(encode(va) * n + rep.quandle().op(x, y));
        }
  r.report = verify_axioms(r.size, r.table);
  if (r.report.ok()) r.quandle = FiniteQuandle::from_table(r.size, r.table, "extension(" + rep.label() + ")");
  return r;
}

bool multiset_contained(const InvariantMultiset& a, const InvariantMultiset& b) {
  if (a.meta.modulus != b.meta.modulus || a.meta.dim != b.meta.dim)
    throw InputError("multisets have different coefficient groups");
  const std::set<std::vector<std::int64_t>> support(b.entries.begin(), b.entries.end());
  return std::all_of(a.entries.begin(), a.entries.end(), [&](const auto& e) { return support.contains(e); });
}

}  // namespace qk
