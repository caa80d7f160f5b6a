#include "quandlekit/algebra.hpp"

namespace qk {

namespace {

void check_shape(const ModMatrix& m, int dim, Modulus n, const std::string& what) {
  if (m.rows() != dim || m.cols() != dim || m.modulus() != n)
    throw InputError(what + ": expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix mod " +
                     std::to_string(n));
}

std::optional<std::vector<ModMatrix>> detect_conj(const FiniteQuandle& q, const std::vector<ModMatrix>& eta,
                                                  const std::vector<ModMatrix>& tau,
                                                  const std::vector<ModMatrix>& eta_inv) {
  const int n = q.size();
  std::vector<ModMatrix> rho(n);
  for (int y = 0; y < n; ++y) rho[y] = eta[y];  // eta_{0,y}
  const ModMatrix id = ModMatrix::identity(rho[0].rows(), rho[0].modulus());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (!(eta[x * n + y] == rho[y])) return std::nullopt;
      if (!(tau[x * n + y] == id - rho[q.op(x, y)])) return std::nullopt;
      if (!(rho[q.op(x, y)] == rho[y] * rho[x] * eta_inv[y])) return std::nullopt;
    }
  return rho;
}

}  // namespace

AlgebraRep AlgebraRep::create(std::shared_ptr<const FiniteQuandle> quandle, Modulus modulus, int dim,
                              std::vector<ModMatrix> eta, std::vector<ModMatrix> tau, std::string label) {
  if (!quandle) throw InputError("representation: missing quandle");
  if (modulus <= 0) throw InputError("representation: modulus must be positive");
  if (dim <= 0) throw InputError("representation: dimension must be positive");
  const int n = quandle->size();
  const std::size_t pairs = static_cast<std::size_t>(n) * n;
  if (eta.size() != pairs || tau.size() != pairs)
    throw InputError("representation: eta and tau need " + std::to_string(pairs) + " entries each");

  AlgebraRep rep;
  rep.eta_inv_.reserve(pairs);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const std::string where = "(" + std::to_string(x) + "," + std::to_string(y) + ")";
      check_shape(eta[x * n + y], dim, modulus, "eta" + where);
      check_shape(tau[x * n + y], dim, modulus, "tau" + where);
      auto inv = eta[x * n + y].inverse();
      if (!inv) throw ValidationError("eta" + where + " is not invertible mod " + std::to_string(modulus));
      rep.eta_inv_.push_back(std::move(*inv));
    }
  rep.quandle_ = std::move(quandle);
  rep.modulus_ = modulus;
  rep.dim_ = dim;
  rep.eta_ = std::move(eta);
  rep.tau_ = std::move(tau);
  rep.conj_ = detect_conj(*rep.quandle_, rep.eta_, rep.tau_, rep.eta_inv_);
  rep.label_ = std::move(label);
  return rep;
}

ValidationReport verify_relations(const AlgebraRep& rep) {
  const FiniteQuandle& q = rep.quandle();
  const int n = q.size();
  const ModMatrix id = ModMatrix::identity(rep.dim(), rep.modulus());
  ValidationReport report;
  report.checks.push_back({"invertibility"});  // enforced by AlgebraRep::create

  Check r1{"relation-1"}, r2{"relation-2"}, r3{"relation-3"}, r4{"relation-4"};
  auto fail = [](Check& c, std::vector<int> w) {
    if (!c.passed) return;
    c.passed = false;
    c.detail = "violated at " + tuple_string(w);
    c.witness = std::move(w);
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int xy = q.op(x, y), xz = q.op(x, z), yz = q.op(y, z);
        if (r1.passed && !(rep.eta(xy, z) * rep.eta(x, y) == rep.eta(xz, yz) * rep.eta(x, z))) fail(r1, {x, y, z});
        if (r2.passed && !(rep.eta(xy, z) * rep.tau(x, y) == rep.tau(xz, yz) * rep.eta(y, z))) fail(r2, {x, y, z});
        if (r3.passed &&
            !(rep.tau(xy, z) == rep.eta(xz, yz) * rep.tau(x, z) + rep.tau(xz, yz) * rep.tau(y, z)))
          fail(r3, {x, y, z});
      }
  for (int x = 0; x < n; ++x)
    if (!(rep.tau(x, x) + rep.eta(x, x) == id)) fail(r4, {x});
  report.checks.insert(report.checks.end(), {r1, r2, r3, r4});
  return report;
}

// ---------------------------------------------------------------------------

GroupRep GroupRep::create(std::shared_ptr<const FiniteQuandle> quandle, Modulus modulus, std::vector<ModMatrix> rho,
                          std::string label) {
  if (!quandle) throw InputError("group representation: missing quandle");
  const int n = quandle->size();
  if (static_cast<int>(rho.size()) != n) throw InputError("group representation: need one matrix per element");
  const int dim = rho[0].rows();
  std::vector<ModMatrix> inv(n);
  for (int x = 0; x < n; ++x) {
    check_shape(rho[x], dim, modulus, "rho(" + std::to_string(x) + ")");
    auto i = rho[x].inverse();
    if (!i) throw ValidationError("rho(" + std::to_string(x) + ") is not invertible");
    inv[x] = std::move(*i);
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (!(rho[quandle->op(x, y)] == rho[y] * rho[x] * inv[y]))
        throw ValidationError("rho(x*y) != rho(y) rho(x) rho(y)^-1 at (" + std::to_string(x) + "," +
                              std::to_string(y) + ")");
  GroupRep g;
  g.quandle_ = std::move(quandle);
  g.modulus_ = modulus;
  g.rho_ = std::move(rho);
  g.label_ = std::move(label);
  return g;
}

GroupRep perm3_group_rep(Modulus modulus) {
  auto r3 = std::make_shared<const FiniteQuandle>(make_dihedral(3));
  std::vector<ModMatrix> rho;
  for (int i = 0; i < 3; ++i) {
    ModMatrix p(3, 3, modulus);
    const int a = (i + 1) % 3, b = (i + 2) % 3;
    p.set(i, i, 1);
    p.set(a, b, 1);
    p.set(b, a, 1);
    rho.push_back(p);
  }
  return GroupRep::create(std::move(r3), modulus, std::move(rho), "conj-rep:perm3:" + std::to_string(modulus));
}

AlgebraRep make_alexander_rep(std::shared_ptr<const FiniteQuandle> quandle, Modulus modulus, const ModMatrix& t) {
  if (!t.inverse()) throw InputError("alexander representation: t is not invertible mod " + std::to_string(modulus));
  const int n = quandle->size();
  const ModMatrix tau = ModMatrix::identity(t.rows(), modulus) - t;
  std::vector<ModMatrix> eta_tab(static_cast<std::size_t>(n) * n, t), tau_tab(static_cast<std::size_t>(n) * n, tau);
  return AlgebraRep::create(std::move(quandle), modulus, t.rows(), std::move(eta_tab), std::move(tau_tab),
                            "alexander-rep:" + std::to_string(modulus) + ":" + t.str());
}

AlgebraRep make_alexander_rep(std::shared_ptr<const FiniteQuandle> quandle, Modulus modulus, int dim, std::int64_t t) {
  if (dim <= 0) throw InputError("alexander representation: dimension must be positive");
  if (modulus <= 0) throw InputError("alexander representation: modulus must be positive");
  if (!mod_inverse(t, modulus))
    throw InputError("alexander representation: t=" + std::to_string(t) + " is not a unit mod " +
                     std::to_string(modulus));
  const ModMatrix tm = ModMatrix::scalar(dim, t, modulus);
  const std::size_t pairs = static_cast<std::size_t>(quandle->size()) * quandle->size();
  std::vector<ModMatrix> eta_tab(pairs, tm), tau_tab(pairs, ModMatrix::identity(dim, modulus) - tm);
  return AlgebraRep::create(std::move(quandle), modulus, dim, std::move(eta_tab), std::move(tau_tab),
                            "alexander-rep:" + std::to_string(modulus) + ":" + std::to_string(mod_reduce(t, modulus)) +
                                (dim > 1 ? ":" + std::to_string(dim) : ""));
}

AlgebraRep make_conj_rep(const GroupRep& g) {
  const FiniteQuandle& q = g.quandle();
  const int n = q.size();
  const ModMatrix id = ModMatrix::identity(g.dim(), g.modulus());
  std::vector<ModMatrix> eta, tau;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      eta.push_back(g.rho(y));
      tau.push_back(id - g.rho(q.op(x, y)));
    }
  return AlgebraRep::create(g.quandle_ptr(), g.modulus(), g.dim(), std::move(eta), std::move(tau),
                            g.label().empty() ? "conj-rep" : g.label());
}

// ---------------------------------------------------------------------------

GroupHomomorphism GroupHomomorphism::create(FiniteGroup group, Modulus modulus, std::vector<ModMatrix> rho) {
  const int n = group.size();
  if (static_cast<int>(rho.size()) != n) throw InputError("homomorphism: need one matrix per group element");
  const int dim = rho[0].rows();
  for (int a = 0; a < n; ++a) check_shape(rho[a], dim, modulus, "rho(" + std::to_string(a) + ")");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(rho[group.mul(a, b)] == rho[a] * rho[b]))
        throw ValidationError("rho(ab) != rho(a) rho(b) at (" + std::to_string(a) + "," + std::to_string(b) + ")");
  if (!(rho[group.identity()] == ModMatrix::identity(dim, modulus)))
    throw ValidationError("rho(identity) is not the identity matrix");
  return GroupHomomorphism(std::move(group), modulus, std::move(rho));
}

GroupHomomorphism permutation_homomorphism(int n, Modulus modulus) {
  auto perms = symmetric_permutations(n);
  std::vector<ModMatrix> rho;
  for (const auto& p : perms) {
    ModMatrix m(n, n, modulus);
    for (int i = 0; i < n; ++i) m.set(p[i], i, 1);
    rho.push_back(m);
  }
  return GroupHomomorphism::create(symmetric_group(n), modulus, std::move(rho));
}

GroupHomomorphism cyclic_character(int n, Modulus modulus, std::int64_t u) {
  std::vector<ModMatrix> rho;
  std::int64_t v = 1;
  for (int k = 0; k < n; ++k) {
    rho.push_back(ModMatrix::scalar(1, v, modulus));
    v = mod_mul(v, mod_reduce(u, modulus), modulus);
  }
  return GroupHomomorphism::create(cyclic_group(n), modulus, std::move(rho));
}

std::string WadaVariant::str() const {
  return kind == Kind::Core ? "core" : "conj-power:" + std::to_string(power);
}

namespace {

int wada_word(const FiniteGroup& g, int x, int y, WadaVariant v) {
  if (v.kind == WadaVariant::Kind::Core) return g.mul(g.mul(y, g.inv(x)), y);
  const int ym = g.pow(y, v.power);
  return g.mul(g.mul(ym, x), g.inv(ym));
}

// d(y^m)/dy evaluated at rho(y).
ModMatrix power_derivative(const ModMatrix& ry, int m) {
  ModMatrix sum(ry.rows(), ry.cols(), ry.modulus());
  if (m > 0)
    for (int j = 0; j < m; ++j) sum = sum + ry.pow(j);
  else
    for (int j = 1; j <= -m; ++j) sum = sum - ry.pow(-j);
  return sum;
}

}  // namespace

FiniteQuandle wada_quandle(const FiniteGroup& group, std::span<const int> elements, WadaVariant variant) {
  if (variant.kind == WadaVariant::Kind::ConjPower) return make_conj(group, elements, variant.power);
  const int n = static_cast<int>(elements.size());
  std::vector<int> position(group.size(), -1);
  for (int i = 0; i < n; ++i) position.at(elements[i]) = i;
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int p = wada_word(group, elements[i], elements[j], variant);
      if (position[p] < 0) throw InputError("core quandle: subset not closed under y x^-1 y");
      t[i * n + j] = position[p];
    }
  return FiniteQuandle::from_table(n, std::move(t), "core(" + group.label() + ")");
}

AlgebraRep make_wada_rep(const GroupHomomorphism& hom, std::shared_ptr<const FiniteQuandle> quandle,
                         std::span<const int> elements, WadaVariant variant) {
  const FiniteGroup& g = hom.group();
  const int n = quandle->size();
  if (static_cast<int>(elements.size()) != n) throw InputError("wada representation: element list size mismatch");
  std::vector<int> position(g.size(), -1);
  for (int i = 0; i < n; ++i) {
    if (elements[i] < 0 || elements[i] >= g.size()) throw InputError("wada representation: element out of range");
    position[elements[i]] = i;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const int w = wada_word(g, elements[i], elements[j], variant);
      if (position[w] != quandle->op(i, j))
        throw InputError("wada representation: quandle does not match variant " + variant.str() + " at (" +
                         std::to_string(i) + "," + std::to_string(j) + ")");
    }

  const int dim = hom.dim();
  const Modulus mod = hom.modulus();
  const ModMatrix id = ModMatrix::identity(dim, mod);
  std::vector<ModMatrix> eta, tau;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const ModMatrix& rx = hom.rho(elements[i]);
      const ModMatrix& ry = hom.rho(elements[j]);
      if (variant.kind == WadaVariant::Kind::Core) {
        const ModMatrix yx = ry * hom.rho(g.inv(elements[i]));
        eta.push_back(-yx);
        tau.push_back(id + yx);
      } else {
        const int m = variant.power;
        const ModMatrix ym = ry.pow(m);
        eta.push_back(ym);
        tau.push_back(power_derivative(ry, m) + ym * rx * power_derivative(ry, -m));
      }
    }
  AlgebraRep rep = AlgebraRep::create(std::move(quandle), mod, dim, std::move(eta), std::move(tau),
                                      "wada-rep:" + variant.str());
  ValidationReport report = verify_relations(rep);
  if (!report.ok()) throw ValidationError("wada representation fails its relations:\n" + report.summary());
  return rep;
}

BarPair bar(const AlgebraRep& rep, int x, int y) {
  const int src = rep.quandle().inv_op(x, y);
  ModMatrix eb = rep.eta_inverse(src, y);
  ModMatrix tb = -(eb * rep.tau(src, y));
  return {std::move(eb), std::move(tb)};
}

}  // namespace qk
