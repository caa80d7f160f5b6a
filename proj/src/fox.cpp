#include "quandlekit/fox.hpp"

#include <numeric>

namespace qk {

FreeWord::FreeWord(std::vector<Letter> letters) {
  for (const Letter& l : letters) {
    if (l.gen < 0) throw InputError("negative generator index");
    if (l.exp != 1 && l.exp != -1) throw InputError("free word exponents must be +1 or -1");
    if (!letters_.empty() && letters_.back().gen == l.gen && letters_.back().exp == -l.exp)
      letters_.pop_back();
    else
      letters_.push_back(l);
  }
}

FreeWord FreeWord::generator(int g, int exp) { return FreeWord({{g, exp}}); }

int FreeWord::exponent_sum() const {
  int s = 0;
  for (const auto& l : letters_) s += l.exp;
  return s;
}

FreeWord FreeWord::operator*(const FreeWord& o) const {
  std::vector<Letter> all = letters_;
  all.insert(all.end(), o.letters_.begin(), o.letters_.end());
  return FreeWord(std::move(all));
}

FreeWord FreeWord::inverse() const {
  std::vector<Letter> r;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.push_back({it->gen, -it->exp});
  return FreeWord(std::move(r));
}

std::string FreeWord::str() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (const auto& l : letters_) {
    if (!s.empty()) s += ' ';
    s += "x" + std::to_string(l.gen);
    if (l.exp < 0) s += "^-1";
  }
  return s;
}

GroupRingElement::GroupRingElement(const FreeWord& w, long coeff) { add(w, coeff); }

void GroupRingElement::add(const FreeWord& w, long c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

GroupRingElement GroupRingElement::operator+(const GroupRingElement& o) const {
  GroupRingElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

GroupRingElement GroupRingElement::operator-() const {
  GroupRingElement r;
  for (const auto& [w, c] : terms_) r.add(w, -c);
  return r;
}

GroupRingElement GroupRingElement::operator-(const GroupRingElement& o) const { return *this + (-o); }

GroupRingElement GroupRingElement::operator*(const GroupRingElement& o) const {
  GroupRingElement r;
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : o.terms_) r.add(a * b, ca * cb);
  return r;
}

std::string GroupRingElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : terms_) {
    if (!s.empty()) s += c < 0 ? " - " : " + ";
    else if (c < 0) s += "-";
    const long a = std::labs(c);
    if (a != 1 || w.empty()) s += std::to_string(a);
    if (!w.empty()) s += (a != 1 ? " " : "") + w.str();
  }
  return s;
}

GroupRingElement fox_derivative(const FreeWord& w, int i) {
  GroupRingElement d;
  std::vector<FreeWord::Letter> prefix;
  for (const auto& l : w.letters()) {
    if (l.gen == i && l.exp > 0) d = d + GroupRingElement(FreeWord(prefix));
    prefix.push_back(l);
    if (l.gen == i && l.exp < 0) d = d - GroupRingElement(FreeWord(prefix));
  }
  return d;
}

WirtingerPresentation wirtinger_from_braid(const BraidWord& w) {
  const int k = w.strands;
  std::vector<int> parent;
  auto find = [&](int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  std::vector<int> seg(k);
  std::vector<std::pair<int, int>> site;
  for (int p = 0; p < k; ++p) {
    seg[p] = p;
    parent.push_back(p);
    site.push_back({0, p});
  }
  int level = 0;
  struct Rel {
    int s, j, l;
  };
  std::vector<Rel> rels;
  for (int e : w.letters) {
    const int i = std::abs(e) - 1;
    const int u = seg[i], v = seg[i + 1];
    const int fresh = static_cast<int>(parent.size());
    parent.push_back(fresh);
    ++level;
    site.push_back({level, e > 0 ? i + 1 : i});
    if (e > 0) {
      rels.push_back({v, u, fresh});
      seg[i] = v;
      seg[i + 1] = fresh;
    } else {
      rels.push_back({u, fresh, v});
      seg[i] = fresh;
      seg[i + 1] = u;
    }
  }
  for (int p = 0; p < k; ++p) {
    const int a = find(p), b = find(seg[p]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> id(parent.size(), -1);
  int count = 0;
  for (int s = 0; s < static_cast<int>(parent.size()); ++s) {
    const int r = find(s);
    if (id[r] < 0) id[r] = count++;
  }
  WirtingerPresentation p;
  p.generators = count;
  p.arc_sites.resize(count);
  for (int s = static_cast<int>(parent.size()) - 1; s >= 0; --s) p.arc_sites[id[find(s)]] = site[s];
  for (const Rel& r : rels) {
    const int s = id[find(r.s)], j = id[find(r.j)], l = id[find(r.l)];
    p.relators.push_back(FreeWord({{s, 1}, {j, 1}, {s, -1}, {l, -1}}));
  }
  return p;
}

std::vector<int> arc_colors(const WirtingerPresentation& p, const ColoringState& state) {
  std::vector<int> out;
  for (const auto& [level, pos] : p.arc_sites) out.push_back(state.levels.at(level).at(pos));
  return out;
}

bool has_conjugation_shape(const FreeWord& w) {
  const auto& l = w.letters();
  if (l.empty()) return true;
  if (l.size() == 2) return l[0].exp == 1 && l[1].exp == -1;
  if (l.size() != 4) return false;
  return l[0].exp == 1 && l[1].exp == 1 && l[2].exp == -1 && l[3].exp == -1 && l[0].gen == l[2].gen;
}

void LaurentBlock::add(int exponent, const ModMatrix& m) {
  auto [it, inserted] = terms.try_emplace(exponent, m);
  if (!inserted) it->second = it->second + m;
  if (it->second.is_zero()) terms.erase(it);
}

ModMatrix LaurentBlock::evaluate(std::int64_t t0) const {
  const auto inv = mod_inverse(t0, modulus);
  if (!inv) throw InputError("t0 = " + std::to_string(t0) + " is not a unit mod " + std::to_string(modulus));
  ModMatrix r(dim, dim, modulus);
  for (const auto& [e, m] : terms) {
    std::int64_t s = 1;
    const std::int64_t base = e >= 0 ? mod_reduce(t0, modulus) : *inv;
    for (int i = 0; i < std::abs(e); ++i) s = mod_mul(s, base, modulus);
    r = r + m.scaled(s);
  }
  return r;
}

ModMatrix TwistedMatrix::evaluate(std::int64_t t0) const {
  ModMatrix r(rows * dim, cols * dim, modulus);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) r.set_block(i * dim, j * dim, entries[i][j].evaluate(t0));
  return r;
}

TwistedMatrix twisted_matrix(const WirtingerPresentation& p, const std::vector<ModMatrix>& rho) {
  if (static_cast<int>(rho.size()) != p.generators)
    throw InputError("need one matrix per generator (" + std::to_string(p.generators) + ")");
  if (rho.empty()) throw InputError("presentation has no generators");
  const int m = rho[0].rows();
  const Modulus mod = rho[0].modulus();
  std::vector<ModMatrix> rho_inv;
  for (std::size_t g = 0; g < rho.size(); ++g) {
    if (rho[g].rows() != m || rho[g].cols() != m || rho[g].modulus() != mod)
      throw InputError("generator matrices must share size and modulus");
    auto inv = rho[g].inverse();
    if (!inv) throw ValidationError("rho(x" + std::to_string(g) + ") is not invertible");
    rho_inv.push_back(std::move(*inv));
  }
  auto image = [&](const FreeWord& w) {
    ModMatrix r = ModMatrix::identity(m, mod);
    for (const auto& l : w.letters()) r = r * (l.exp > 0 ? rho[l.gen] : rho_inv[l.gen]);
    return r;
  };
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    if (!(image(p.relators[i]) == ModMatrix::identity(m, mod)))
      throw ValidationError("rho does not satisfy relator " + std::to_string(i) + ": " + p.relators[i].str());

  TwistedMatrix t;
  t.rows = static_cast<int>(p.relators.size());
  t.cols = p.generators;
  t.dim = m;
  t.modulus = mod;
  t.entries.assign(t.rows, std::vector<LaurentBlock>(t.cols, LaurentBlock{m, mod, {}}));
  for (int i = 0; i < t.rows; ++i)
    for (int j = 0; j < t.cols; ++j)
      for (const GroupRingElement d = fox_derivative(p.relators[i], j); const auto& [w, c] : d.terms())
        t.entries[i][j].add(w.exponent_sum(), image(w).scaled(c));
  return t;
}

LaurentMatrix alexander_matrix(const WirtingerPresentation& p) {
  LaurentMatrix a(p.relators.size(), std::vector<LaurentPoly>(p.generators));
  for (std::size_t i = 0; i < p.relators.size(); ++i)
    for (int j = 0; j < p.generators; ++j)
      for (const GroupRingElement d = fox_derivative(p.relators[i], j); const auto& [w, c] : d.terms())
        a[i][j] += LaurentPoly::monomial(c, w.exponent_sum());
  return a;
}

LaurentPoly alexander_polynomial(const BraidWord& w, int deleted_column) {
  if (component_count(w) != 1)
    throw InputError("the closure of " + w.str() + " has " + std::to_string(component_count(w)) +
                     " components; only knots are supported");
  const WirtingerPresentation p = wirtinger_from_braid(w);
  const int del = deleted_column < 0 ? p.generators - 1 : deleted_column;
  if (del >= p.generators) throw InputError("deleted column out of range");
  LaurentMatrix a = alexander_matrix(p);
  for (auto& row : a) row.erase(row.begin() + del);
  const int k = p.generators - 1;
  if (k == 0) return LaurentPoly(1);
  return laurent_gcd_of_minors(a, k);
}

BigInt knot_determinant(const LaurentPoly& delta) {
  const mpq_class v = delta.evaluate(-1);
  BigInt n = v.get_num();
  return abs(n);
}

}  // namespace qk
