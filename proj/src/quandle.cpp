#include "quandlekit/quandle.hpp"

#include <algorithm>
#include <numeric>

namespace qk {

namespace {

int mod(long long a, long long n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

Check failed(std::string name, std::vector<int> witness, std::string detail) {
  return Check{std::move(name), false, std::move(witness), std::move(detail)};
}

}  // namespace

ValidationReport verify_axioms(int n, std::span<const int> table) {
  if (n <= 0) throw InputError("quandle table: size must be positive");
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw InputError("quandle table: expected " + std::to_string(n * n) + " entries, got " +
                     std::to_string(table.size()));
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] < 0 || table[i] >= n)
      throw InputError("quandle table: entry (" + std::to_string(i / n) + "," +
                       std::to_string(i % n) + ") = " + std::to_string(table[i]) +
                       " is out of range");

  auto at = [&](int a, int b) { return table[a * n + b]; };
  ValidationReport report;

  Check idem{"idempotency"};
  for (int a = 0; a < n && idem.passed; ++a)
    if (at(a, a) != a) idem = failed("idempotency", {a}, "a*a != a at a=" + std::to_string(a));
  report.checks.push_back(idem);

  Check right{"right-invertibility"};
  std::vector<char> seen(n);
  for (int b = 0; b < n && right.passed; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < n; ++a) {
      int c = at(a, b);
      if (seen[c]) {
        right = failed("right-invertibility", {a, b},
                       "column " + std::to_string(b) + " repeats value " + std::to_string(c));
        break;
      }
      seen[c] = 1;
    }
  }
  report.checks.push_back(right);

  Check dist{"self-distributivity"};
  for (int a = 0; a < n && dist.passed; ++a)
    for (int b = 0; b < n && dist.passed; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(at(a, c), at(b, c))) {
          dist = failed("self-distributivity", {a, b, c},
                        "(a*b)*c != (a*c)*(b*c) at " + tuple_string({a, b, c}));
          break;
        }
  report.checks.push_back(dist);
  return report;
}

FiniteQuandle::FiniteQuandle(int n, std::vector<int> table, std::string label)
    : n_(n), table_(std::move(table)), inverse_(static_cast<std::size_t>(n) * n), label_(std::move(label)) {
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) inverse_[op(a, b) * n_ + b] = a;
}

FiniteQuandle FiniteQuandle::from_table(int n, std::vector<int> table, std::string label) {
  ValidationReport report = verify_axioms(n, table);
  if (!report.ok()) throw ValidationError("not a quandle: " + report.summary());
  return FiniteQuandle(n, std::move(table), std::move(label));
}

// ---------------------------------------------------------------------------
// groups

FiniteGroup FiniteGroup::from_table(int n, std::vector<int> mul, std::string label) {
  if (n <= 0) throw InputError("group table: size must be positive");
  if (mul.size() != static_cast<std::size_t>(n) * n) throw InputError("group table: wrong length");
  for (int v : mul)
    if (v < 0 || v >= n) throw InputError("group table: entry out of range");
  auto at = [&](int a, int b) { return mul[a * n + b]; };

  int id = -1;
  for (int e = 0; e < n && id < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = at(e, a) == a && at(a, e) == a;
    if (ok) id = e;
  }
  if (id < 0) throw ValidationError("group table: no identity element");

  std::vector<int> inv(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (at(a, b) == id && at(b, a) == id) inv[a] = b;
    if (inv[a] < 0) throw ValidationError("group table: element " + std::to_string(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c)))
          throw ValidationError("group table: associativity fails at " + tuple_string({a, b, c}));
  return FiniteGroup(n, std::move(mul), std::move(inv), id, std::move(label));
}

int FiniteGroup::pow(int a, int k) const {
  int base = k >= 0 ? a : inv(a);
  int r = id_;
  for (int i = 0; i < std::abs(k); ++i) r = mul(r, base);
  return r;
}

FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw InputError("cyclic group: order must be positive");
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) mul[a * n + b] = (a + b) % n;
  return FiniteGroup::from_table(n, std::move(mul), "Z" + std::to_string(n));
}

std::vector<std::vector<int>> symmetric_permutations(int n) {
  if (n <= 0 || n > 6) throw InputError("symmetric group: degree must be in 1..6");
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

FiniteGroup symmetric_group(int n) {
  auto perms = symmetric_permutations(n);
  const int order = static_cast<int>(perms.size());
  std::vector<int> mul(static_cast<std::size_t>(order) * order);
  std::vector<int> composed(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      // (ab)(i) = a(b(i))
      for (int i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
      mul[a * order + b] =
          static_cast<int>(std::lower_bound(perms.begin(), perms.end(), composed) - perms.begin());
    }
  return FiniteGroup::from_table(order, std::move(mul), "S" + std::to_string(n));
}

std::vector<int> transpositions(int n) {
  auto perms = symmetric_permutations(n);
  std::vector<int> out;
  for (std::size_t k = 0; k < perms.size(); ++k) {
    int moved = 0;
    for (int i = 0; i < n; ++i) moved += perms[k][i] != i;
    if (moved == 2) out.push_back(static_cast<int>(k));
  }
  return out;
}

FiniteGroup dihedral_group(int n) {
  if (n <= 0) throw InputError("dihedral group: n must be positive");
  const int order = 2 * n;
  // element (f, i) = s^f r^i, with r s = s r^-1
  auto index = [n](int f, int i) { return f * n + mod(i, n); };
  std::vector<int> mul(static_cast<std::size_t>(order) * order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      int fa = a / n, ia = a % n, fb = b / n, ib = b % n;
      // s^fa r^ia s^fb r^ib = s^(fa+fb) r^(±ia + ib)
      int rot = (fb ? -ia : ia) + ib;
      mul[a * order + b] = index((fa + fb) % 2, rot);
    }
  return FiniteGroup::from_table(order, std::move(mul), "D" + std::to_string(n));
}

FiniteGroup quaternion_group() {
  // elements ±1, ±i, ±j, ±k encoded as sign*4 + unit, unit in {1,i,j,k}
  static const int unit_mul[4][4][2] = {
      // {sign, unit}
      {{0, 0}, {0, 1}, {0, 2}, {0, 3}},
      {{0, 1}, {1, 0}, {0, 3}, {1, 2}},
      {{0, 2}, {1, 3}, {1, 0}, {0, 1}},
      {{0, 3}, {0, 2}, {1, 1}, {1, 0}},
  };
  std::vector<int> mul(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      const int* r = unit_mul[a % 4][b % 4];
      int sign = (a / 4 + b / 4 + r[0]) % 2;
      mul[a * 8 + b] = sign * 4 + r[1];
    }
  return FiniteGroup::from_table(8, std::move(mul), "Q8");
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int n = g.size() * h.size();
  std::vector<int> mul(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      mul[a * n + b] = g.mul(a / h.size(), b / h.size()) * h.size() + h.mul(a % h.size(), b % h.size());
  return FiniteGroup::from_table(n, std::move(mul), g.label() + "x" + h.label());
}

// ---------------------------------------------------------------------------
// quandle constructors

FiniteQuandle make_dihedral(int n) {
  if (n <= 0) throw InputError("dihedral quandle: n must be positive");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i * n + j] = mod(2LL * j - i, n);
  return FiniteQuandle::from_table(n, std::move(t), "dihedral:" + std::to_string(n));
}

FiniteQuandle make_alexander(int n, int t) {
  if (n <= 0) throw InputError("alexander quandle: modulus must be positive");
  if (std::gcd(mod(t, n), n) != 1 && n > 1)
    throw InputError("alexander quandle: t=" + std::to_string(t) + " is not a unit mod " + std::to_string(n));
  std::vector<int> tab(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) tab[a * n + b] = mod(static_cast<long long>(t) * a + (1LL - t) * b, n);
  return FiniteQuandle::from_table(n, std::move(tab),
                                   "alexander:" + std::to_string(n) + ":" + std::to_string(t));
}

FiniteQuandle make_trivial(int n) {
  if (n <= 0) throw InputError("trivial quandle: n must be positive");
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = a;
  return FiniteQuandle::from_table(n, std::move(t), "trivial:" + std::to_string(n));
}

FiniteQuandle make_conj(const FiniteGroup& g, std::span<const int> subset, int power) {
  const int n = static_cast<int>(subset.size());
  if (n == 0) throw InputError("conj quandle: empty subset");
  std::vector<int> position(g.size(), -1);
  for (int i = 0; i < n; ++i) {
    if (subset[i] < 0 || subset[i] >= g.size()) throw InputError("conj quandle: subset element out of range");
    if (position[subset[i]] >= 0) throw InputError("conj quandle: repeated subset element");
    position[subset[i]] = i;
  }
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int bm = g.pow(subset[j], power);
      int prod = g.mul(g.mul(bm, subset[i]), g.inv(bm));
      if (position[prod] < 0)
        throw InputError("conj quandle: subset not closed, " + std::to_string(subset[i]) + "*" +
                         std::to_string(subset[j]) + " = " + std::to_string(prod) + " is outside");
      t[i * n + j] = position[prod];
    }
  std::string label = "conj(" + g.label() + (power != 1 ? ",m=" + std::to_string(power) : "") + ")";
  return FiniteQuandle::from_table(n, std::move(t), label);
}

FiniteQuandle make_core(const FiniteGroup& g) {
  const int n = g.size();
  std::vector<int> t(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a * n + b] = g.mul(g.mul(b, g.inv(a)), b);
  return FiniteQuandle::from_table(n, std::move(t), "core(" + g.label() + ")");
}

// ---------------------------------------------------------------------------
// isomorphism search

namespace {

struct Signature {
  int column_fixed;  // #{x : x*a = x}
  int row_fixed;     // #{b : a*b = a}
  auto operator<=>(const Signature&) const = default;
};

std::vector<Signature> signatures(const FiniteQuandle& q) {
  const int n = q.size();
  std::vector<Signature> s(n);
  for (int a = 0; a < n; ++a) {
    int c = 0, r = 0;
    for (int x = 0; x < n; ++x) {
      c += q.op(x, a) == x;
      r += q.op(a, x) == a;
    }
    s[a] = {c, r};
  }
  return s;
}

class IsoSearch {
 public:
  IsoSearch(const FiniteQuandle& a, const FiniteQuandle& b)
      : a_(a), b_(b), n_(a.size()), sa_(signatures(a)), sb_(signatures(b)) {}

  std::optional<std::vector<int>> run() {
    std::vector<int> phi(n_, -1), used(n_, 0);
    if (extend(phi, used)) return phi;
    return std::nullopt;
  }

 private:
  // Assign phi(x) = y and propagate phi(u*v) = phi(u)*phi(v) to closure.
  bool assign(std::vector<int>& phi, std::vector<int>& used, int x, int y) {
    std::vector<std::pair<int, int>> queue{{x, y}};
    while (!queue.empty()) {
      auto [u, v] = queue.back();
      queue.pop_back();
      if (phi[u] >= 0) {
        if (phi[u] != v) return false;
        continue;
      }
      if (used[v] || sa_[u] != sb_[v]) return false;
      phi[u] = v;
      used[v] = 1;
      for (int w = 0; w < n_; ++w) {
        if (phi[w] < 0) continue;
        queue.emplace_back(a_.op(u, w), b_.op(v, phi[w]));
        queue.emplace_back(a_.op(w, u), b_.op(phi[w], v));
      }
    }
    return true;
  }

  bool extend(std::vector<int>& phi, std::vector<int>& used) {
    int x = static_cast<int>(std::find(phi.begin(), phi.end(), -1) - phi.begin());
    if (x == n_) return true;
    for (int y = 0; y < n_; ++y) {
      if (used[y] || sa_[x] != sb_[y]) continue;
      auto phi2 = phi;
      auto used2 = used;
      if (assign(phi2, used2, x, y) && extend(phi2, used2)) {
        phi = std::move(phi2);
        used = std::move(used2);
        return true;
      }
    }
    return false;
  }

  const FiniteQuandle& a_;
  const FiniteQuandle& b_;
  int n_;
  std::vector<Signature> sa_, sb_;
};

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const FiniteQuandle& q1, const FiniteQuandle& q2) {
  constexpr int kMaxSize = 12;
  if (q1.size() > kMaxSize || q2.size() > kMaxSize)
    throw SizeLimitError("isomorphism search is capped at " + std::to_string(kMaxSize) + " elements");
  if (q1.size() != q2.size()) return std::nullopt;
  auto s1 = signatures(q1), s2 = signatures(q2);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;
  return IsoSearch(q1, q2).run();
}

}  // namespace qk
