#include "quandlekit/homology.hpp"

#include <functional>

namespace qk {

const char* variant_name(Variant v) { return v == Variant::Rack ? "rack" : "quandle"; }

Variant parse_variant(std::string_view text) {
  if (text == "rack") return Variant::Rack;
  if (text == "quandle") return Variant::Quandle;
  throw InputError("unknown variant '" + std::string(text) + "' (expected rack or quandle)");
}

ComplexConfig::ComplexConfig(const AlgebraRep& rep, int basepoint, Variant variant)
    : rep_(&rep), basepoint_(basepoint), variant_(variant) {
  if (basepoint < 0 || basepoint >= rep.order())
    throw InputError("basepoint " + std::to_string(basepoint) + " is not an element of the quandle");
}

std::int64_t tuple_count(int order, int degree) {
  std::int64_t c = 1;
  for (int i = 0; i < degree; ++i) c *= order;
  return c;
}

std::vector<int> decode_tuple(std::int64_t index, int order, int degree) {
  std::vector<int> t(degree);
  for (int i = degree - 1; i >= 0; --i) {
    t[i] = static_cast<int>(index % order);
    index /= order;
  }
  return t;
}

std::int64_t encode_tuple(std::span<const int> tuple, int order) {
  std::int64_t idx = 0;
  for (int x : tuple) idx = idx * order + x;
  return idx;
}

bool is_degenerate(std::span<const int> tuple) {
  for (std::size_t i = 0; i + 1 < tuple.size(); ++i)
    if (tuple[i] == tuple[i + 1]) return true;
  return false;
}

// ---------------------------------------------------------------------------

Cochain::Cochain(int degree, int order, int dim, Modulus modulus)
    : degree_(degree), order_(order), dim_(dim), modulus_(modulus) {
  if (degree < 0) throw InputError("cochain degree must be non-negative");
  values_.assign(static_cast<std::size_t>(tuple_count(order, degree)) * dim, 0);
}

Cochain Cochain::zero(const AlgebraRep& rep, int degree) {
  return Cochain(degree, rep.order(), rep.dim(), rep.modulus());
}

Cochain Cochain::from_vector(const AlgebraRep& rep, int degree, std::vector<std::int64_t> values) {
  Cochain c = zero(rep, degree);
  if (values.size() != c.values_.size())
    throw InputError("cochain of degree " + std::to_string(degree) + " needs " + std::to_string(c.values_.size()) +
                     " coordinates");
  for (auto& v : values) v = mod_reduce(v, rep.modulus());
  c.values_ = std::move(values);
  return c;
}

std::vector<std::int64_t> Cochain::at_index(std::int64_t t) const {
  auto first = values_.begin() + t * dim_;
  return {first, first + dim_};
}

std::vector<std::int64_t> Cochain::at(std::span<const int> tuple) const { return at_index(encode_tuple(tuple, order_)); }

void Cochain::set(std::span<const int> tuple, std::span<const std::int64_t> value) {
  if (static_cast<int>(tuple.size()) != degree_) throw InputError("cochain tuple has the wrong length");
  if (static_cast<int>(value.size()) != dim_) throw InputError("cochain value has the wrong dimension");
  for (int x : tuple)
    if (x < 0 || x >= order_) throw InputError("cochain tuple element out of range");
  const std::int64_t base = encode_tuple(tuple, order_) * dim_;
  for (int k = 0; k < dim_; ++k) values_[base + k] = mod_reduce(value[k], modulus_);
}

bool Cochain::is_zero() const {
  for (auto v : values_)
    if (v != 0) return false;
  return true;
}

bool Cochain::vanishes_on_degenerate() const {
  const std::int64_t count = tuple_count(order_, degree_);
  for (std::int64_t t = 0; t < count; ++t) {
    if (!is_degenerate(decode_tuple(t, order_, degree_))) continue;
    for (int k = 0; k < dim_; ++k)
      if (values_[t * dim_ + k] != 0) return false;
  }
  return true;
}

Cochain Cochain::operator+(const Cochain& o) const {
  if (degree_ != o.degree_ || order_ != o.order_ || dim_ != o.dim_ || modulus_ != o.modulus_)
    throw InputError("adding cochains of different shapes");
  Cochain r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] = mod_reduce(values_[i] + o.values_[i], modulus_);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

int bracket(const FiniteQuandle& q, const std::vector<int>& xs) {
  int r = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) r = q.op(r, xs[i]);
  return r;
}

using TermFn = std::function<void(const ModMatrix& coeff, const std::vector<int>& source)>;

// The terms of (delta f)(tup) = sum coeff * f(source), for tup in X^{n+1}.
void coboundary_terms(const ComplexConfig& cfg, const std::vector<int>& tup, const TermFn& emit) {
  const AlgebraRep& rep = cfg.rep();
  const FiniteQuandle& q = rep.quandle();
  const int n = static_cast<int>(tup.size()) - 1;
  if (n == 0) {
    const int x0 = cfg.basepoint();
    emit(-rep.tau(q.inv_op(tup[0], x0), x0), {});
    return;
  }
  const ModMatrix id = ModMatrix::identity(rep.dim(), rep.modulus());
  const int s = (n + 1) % 2 == 0 ? 1 : -1;
  for (int i = 2; i <= n + 1; ++i) {
    const int sign = i % 2 == 0 ? s : -s;
    std::vector<int> hat(tup.begin(), tup.begin() + (i - 1));
    hat.insert(hat.end(), tup.begin() + i, tup.end());
    const std::vector<int> tail(tup.begin() + (i - 1), tup.end());
    emit(rep.eta(bracket(q, hat), bracket(q, tail)).scaled(sign), hat);

    std::vector<int> star;
    for (int j = 0; j < i - 1; ++j) star.push_back(q.op(tup[j], tup[i - 1]));
    star.insert(star.end(), tup.begin() + i, tup.end());
    emit(id.scaled(-sign), star);
  }
  std::vector<int> skip1{tup[0]};
  skip1.insert(skip1.end(), tup.begin() + 2, tup.end());
  const std::vector<int> rest(tup.begin() + 1, tup.end());
  emit(rep.tau(bracket(q, skip1), bracket(q, rest)).scaled(s), rest);
}

void check_cochain(const ComplexConfig& cfg, const Cochain& c, int degree) {
  const AlgebraRep& rep = cfg.rep();
  if (degree >= 0 && c.degree() != degree)
    throw InputError("expected a cochain of degree " + std::to_string(degree) + ", got degree " +
                     std::to_string(c.degree()));
  if (c.order() != rep.order() || c.dim() != rep.dim() || c.modulus() != rep.modulus())
    throw InputError("cochain shape does not match the representation");
}

// Coordinates (tuple index * m + k) of n-cochains allowed by the variant.
std::vector<int> admissible_coordinates(const ComplexConfig& cfg, int n) {
  const int order = cfg.rep().order(), dim = cfg.rep().dim();
  std::vector<int> out;
  const std::int64_t count = tuple_count(order, n);
  for (std::int64_t t = 0; t < count; ++t) {
    if (cfg.variant() == Variant::Quandle && is_degenerate(decode_tuple(t, order, n))) continue;
    for (int k = 0; k < dim; ++k) out.push_back(static_cast<int>(t * dim + k));
  }
  return out;
}

ModMatrix submatrix(const ModMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  ModMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()), m.modulus());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r.set(static_cast<int>(i), static_cast<int>(j), m(rows[i], cols[j]));
  return r;
}

std::vector<int> all_indices(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

ModMatrix coboundary_matrix(const ComplexConfig& cfg, int n, std::int64_t max_entries) {
  if (n < 0) throw InputError("coboundary degree must be non-negative");
  const AlgebraRep& rep = cfg.rep();
  const int order = rep.order(), m = rep.dim();
  const std::int64_t src = tuple_count(order, n), dst = tuple_count(order, n + 1);
  if (src * m * dst * m > max_entries)
    throw SizeLimitError("coboundary matrix in degree " + std::to_string(n) + " would have " +
                         std::to_string(src * m * dst * m) + " entries (limit " + std::to_string(max_entries) + ")");
  ModMatrix d(static_cast<int>(dst * m), static_cast<int>(src * m), rep.modulus());
  for (std::int64_t t = 0; t < dst; ++t) {
    const int row = static_cast<int>(t * m);
    coboundary_terms(cfg, decode_tuple(t, order, n + 1), [&](const ModMatrix& c, const std::vector<int>& s) {
      d.add_block(row, static_cast<int>(encode_tuple(s, order) * m), c);
    });
  }
  return d;
}

ModMatrix boundary_matrix(const ComplexConfig& cfg, int n, std::int64_t max_entries) {
  return coboundary_matrix(cfg, n, max_entries).transpose();
}

Cochain coboundary(const ComplexConfig& cfg, const Cochain& f) {
  check_cochain(cfg, f, -1);
  const AlgebraRep& rep = cfg.rep();
  const int order = rep.order(), m = rep.dim();
  Cochain out = Cochain::zero(rep, f.degree() + 1);
  const std::int64_t dst = tuple_count(order, f.degree() + 1);
  std::vector<std::int64_t> acc(m);
  for (std::int64_t t = 0; t < dst; ++t) {
    std::fill(acc.begin(), acc.end(), 0);
    const std::vector<int> tup = decode_tuple(t, order, f.degree() + 1);
    coboundary_terms(cfg, tup, [&](const ModMatrix& c, const std::vector<int>& s) {
      const auto v = c.apply(f.at(s));
      for (int k = 0; k < m; ++k) acc[k] += v[k];
    });
    out.set(tup, acc);
  }
  return out;
}

bool is_cocycle_2(const ComplexConfig& cfg, const Cochain& kappa) {
  check_cochain(cfg, kappa, 2);
  const AlgebraRep& rep = cfg.rep();
  const FiniteQuandle& q = rep.quandle();
  const int n = rep.order();
  const Modulus mod = rep.modulus();
  if (cfg.variant() == Variant::Quandle)
    for (int x = 0; x < n; ++x) {
      const int t[2] = {x, x};
      for (auto v : kappa.at(t))
        if (v != 0) return false;
    }
  auto k = [&](int a, int b) {
    const int t[2] = {a, b};
    return kappa.at(t);
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        const int xy = q.op(x, y), xz = q.op(x, z), yz = q.op(y, z);
        const auto l1 = rep.eta(xy, z).apply(k(x, y));
        const auto l2 = k(xy, z);
        const auto r1 = rep.eta(xz, yz).apply(k(x, z));
        const auto r2 = rep.tau(xz, yz).apply(k(y, z));
        const auto r3 = k(xz, yz);
        for (int i = 0; i < rep.dim(); ++i)
          if (mod_reduce(l1[i] + l2[i] - r1[i] - r2[i] - r3[i], mod) != 0) return false;
      }
  return true;
}

bool is_cocycle_3(const ComplexConfig& cfg, const Cochain& kappa) {
  check_cochain(cfg, kappa, 3);
  const AlgebraRep& rep = cfg.rep();
  if (!rep.is_conj_type())
    throw InputError("the 3-cocycle condition is stated for conjugation-type actions only");
  const auto& rho = *rep.conj_action();
  const FiniteQuandle& q = rep.quandle();
  const int n = rep.order();
  const Modulus mod = rep.modulus();
  if (cfg.variant() == Variant::Quandle && !kappa.vanishes_on_degenerate()) return false;
  auto k = [&](int a, int b, int c) {
    const int t[3] = {a, b, c};
    return kappa.at(t);
  };
  std::vector<std::int64_t> sum(rep.dim());
  auto acc = [&](const std::vector<std::int64_t>& v, int sign) {
    for (int i = 0; i < rep.dim(); ++i) sum[i] += sign * v[i];
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        for (int w = 0; w < n; ++w) {
          std::fill(sum.begin(), sum.end(), 0);
          acc(rho[w].apply(k(x, y, z)), 1);
          acc(k(q.op(x, z), q.op(y, z), w), 1);
          acc(rho[q.op(q.op(y, z), w)].apply(k(x, z, w)), 1);
          acc(k(y, z, w), 1);
          acc(rho[q.op(q.op(q.op(x, y), z), w)].apply(k(y, z, w)), -1);
          acc(k(q.op(x, y), z, w), -1);
          acc(rho[q.op(z, w)].apply(k(x, y, w)), -1);
          acc(k(q.op(x, w), q.op(y, w), q.op(z, w)), -1);
          for (auto v : sum)
            if (mod_reduce(v, mod) != 0) return false;
        }
  return true;
}

bool is_cocycle(const ComplexConfig& cfg, const Cochain& kappa) {
  check_cochain(cfg, kappa, -1);
  if (cfg.variant() == Variant::Quandle && !kappa.vanishes_on_degenerate()) return false;
  return coboundary(cfg, kappa).is_zero();
}

std::vector<Cochain> cocycle_space(const ComplexConfig& cfg, int degree) {
  const AlgebraRep& rep = cfg.rep();
  if (degree < 1 || degree > 3) throw InputError("cocycle_space supports degrees 1 to 3");
  if (!is_prime(rep.modulus()))
    throw InputError("cocycle_space needs a prime modulus, got " + std::to_string(rep.modulus()));
  const ModMatrix d = coboundary_matrix(cfg, degree);
  const std::vector<int> cols = admissible_coordinates(cfg, degree);
  const auto basis = kernel_mod_p(submatrix(d, all_indices(d.rows()), cols));
  std::vector<Cochain> out;
  for (const auto& v : basis) {
    std::vector<std::int64_t> full(d.cols(), 0);
    for (std::size_t j = 0; j < cols.size(); ++j) full[cols[j]] = v[j];
    out.push_back(Cochain::from_vector(rep, degree, std::move(full)));
  }
  return out;
}

namespace {

// Restriction of delta^n to admissible coordinates, checking that the map lands in them.
ModMatrix restricted_coboundary(const ComplexConfig& cfg, int n) {
  const ModMatrix d = coboundary_matrix(cfg, n);
  const std::vector<int> cols = admissible_coordinates(cfg, n);
  const std::vector<int> rows = admissible_coordinates(cfg, n + 1);
  if (cfg.variant() == Variant::Quandle) {
    std::vector<char> keep(d.rows(), 0);
    for (int r : rows) keep[r] = 1;
    for (int r = 0; r < d.rows(); ++r) {
      if (keep[r]) continue;
      for (int c : cols)
        if (d(r, c) != 0)
          throw ValidationError("coboundary in degree " + std::to_string(n) +
                                " does not preserve cochains vanishing on degenerate tuples");
    }
  }
  return submatrix(d, rows, cols);
}

}  // namespace

InvariantFactors cohomology(const ComplexConfig& cfg, int degree) {
  const AlgebraRep& rep = cfg.rep();
  if (degree < 0) throw InputError("cohomology degree must be non-negative");
  if (degree > 3) throw SizeLimitError("cohomology is computed up to degree 3");
  if (rep.order() > 6) throw SizeLimitError("cohomology is computed for quandles of order at most 6");
  const Modulus mod = rep.modulus();
  if (mod == 1) return {};

  const ModMatrix b = restricted_coboundary(cfg, degree);
  const int k = b.cols();
  ModMatrix a = degree == 0 ? ModMatrix(k, 0, mod) : restricted_coboundary(cfg, degree - 1);

  // ker b in the coordinates y = V^-1 x: y_i in (N/d_i) Z_N for i < r, free beyond.
  const ModSnfResult snf = smith_normal_form_mod(b, false);
  const int r = static_cast<int>(snf.diag.size());
  auto vinv = snf.V.inverse();
  if (!vinv) throw std::logic_error("smith transform is not invertible");
  const ModMatrix y = *vinv * a;

  std::vector<int> gens;
  std::vector<std::int64_t> orders, steps;
  for (int i = 0; i < k; ++i) {
    const std::int64_t d = i < r ? snf.diag[i] : mod;
    if (d == 1) continue;
    gens.push_back(i);
    orders.push_back(d);
    steps.push_back(mod / d);
  }
  const int g = static_cast<int>(gens.size());
  IntMatrix rel(g, y.cols() + g);
  for (int gi = 0; gi < g; ++gi) {
    for (int c = 0; c < y.cols(); ++c) {
      const std::int64_t v = y(gens[gi], c);
      if (v % steps[gi] != 0) throw ValidationError("image of the previous coboundary is not inside the kernel");
      rel(gi, c) = static_cast<long>((v / steps[gi]) % orders[gi]);
    }
    rel(gi, y.cols() + gi) = static_cast<long>(orders[gi]);
  }
  for (int i = 0; i < k; ++i)
    if (i < r && snf.diag[i] == 1)
      for (int c = 0; c < y.cols(); ++c)
        if (y(i, c) != 0) throw ValidationError("image of the previous coboundary is not inside the kernel");

  const SnfResult s = smith_normal_form(rel);
  InvariantFactors out;
  for (const auto& d : s.diag)
    if (d > 1) out.push_back(d.get_si());
  return out;
}

}  // namespace qk
