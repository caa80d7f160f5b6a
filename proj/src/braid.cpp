#include "quandlekit/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>
#include <thread>

namespace qk {

BraidWord BraidWord::create(int strands, std::vector<int> letters) {
  if (strands < 1) throw InputError("a braid needs at least one strand");
  for (int e : letters) {
    if (e == 0) throw InputError("braid letter 0 is not a generator");
    if (std::abs(e) >= strands)
      throw InputError("braid letter " + std::to_string(e) + " out of range for " + std::to_string(strands) +
                       " strands");
  }
  return {strands, std::move(letters)};
}

std::string BraidWord::str() const {
  std::string s = "k=" + std::to_string(strands) + ";";
  for (int e : letters) s += " " + std::to_string(e);
  return s;
}

namespace {

class BraidParser {
 public:
  explicit BraidParser(std::string_view text) : s_(text) {}

  BraidWord parse() {
    skip_ws();
    expect('k');
    skip_ws();
    expect('=');
    skip_ws();
    const std::size_t kpos = pos_;
    const long k = integer();
    if (k < 1) throw ParseError("strand count must be at least 1", kpos);
    skip_ws();
    expect(';');
    std::vector<int> letters;
    for (;;) {
      skip_ws();
      if (pos_ == s_.size()) break;
      const std::size_t at = pos_;
      const long e = integer();
      if (e == 0) throw ParseError("letter 0 is not a generator", at);
      if (std::labs(e) >= k)
        throw ParseError("letter " + std::to_string(e) + " out of range for " + std::to_string(k) + " strands", at);
      letters.push_back(static_cast<int>(e));
      if (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])))
        throw ParseError("expected whitespace between letters", pos_);
    }
    return {static_cast<int>(k), std::move(letters)};
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    if (pos_ >= s_.size() || s_[pos_] != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  long integer() {
    const std::size_t start = pos_;
    std::size_t p = pos_;
    if (p < s_.size() && (s_[p] == '-' || s_[p] == '+')) ++p;
    const std::size_t digits = p;
    while (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) ++p;
    if (p == digits) throw ParseError("expected an integer", start);
    long v = 0;
    const char* first = s_.data() + digits;
    auto [ptr, ec] = std::from_chars(first, s_.data() + p, v);
    if (ec != std::errc()) throw ParseError("integer out of range", start);
    pos_ = p;
    return s_[start] == '-' ? -v : v;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

void check_bottom(const BraidWord& w, std::size_t size) {
  if (static_cast<int>(size) != w.strands)
    throw InputError("bottom vector has " + std::to_string(size) + " colors for a " + std::to_string(w.strands) +
                     "-strand braid");
}

std::vector<int> decode_index(std::int64_t index, int n, int k) {
  std::vector<int> t(k);
  for (int i = k - 1; i >= 0; --i) {
    t[i] = static_cast<int>(index % n);
    index /= n;
  }
  return t;
}

void check_colors(std::span<const int> colors, int order) {
  for (int c : colors)
    if (c < 0 || c >= order) throw InputError("color " + std::to_string(c) + " is not a quandle element");
}

inline void step(const FiniteQuandle& q, int e, std::vector<int>& xs) {
  const int i = std::abs(e) - 1;
  const int u = xs[i], v = xs[i + 1];
  if (e > 0) {
    xs[i] = v;
    xs[i + 1] = q.op(u, v);
  } else {
    xs[i] = q.inv_op(v, u);
    xs[i + 1] = u;
  }
}

}  // namespace

BraidWord parse_braid(std::string_view text) { return BraidParser(text).parse(); }

BraidWord concat(const BraidWord& w, const BraidWord& v) {
  if (w.strands != v.strands) throw InputError("concatenating braids with different strand counts");
  BraidWord r = w;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord r{w.strands, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) r.letters.push_back(-*it);
  return r;
}

ColoringState act(const FiniteQuandle& q, const BraidWord& w, std::span<const int> bottom) {
  check_bottom(w, bottom.size());
  check_colors(bottom, q.size());
  ColoringState st;
  st.levels.emplace_back(bottom.begin(), bottom.end());
  for (int e : w.letters) {
    std::vector<int> next = st.levels.back();
    step(q, e, next);
    st.levels.push_back(std::move(next));
  }
  return st;
}

std::vector<int> act_top(const FiniteQuandle& q, const BraidWord& w, std::span<const int> bottom) {
  check_bottom(w, bottom.size());
  check_colors(bottom, q.size());
  std::vector<int> xs(bottom.begin(), bottom.end());
  for (int e : w.letters) step(q, e, xs);
  return xs;
}

std::vector<std::vector<int>> colorings_of_closure(const FiniteQuandle& q, const BraidWord& w,
                                                   const EnumerationOptions& opts) {
  const int n = q.size(), k = w.strands;
  std::int64_t total = 1;
  for (int i = 0; i < k; ++i) {
    if (total > opts.guard / n + 1) throw SizeLimitError("coloring enumeration exceeds the guard");
    total *= n;
  }
  if (total > opts.guard)
    throw SizeLimitError("coloring enumeration needs " + std::to_string(total) + " candidates (guard " +
                         std::to_string(opts.guard) + ")");

  // positions whose color is final after letter j, checked right away
  const int len = static_cast<int>(w.letters.size());
  std::vector<int> last(k, -1);
  for (int j = 0; j < len; ++j) {
    const int i = std::abs(w.letters[j]) - 1;
    last[i] = last[i + 1] = j;
  }
  std::vector<std::vector<int>> settled(len);
  for (int p = 0; p < k; ++p)
    if (last[p] >= 0) settled[last[p]].push_back(p);

  auto scan = [&](std::int64_t from, std::int64_t to, std::vector<std::vector<int>>& out) {
    std::vector<int> bottom = decode_index(from, n, k);
    std::vector<int> xs(k);
    for (std::int64_t c = from; c < to; ++c) {
      xs = bottom;
      bool ok = true;
      for (int j = 0; j < len && ok; ++j) {
        step(q, w.letters[j], xs);
        for (int p : settled[j])
          if (xs[p] != bottom[p]) {
            ok = false;
            break;
          }
      }
      if (ok) out.push_back(bottom);
      for (int p = k - 1; p >= 0; --p) {
        if (++bottom[p] < n) break;
        bottom[p] = 0;
      }
    }
  };

  const int jobs = std::max(1, static_cast<int>(std::min<std::int64_t>(opts.jobs, total)));
  std::vector<std::vector<std::vector<int>>> parts(jobs);
  if (jobs == 1) {
    scan(0, total, parts[0]);
  } else {
    std::vector<std::thread> workers;
    for (int j = 0; j < jobs; ++j) {
      const std::int64_t from = total * j / jobs, to = total * (j + 1) / jobs;
      workers.emplace_back([&, from, to, j] { scan(from, to, parts[j]); });
    }
    for (auto& t : workers) t.join();
  }
  std::vector<std::vector<int>> result;
  for (auto& p : parts) result.insert(result.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return result;
}

ModMatrix colored_matrix(const AlgebraRep& rep, const BraidWord& w, std::span<const int> bottom) {
  const FiniteQuandle& q = rep.quandle();
  check_bottom(w, bottom.size());
  check_colors(bottom, q.size());
  const int m = rep.dim(), km = w.strands * m;
  ModMatrix mat = ModMatrix::identity(km, rep.modulus());
  std::vector<int> xs(bottom.begin(), bottom.end());
  for (int e : w.letters) {
    const int i = std::abs(e) - 1;
    const ModMatrix left = mat.block(i * m, 0, m, km);
    const ModMatrix right = mat.block((i + 1) * m, 0, m, km);
    if (e > 0) {
      const int x = xs[i], y = xs[i + 1];
      mat.set_block(i * m, 0, right);
      mat.set_block((i + 1) * m, 0, rep.eta(x, y) * left + rep.tau(x, y) * right);
    } else {
      const BarPair b = bar(rep, xs[i + 1], xs[i]);
      mat.set_block(i * m, 0, b.eta * right + b.tau * left);
      mat.set_block((i + 1) * m, 0, left);
    }
    step(q, e, xs);
  }
  return mat;
}

std::vector<Crossing> colored_crossings(const AlgebraRep& rep, const BraidWord& w, std::span<const int> coloring) {
  if (!rep.is_conj_type()) throw InputError("diagram chains need a conjugation-type representation");
  const FiniteQuandle& q = rep.quandle();
  const ColoringState st = act(q, w, coloring);
  if (st.top() != st.bottom()) throw InputError("bottom vector " + tuple_string(st.bottom()) + " is not fixed by the braid");
  const auto& rho = *rep.conj_action();
  const int k = w.strands;
  std::vector<Crossing> out;
  for (std::size_t j = 0; j < w.letters.size(); ++j) {
    const int e = w.letters[j];
    const int i = std::abs(e) - 1;
    const auto& xs = st.levels[j];
    Crossing c;
    c.level = static_cast<int>(j);
    c.position = i;
    c.sign = e > 0 ? 1 : -1;
    if (e > 0) {
      c.source = xs[i];
      c.over = xs[i + 1];
    } else {
      c.source = q.inv_op(xs[i + 1], xs[i]);
      c.over = xs[i];
    }
    c.path = ModMatrix::identity(rep.dim(), rep.modulus());
    for (int p = k - 1; p >= i + 2; --p) c.path = c.path * rho[xs[p]];
    out.push_back(std::move(c));
  }
  return out;
}

TwoChain diagram_two_chain(const AlgebraRep& rep, const BraidWord& w, std::span<const int> coloring) {
  TwoChain chain;
  for (const Crossing& c : colored_crossings(rep, w, coloring)) {
    auto [it, inserted] = chain.try_emplace({c.source, c.over}, ModMatrix(rep.dim(), rep.dim(), rep.modulus()));
    it->second = c.sign > 0 ? it->second + c.path : it->second - c.path;
  }
  std::erase_if(chain, [](const auto& kv) { return kv.second.is_zero(); });
  return chain;
}

ModMatrix chain_pairing_matrix(const AlgebraRep& rep, const TwoChain& chain) {
  const int n = rep.order(), m = rep.dim();
  ModMatrix p(m, n * n * m, rep.modulus());
  for (const auto& [xy, coeff] : chain) p.add_block(0, (xy.first * n + xy.second) * m, coeff);
  return p;
}

std::vector<BraidWord> markov_moves(const BraidWord& w) {
  std::set<BraidWord> out;
  const int k = w.strands;
  const auto& l = w.letters;
  for (int i = 1; i < k; ++i)
    for (int e : {i, -i}) {
      BraidWord c{k, {e}};
      c.letters.insert(c.letters.end(), l.begin(), l.end());
      c.letters.push_back(-e);
      out.insert(c);
    }
  for (std::size_t r = 1; r < l.size(); ++r) {
    BraidWord c{k, {}};
    c.letters.insert(c.letters.end(), l.begin() + r, l.end());
    c.letters.insert(c.letters.end(), l.begin(), l.begin() + r);
    out.insert(c);
  }
  for (int e : {k, -k}) {
    BraidWord s{k + 1, l};
    s.letters.push_back(e);
    out.insert(s);
  }
  for (std::size_t j = 0; j + 1 < l.size(); ++j)
    if (std::abs(std::abs(l[j]) - std::abs(l[j + 1])) >= 2) {
      BraidWord c = w;
      std::swap(c.letters[j], c.letters[j + 1]);
      out.insert(c);
    }
  for (std::size_t j = 0; j + 2 < l.size(); ++j) {
    const int a = l[j], b = l[j + 1];
    if (l[j + 2] != a || (a > 0) != (b > 0) || std::abs(std::abs(a) - std::abs(b)) != 1) continue;
    BraidWord c = w;
    c.letters[j] = b;
    c.letters[j + 1] = a;
    c.letters[j + 2] = b;
    out.insert(c);
  }
  out.erase(w);
  return {out.begin(), out.end()};
}

std::vector<int> strand_permutation(const BraidWord& w) {
  std::vector<int> p(w.strands);
  for (int i = 0; i < w.strands; ++i) p[i] = i;
  for (int e : w.letters) std::swap(p[std::abs(e) - 1], p[std::abs(e)]);
  return p;
}

int component_count(const BraidWord& w) {
  const auto p = strand_permutation(w);
  std::vector<char> seen(p.size(), 0);
  int cycles = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = 1;
  }
  return cycles;
}

}  // namespace qk
