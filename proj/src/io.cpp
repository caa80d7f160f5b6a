#include "quandlekit/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qk {

namespace detail {
extern const std::string_view knot_table_text;
}

namespace {

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t p = s.find(sep, start);
    out.emplace_back(s.substr(start, p == std::string_view::npos ? std::string_view::npos : p - start));
    if (p == std::string_view::npos) break;
    start = p + 1;
  }
  return out;
}

std::int64_t to_int(const std::string& s, std::string_view what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw InputError("expected an integer for " + std::string(what) + ", got '" + s + "'");
  return v;
}

// Runs f, turning JSON access errors into InputError.
template <class F>
auto guarded(std::string_view what, F f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

std::string tuple_key(const std::vector<int>& t) {
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(t[i]);
  }
  return s;
}

}  // namespace

const std::map<std::string, BraidWord>& knot_table() {
  static const std::map<std::string, BraidWord> table = [] {
    std::map<std::string, BraidWord> t;
    std::istringstream in{std::string(detail::knot_table_text)};
    std::string line;
    while (std::getline(in, line)) {
      const auto first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto gap = line.find_first_of(" \t", first);
      t.emplace(line.substr(first, gap - first), parse_braid(line.substr(gap)));
    }
    return t;
  }();
  return table;
}

BraidWord resolve_braid(std::string_view ref) {
  const auto& t = knot_table();
  if (auto it = t.find(std::string(ref)); it != t.end()) return it->second;
  if (ref.find('=') == std::string_view::npos) throw InputError("unknown knot '" + std::string(ref) + "'");
  return parse_braid(ref);
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what(), e.byte);
  }
}

std::string dump_json(const Json& doc) { return doc.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

Json quandle_to_json(const FiniteQuandle& q) {
  Json rows = Json::array();
  for (int a = 0; a < q.size(); ++a) {
    Json row = Json::array();
    for (int b = 0; b < q.size(); ++b) row.push_back(q.op(a, b));
    rows.push_back(row);
  }
  return {{"size", q.size()}, {"table", rows}, {"label", q.label()}};
}

FiniteQuandle quandle_from_json(const Json& doc) {
  return guarded("quandle document", [&] {
    const int n = doc.at("size").get<int>();
    if (n < 1) throw InputError("quandle size must be positive");
    const Json& rows = doc.at("table");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
      throw InputError("quandle table must have " + std::to_string(n) + " rows");
    std::vector<int> table;
    for (const Json& row : rows) {
      if (!row.is_array() || static_cast<int>(row.size()) != n)
        throw InputError("quandle table rows must have " + std::to_string(n) + " entries");
      for (const Json& v : row) table.push_back(v.get<int>());
    }
    return FiniteQuandle::from_table(n, std::move(table), doc.value("label", std::string("file")));
  });
}

std::shared_ptr<const FiniteQuandle> load_quandle(std::string_view ref) {
  const auto parts = split(ref, ':');
  if (parts[0] == "dihedral" && parts.size() == 2)
    return std::make_shared<const FiniteQuandle>(make_dihedral(static_cast<int>(to_int(parts[1], "dihedral size"))));
  if (parts[0] == "alexander" && parts.size() == 3)
    return std::make_shared<const FiniteQuandle>(make_alexander(static_cast<int>(to_int(parts[1], "alexander modulus")),
                                                                static_cast<int>(to_int(parts[2], "alexander t"))));
  if (parts[0] == "trivial" && parts.size() == 2)
    return std::make_shared<const FiniteQuandle>(make_trivial(static_cast<int>(to_int(parts[1], "trivial size"))));
  if (parts[0] == "dihedral" || parts[0] == "alexander" || parts[0] == "trivial")
    throw InputError("malformed quandle shorthand '" + std::string(ref) + "'");
  return std::make_shared<const FiniteQuandle>(quandle_from_json(read_json_file(std::string(ref))));
}

// ---------------------------------------------------------------------------

Json matrix_to_json(const ModMatrix& m) {
  Json rows = Json::array();
  for (const auto& r : m.to_rows()) rows.push_back(r);
  return rows;
}

ModMatrix matrix_from_json(const Json& rows, Modulus modulus) {
  return guarded("matrix", [&] {
    return ModMatrix::from_rows(rows.get<std::vector<std::vector<std::int64_t>>>(), modulus);
  });
}

Json rep_to_json(const AlgebraRep& rep) {
  const int n = rep.order();
  Json eta = Json::array(), tau = Json::array();
  for (int x = 0; x < n; ++x) {
    Json er = Json::array(), tr = Json::array();
    for (int y = 0; y < n; ++y) {
      er.push_back(matrix_to_json(rep.eta(x, y)));
      tr.push_back(matrix_to_json(rep.tau(x, y)));
    }
    eta.push_back(er);
    tau.push_back(tr);
  }
  return {{"quandle", quandle_to_json(rep.quandle())},
          {"modulus", rep.modulus()},
          {"dim", rep.dim()},
          {"eta", eta},
          {"tau", tau},
          {"label", rep.label()}};
}

AlgebraRep rep_from_json(const Json& doc) {
  return guarded("representation document", [&] {
    const Json& qdoc = doc.at("quandle");
    auto q = qdoc.is_string() ? load_quandle(qdoc.get<std::string>())
                              : std::make_shared<const FiniteQuandle>(quandle_from_json(qdoc));
    const Modulus mod = doc.at("modulus").get<Modulus>();
    const int dim = doc.at("dim").get<int>();
    if (mod < 1 || dim < 1) throw InputError("modulus and dim must be positive");
    const int n = q->size();
    std::vector<ModMatrix> eta, tau;
    for (const auto* key : {"eta", "tau"}) {
      const Json& t = doc.at(key);
      if (!t.is_array() || static_cast<int>(t.size()) != n)
        throw InputError(std::string(key) + " must be a " + std::to_string(n) + " x " + std::to_string(n) + " array");
      for (const Json& row : t) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
          throw InputError(std::string(key) + " rows must have " + std::to_string(n) + " matrices");
        for (const Json& m : row) (key[0] == 'e' ? eta : tau).push_back(matrix_from_json(m, mod));
      }
    }
    return AlgebraRep::create(std::move(q), mod, dim, std::move(eta), std::move(tau), doc.value("label", "file"));
  });
}

AlgebraRep load_rep(std::string_view ref, std::shared_ptr<const FiniteQuandle> quandle,
                    std::optional<Modulus> default_modulus) {
  const auto parts = split(ref, ':');
  auto need_quandle = [&] {
    if (!quandle) throw InputError("representation '" + std::string(ref) + "' needs a quandle");
  };
  auto modulus = [&](std::size_t idx) -> Modulus {
    if (parts.size() > idx) return to_int(parts[idx], "modulus");
    if (default_modulus) return *default_modulus;
    throw InputError("representation '" + std::string(ref) + "' needs a modulus");
  };
  if (parts[0] == "alexander-rep") {
    need_quandle();
    if (parts.size() < 3 || parts.size() > 4) throw InputError("expected alexander-rep:N:t[:dim]");
    const int dim = parts.size() == 4 ? static_cast<int>(to_int(parts[3], "dim")) : 1;
    return make_alexander_rep(quandle, modulus(1), dim, to_int(parts[2], "t"));
  }
  if (parts[0] == "conj-rep") {
    if (parts.size() < 2 || parts[1] != "perm3" || parts.size() > 3) throw InputError("expected conj-rep:perm3[:N]");
    GroupRep g = perm3_group_rep(parts.size() == 2 && !default_modulus ? 3 : modulus(2));
    if (quandle && !(*quandle == g.quandle()))
      throw InputError("conj-rep:perm3 is defined on dihedral:3 only");
    return make_conj_rep(g);
  }
  if (parts[0] == "trivial-action") {
    need_quandle();
    if (parts.size() > 3) throw InputError("expected trivial-action[:N[:dim]]");
    const int dim = parts.size() == 3 ? static_cast<int>(to_int(parts[2], "dim")) : 1;
    const Modulus mod = modulus(1);
    const std::size_t pairs = static_cast<std::size_t>(quandle->size()) * quandle->size();
    return AlgebraRep::create(quandle, mod, dim, std::vector<ModMatrix>(pairs, ModMatrix::identity(dim, mod)),
                              std::vector<ModMatrix>(pairs, ModMatrix(dim, dim, mod)),
                              "trivial-action:" + std::to_string(mod) + (dim > 1 ? ":" + std::to_string(dim) : ""));
  }
  AlgebraRep rep = rep_from_json(read_json_file(std::string(ref)));
  if (quandle && !(*quandle == rep.quandle()))
    throw InputError("representation file is defined on a different quandle");
  return rep;
}

// ---------------------------------------------------------------------------

Json cochain_to_json(const Cochain& c) {
  Json values = Json::object();
  const std::int64_t count = tuple_count(c.order(), c.degree());
  for (std::int64_t t = 0; t < count; ++t) values[tuple_key(decode_tuple(t, c.order(), c.degree()))] = c.at_index(t);
  return {{"degree", c.degree()}, {"modulus", c.modulus()}, {"dim", c.dim()}, {"values", values}};
}

Cochain cochain_from_json(const Json& doc, const AlgebraRep& rep) {
  return guarded("cochain document", [&] {
    const int degree = doc.at("degree").get<int>();
    if (degree < 0) throw InputError("cochain degree must be non-negative");
    if (doc.contains("modulus") && doc["modulus"].get<Modulus>() != rep.modulus())
      throw InputError("cochain modulus does not match the representation");
    if (doc.contains("dim") && doc["dim"].get<int>() != rep.dim())
      throw InputError("cochain dimension does not match the representation");
    Cochain c = Cochain::zero(rep, degree);
    for (const auto& [key, value] : doc.at("values").items()) {
      std::vector<int> tuple;
      if (degree > 0)
        for (const auto& part : split(key, ',')) tuple.push_back(static_cast<int>(to_int(part, "cochain key")));
      else if (!key.empty())
        throw InputError("degree-0 cochains use the empty key");
      c.set(tuple, value.get<std::vector<std::int64_t>>());
    }
    return c;
  });
}

std::vector<Cochain> load_cochains(std::string_view ref, const AlgebraRep& rep, int zero_degree) {
  if (ref == "zero") return {Cochain::zero(rep, zero_degree)};
  std::optional<std::size_t> pick;
  if (const auto hash = ref.rfind('#'); hash != std::string_view::npos && !std::filesystem::exists(std::string(ref))) {
    const std::int64_t i = to_int(std::string(ref.substr(hash + 1)), "basis index");
    if (i < 0) throw InputError("basis index must be nonnegative");
    pick = static_cast<std::size_t>(i);
    ref = ref.substr(0, hash);
  }
  const Json doc = read_json_file(std::string(ref));
  std::vector<Cochain> out;
  if (doc.contains("basis")) {
    guarded("basis document", [&] {
      for (const Json& c : doc.at("basis")) out.push_back(cochain_from_json(c, rep));
      return 0;
    });
  } else {
    out.push_back(cochain_from_json(doc, rep));
  }
  if (pick) {
    if (*pick >= out.size()) throw InputError("basis index " + std::to_string(*pick) + " out of range");
    return {out[*pick]};
  }
  return out;
}

// ---------------------------------------------------------------------------

Json report_to_json(const ValidationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json j = {{"name", c.name}, {"passed", c.passed}};
    if (!c.passed) {
      j["witness"] = c.witness;
      j["detail"] = c.detail;
    }
    checks.push_back(j);
  }
  return {{"ok", r.ok()}, {"checks", checks}};
}

Json metadata_to_json(const InvariantMetadata& m) {
  return {{"quandle", m.quandle}, {"rep", m.rep},         {"cocycle", m.cocycle},
          {"braid", m.braid},     {"modulus", m.modulus}, {"dim", m.dim}};
}

Json multiset_to_json(const InvariantMultiset& m) {
  return {{"metadata", metadata_to_json(m.meta)}, {"colorings", m.entries.size()}, {"multiset", m.entries}};
}

InvariantMultiset multiset_from_json(const Json& doc) {
  return guarded("invariant document", [&] {
    InvariantMultiset m;
    const Json& meta = doc.at("metadata");
    m.meta.quandle = meta.value("quandle", "");
    m.meta.rep = meta.value("rep", "");
    m.meta.cocycle = meta.value("cocycle", "");
    m.meta.braid = meta.value("braid", "");
    m.meta.modulus = meta.at("modulus").get<Modulus>();
    m.meta.dim = meta.at("dim").get<int>();
    m.entries = doc.at("multiset").get<std::vector<std::vector<std::int64_t>>>();
    for (const auto& e : m.entries)
      if (static_cast<int>(e.size()) != m.meta.dim) throw InputError("multiset entry has the wrong dimension");
    std::sort(m.entries.begin(), m.entries.end());
    return m;
  });
}

Json module_invariant_to_json(const ModuleInvariant& m) {
  return {{"metadata", metadata_to_json(m.meta)}, {"colorings", m.entries.size()}, {"multiset", m.entries}};
}

Json laurent_to_json(const LaurentPoly& p) {
  Json coeffs = Json::object();
  for (const auto& [e, c] : p.terms()) {
    if (c.get_den() == 1 && c.get_num().fits_slong_p())
      coeffs[std::to_string(e)] = c.get_num().get_si();
    else
      coeffs[std::to_string(e)] = c.get_str();
  }
  return {{"coefficients", coeffs}, {"text", p.str()}};
}

}  // namespace qk
