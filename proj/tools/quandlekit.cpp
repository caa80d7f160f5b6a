// Command-line front end for the quandlekit library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "quandlekit/io.hpp"

using namespace qk;

namespace {

struct Globals {
  std::string variant = "quandle";
  std::int64_t guard = 0;  // 0: each command's default
  int jobs = 1;
  std::string out;
};

void emit(const Globals& g, const Json& doc) {
  const std::string text = dump_json(doc);
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw InputError("cannot write '" + g.out + "'");
  f << text;
}

EnumerationOptions enumeration(const Globals& g) {
  EnumerationOptions o;
  if (g.guard > 0) o.guard = g.guard;
  if (g.jobs < 1) throw InputError("--jobs must be at least 1");
  o.jobs = g.jobs;
  return o;
}

std::shared_ptr<const FiniteQuandle> optional_quandle(const std::string& ref) {
  return ref.empty() ? nullptr : load_quandle(ref);
}

int report_exit(const Globals& g, const Json& doc, bool ok) {
  emit(g, doc);
  return ok ? 0 : 1;
}

Json coloring_list(const std::vector<std::vector<int>>& cols) {
  Json a = Json::array();
  for (const auto& c : cols) a.push_back(c);
  return a;
}

Json laurent_block_to_json(const LaurentBlock& b) {
  Json j = Json::object();
  for (const auto& [e, m] : b.terms) j[std::to_string(e)] = matrix_to_json(m);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quandle colorings, cocycle and module invariants, and Fox calculus for closed braids"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--variant", g.variant, "Cochain variant: rack or quandle")
      ->check(CLI::IsMember({"rack", "quandle"}));
  app.add_option("--guard", g.guard, "Enumeration or table-size guard");
  app.add_option("--jobs", g.jobs, "Worker threads");
  app.add_option("--out", g.out, "Write the output document to PATH");

  int exit_code = 0;

  // check
  auto* check = app.add_subcommand("check", "Validate a quandle, representation or cocycle");
  check->require_subcommand(1);
  std::string check_ref, check_quandle, check_rep;
  int check_degree = 2;

  auto* check_q = check->add_subcommand("quandle", "Check the quandle axioms");
  check_q->add_option("ref", check_ref, "Shorthand or file")->required();
  check_q->callback([&] {
    const auto q = load_quandle(check_ref);
    const ValidationReport r = verify_axioms(q->size(), q->table());
    exit_code = report_exit(g, {{"quandle", q->label()}, {"report", report_to_json(r)}}, r.ok());
  });

  auto* check_r = check->add_subcommand("rep", "Check the four algebra relations");
  check_r->add_option("ref", check_ref, "Shorthand or file")->required();
  check_r->add_option("--quandle", check_quandle, "Quandle shorthand or file");
  check_r->callback([&] {
    const AlgebraRep rep = load_rep(check_ref, optional_quandle(check_quandle));
    const ValidationReport r = verify_relations(rep);
    exit_code = report_exit(g, {{"rep", rep.label()}, {"report", report_to_json(r)}}, r.ok());
  });

  auto* check_c = check->add_subcommand("cocycle", "Check cocycle conditions for a cochain or basis file");
  check_c->add_option("ref", check_ref, "Cochain file, basis file, file#i, or 'zero'")->required();
  check_c->add_option("--rep", check_rep, "Representation")->required();
  check_c->add_option("--quandle", check_quandle, "Quandle shorthand or file");
  check_c->add_option("--degree", check_degree, "Degree used for 'zero'");
  check_c->callback([&] {
    std::optional<Modulus> modulus;
    if (check_ref != "zero") {
      std::string path = check_ref;
      if (const auto hash = path.rfind('#'); hash != std::string::npos && !std::filesystem::exists(path))
        path.resize(hash);
      const Json doc = read_json_file(path);
      const Json& first = doc.contains("basis") && !doc["basis"].empty() ? doc["basis"][0] : doc;
      if (first.contains("modulus") && first["modulus"].is_number_integer()) modulus = first["modulus"].get<Modulus>();
    }
    const AlgebraRep rep = load_rep(check_rep, optional_quandle(check_quandle), modulus);
    const ComplexConfig cfg(rep, 0, parse_variant(g.variant));
    Json results = Json::array();
    bool all = true;
    for (const Cochain& c : load_cochains(check_ref, rep, check_degree)) {
      bool ok;
      if (c.degree() == 2)
        ok = is_cocycle_2(cfg, c);
      else if (c.degree() == 3 && rep.is_conj_type())
        ok = is_cocycle_3(cfg, c);
      else
        ok = is_cocycle(cfg, c);
      all = all && ok;
      results.push_back({{"degree", c.degree()}, {"cocycle", ok}});
    }
    exit_code = report_exit(g, {{"rep", rep.label()}, {"variant", g.variant}, {"results", results}, {"ok", all}}, all);
  });

  // colorings
  auto* colorings = app.add_subcommand("colorings", "Enumerate closure colorings");
  std::string col_quandle, col_braid;
  colorings->add_option("quandle", col_quandle, "Quandle shorthand or file")->required();
  colorings->add_option("braid", col_braid, "Knot name or braid word")->required();
  colorings->callback([&] {
    const auto q = load_quandle(col_quandle);
    const BraidWord w = resolve_braid(col_braid);
    const auto cols = colorings_of_closure(*q, w, enumeration(g));
    emit(g, {{"quandle", q->label()}, {"braid", w.str()}, {"count", cols.size()}, {"colorings", coloring_list(cols)}});
  });

  // search
  auto* search = app.add_subcommand("search", "Basis of the cocycle space over a prime field");
  int search_degree = 2;
  std::string search_quandle, search_rep;
  Modulus search_prime = 2;
  search->add_option("degree", search_degree, "Cochain degree (1-3)")->required();
  search->add_option("quandle", search_quandle, "Quandle shorthand or file")->required();
  search->add_option("rep", search_rep, "Representation (modulus defaults to the prime)")->required();
  search->add_option("prime", search_prime, "Prime modulus")->required();
  search->callback([&] {
    const auto q = load_quandle(search_quandle);
    const AlgebraRep rep = load_rep(search_rep, q, search_prime);
    if (rep.modulus() != search_prime) throw InputError("representation modulus differs from the prime");
    const ComplexConfig cfg(rep, 0, parse_variant(g.variant));
    const auto basis = cocycle_space(cfg, search_degree);
    Json b = Json::array();
    for (const auto& c : basis) b.push_back(cochain_to_json(c));
    emit(g, {{"quandle", q->label()},
             {"rep", rep.label()},
             {"variant", g.variant},
             {"degree", search_degree},
             {"prime", search_prime},
             {"dimension", basis.size()},
             {"basis", b}});
  });

  // invariant
  auto* invariant = app.add_subcommand("invariant", "Compute a knot invariant");
  std::string inv_kind, inv_quandle, inv_rep, inv_cocycle = "zero", inv_knot;
  std::optional<std::int64_t> inv_t0;
  bool inv_cross_check = false;
  invariant->add_option("kind", inv_kind, "cocycle, module, alexander or twisted")
      ->required()
      ->check(CLI::IsMember({"cocycle", "module", "alexander", "twisted"}));
  invariant->add_option("--quandle", inv_quandle, "Quandle shorthand or file");
  invariant->add_option("--rep", inv_rep, "Representation");
  invariant->add_option("--cocycle", inv_cocycle, "2-cocycle file, file#i for one basis entry, or 'zero'");
  invariant->add_option("--knot,--braid", inv_knot, "Knot name or braid word")->required();
  invariant->add_option("--t0", inv_t0, "Evaluate twisted matrices at t = t0 and report cokernels");
  invariant->add_flag("--cross-check", inv_cross_check, "Compare per-crossing weights with the chain pairing");
  invariant->callback([&] {
    const BraidWord w = resolve_braid(inv_knot);
    if (inv_kind == "alexander") {
      const LaurentPoly d = alexander_polynomial(w);
      emit(g, {{"braid", w.str()}, {"polynomial", laurent_to_json(d)}, {"determinant", knot_determinant(d).get_str()}});
      return;
    }
    if (inv_quandle.empty() && inv_rep.rfind("conj-rep", 0) != 0) throw InputError("--quandle is required");
    if (inv_rep.empty()) throw InputError("--rep is required");
    const AlgebraRep rep = load_rep(inv_rep, optional_quandle(inv_quandle));
    if (inv_kind == "module") {
      emit(g, module_invariant_to_json(module_invariant(rep, w, enumeration(g))));
    } else if (inv_kind == "cocycle") {
      const auto kappas = load_cochains(inv_cocycle, rep, 2);
      if (kappas.size() != 1) throw InputError("--cocycle must name a single cochain");
      CocycleInvariantOptions o;
      o.enumeration = enumeration(g);
      o.cross_check = inv_cross_check;
      InvariantMultiset m = cocycle_invariant(rep, kappas[0], w, o);
      m.meta.cocycle = inv_cocycle;
      emit(g, multiset_to_json(m));
    } else {
      if (!rep.is_conj_type()) throw InputError("twisted matrices need a conjugation-type representation");
      const auto& rho = *rep.conj_action();
      const WirtingerPresentation p = wirtinger_from_braid(w);
      Json items = Json::array();
      for (const auto& col : colorings_of_closure(rep.quandle(), w, enumeration(g))) {
        std::vector<ModMatrix> images;
        for (int c : arc_colors(p, act(rep.quandle(), w, col))) images.push_back(rho[c]);
        const TwistedMatrix t = twisted_matrix(p, images);
        Json rows = Json::array();
        for (const auto& row : t.entries) {
          Json r = Json::array();
          for (const auto& e : row) r.push_back(laurent_block_to_json(e));
          rows.push_back(r);
        }
        Json item = {{"coloring", col}, {"matrix", rows}};
        if (inv_t0) item["cokernel"] = cokernel_mod(IntMatrix::from_mod(t.evaluate(*inv_t0)), rep.modulus());
        items.push_back(item);
      }
      Json doc = {{"braid", w.str()}, {"rep", rep.label()}, {"generators", p.generators}, {"colorings", items}};
      if (inv_t0) doc["t0"] = *inv_t0;
      emit(g, doc);
    }
  });

  // homology
  auto* homology = app.add_subcommand("homology", "Invariant factors of a cohomology group");
  int hom_degree = 2, hom_basepoint = 0;
  std::string hom_quandle, hom_rep;
  homology->add_option("degree", hom_degree, "Degree (0-3)")->required();
  homology->add_option("quandle", hom_quandle, "Quandle shorthand or file")->required();
  homology->add_option("rep", hom_rep, "Representation")->required();
  homology->add_option("--basepoint", hom_basepoint, "Basepoint x0");
  homology->callback([&] {
    const auto q = load_quandle(hom_quandle);
    const AlgebraRep rep = load_rep(hom_rep, q);
    const ComplexConfig cfg(rep, hom_basepoint, parse_variant(g.variant));
    emit(g, {{"quandle", q->label()},
             {"rep", rep.label()},
             {"variant", g.variant},
             {"degree", hom_degree},
             {"basepoint", hom_basepoint},
             {"invariant_factors", cohomology(cfg, hom_degree)}});
  });

  // compare
  auto* compare = app.add_subcommand("compare", "Support inclusion of two cocycle-invariant multisets");
  std::string cmp_a, cmp_b;
  compare->add_option("a", cmp_a, "Invariant document")->required();
  compare->add_option("b", cmp_b, "Invariant document")->required();
  compare->callback([&] {
    const bool c = multiset_contained(multiset_from_json(read_json_file(cmp_a)), multiset_from_json(read_json_file(cmp_b)));
    exit_code = report_exit(g, {{"a", cmp_a}, {"b", cmp_b}, {"contained", c}}, c);
  });

  // extend
  auto* extend = app.add_subcommand("extend", "Dynamical extension quandle");
  std::string ext_quandle, ext_rep, ext_cocycle = "zero";
  extend->add_option("--quandle", ext_quandle, "Quandle shorthand or file");
  extend->add_option("--rep", ext_rep, "Representation")->required();
  extend->add_option("--cocycle", ext_cocycle, "2-cochain file, file#i for one basis entry, or 'zero'");
  extend->callback([&] {
    const AlgebraRep rep = load_rep(ext_rep, optional_quandle(ext_quandle));
    const auto kappas = load_cochains(ext_cocycle, rep, 2);
    if (kappas.size() != 1) throw InputError("--cocycle must name a single cochain");
    const ExtensionResult r = dynamical_extension(rep, &kappas[0], g.guard > 0 ? g.guard : 64);
    Json rows = Json::array();
    for (int a = 0; a < r.size; ++a)
      rows.push_back(std::vector<int>(r.table.begin() + a * r.size, r.table.begin() + (a + 1) * r.size));
    exit_code = report_exit(g, {{"rep", rep.label()}, {"size", r.size}, {"table", rows}, {"report", report_to_json(r.report)}},
                            r.report.ok());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const SizeLimitError& e) {
    std::cerr << "guard exceeded: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return exit_code;
}
