#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "quandlekit/fox.hpp"
#include "quandlekit/homology.hpp"
#include "quandlekit/invariants.hpp"

namespace qk {

using Json = nlohmann::json;

/// Bundled knots by name, e.g. "3_1" -> "k=2; 1 1 1".
const std::map<std::string, BraidWord>& knot_table();

/// A knot name from the table or braid text.
BraidWord resolve_braid(std::string_view ref);

/// Reads and parses a JSON document; ParseError with the byte offset on bad syntax.
Json read_json_file(const std::filesystem::path& path);
/// Pretty-printed with sorted keys and a trailing newline.
std::string dump_json(const Json& doc);

Json quandle_to_json(const FiniteQuandle& q);
FiniteQuandle quandle_from_json(const Json& doc);
/// "dihedral:n", "alexander:n:t", "trivial:n", or a path to a quandle document.
std::shared_ptr<const FiniteQuandle> load_quandle(std::string_view ref);

Json rep_to_json(const AlgebraRep& rep);
/// The "quandle" field may be an inline document or a reference string.
AlgebraRep rep_from_json(const Json& doc);

/// Shorthands:
///   alexander-rep:N:t[:dim]     eta = t, tau = 1 - t on `quandle`
///   conj-rep:perm3[:N]          R_3 by permutation matrices (quandle must be R_3; N = 3 if unset)
///   trivial-action[:N[:dim]]    eta = I, tau = 0 on `quandle`
/// or a path to a representation document. `default_modulus` fills in a missing N.
AlgebraRep load_rep(std::string_view ref, std::shared_ptr<const FiniteQuandle> quandle,
                    std::optional<Modulus> default_modulus = std::nullopt);

Json cochain_to_json(const Cochain& c);
Cochain cochain_from_json(const Json& doc, const AlgebraRep& rep);
/// "zero" (needs `zero_degree`) or a path to a cochain document; a document holding a
/// "basis" list yields every cochain in it, or only entry i when written "path#i".
std::vector<Cochain> load_cochains(std::string_view ref, const AlgebraRep& rep, int zero_degree = 2);

Json report_to_json(const ValidationReport& r);
Json metadata_to_json(const InvariantMetadata& m);
Json multiset_to_json(const InvariantMultiset& m);
InvariantMultiset multiset_from_json(const Json& doc);
Json module_invariant_to_json(const ModuleInvariant& m);
Json laurent_to_json(const LaurentPoly& p);
Json matrix_to_json(const ModMatrix& m);
ModMatrix matrix_from_json(const Json& rows, Modulus modulus);

}  // namespace qk
