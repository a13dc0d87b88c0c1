#pragma once

// JSON encodings of every artifact. Top-level documents carry "v": 1 and a
// "type" tag; integers beyond ±2^53 are written as decimal strings.
//
// Readers throw ParseError on malformed structure. Semantic validation
// (InvalidPair, InvalidPresentation, ...) is left to the library calls that
// the readers route through.

#include <string>
#include <vector>

#include <json.hpp>

#include "lmap/diskledger.hpp"
#include "lmap/kirk.hpp"
#include "lmap/presentation.hpp"
#include "lmap/unlink.hpp"

namespace lmap::io {

using Json = nlohmann::json;

constexpr int kSchemaVersion = 1;

Json to_json(const Integer& c);
Json to_json(const LaurentPoly& p);
Json to_json(const ZPoly& p);
Json to_json(const LaurentMatrix& m);
Json to_json(const SphereClass& c);
Json to_json(const KirkPair& k);
Json to_json(const JKInput& in);
Json to_json(const Presentation& p);
Json to_json(const DiskRecord& d);
Json to_json(const IsometryWitness& w);
Json to_json(const UnlinkCertificate& c);
Json to_json(const Verdict& v, const Presentation& p);

Integer integer_from_json(const Json& j);
LaurentPoly laurent_from_json(const Json& j);
ZPoly zpoly_from_json(const Json& j);
LaurentMatrix matrix_from_json(const Json& j);
SphereClass sphere_from_json(const Json& j);
KirkPair kirk_from_json(const Json& j);
JKInput jk_from_json(const Json& j);
Presentation presentation_from_json(const Json& j);
DiskRecord disk_from_json(const Json& j);
IsometryWitness witness_from_json(const Json& j);
UnlinkCertificate certificate_from_json(const Json& j);

// Adds "v" and "type" to an object body.
Json document(const std::string& type, Json body);
// Checks "v" and, when `expected` is nonempty, that "type" matches.
// Returns the type tag.
std::string document_type(const Json& doc, const std::string& expected = {});

Json parse(const std::string& text);
// Pretty-printed with a trailing newline; byte-stable for equal inputs.
std::string dump(const Json& doc);

// Derived documents produced by the CLI.
Json invariants_document(const Presentation& p);
Json expansion_document(const LaurentPoly& a, std::size_t depth, std::size_t zpower);

struct VerifyReport {
    std::string type;
    std::vector<std::string> passed;
    std::string failure;  // empty when every check passed
    bool ok() const { return failure.empty(); }
};

// Re-runs every invariant check for the document's declared type. Parse
// problems are reported as failures, not thrown.
VerifyReport verify_document(const Json& doc);

}  // namespace lmap::io
