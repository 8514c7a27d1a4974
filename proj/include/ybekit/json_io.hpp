#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "ybekit/brace.hpp"
#include "ybekit/enumerate.hpp"
#include "ybekit/error.hpp"
#include "ybekit/solution.hpp"

namespace ybekit {

inline constexpr const char* kToolName = "ybekit";
inline constexpr const char* kToolVersion = "0.1.0";

using Json = nlohmann::json;

/// Malformed JSON text or a document that does not match the schema.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Perms are arrays of 0-based images. Solutions are {"n": n, "sigma": [[...], ...]}.
Json to_json(const Perm& p);
Perm perm_from_json(const Json& j);
Json to_json(const Solution& s);
Solution solution_from_json(const Json& j);

/// Parses JSON text; syntax errors carry a line:column position.
Json parse_json_text(const std::string& text);
Solution parse_solution(const std::string& text);

Json to_json(const ValidationReport& r);
Json to_json(const CatalogRecord& r);
CatalogRecord record_from_json(const Json& j);

/// {"order": k, "elements": [...], "mul": [[...]], "add": [[...]]}, plus
/// "lambda" when requested.
Json to_json(const FiniteBrace& b, bool with_lambda = false);

/// JSON-lines catalog: a header line then one record per line.
struct Catalog {
  Json header;
  std::vector<CatalogRecord> records;
};

Json catalog_header(std::size_t n, const EnumerateOptions& opts, std::size_t count);
void write_catalog(std::ostream& out, const Catalog& catalog);
Catalog read_catalog(std::istream& in);

/// Per-flag tallies over a record list.
Json tally(const std::vector<CatalogRecord>& records);

Json to_json(const ClassificationReport& r);
/// n,classes,indecomposable,irretractable,primitive,shape_ok
std::string classification_csv(const ClassificationReport& r);

}  // namespace ybekit
