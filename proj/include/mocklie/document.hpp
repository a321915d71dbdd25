#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "mocklie/extensions.hpp"

namespace mocklie {

// On-disk description of a superalgebra with optional attachments. The
// JSON schema:
//
//   {
//     "name": "e2",
//     "dims": {"even": 2, "odd": 0},
//     "products": [{"i": 0, "j": 0, "terms": [{"k": 1, "c": "1"}]}],
//     "form": {"entries": [{"i": 0, "j": 1, "c": "1"}]},
//     "maps": [{"name": "d", "degree": 1, "entries": [{"i": 2, "j": 0, "c": "1"}]}],
//     "representations": [{"name": "r", "module": {"even": 1, "odd": 0},
//                          "operators": [[{"i": 0, "j": 0, "c": "1"}], ...]}],
//     "cocycles": [{"name": "w", "module": {"even": 2, "odd": 0},
//                   "entries": [{"i": 0, "j": 0, "terms": [{"k": 1, "c": "1"}]}]}]
//   }
//
// name, dims and products are required; the rest is optional.
// Coefficients are strings "p" or "p/q". Map entries set column j of
// the matrix at row i and must respect the declared degree (0 or 1).
// Representations act on the document's algebra; "operators" lists one
// entry array per algebra basis vector. Cocycle values must carry the
// parity |e_i| + |e_j|. Unknown keys, out-of-range indices, duplicate
// entries and malformed rationals are rejected with a field path in the
// error message.
struct AlgebraDocument {
  SuperAlgebra algebra;
  std::optional<BilinearForm> form;
  std::map<std::string, GradedLinearMap> maps;
  std::map<std::string, Representation> representations;
  std::map<std::string, Cocycle> cocycles;

  friend bool operator==(const AlgebraDocument&, const AlgebraDocument&) = default;
};

struct DocumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

AlgebraDocument parse_document(const std::string& text);

// Canonical form: fixed key order, entries sorted by index, attachments
// sorted by name, zero coefficients omitted, two-space indentation,
// trailing newline. parse_document(render_document(d)) == d for any d
// whose attachments act on d's algebra, and rendering is byte-stable.
std::string render_document(const AlgebraDocument& doc);

AlgebraDocument load_document(const std::string& path);

// Report as JSON: {"all_pass": bool, "entries": [{"check", "pass",
// "witness", "defect", "note"}, ...]} with empty fields omitted.
std::string render_report_json(const CheckReport& report);

}  // namespace mocklie
