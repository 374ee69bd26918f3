#pragma once

#include <stdexcept>
#include <string>

#include "phl/model.hpp"
#include "phl/perverse.hpp"
#include "phl/report.hpp"

namespace phl {

/// Malformed input document; the message carries line and column when the
/// JSON itself does not parse.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_text_file(const std::string& path);

/// Parses JSON text, rethrowing syntax errors as ParseError.
Json parse_json(const std::string& text);

/// {"kind": "k3"|"verbitsky", "n": int, "b2": int, "gram": [["p/q", ...], ...]}.
/// Missing n defaults to 1, missing b2 to 22. Unknown fields are rejected.
ModelSpec model_spec_from_json(const Json& doc);
Json model_spec_to_json(const ModelSpec& spec);

/// {"n": int, "entries": [{"i", "k", "d", "h"}, ...]} sorted by (d, k, i),
/// zeros omitted.
Json cube_to_json(const PerverseHodgeCube& cube);
PerverseHodgeCube cube_from_json(const Json& doc);
/// A document with an "entries" key is a cube, anything else a model spec.
bool is_cube_document(const Json& doc);

/// Dimensions, Betti numbers, Hodge numbers and basis labels.
Json model_summary(const GradedAlgebraModel& model);

/// Two-space indented dump followed by a newline.
std::string dump(const Json& doc);

}  // namespace phl
