#include "phl/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "phl/perverse.hpp"

namespace phl {

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // what() already reads "... parse error at line L, column C: ..."
    throw ParseError(e.what());
  }
}

namespace {

void reject_unknown(const Json& doc, const std::set<std::string>& allowed, const char* what) {
  for (const auto& [key, value] : doc.items())
    if (!allowed.contains(key)) throw ParseError(std::string(what) + ": unknown field \"" + key + "\"");
}

long long get_int(const Json& doc, const char* key, const char* what) {
  const Json& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string(what) + ": field \"" + key + "\" must be an integer");
  return v.get<long long>();
}

unsigned get_unsigned(const Json& doc, const char* key, const char* what) {
  const long long v = get_int(doc, key, what);
  if (v < 0) throw ParseError(std::string(what) + ": field \"" + key + "\" must be non-negative");
  return static_cast<unsigned>(v);
}

}  // namespace

ModelSpec model_spec_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("model spec: expected a JSON object");
  reject_unknown(doc, {"kind", "n", "b2", "gram"}, "model spec");
  if (!doc.contains("kind") || !doc["kind"].is_string()) throw ParseError("model spec: \"kind\" must be a string");
  ModelSpec spec;
  const std::string kind = doc["kind"].get<std::string>();
  if (kind == "k3")
    spec.kind = ModelKind::k3;
  else if (kind == "verbitsky")
    spec.kind = ModelKind::verbitsky;
  else
    throw ParseError("model spec: unknown kind \"" + kind + "\"");
  if (doc.contains("n")) spec.n = get_unsigned(doc, "n", "model spec");
  if (doc.contains("b2")) spec.b2 = get_unsigned(doc, "b2", "model spec");
  if (doc.contains("gram")) {
    const Json& g = doc["gram"];
    if (!g.is_array()) throw ParseError("model spec: \"gram\" must be an array of rows");
    const std::size_t rows = g.size();
    MatrixQ m(rows, rows);
    for (std::size_t r = 0; r < rows; ++r) {
      if (!g[r].is_array() || g[r].size() != rows) throw ParseError("model spec: gram must be square");
      for (std::size_t c = 0; c < rows; ++c) {
        const Json& e = g[r][c];
        try {
          if (e.is_string())
            m(r, c) = Rational::parse(e.get<std::string>());
          else if (e.is_number_integer())
            m(r, c) = Rational(e.get<long long>());
          else
            throw std::invalid_argument("not a rational string");
        } catch (const std::invalid_argument&) {
          throw ParseError("model spec: gram entry (" + std::to_string(r) + ", " + std::to_string(c) +
                           ") is not a rational \"p/q\"");
        }
      }
    }
    spec.gram = std::move(m);
  }
  return spec;
}

Json model_spec_to_json(const ModelSpec& spec) {
  Json doc = {{"kind", spec.kind == ModelKind::k3 ? "k3" : "verbitsky"}, {"n", spec.n}, {"b2", spec.b2}};
  if (spec.gram) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < spec.gram->rows(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < spec.gram->cols(); ++c) row.push_back((*spec.gram)(r, c).str());
      rows.push_back(std::move(row));
    }
    doc["gram"] = std::move(rows);
  }
  return doc;
}

Json cube_to_json(const PerverseHodgeCube& cube) {
  Json entries = Json::array();
  for (const auto& [key, h] : cube.entries()) {
    const auto [d, k, i] = key;
    entries.push_back({{"i", i}, {"k", k}, {"d", d}, {"h", h}});
  }
  return {{"n", cube.n()}, {"entries", std::move(entries)}};
}

PerverseHodgeCube cube_from_json(const Json& doc) {
  if (!doc.is_object()) throw ParseError("cube: expected a JSON object");
  reject_unknown(doc, {"n", "entries"}, "cube");
  if (!doc.contains("n") || !doc.contains("entries")) throw ParseError("cube: needs \"n\" and \"entries\"");
  const unsigned n = get_unsigned(doc, "n", "cube");
  if (n == 0) throw ParseError("cube: n must be positive");
  if (!doc["entries"].is_array()) throw ParseError("cube: \"entries\" must be an array");
  PerverseHodgeCube cube(n);
  std::set<std::tuple<int, int, int>> seen;
  for (const Json& e : doc["entries"]) {
    if (!e.is_object()) throw ParseError("cube: entry is not an object");
    reject_unknown(e, {"i", "k", "d", "h"}, "cube entry");
    for (const char* key : {"i", "k", "d", "h"})
      if (!e.contains(key)) throw ParseError(std::string("cube entry: missing \"") + key + "\"");
    const int i = static_cast<int>(get_int(e, "i", "cube entry"));
    const int k = static_cast<int>(get_int(e, "k", "cube entry"));
    const int d = static_cast<int>(get_int(e, "d", "cube entry"));
    const long long h = get_int(e, "h", "cube entry");
    if (h < 0) throw ParseError("cube entry: negative h");
    if (d < 0 || d > 2 * static_cast<int>(n)) throw ParseError("cube entry: d outside 0..2n");
    if (!seen.insert({d, k, i}).second) throw ParseError("cube entry: duplicate (i, k, d)");
    cube.set(i, k, d, static_cast<std::size_t>(h));
  }
  return cube;
}

bool is_cube_document(const Json& doc) { return doc.is_object() && doc.contains("entries"); }

Json model_summary(const GradedAlgebraModel& model) {
  Json pieces = Json::array();
  for (unsigned d = 0; d < model.pieces.size(); ++d) {
    const GradedPiece& p = model.pieces[d];
    std::map<Bidegree, std::size_t> hodge;
    for (const Bidegree b : p.bidegree) ++hodge[b];
    Json h = Json::array();
    for (const auto& [b, count] : hodge) h.push_back({{"p", b.p}, {"q", b.q}, {"dim", count}});
    pieces.push_back({{"degree", 2 * d}, {"dim", p.dim}, {"hodge", std::move(h)}, {"basis", p.names}});
  }
  Json gram = Json::array();
  for (std::size_t r = 0; r < model.h2.gram.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < model.h2.gram.cols(); ++c) row.push_back(model.h2.gram(r, c).str());
    gram.push_back(std::move(row));
  }
  return {{"n", model.n},
          {"b2", model.b2()},
          {"total_dim", model.total_dim()},
          {"betti", betti_numbers(model)},
          {"gram", std::move(gram)},
          {"pieces", std::move(pieces)}};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace phl
