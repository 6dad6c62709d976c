#include "cohlab/document.hpp"

#include <json.hpp>

namespace cohlab {

namespace {

using json = nlohmann::ordered_json;

std::pair<VertexId, VertexId> parse_edge_key(const std::string& key) {
  auto dash = key.find('-', key.empty() || key[0] != '-' ? 0 : 1);
  if (dash == std::string::npos || dash == 0 || dash + 1 == key.size())
    fail(Errc::SchemaError, "label key \"" + key + "\" is not of the form \"i-j\"");
  try {
    std::size_t used = 0;
    int a = std::stoi(key.substr(0, dash), &used);
    if (used != dash) throw std::invalid_argument(key);
    std::size_t used2 = 0;
    std::string rest = key.substr(dash + 1);
    int b = std::stoi(rest, &used2);
    if (used2 != rest.size()) throw std::invalid_argument(key);
    if (a < 0 || b < 0 || a >= b)
      fail(Errc::SchemaError, "label key \"" + key + "\" must have 0 <= i < j");
    return {a, b};
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Errc::SchemaError, "label key \"" + key + "\" is not of the form \"i-j\"");
  }
}

}  // namespace

PolyhedronDocument parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    fail(Errc::SyntaxError, ex.what());
  }
  if (!doc.is_object()) fail(Errc::SchemaError, "document root must be an object");
  for (const auto& [k, v] : doc.items())
    if (k != "version" && k != "vertices" && k != "faces" && k != "labels")
      fail(Errc::SchemaError, "unknown field \"" + k + "\"");
  if (!doc.contains("version") || !doc["version"].is_number_integer())
    fail(Errc::SchemaError, "missing integer field \"version\"");
  if (doc["version"].get<int>() != 1)
    fail(Errc::SchemaError, "unsupported version " + doc["version"].dump());
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
    fail(Errc::SchemaError, "missing integer field \"vertices\"");
  if (!doc.contains("faces") || !doc["faces"].is_array())
    fail(Errc::SchemaError, "missing array field \"faces\"");

  std::vector<std::vector<VertexId>> faces;
  for (const auto& f : doc["faces"]) {
    if (!f.is_array()) fail(Errc::SchemaError, "face entries must be arrays");
    std::vector<VertexId> cyc;
    for (const auto& v : f) {
      if (!v.is_number_integer()) fail(Errc::SchemaError, "face vertices must be integers");
      cyc.push_back(v.get<int>());
    }
    faces.push_back(std::move(cyc));
  }

  PolyhedronDocument out;
  out.poly = build_from_faces(std::move(faces));
  int declared = doc["vertices"].get<int>();
  if (declared != out.poly.vertex_count)
    fail(Errc::SchemaError, "\"vertices\" is " + std::to_string(declared) + " but faces reference " +
                                std::to_string(out.poly.vertex_count) + " vertices");

  if (doc.contains("labels")) {
    if (!doc["labels"].is_object()) fail(Errc::SchemaError, "\"labels\" must be an object");
    Labelling l(out.poly.edge_count());
    std::vector<char> seen(out.poly.edge_count(), 0);
    for (const auto& [key, val] : doc["labels"].items()) {
      auto [a, b] = parse_edge_key(key);
      EdgeId e = out.poly.find_edge(a, b);
      if (e < 0) fail(Errc::SchemaError, "label key \"" + key + "\" is not an edge");
      if (seen[e]) fail(Errc::SchemaError, "duplicate label key \"" + key + "\"");
      seen[e] = 1;
      if (val.is_number_integer())
        l[e] = Rat(val.get<long long>());
      else if (val.is_string())
        l[e] = parse_rational(val.get<std::string>());
      else
        fail(Errc::SchemaError, "label \"" + key + "\" must be an integer or a \"p/q\" string");
    }
    for (int e = 0; e < out.poly.edge_count(); ++e)
      if (!seen[e])
        fail(Errc::MissingLabel, "edge " + std::to_string(out.poly.edges[e].first) + "-" +
                                     std::to_string(out.poly.edges[e].second) + " has no label");
    validate_labels(out.poly, l);
    out.labels = std::move(l);
  }
  return out;
}

std::string serialize_document(const Polyhedron& p, const Labelling* labels) {
  json doc;
  doc["version"] = 1;
  doc["vertices"] = p.vertex_count;
  doc["faces"] = json::array();
  for (const auto& f : p.faces) doc["faces"].push_back(f);
  if (labels) {
    validate_labels(p, *labels);
    json lab = json::object();
    // edges are already sorted by numeric pair
    for (int e = 0; e < p.edge_count(); ++e) {
      std::string key =
          std::to_string(p.edges[e].first) + "-" + std::to_string(p.edges[e].second);
      const Rat& r = (*labels)[e];
      if (r.is_integer())
        lab[key] = r.num();
      else
        lab[key] = r.str();
    }
    doc["labels"] = std::move(lab);
  }
  return doc.dump(2) + "\n";
}

}  // namespace cohlab
