#pragma once

#include <optional>
#include <string>

#include "cohlab/labelling.hpp"
#include "cohlab/polyhedron.hpp"

namespace cohlab {

// The one persistence format. JSON with fields
//   version   : 1
//   vertices  : vertex count
//   faces     : list of faces, each a list of 0-based vertex indices
//   labels    : optional object, edge key "i-j" (i < j) -> integer or exact
//               rational string "p/q"
// Serialization is byte-deterministic: faces in id order, edge keys in
// numeric pair order, rationals reduced, trailing newline.
struct PolyhedronDocument {
  int version = 1;
  Polyhedron poly;
  std::optional<Labelling> labels;
};

// Throws SyntaxError for malformed JSON (with byte offset), SchemaError for
// shape violations (including label keys that are not edges), and the
// surface validation errors for bad face data.
PolyhedronDocument parse_document(const std::string& text);

std::string serialize_document(const Polyhedron& p, const Labelling* labels = nullptr);

}  // namespace cohlab
