#pragma once

// JSON payloads. Every scalar is a string in the qscalar text grammar.
//
//   UqElement   {"terms":[{"l":-1,"i":2,"j":0,"coeff":"q^2"}]}
//   PathVector  {"terms":[{"path":"2:[+,-]","coeff":"q^4"}]}
//   QuiverRep   {"start":0,"dims":[1,1],"upper":[[["1"]]],"lower":[[["q"]]]}
//   RepElement  {"l":0,"v":["1"]} or {"components":[{"l":0,"v":["1"]}]}
//   Schurian    {"l":0,"n":2,"lambda":"q"}   (lambda "inf" for infinity)
//
// Malformed input raises ParseError; inconsistent shapes raise ShapeMismatch.

#include <string>

#include <json.hpp>

#include "uqkit/pathcoalg.hpp"
#include "uqkit/quiverrep.hpp"
#include "uqkit/uqsl2.hpp"

namespace uqkit {

using Json = nlohmann::ordered_json;

Json to_json(const UqElement& u);
UqElement uq_element_from_json(const Json& j);

Json to_json(const PathVector& x);
PathVector path_vector_from_json(const Json& j);

Json to_json(const Matrix& m);
Json to_json(const QuiverRep& rep);
QuiverRep rep_from_json(const Json& j);

Json to_json(const RepElement& e);
/// Vector entries may be strings or integers.
RepElement rep_element_from_json(const Json& j);

Json to_json(const SchurianData& s);
SchurianData schurian_from_json(const Json& j);

/// Parses text, turning JSON syntax errors into ParseError.
Json parse_json(const std::string& text);

}  // namespace uqkit
