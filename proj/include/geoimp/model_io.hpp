#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "geoimp/geometry.hpp"
#include "geoimp/implication.hpp"
#include "geoimp/knframe.hpp"
#include "geoimp/lattice.hpp"
#include "geoimp/represent.hpp"
#include "geoimp/topology.hpp"

namespace geoimp {

// Models are JSON documents; see docs/models.md for the schemas. Errors are
// ModelError(ParseError) carrying "line L, column C" for syntax problems and
// the JSON pointer of the offending field otherwise. Validation errors keep
// their own kind, with the field path prepended to the message.

using Json = nlohmann::ordered_json;

Json parse_json_text(std::string_view text);
Json load_json_file(const std::string& path);

LatticePtr lattice_from_json(const Json& j);
Json to_json(const FinLattice& l);

SpacePtr space_from_json(const Json& j);
Json to_json(const FinSpace& x);

ContinuousMap map_from_json(const Json& j);

/// An implication over either a lattice or the opens of a space. Table rows
/// follow the element order (for spaces: the canonical order of the opens)
/// and name their entries.
struct ImplicationModel {
  Implication implication;
  /// Set when the model was given over a space.
  SpacePtr space;
};
ImplicationModel implication_from_json(const Json& j);
Json table_to_json(const Implication& imp);
Json to_json(const ImplicationClass& cls, const FinLattice& l);

KNFrame frame_from_json(const Json& j);
Json to_json(const KNFrame& frame);

AdjointData adjoint_from_json(const Json& j);

/// "maps" may be a list or the string "all" for every continuous map.
SpaceCategory category_from_json(const Json& j);
Json to_json(const SpaceCategory& c);

/// {object name: [tables]}; objects left out get empty fibers.
FiberAssignment assignment_from_json(const SpaceCategory& c, const Json& j);
Json to_json(const SpaceCategory& c, const FiberAssignment& a);

/// Resolves a set written with point names, "{}" for the empty set and "K"
/// or "X" for everything when no point has that name.
Subset parse_point_set(std::span<const std::string> points, std::string_view text);

}  // namespace geoimp
