#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "lp2/homalg.hpp"
#include "lp2/oricalc.hpp"
#include "lp2/quiver.hpp"
#include "lp2/windows.hpp"

namespace lp2 {

using json = nlohmann::ordered_json;

std::string version();

/// Convention identifiers embedded in every report.
json conventions();

// {heart, dims, matrices: {a1: ["p/q", ...], ...}, label}; matrices are flat row-major.
json to_json(const Representation& rep);
/// Validates structure and shapes (InputError/ShapeError). Relations are not checked.
Representation representation_from_json(const json& j);

Representation read_representation(const std::string& path);
void write_representation(const Representation& rep, const std::string& path);

json to_json(const ExtReport& r);
json to_json(const ProofReport& r);
json to_json(const WindowVector& wv);
WindowVector window_from_json(const json& j);
json to_json(const Membership& m);
json to_json(const DetCharacter& c);
json to_json(const RelationCheck& rc);

/// Stamps version and conventions onto a report object.
json stamped(json report);

}  // namespace lp2
