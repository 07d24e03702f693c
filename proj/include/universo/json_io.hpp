#pragma once

#include "universo/coloring.hpp"
#include "universo/design.hpp"
#include "universo/graph.hpp"
#include "universo/pathdecomp.hpp"
#include "universo/universal.hpp"

#include <json.hpp>

#include <string>

namespace universo {

using json = nlohmann::json;

// wire schemas; see README for the exact shapes
json to_json(const VertexMap& m);
VertexMap vertex_map_from_json(const json& j);

json to_json(const Coloring& c);
Coloring coloring_from_json(const json& j);

json to_json(const PathDecomposition& d);
PathDecomposition decomposition_from_json(const json& j);

json to_json(const CliquePacking& p);
CliquePacking packing_from_json(const json& j);

json to_json(const RebalanceTrace& t);

json to_json(const FamilySpec& f); // members carried as graph6 strings
FamilySpec family_from_json(const json& j);

/// Sidecar for a universal-graph artifact: construction record + embeddings.
json universal_sidecar(const UniversalGraph& u);
/// Rebuilds a UniversalGraph from a host graph and its sidecar.
UniversalGraph universal_from_parts(Graph host, const json& sidecar);

json parse_json_file(const std::string& path);
void write_json_file(const json& j, const std::string& path);

/// FNV-1a digest of a string, hex-encoded; used for report input digests.
std::string fnv1a_hex(const std::string& data);

} // namespace universo
