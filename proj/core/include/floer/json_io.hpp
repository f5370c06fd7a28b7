#pragma once

#include <string>

#include "json.hpp"

#include "floer/chain_map.hpp"
#include "floer/complex.hpp"
#include "floer/diagrams.hpp"
#include "floer/invariant_checker.hpp"
#include "floer/move_graph.hpp"
#include "floer/trans_system.hpp"

namespace floer {

using nlohmann::json;

// Loaders throw std::runtime_error with a readable message on schema problems.
// Complex ingest sorts generators by name and pins the minimum occupied
// grading of every component to 0.

GradedComplex complex_from_json(const json& j);
json complex_to_json(const GradedComplex& c);

// Chain-map files name their endpoint complexes by file path (resolved
// relative to base_dir).
LinearMap chain_map_from_json(const json& j, const std::string& base_dir);
json chain_map_to_json(const LinearMap& f, const std::string& source_ref,
                       const std::string& target_ref);

PointedDiagram diagram_from_json(const json& j);
json diagram_to_json(const PointedDiagram& d);

bool looks_like_diagram(const json& j);

MoveGraph move_graph_from_json(const json& j, const std::string& base_dir);
json move_graph_to_json(const MoveGraph& g);

// Functor files bind vertex -> complex file and edge -> chain-map file; when
// the bindings are omitted the objects default to the vertex diagrams'
// complexes and the maps to identities on generator names.
GraphFunctor functor_from_json(const json& j, const std::string& base_dir);

TransSystem system_from_json(const json& j, const std::string& base_dir);

struct InvolutiveJob {
  PointedDiagram diagram;
  LinearMap psi;
  int truncation = 3;
};
InvolutiveJob involutive_job_from_json(const json& j, const std::string& base_dir);

json load_json_file(const std::string& path);

}  // namespace floer
