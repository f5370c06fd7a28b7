#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floer/chain_map.hpp"
#include "floer/move_graph.hpp"
#include "floer/trans_system.hpp"

namespace floer {

// Functor-like assignment on a move graph: one complex per vertex, one
// sign-projectivized chain map per edge, compared in the declared mode.
struct GraphFunctor {
  MoveGraph graph;
  std::vector<GradedComplex> objects;  // per vertex
  std::vector<SignClass> morphisms;    // per edge
  CompareMode mode = CompareMode::UpToSign;

  const LinearMap& map_of(int edge) const { return morphisms.at(edge).representative(); }
  // Composite along an edge-index path; empty path gives the identity at `at`.
  LinearMap along(const std::vector<int>& path, int at) const;
  std::vector<std::string> structural_problems() const;  // totality, endpoint matching
};

bool agree(const LinearMap& f, const LinearMap& g, CompareMode mode);
// Two-sided invertibility in the given mode: determinant unit for strict/sign,
// cone contractibility for sign-homotopy.
bool invertible(const LinearMap& f, CompareMode mode);

struct WeakReport {
  std::vector<std::string> structural;
  std::vector<std::string> failures;  // edges whose image is not invertible
  bool ok() const { return structural.empty() && failures.empty(); }
};

WeakReport check_weak(const GraphFunctor& F);

struct StrongReport {
  WeakReport weak;
  std::vector<std::string> functoriality;   // axiom 1 witnesses
  std::vector<std::string> commutativity;   // axiom 2: failing rectangles
  std::vector<std::string> continuity;      // axiom 3: failing flagged diffeos
  std::vector<std::string> handleswap;      // axiom 4: failing triangles
  bool ok() const {
    return weak.ok() && functoriality.empty() && commutativity.empty() && continuity.empty() &&
           handleswap.empty();
  }
};

// Axiom 1 on free compositions up to word length <= word_bound inside each
// single-kind subgraph plus stab/destab inverses; axioms 2-4 over every
// classified rectangle, flagged diffeomorphism and verified handleswap.
StrongReport check_strong(const GraphFunctor& F, int word_bound = 4);

struct PathIndependenceReport {
  int pairs_checked = 0;
  std::vector<std::pair<std::string, std::string>> discrepancies;  // path names
  bool ok() const { return discrepancies.empty(); }
};

PathIndependenceReport path_independence(const GraphFunctor& F, int a, int b, int max_len);

struct AssembledSystem {
  std::optional<TransSystem> system;
  std::string error;  // "component not connected" style diagnostics
};

// Total order on the component by vertex name; F_{u,v} = image of any path.
AssembledSystem assemble_system(const GraphFunctor& F, const std::vector<int>& component,
                                CompareMode mode);

}  // namespace floer
