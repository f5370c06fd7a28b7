#pragma once

#include "floer/invariant_checker.hpp"
#include "floer/move_graph.hpp"

namespace floer {

// The catalog move graph: one vertex family per phenomenon, containing all
// five distinguished-rectangle types, the standard simple handleswap triangle,
// a flagged small-isotopy diffeomorphism, and a stabilization chain.  Every
// vertex is a connect sum of standard pieces and the genus-2 fixture pairs, so
// every diagram presents the three-sphere and every object is rank one.
MoveGraph corpus_graph();

// Functor variants on the corpus graph.  The strict functor assigns +1 to
// every edge and passes all four axioms exactly.  The projective functor
// negates the handleswap diffeomorphism and the flagged small isotopy: the
// composite around the handleswap triangle is -Id, so the strict axioms fail
// while the up-to-sign axioms hold.
GraphFunctor corpus_functor_strict();
GraphFunctor corpus_functor_projective();

// Vertex names of the stabilization chain {A, B1, B2} (one pointed manifold).
std::vector<std::string> corpus_s3_chain();

}  // namespace floer
