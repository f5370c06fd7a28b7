#pragma once

#include <optional>
#include <string>

#include "floer/chain_map.hpp"
#include "floer/diagrams.hpp"
#include "floer/homology.hpp"

namespace floer {

// iota = psi o eta, where psi is a supplied strong-equivalence map from the
// conjugate-diagram complex back to the diagram complex.
struct IotaData {
  PointedDiagram diagram;
  LinearMap psi;
  LinearMap iota;
};

// Composes with eta and verifies the chain-map property; throws on shape
// mismatch or failing commutation.
IotaData build_iota(const PointedDiagram& d, const LinearMap& psi);

struct IotaOrderReport {
  int minimal_order = 0;        // least n in 1..max_power with iota^n ~ +-id, 0 if none
  bool order_at_most_4 = false; // iota^4 projectively homotopic to the identity
};

IotaOrderReport iota_order(const LinearMap& iota, int max_power = 4);

struct ConePair {
  GradedComplex plus;   // Cone(1 + iota)
  GradedComplex minus;  // Cone(1 - iota)
};

// Builds both cones.  When iota connects different component labels (conjugation
// permuting Spin^c classes) the complex is relabeled by iota-orbit first, so
// the cones validate.
ConePair build_cone_pair(const GradedComplex& c, const LinearMap& iota);
ConePair build_cfi_pair(const IotaData& data);

struct ConePairInvariant {
  InvariantTuple plus, minus;
};

ConePairInvariant cone_pair_invariant(const ConePair& p, int truncation);

// Unordered comparison of the two invariant tuples; an invariant-level
// comparison, not a full quasi-isomorphism decision.
bool compare_cone_pairs(const ConePair& a, const ConePair& b, int truncation);

}  // namespace floer
