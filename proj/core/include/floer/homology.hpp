#pragma once

#include <map>
#include <string>
#include <vector>

#include "floer/chain_map.hpp"
#include "floer/complex.hpp"

namespace floer {

// Free rank plus torsion orders (each >= 2, sorted) of one graded piece.
struct GradedGroup {
  int free_rank = 0;
  std::vector<Coef> torsion;
  auto operator<=>(const GradedGroup& o) const = default;
  bool trivial() const { return free_rank == 0 && torsion.empty(); }
};

// Hat-flavor homology, keyed by (component, grading).
struct HatHomology {
  std::map<std::pair<std::string, int>, GradedGroup> groups;
  auto operator<=>(const HatHomology& o) const = default;
  int total_free_rank() const;
  bool acyclic() const;
  // Drops trivial groups (different complexes record different key sets).
  HatHomology nontrivial() const;
  // Re-keys gradings so the minimum occupied grading per component is 0.
  HatHomology pinned() const;
};

// Computes homology over Z; entries must be U-free (precondition error
// otherwise — apply specialize_hat first).
HatHomology homology_hat(const GradedComplex& c);

// Minus-flavor presentation: towers read off after reduction.  A cancelled
// pair dx = ±U^n y contributes Z[U]/U^n; an untouched generator contributes a
// free Z[U] tower.  When the reduced differential is not in that matched
// shape, the leftover entries are reported as a residual presentation.
struct TowerSummand {
  std::string component;
  int grading = 0;      // grading of the tower bottom
  int exponent = 0;     // 0 means a free Z[U] tower
  bool operator<(const TowerSummand& o) const {
    return std::tie(component, grading, exponent) < std::tie(o.component, o.grading, o.exponent);
  }
  bool operator==(const TowerSummand& o) const = default;
};

struct ResidualEntry {
  std::string from, to;
  UPoly value;
};

struct MinusPresentation {
  std::vector<TowerSummand> towers;       // sorted
  std::vector<ResidualEntry> residual;    // empty iff reduction reached matched shape
  bool stalled() const { return !residual.empty(); }
};

struct HomologyPresentation {
  HatHomology hat;
  MinusPresentation minus;
};

HomologyPresentation present_homology(const GradedComplex& c);

// Discrete-Morse reduction: repeatedly cancels +-1*U^0 differential entries
// (smallest (row, column) first) with the change-of-basis update.  Returns the
// reduced complex and the chain homotopy equivalences to_reduced : C -> C',
// from_reduced : C' -> C with to o from = id exactly and from o to ~ id.
struct Reduction {
  GradedComplex reduced;
  LinearMap to_reduced;
  LinearMap from_reduced;
};

Reduction reduce_complex(const GradedComplex& c);

// Homology of C (x) Z[U]/U^T over Z, keyed by (component, grading): a
// computable homotopy invariant standing in for the U-tower profile at
// truncation T.
HatHomology truncated_homology(const GradedComplex& c, int truncation);

// Invariant tuple used for quasi-isomorphism-class comparison: pinned hat
// homology plus pinned truncated homology.
struct InvariantTuple {
  HatHomology hat;
  HatHomology truncated;
  auto operator<=>(const InvariantTuple& o) const = default;
};

InvariantTuple invariant_tuple(const GradedComplex& c, int truncation);

std::string describe(const HatHomology& h);

}  // namespace floer
