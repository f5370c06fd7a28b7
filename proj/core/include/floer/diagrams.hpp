#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "floer/chain_map.hpp"
#include "floer/complex.hpp"

namespace floer {

using Rational = boost::rational<long long>;

// Finger wiggles on a curve parallel to the other one: each consecutive pair
// of positions (parameters along the straight curve, strictly increasing in
// [0,1)) is one finger crossing the straight curve twice.
struct Wiggle {
  std::vector<Rational> positions;  // even count >= 2
  bool on_alpha = false;            // which curve carries the fingers
};

// One genus-1 summand: alpha and beta geodesics on the square torus, given by
// primitive integer vectors and rational offsets (the curve runs through
// offset * (-q, p) with direction (p, q)).  In wiggle mode the two vectors
// must be parallel and the wiggle supplies the crossings.
struct TorusPiece {
  std::pair<long long, long long> alpha{1, 0};
  Rational alpha_offset{0};
  std::pair<long long, long long> beta{0, 1};
  Rational beta_offset{0};
  std::optional<Wiggle> wiggle;
  Rational basepoint_x{1, 2};
  Rational basepoint_y{1, 2};
};

// One genus-2 summand carrying transcribed intersection combinatorics for the
// curve family {alpha0, alpha0p, beta0, beta0p}.  Only the transcribed pairs
// are legal; differentials vanish.
struct FixturePiece {
  std::string a, b;  // attaching-system names, (alpha role, beta role)
};

using Piece = std::variant<TorusPiece, FixturePiece>;

struct PointedDiagram {
  std::vector<Piece> pieces;
  bool orientation_reversed = false;
  int genus() const;
};

// --- catalog helpers ---
TorusPiece standard_torus_piece();              // alpha (1,0), beta (0,1): the S^3 summand
PointedDiagram s3_diagram();
PointedDiagram lens_diagram(long long p);       // alpha (1,0), beta (1,p)
PointedDiagram wiggle_s1s2(int fingers = 1);    // parallel curves, 2*fingers crossings
FixturePiece fixture_by_name(const std::string& name);  // handleswap_alpha / _beta / double_stabilizer

// --- intersection points ---
struct DiagramPoint {
  std::string name;           // product name, piece points joined by '|'
  std::vector<std::string> coords;  // per-piece point name
};
std::vector<DiagramPoint> intersection_points(const PointedDiagram& d);

// --- region decomposition of one torus piece ---
struct RegionInfo {
  std::string name;
  bool is_disk;
};
struct ArcInfo {
  std::string name;
  char curve;               // 'a' or 'b'
  std::string tail, head;   // crossing names
  std::string left, right;  // region names
};
struct RegionDecomposition {
  std::vector<std::string> crossings;  // canonical order
  std::vector<RegionInfo> regions;
  std::vector<ArcInfo> arcs;
  std::string basepoint_region;
};
RegionDecomposition region_decomposition(const TorusPiece& t);

// --- bigons and the induced complex ---
enum class SignRule { CornerFrame };  // traversal direction vs curve orientation

struct Bigon {
  std::string from, to;  // initial and final generator (crossing names)
  int sign;
  std::string region;
};
std::vector<Bigon> enumerate_bigons(const TorusPiece& t, bool orientation_reversed,
                                    SignRule rule = SignRule::CornerFrame);

// Complex of one torus piece (names = crossing names) or of a whole diagram
// (product generators, Koszul-signed differential, components from the Spin^c
// partition, gradings from bigon chains pinned to 0 per class).
GradedComplex torus_complex(const TorusPiece& t, bool orientation_reversed,
                            SignRule rule = SignRule::CornerFrame);
GradedComplex diagram_complex(const PointedDiagram& d, SignRule rule = SignRule::CornerFrame);

// --- Spin^c partition and domains ---
// point name (per piece or product) -> component label
std::map<std::string, std::string> spinc_partition(const PointedDiagram& d);

struct DomainVector {
  std::vector<std::string> regions;  // parallel to coefficients; "Z" is the shared basepoint region
  std::vector<Coef> coefficients;
  Coef n_z = 0;
};
// Integer domain connecting x to y (corner conditions), if any.
std::optional<DomainVector> connecting_domain(const PointedDiagram& d, const std::string& x,
                                              const std::string& y);

struct DomainLattice {
  std::vector<std::string> regions;           // torus-piece regions, basepoint region excluded
  std::vector<std::vector<Coef>> basis;       // integer kernel basis, n_z = 0
  int declared_fixture_rank = 0;              // fixture pieces contribute declared rank only
};
DomainLattice periodic_domains(const PointedDiagram& d);

// --- admissibility ---
struct AdmissibilityVerdict {
  bool admissible = true;
  std::vector<Coef> counterexample;       // lattice vector coefficients when found
  bool fixture_declared = false;          // verdict includes fixture-declared slots
};
// Core check on a raw lattice: every nonzero vector with coefficients in
// [-bound, bound] and pairing 2n >= 0 must have some coefficient > n.
std::optional<std::vector<Coef>> admissibility_counterexample(
    const std::vector<std::vector<Coef>>& basis, const std::vector<Coef>& pairing, int bound);
// Per-component verdicts; pairing supplied per component as an integer
// functional on the lattice basis (zero when absent - torsion case).
std::map<std::string, AdmissibilityVerdict> check_admissibility(
    const PointedDiagram& d, int bound,
    const std::map<std::string, std::vector<Coef>>& pairing = {});

// --- moves ---
struct Stabilization {
  PointedDiagram diagram;
  std::map<std::string, std::string> generator_bijection;  // x -> x|c names
  int slot;
};
Stabilization stabilize_diagram(const PointedDiagram& d, int slot = -1);  // -1: append

PointedDiagram conjugate_diagram(const PointedDiagram& d);

// Identity on intersection-point names, complex(d) -> complex(conjugate(d)).
LinearMap eta_map(const PointedDiagram& d);

// Isotopy-class proxy: piece list with offsets, positions and basepoints erased.
std::string diagram_key(const PointedDiagram& d);

}  // namespace floer
