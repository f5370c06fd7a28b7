#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "floer/chain_map.hpp"
#include "floer/snf.hpp"

namespace floer {

enum class CompareMode { Strict, UpToSign, UpToSignHomotopy };

std::string mode_name(CompareMode m);
CompareMode mode_from_name(const std::string& s);
// The more permissive of the two.
CompareMode weaker_mode(CompareMode a, CompareMode b);

struct DirectedIndex {
  std::vector<std::string> elements;
  std::set<std::pair<std::string, std::string>> relation;  // (i, j) meaning i <= j

  bool leq(const std::string& a, const std::string& b) const { return relation.count({a, b}) > 0; }
  bool has(const std::string& a) const;
  // reflexivity, transitivity, upper bounds
  std::vector<std::string> validate() const;

  static DirectedIndex total_order(std::vector<std::string> elements);
};

// Free Z^rank presentation; maps between these are integer matrices.
struct ModulePresentation {
  int rank = 0;
  bool operator==(const ModulePresentation& o) const = default;
};

using SystemObject = std::variant<GradedComplex, ModulePresentation>;
using SystemMap = std::variant<LinearMap, IntMat>;

bool maps_agree(const SystemMap& a, const SystemMap& b, CompareMode mode);
SystemMap compose_maps(const SystemMap& g, const SystemMap& f);
SystemMap identity_map(const SystemObject& o);

struct TransSystem {
  DirectedIndex index;
  std::map<std::string, SystemObject> objects;
  std::map<std::pair<std::string, std::string>, SystemMap> maps;
  CompareMode mode = CompareMode::Strict;
};

struct SystemReport {
  std::vector<std::string> structural;                       // dangling handles etc.
  std::vector<std::array<std::string, 3>> counterexamples;   // failing (i, j, k); j=k for identity
  bool ok() const { return structural.empty() && counterexamples.empty(); }
};

// Checks identity and composition over all chains i <= j <= k in the system's
// mode; structural problems are reported separately from axiom violations.
SystemReport validate_system(const TransSystem& s);

struct SysMorphism {
  std::map<std::string, std::string> index_map;   // M
  std::map<std::string, SystemMap> components;    // n_i : O_i -> P_{M(i)}
};

SystemReport validate_sys_morphism(const SysMorphism& m, const TransSystem& s1,
                                   const TransSystem& s2);

// Transitive system of transitive systems: inner systems share one index set,
// connecting morphisms have identity index map.
struct TwoLevelSystem {
  DirectedIndex outer;
  std::map<std::string, TransSystem> inner;
  std::map<std::pair<std::string, std::string>, SysMorphism> connectors;
  CompareMode mode = CompareMode::Strict;
};

// Product system over I x J: (i,j) <= (i',j') iff both; maps compose the
// inner map with the connector component.
TransSystem flatten_product(const TwoLevelSystem& t);

struct ColimitResult {
  std::string representative;               // minimal element in the name order
  ModulePresentation object;
  std::map<std::string, IntMat> injections; // element -> injection into the colimit
  std::vector<std::string> problems;        // non-isomorphism maps, path mismatches
  bool ok() const { return problems.empty(); }
};

// Colimit of a system of free-module presentations with isomorphism maps;
// injection coherence is verified over all chains of length <= path_bound.
ColimitResult colimit_modules(const TransSystem& s, int path_bound = 4);

}  // namespace floer
