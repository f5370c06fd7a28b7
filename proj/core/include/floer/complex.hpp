#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floer/upoly.hpp"

namespace floer {

struct Generator {
  std::string name;
  int grading = 0;          // relative homological grading
  std::string component;    // Spin^c-class label
  bool operator==(const Generator& o) const = default;
};

struct Violation {
  enum class Kind { Grading, Component, DSquared };
  Kind kind;
  std::string from, to;     // witness entry (source, target); for DSquared the composite entry
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Finitely generated free chain complex over Z[U].  The differential is a
// sparse matrix indexed (target, source); entry d[y][x] with U-exponent k
// requires grading(y) = grading(x) - 1 - 2k and matching components.
class GradedComplex {
 public:
  GradedComplex() = default;
  explicit GradedComplex(std::vector<Generator> gens);

  int size() const { return static_cast<int>(gens_.size()); }
  const std::vector<Generator>& generators() const { return gens_; }
  const Generator& gen(int i) const { return gens_[i]; }
  int index_of(const std::string& name) const;            // -1 if absent
  int require_index(const std::string& name) const;       // throws if absent

  const UPoly& entry(int target, int source) const;
  void set_entry(int target, int source, UPoly p);
  void add_entry(int target, int source, const UPoly& p);
  const std::map<std::pair<int, int>, UPoly>& entries() const { return diff_; }

  bool operator==(const GradedComplex& o) const { return gens_ == o.gens_ && diff_ == o.diff_; }

  std::optional<int> min_grading(const std::string& component) const;
  int max_abs_grading() const;

 private:
  std::vector<Generator> gens_;
  std::map<std::pair<int, int>, UPoly> diff_;
};

ValidationReport validate_complex(const GradedComplex& c);

// All entries replaced by their U^0 coefficient (the hat flavor, U = 0).
GradedComplex specialize_hat(const GradedComplex& c);

// Gradings increased by k; differential unchanged.
GradedComplex shift(const GradedComplex& c, int k);

// Block-diagonal sum; colliding names in b get a deterministic "_2" suffix
// (then "_3", ...).
GradedComplex direct_sum(const GradedComplex& a, const GradedComplex& b);

// Pins the minimum occupied grading of every component to 0 (the ingest
// normalization for relative gradings).
GradedComplex pin_gradings(const GradedComplex& c);

}  // namespace floer
