#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floer/complex.hpp"

namespace floer {

// Graded Z[U]-linear map between complexes.  An entry from source generator x
// to target generator y with U-exponent k requires gr(y) = gr(x) + degree - 2k;
// that pins k per (y, x) slot, so maps are really integer matrices spread over
// the legal slots.  Chain maps additionally satisfy
//   d_target o f = (-1)^degree f o d_source.
class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(GradedComplex source, GradedComplex target, int degree);

  static LinearMap identity(const GradedComplex& c);
  static LinearMap zero(const GradedComplex& source, const GradedComplex& target, int degree = 0);

  const GradedComplex& source() const { return source_; }
  const GradedComplex& target() const { return target_; }
  int degree() const { return degree_; }

  const UPoly& entry(int target, int source) const;
  // Throws std::invalid_argument if the entry is not grading-legal.
  void set_entry(int target, int source, UPoly p);
  void set_entry(const std::string& target, const std::string& source, UPoly p);
  void add_entry(int target, int source, const UPoly& p);
  const std::map<std::pair<int, int>, UPoly>& entries() const { return entries_; }

  // Legal U-exponent for a (target, source) slot, or nullopt.
  std::optional<int> slot_exponent(int target, int source) const;

  bool is_zero() const { return entries_.empty(); }
  bool is_chain_map() const;
  // First failing commutation entry (source name, target name, residue), if any.
  std::optional<std::tuple<std::string, std::string, UPoly>> commutation_failure() const;

  LinearMap operator-() const;
  LinearMap operator+(const LinearMap& o) const;
  LinearMap operator-(const LinearMap& o) const;
  bool operator==(const LinearMap& o) const;

  bool equals_up_to_sign(const LinearMap& o) const;

 private:
  GradedComplex source_, target_;
  int degree_ = 0;
  std::map<std::pair<int, int>, UPoly> entries_;
};

// g after f; degrees add.
LinearMap compose(const LinearMap& g, const LinearMap& f);

// d_target o h + h o d_source, for a degree +1 map h (the homotopy operator).
LinearMap homotopy_boundary(const LinearMap& h);

// Finds h with f - g = dh + hd, solving the integer linear system over the
// finitely many grading-legal slots of h; nullopt when no integer solution
// exists (the system is finite because gradings are bounded).
std::optional<LinearMap> homotopy_witness(const LinearMap& f, const LinearMap& g);

// True iff f ~ g or f ~ -g up to chain homotopy.
bool projectively_homotopic(const LinearMap& f, const LinearMap& g);

// Mapping cone of a degree-0 chain map f : A -> B.  Generators are a copy of
// A one grading up (names suffixed "'"), then B; blocks: -d_A on the shifted
// copy, d_B on the target copy, f from shifted A into B.  Throws on non-chain
// input, reporting the failing commutation entry.
GradedComplex mapping_cone(const LinearMap& f);

// True iff id_c is chain homotopic to zero (complete: finite integer system).
bool is_contractible(const GradedComplex& c);

// Sign-projectivized morphism class: f and -f denote the same class.
class SignClass {
 public:
  SignClass() = default;
  explicit SignClass(LinearMap rep) : rep_(std::move(rep)) {}
  const LinearMap& representative() const { return rep_; }
  bool operator==(const SignClass& o) const { return rep_.equals_up_to_sign(o.rep_); }

 private:
  LinearMap rep_;
};

SignClass compose(const SignClass& g, const SignClass& f);

}  // namespace floer
