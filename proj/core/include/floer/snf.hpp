#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "floer/upoly.hpp"

namespace floer {

// Dense integer matrix, row-major.  Sizes here are desk scale; all arithmetic
// is exact in 64-bit (pivoting keeps entries small on the inputs in scope).
class IntMat {
 public:
  IntMat() : rows_(0), cols_(0) {}
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}

  static IntMat identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Coef& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  Coef at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

  IntMat operator*(const IntMat& o) const;
  IntMat operator-(const IntMat& o) const;
  bool operator==(const IntMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool is_zero() const;

  IntMat transposed() const;
  std::vector<Coef> apply(const std::vector<Coef>& v) const;

  // Determinant by fraction-free Gaussian elimination (Bareiss); square only.
  Coef det() const;
  // Inverse for unimodular matrices (|det| = 1); throws otherwise.
  IntMat inverse_unimodular() const;

 private:
  int rows_, cols_;
  std::vector<Coef> a_;
};

// Smith normal form  S = U * A * V  with U, V unimodular and S diagonal,
// diagonal entries nonnegative, each dividing the next.
struct SmithForm {
  IntMat s, u, v;
  int rank = 0;                    // number of nonzero diagonal entries
  std::vector<Coef> diagonal;      // the nonzero diagonal entries, in order
};

SmithForm smith_normal_form(const IntMat& a);

// One integer solution of A x = b, if any.
std::optional<std::vector<Coef>> solve_integer(const IntMat& a, const std::vector<Coef>& b);

// Basis of the integer kernel of A (columns of V matched to zero columns of S).
std::vector<std::vector<Coef>> integer_kernel(const IntMat& a);

}  // namespace floer
