#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace floer {

using Coef = long long;

// Integer-coefficient polynomial in the formal variable U.  Each power of U
// carries homological degree -2.  Terms are kept sorted by exponent with no
// zero coefficients, so equality is structural.
class UPoly {
 public:
  UPoly() = default;
  UPoly(Coef c, int exp);  // monomial c*U^exp, exp >= 0

  static UPoly zero() { return UPoly(); }
  static UPoly one() { return UPoly(1, 0); }
  static UPoly constant(Coef c) { return UPoly(c, 0); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }

  // Coefficient of U^exp (0 if absent).
  Coef coeff(int exp) const;
  Coef u0_coeff() const { return coeff(0); }

  // Lowest/highest exponents; only valid on nonzero polynomials.
  int min_exp() const { return terms_.front().second; }
  int max_exp() const { return terms_.back().second; }

  const std::vector<std::pair<Coef, int>>& terms() const { return terms_; }

  UPoly operator-() const;
  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly& operator+=(const UPoly& o) { *this = *this + o; return *this; }
  UPoly& operator-=(const UPoly& o) { *this = *this - o; return *this; }
  bool operator==(const UPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const UPoly& o) const { return !(*this == o); }

  UPoly scaled(Coef c) const;
  // Drops all terms with exponent >= bound.
  UPoly truncated(int bound) const;

  std::string str() const;

 private:
  void add_term(Coef c, int exp);
  std::vector<std::pair<Coef, int>> terms_;
};

}  // namespace floer
