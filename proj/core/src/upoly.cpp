#include "floer/upoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace floer {

UPoly::UPoly(Coef c, int exp) {
  if (exp < 0) throw std::invalid_argument("UPoly: negative U-exponent");
  if (c != 0) terms_.push_back({c, exp});
}

Coef UPoly::coeff(int exp) const {
  for (const auto& [c, e] : terms_)
    if (e == exp) return c;
  return 0;
}

void UPoly::add_term(Coef c, int exp) {
  if (c == 0) return;
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const std::pair<Coef, int>& t, int e) { return t.second < e; });
  if (it != terms_.end() && it->second == exp) {
    it->first += c;
    if (it->first == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {c, exp});
  }
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& t : r.terms_) t.first = -t.first;
  return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
  UPoly r = *this;
  for (const auto& [c, e] : o.terms_) r.add_term(c, e);
  return r;
}

UPoly UPoly::operator-(const UPoly& o) const {
  UPoly r = *this;
  for (const auto& [c, e] : o.terms_) r.add_term(-c, e);
  return r;
}

UPoly UPoly::operator*(const UPoly& o) const {
  UPoly r;
  for (const auto& [c1, e1] : terms_)
    for (const auto& [c2, e2] : o.terms_) r.add_term(c1 * c2, e1 + e2);
  return r;
}

UPoly UPoly::scaled(Coef c) const {
  UPoly r;
  for (const auto& [c1, e1] : terms_) r.add_term(c * c1, e1);
  return r;
}

UPoly UPoly::truncated(int bound) const {
  UPoly r;
  for (const auto& [c, e] : terms_)
    if (e < bound) r.add_term(c, e);
  return r;
}

std::string UPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [c, e] : terms_) {
    if (!first) os << (c >= 0 ? "+" : "");
    first = false;
    if (e == 0) {
      os << c;
    } else {
      if (c == -1) os << "-";
      else if (c != 1) os << c << "*";
      os << "U";
      if (e > 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace floer
