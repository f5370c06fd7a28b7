#include "floer/complex.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace floer {

namespace {
const UPoly kZero;
}

GradedComplex::GradedComplex(std::vector<Generator> gens) : gens_(std::move(gens)) {
  std::set<std::string> seen;
  for (const auto& g : gens_)
    if (!seen.insert(g.name).second)
      throw std::invalid_argument("GradedComplex: duplicate generator name '" + g.name + "'");
}

int GradedComplex::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (gens_[i].name == name) return i;
  return -1;
}

int GradedComplex::require_index(const std::string& name) const {
  int i = index_of(name);
  if (i < 0) throw std::invalid_argument("GradedComplex: unknown generator '" + name + "'");
  return i;
}

const UPoly& GradedComplex::entry(int target, int source) const {
  auto it = diff_.find({target, source});
  return it == diff_.end() ? kZero : it->second;
}

void GradedComplex::set_entry(int target, int source, UPoly p) {
  if (target < 0 || target >= size() || source < 0 || source >= size())
    throw std::out_of_range("GradedComplex: entry index out of range");
  if (p.is_zero())
    diff_.erase({target, source});
  else
    diff_[{target, source}] = std::move(p);
}

void GradedComplex::add_entry(int target, int source, const UPoly& p) {
  set_entry(target, source, entry(target, source) + p);
}

std::optional<int> GradedComplex::min_grading(const std::string& component) const {
  std::optional<int> m;
  for (const auto& g : gens_)
    if (g.component == component && (!m || g.grading < *m)) m = g.grading;
  return m;
}

int GradedComplex::max_abs_grading() const {
  int m = 0;
  for (const auto& g : gens_) m = std::max(m, std::abs(g.grading));
  return m;
}

ValidationReport validate_complex(const GradedComplex& c) {
  ValidationReport rep;
  for (const auto& [idx, p] : c.entries()) {
    const Generator& y = c.gen(idx.first);
    const Generator& x = c.gen(idx.second);
    for (const auto& [coef, exp] : p.terms()) {
      if (y.grading != x.grading - 1 - 2 * exp) {
        std::ostringstream os;
        os << "expected gr(" << y.name << ") = " << x.grading - 1 - 2 * exp
           << " for U^" << exp << " entry, found " << y.grading;
        rep.violations.push_back({Violation::Kind::Grading, x.name, y.name, os.str()});
      }
    }
    if (y.component != x.component)
      rep.violations.push_back({Violation::Kind::Component, x.name, y.name,
                                "components '" + x.component + "' vs '" + y.component + "'"});
  }
  // d o d = 0, entrywise.
  for (int t = 0; t < c.size(); ++t)
    for (int s = 0; s < c.size(); ++s) {
      UPoly acc;
      for (const auto& [idx, p] : c.entries()) {
        if (idx.first != t) continue;
        const UPoly& q = c.entry(idx.second, s);
        if (!q.is_zero()) acc += p * q;
      }
      if (!acc.is_zero())
        rep.violations.push_back({Violation::Kind::DSquared, c.gen(s).name, c.gen(t).name,
                                  "d^2 entry = " + acc.str()});
    }
  return rep;
}

GradedComplex specialize_hat(const GradedComplex& c) {
  GradedComplex r(c.generators());
  for (const auto& [idx, p] : c.entries()) {
    Coef c0 = p.u0_coeff();
    if (c0 != 0) r.set_entry(idx.first, idx.second, UPoly::constant(c0));
  }
  return r;
}

GradedComplex shift(const GradedComplex& c, int k) {
  std::vector<Generator> gens = c.generators();
  for (auto& g : gens) g.grading += k;
  GradedComplex r(std::move(gens));
  for (const auto& [idx, p] : c.entries()) r.set_entry(idx.first, idx.second, p);
  return r;
}

GradedComplex direct_sum(const GradedComplex& a, const GradedComplex& b) {
  std::set<std::string> used;
  for (const auto& g : a.generators()) used.insert(g.name);
  std::vector<Generator> gens = a.generators();
  for (const auto& g : b.generators()) {
    Generator h = g;
    int suffix = 2;
    while (used.count(h.name)) h.name = g.name + "_" + std::to_string(suffix++);
    used.insert(h.name);
    gens.push_back(h);
  }
  GradedComplex r(std::move(gens));
  int off = a.size();
  for (const auto& [idx, p] : a.entries()) r.set_entry(idx.first, idx.second, p);
  for (const auto& [idx, p] : b.entries()) r.set_entry(idx.first + off, idx.second + off, p);
  return r;
}

GradedComplex pin_gradings(const GradedComplex& c) {
  std::vector<Generator> gens = c.generators();
  for (auto& g : gens) {
    auto m = c.min_grading(g.component);
    g.grading -= *m;
  }
  GradedComplex r(std::move(gens));
  for (const auto& [idx, p] : c.entries()) r.set_entry(idx.first, idx.second, p);
  return r;
}

}  // namespace floer
