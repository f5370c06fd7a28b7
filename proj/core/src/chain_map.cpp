#include "floer/chain_map.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "floer/snf.hpp"

namespace floer {

namespace {
const UPoly kZero;
}

LinearMap::LinearMap(GradedComplex source, GradedComplex target, int degree)
    : source_(std::move(source)), target_(std::move(target)), degree_(degree) {}

LinearMap LinearMap::identity(const GradedComplex& c) {
  LinearMap f(c, c, 0);
  for (int i = 0; i < c.size(); ++i) f.set_entry(i, i, UPoly::one());
  return f;
}

LinearMap LinearMap::zero(const GradedComplex& source, const GradedComplex& target, int degree) {
  return LinearMap(source, target, degree);
}

const UPoly& LinearMap::entry(int target, int source) const {
  auto it = entries_.find({target, source});
  return it == entries_.end() ? kZero : it->second;
}

std::optional<int> LinearMap::slot_exponent(int target, int source) const {
  // gr(y) = gr(x) + degree - 2k  =>  k = (gr(x) + degree - gr(y)) / 2
  int num = source_.gen(source).grading + degree_ - target_.gen(target).grading;
  if (num < 0 || num % 2 != 0) return std::nullopt;
  return num / 2;
}

void LinearMap::set_entry(int target, int source, UPoly p) {
  if (target < 0 || target >= target_.size() || source < 0 || source >= source_.size())
    throw std::out_of_range("LinearMap: entry index out of range");
  if (p.is_zero()) {
    entries_.erase({target, source});
    return;
  }
  auto k = slot_exponent(target, source);
  for (const auto& [c, e] : p.terms())
    if (!k || e != *k) {
      std::ostringstream os;
      os << "LinearMap: entry " << source_.gen(source).name << " -> "
         << target_.gen(target).name << " with U^" << e
         << " breaks the degree-" << degree_ << " grading rule";
      throw std::invalid_argument(os.str());
    }
  entries_[{target, source}] = std::move(p);
}

void LinearMap::set_entry(const std::string& target, const std::string& source, UPoly p) {
  set_entry(target_.require_index(target), source_.require_index(source), std::move(p));
}

void LinearMap::add_entry(int target, int source, const UPoly& p) {
  set_entry(target, source, entry(target, source) + p);
}

std::optional<std::tuple<std::string, std::string, UPoly>> LinearMap::commutation_failure() const {
  int sign = (degree_ % 2 == 0) ? 1 : -1;
  for (int t = 0; t < target_.size(); ++t)
    for (int s = 0; s < source_.size(); ++s) {
      UPoly acc;
      for (const auto& [idx, d] : target_.entries())
        if (idx.first == t && !entry(idx.second, s).is_zero()) acc += d * entry(idx.second, s);
      for (const auto& [idx, d] : source_.entries())
        if (idx.second == s && !entry(t, idx.first).is_zero())
          acc -= (entry(t, idx.first) * d).scaled(sign);
      if (!acc.is_zero())
        return std::make_tuple(source_.gen(s).name, target_.gen(t).name, acc);
    }
  return std::nullopt;
}

bool LinearMap::is_chain_map() const { return !commutation_failure().has_value(); }

LinearMap LinearMap::operator-() const {
  LinearMap r(source_, target_, degree_);
  for (const auto& [idx, p] : entries_) r.entries_[idx] = -p;
  return r;
}

LinearMap LinearMap::operator+(const LinearMap& o) const {
  if (!(source_ == o.source_) || !(target_ == o.target_) || degree_ != o.degree_)
    throw std::invalid_argument("LinearMap: shape mismatch in sum");
  LinearMap r = *this;
  for (const auto& [idx, p] : o.entries_) r.add_entry(idx.first, idx.second, p);
  return r;
}

LinearMap LinearMap::operator-(const LinearMap& o) const { return *this + (-o); }

bool LinearMap::operator==(const LinearMap& o) const {
  return source_ == o.source_ && target_ == o.target_ && degree_ == o.degree_ &&
         entries_ == o.entries_;
}

bool LinearMap::equals_up_to_sign(const LinearMap& o) const {
  return *this == o || *this == -o;
}

LinearMap compose(const LinearMap& g, const LinearMap& f) {
  if (!(f.target() == g.source()))
    throw std::invalid_argument("compose: target/source mismatch");
  LinearMap r(f.source(), g.target(), f.degree() + g.degree());
  for (const auto& [gi, gp] : g.entries())
    for (const auto& [fi, fp] : f.entries())
      if (gi.second == fi.first) r.add_entry(gi.first, fi.second, gp * fp);
  return r;
}

LinearMap homotopy_boundary(const LinearMap& h) {
  if (h.degree() % 2 == 0)
    throw std::invalid_argument("homotopy_boundary: homotopy operator must have odd degree");
  LinearMap r(h.source(), h.target(), h.degree() - 1);
  for (const auto& [idx, d] : h.target().entries())
    for (const auto& [hi, hp] : h.entries())
      if (idx.second == hi.first) r.add_entry(idx.first, hi.second, d * hp);
  for (const auto& [hi, hp] : h.entries())
    for (const auto& [idx, d] : h.source().entries())
      if (hi.second == idx.first) r.add_entry(hi.first, idx.second, hp * d);
  return r;
}

std::optional<LinearMap> homotopy_witness(const LinearMap& f, const LinearMap& g) {
  if (!(f.source() == g.source()) || !(f.target() == g.target()) || f.degree() != g.degree())
    throw std::invalid_argument("homotopy_witness: maps must share source, target and degree");
  const GradedComplex& A = f.source();
  const GradedComplex& B = f.target();
  LinearMap h0(A, B, f.degree() + 1);

  // Unknowns: one integer per grading-legal slot of h.
  std::vector<std::pair<int, int>> slots;
  for (int t = 0; t < B.size(); ++t)
    for (int s = 0; s < A.size(); ++s)
      if (h0.slot_exponent(t, s)) slots.push_back({t, s});

  LinearMap rhs = f - g;
  // Equations: per (target, source) slot of a degree-d map, match the single
  // legal coefficient of (dh + hd) against rhs.
  std::vector<std::pair<int, int>> eqs;
  for (int t = 0; t < B.size(); ++t)
    for (int s = 0; s < A.size(); ++s)
      if (rhs.slot_exponent(t, s)) eqs.push_back({t, s});

  IntMat a(static_cast<int>(eqs.size()), static_cast<int>(slots.size()));
  std::vector<Coef> b(eqs.size(), 0);
  for (size_t col = 0; col < slots.size(); ++col) {
    LinearMap probe(A, B, f.degree() + 1);
    probe.set_entry(slots[col].first, slots[col].second,
                    UPoly(1, *probe.slot_exponent(slots[col].first, slots[col].second)));
    LinearMap img = homotopy_boundary(probe);
    for (size_t row = 0; row < eqs.size(); ++row) {
      const UPoly& p = img.entry(eqs[row].first, eqs[row].second);
      if (!p.is_zero()) a.at(static_cast<int>(row), static_cast<int>(col)) = p.terms().front().first;
    }
  }
  for (size_t row = 0; row < eqs.size(); ++row) {
    const UPoly& p = rhs.entry(eqs[row].first, eqs[row].second);
    if (!p.is_zero()) b[row] = p.terms().front().first;
  }

  auto x = solve_integer(a, b);
  if (!x) return std::nullopt;
  LinearMap h(A, B, f.degree() + 1);
  for (size_t col = 0; col < slots.size(); ++col)
    if ((*x)[col] != 0)
      h.set_entry(slots[col].first, slots[col].second,
                  UPoly((*x)[col], *h.slot_exponent(slots[col].first, slots[col].second)));
  return h;
}

bool projectively_homotopic(const LinearMap& f, const LinearMap& g) {
  return homotopy_witness(f, g).has_value() || homotopy_witness(f, -g).has_value();
}

GradedComplex mapping_cone(const LinearMap& f) {
  if (f.degree() != 0) throw std::invalid_argument("mapping_cone: degree-0 chain map required");
  if (auto fail = f.commutation_failure()) {
    std::ostringstream os;
    os << "mapping_cone: not a chain map; commutation fails at "
       << std::get<0>(*fail) << " -> " << std::get<1>(*fail)
       << " with residue " << std::get<2>(*fail).str();
    throw std::invalid_argument(os.str());
  }
  const GradedComplex& A = f.source();
  const GradedComplex& B = f.target();

  std::vector<Generator> gens;
  std::set<std::string> used;
  for (const auto& g : B.generators()) used.insert(g.name);
  std::vector<std::string> shifted_names;
  for (const auto& g : A.generators()) {
    Generator h = g;
    h.name = g.name + "'";
    while (used.count(h.name)) h.name += "'";
    used.insert(h.name);
    h.grading = g.grading + 1;  // the coned-off copy sits one grading up
    shifted_names.push_back(h.name);
    gens.push_back(h);
  }
  for (const auto& g : B.generators()) gens.push_back(g);

  GradedComplex cone(std::move(gens));
  int off = A.size();
  for (const auto& [idx, p] : A.entries()) cone.set_entry(idx.first, idx.second, -p);
  for (const auto& [idx, p] : B.entries()) cone.set_entry(idx.first + off, idx.second + off, p);
  for (const auto& [idx, p] : f.entries()) cone.set_entry(idx.first + off, idx.second, p);
  return cone;
}

bool is_contractible(const GradedComplex& c) {
  LinearMap id = LinearMap::identity(c);
  return homotopy_witness(id, LinearMap::zero(c, c)).has_value();
}

SignClass compose(const SignClass& g, const SignClass& f) {
  return SignClass(compose(g.representative(), f.representative()));
}

}  // namespace floer
