#pragma once

#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "floer/chain_map.hpp"
#include "floer/complex.hpp"
#include "floer/snf.hpp"

namespace floer::testing {

inline std::mt19937_64 make_rng(uint64_t salt = 0) {
  uint64_t seed = 20240817;
  if (const char* env = std::getenv("FLOER_SEED")) seed = std::strtoull(env, nullptr, 10);
  return std::mt19937_64(seed ^ (salt * 0x9e3779b97f4a7c15ull));
}

inline int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Valid random complex: direct sum of lone generators and two-step pieces
// dx = c*U^k y, conjugated by random grading-legal, component-preserving
// shears.  Always passes validate_complex, by construction.
inline GradedComplex random_complex(std::mt19937_64& rng, int pieces = 3, int components = 1,
                                    int shears = 4) {
  std::vector<Generator> gens;
  std::vector<std::tuple<int, int, Coef, int>> arrows;  // (target, source, coef, exp)
  int id = 0;
  for (int p = 0; p < pieces; ++p) {
    std::string comp = "c" + std::to_string(pick(rng, 0, components - 1));
    int g = pick(rng, -2, 3);
    if (pick(rng, 0, 2) == 0) {
      gens.push_back({"g" + std::to_string(id++), g, comp});
    } else {
      int k = pick(rng, 0, 2);
      Coef c = 0;
      while (c == 0) c = pick(rng, -3, 3);
      int x = static_cast<int>(gens.size());
      gens.push_back({"g" + std::to_string(id++), g, comp});
      gens.push_back({"g" + std::to_string(id++), g - 1 - 2 * k, comp});
      arrows.push_back({x + 1, x, c, k});
    }
  }
  GradedComplex c(gens);
  for (auto& [t, s, coef, exp] : arrows) c.set_entry(t, s, UPoly(coef, exp));

  LinearMap d(c, c, -1);
  for (const auto& [idx, p] : c.entries()) d.set_entry(idx.first, idx.second, p);
  for (int r = 0; r < shears; ++r) {
    int x = pick(rng, 0, c.size() - 1), y = pick(rng, 0, c.size() - 1);
    if (x == y) continue;
    if (c.gen(x).component != c.gen(y).component) continue;
    LinearMap p = LinearMap::identity(c);
    auto k = p.slot_exponent(y, x);
    if (!k) continue;
    Coef coef = pick(rng, -2, 2);
    if (coef == 0) continue;
    p.add_entry(y, x, UPoly(coef, *k));
    LinearMap pinv = LinearMap::identity(c);
    pinv.add_entry(y, x, UPoly(-coef, *k));
    d = compose(p, compose(d, pinv));
  }
  GradedComplex out(c.generators());
  for (const auto& [idx, p] : d.entries()) out.set_entry(idx.first, idx.second, p);
  return out;
}

// Random chain map A -> B of the given degree: a random integer combination of
// a kernel basis of the commutation system, so a chain map by construction.
inline LinearMap random_chain_map(std::mt19937_64& rng, const GradedComplex& a,
                                  const GradedComplex& b, int degree = 0,
                                  bool within_components = true) {
  LinearMap probe0(a, b, degree);
  std::vector<std::pair<int, int>> slots;
  for (int t = 0; t < b.size(); ++t)
    for (int s = 0; s < a.size(); ++s) {
      if (within_components && b.gen(t).component != a.gen(s).component) continue;
      if (probe0.slot_exponent(t, s)) slots.push_back({t, s});
    }
  // Equations: entries of dF -+ Fd live in degree-1 slots.
  LinearMap r0(a, b, degree - 1);
  std::vector<std::pair<int, int>> eqs;
  for (int t = 0; t < b.size(); ++t)
    for (int s = 0; s < a.size(); ++s)
      if (r0.slot_exponent(t, s)) eqs.push_back({t, s});

  int sign = (degree % 2 == 0) ? 1 : -1;
  IntMat m(static_cast<int>(eqs.size()), static_cast<int>(slots.size()));
  for (size_t col = 0; col < slots.size(); ++col) {
    LinearMap probe(a, b, degree);
    probe.set_entry(slots[col].first, slots[col].second,
                    UPoly(1, *probe.slot_exponent(slots[col].first, slots[col].second)));
    // residue = d_B o probe - sign * probe o d_A
    LinearMap res(a, b, degree - 1);
    for (const auto& [idx, d] : b.entries())
      for (const auto& [pi, pp] : probe.entries())
        if (idx.second == pi.first) res.add_entry(idx.first, pi.second, d * pp);
    for (const auto& [pi, pp] : probe.entries())
      for (const auto& [idx, d] : a.entries())
        if (pi.second == idx.first) res.add_entry(pi.first, idx.second, (pp * d).scaled(-sign));
    for (size_t row = 0; row < eqs.size(); ++row) {
      const UPoly& v = res.entry(eqs[row].first, eqs[row].second);
      if (!v.is_zero()) m.at(static_cast<int>(row), static_cast<int>(col)) = v.terms().front().first;
    }
  }
  auto basis = integer_kernel(m);
  LinearMap f(a, b, degree);
  for (const auto& vec : basis) {
    Coef c = pick(rng, -2, 2);
    if (c == 0) continue;
    for (size_t col = 0; col < slots.size(); ++col)
      if (vec[col] != 0)
        f.add_entry(slots[col].first, slots[col].second,
                    UPoly(c * vec[col], *f.slot_exponent(slots[col].first, slots[col].second)));
  }
  return f;
}

// Random homotopy operator A -> B of degree (degree+1): any legal entries.
inline LinearMap random_homotopy(std::mt19937_64& rng, const GradedComplex& a,
                                 const GradedComplex& b, int degree = 0,
                                 bool within_components = false) {
  LinearMap h(a, b, degree + 1);
  for (int t = 0; t < b.size(); ++t)
    for (int s = 0; s < a.size(); ++s) {
      if (within_components && b.gen(t).component != a.gen(s).component) continue;
      if (auto k = h.slot_exponent(t, s)) {
        Coef c = pick(rng, -2, 2);
        if (c != 0) h.set_entry(t, s, UPoly(c, *k));
      }
    }
  return h;
}

}  // namespace floer::testing

#include <map>
#include <set>

#include "floer/homology.hpp"

namespace floer::testing {

// Component-label-insensitive view of a graded homology: the multiset of
// per-component (grading -> group) profiles, gradings pinned per component.
inline std::multiset<std::vector<std::pair<int, GradedGroup>>> component_profiles(
    const HatHomology& h) {
  auto pinned = h.pinned();
  std::map<std::string, std::vector<std::pair<int, GradedGroup>>> per;
  for (const auto& [k, g] : pinned.groups) per[k.first].push_back({k.second, g});
  std::multiset<std::vector<std::pair<int, GradedGroup>>> out;
  for (auto& [comp, prof] : per) out.insert(prof);
  return out;
}

}  // namespace floer::testing
