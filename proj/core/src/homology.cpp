#include "floer/homology.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "floer/snf.hpp"

namespace floer {

int HatHomology::total_free_rank() const {
  int r = 0;
  for (const auto& [k, g] : groups) r += g.free_rank;
  return r;
}

bool HatHomology::acyclic() const {
  for (const auto& [k, g] : groups)
    if (!g.trivial()) return false;
  return true;
}

HatHomology HatHomology::nontrivial() const {
  HatHomology out;
  for (const auto& [k, g] : groups)
    if (!g.trivial()) out.groups[k] = g;
  return out;
}

HatHomology HatHomology::pinned() const {
  std::map<std::string, int> mins;
  for (const auto& [k, g] : groups) {
    if (g.trivial()) continue;
    auto it = mins.find(k.first);
    if (it == mins.end() || k.second < it->second) mins[k.first] = k.second;
  }
  HatHomology out;
  for (const auto& [k, g] : groups) {
    if (g.trivial()) continue;
    out.groups[{k.first, k.second - mins.at(k.first)}] = g;
  }
  return out;
}

HatHomology homology_hat(const GradedComplex& c) {
  for (const auto& [idx, p] : c.entries()) {
    if (!p.is_zero() && p.max_exp() > 0)
      throw std::domain_error(
          "homology_hat: entries contain positive U-powers; specialize_hat first");
    if (c.gen(idx.first).grading != c.gen(idx.second).grading - 1)
      throw std::domain_error("homology_hat: differential entry does not drop grading by 1");
  }

  HatHomology out;
  std::set<std::string> components;
  for (const auto& g : c.generators()) components.insert(g.component);

  for (const auto& comp : components) {
    std::map<int, std::vector<int>> by_grading;
    for (int i = 0; i < c.size(); ++i)
      if (c.gen(i).component == comp) by_grading[c.gen(i).grading].push_back(i);
    if (by_grading.empty()) continue;
    int lo = by_grading.begin()->first, hi = by_grading.rbegin()->first;

    auto boundary = [&](int g) {  // matrix of d : C_g -> C_{g-1}
      const auto src = by_grading.count(g) ? by_grading.at(g) : std::vector<int>{};
      const auto dst = by_grading.count(g - 1) ? by_grading.at(g - 1) : std::vector<int>{};
      IntMat m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
      for (size_t r = 0; r < dst.size(); ++r)
        for (size_t s = 0; s < src.size(); ++s)
          m.at(static_cast<int>(r), static_cast<int>(s)) = c.entry(dst[r], src[s]).u0_coeff();
      return m;
    };

    for (int g = lo; g <= hi; ++g) {
      int dim = by_grading.count(g) ? static_cast<int>(by_grading.at(g).size()) : 0;
      if (dim == 0) continue;
      SmithForm out_bd = smith_normal_form(boundary(g));
      SmithForm in_bd = smith_normal_form(boundary(g + 1));
      GradedGroup grp;
      grp.free_rank = dim - out_bd.rank - in_bd.rank;
      for (Coef d : in_bd.diagonal)
        if (d > 1) grp.torsion.push_back(d);
      std::sort(grp.torsion.begin(), grp.torsion.end());
      out.groups[{comp, g}] = grp;
    }
  }
  return out;
}

Reduction reduce_complex(const GradedComplex& c) {
  GradedComplex cur = c;
  LinearMap to_reduced = LinearMap::identity(c);
  LinearMap from_reduced = LinearMap::identity(c);

  for (;;) {
    // Smallest (row, column) +-1 * U^0 entry.
    int t = -1, s = -1;
    Coef eps = 0;
    for (const auto& [idx, p] : cur.entries()) {
      if (p.is_monomial() && p.terms().front().second == 0) {
        Coef cc = p.terms().front().first;
        if (cc == 1 || cc == -1) {
          t = idx.first;
          s = idx.second;
          eps = cc;
          break;  // map iterates in (row, column) order
        }
      }
    }
    if (t < 0) break;

    std::vector<Generator> gens;
    std::vector<int> keep;
    for (int i = 0; i < cur.size(); ++i)
      if (i != t && i != s) {
        keep.push_back(i);
        gens.push_back(cur.gen(i));
      }
    GradedComplex next(gens);
    for (int bi = 0; bi < static_cast<int>(keep.size()); ++bi)
      for (int ai = 0; ai < static_cast<int>(keep.size()); ++ai) {
        int b = keep[bi], a = keep[ai];
        UPoly v = cur.entry(b, a) - (cur.entry(t, a) * cur.entry(b, s)).scaled(eps);
        next.set_entry(bi, ai, v);
      }

    // Step maps for the single cancellation (x = source s, y = target t):
    //   f(a) = a,  f(x) = 0,  f(y) = -eps * sum_b d[b][x] b
    //   g(a) = a - eps * d[y][a] x
    LinearMap f_step(cur, next, 0);
    LinearMap g_step(next, cur, 0);
    for (int bi = 0; bi < static_cast<int>(keep.size()); ++bi) {
      f_step.set_entry(bi, keep[bi], UPoly::one());
      g_step.set_entry(keep[bi], bi, UPoly::one());
    }
    for (int bi = 0; bi < static_cast<int>(keep.size()); ++bi) {
      const UPoly& dbx = cur.entry(keep[bi], s);
      if (!dbx.is_zero()) f_step.add_entry(bi, t, dbx.scaled(-eps));
    }
    for (int ai = 0; ai < static_cast<int>(keep.size()); ++ai) {
      const UPoly& dya = cur.entry(t, keep[ai]);
      if (!dya.is_zero()) g_step.add_entry(s, ai, dya.scaled(-eps));
    }

    to_reduced = compose(f_step, to_reduced);
    from_reduced = compose(from_reduced, g_step);
    cur = next;
  }
  return Reduction{cur, to_reduced, from_reduced};
}

HomologyPresentation present_homology(const GradedComplex& c) {
  HomologyPresentation out;
  out.hat = homology_hat(specialize_hat(c));

  Reduction red = reduce_complex(c);
  const GradedComplex& r = red.reduced;
  std::map<int, int> involvement;  // generator index -> number of incident entries
  bool matched = true;
  for (const auto& [idx, p] : r.entries()) {
    involvement[idx.first]++;
    involvement[idx.second]++;
    if (!(p.is_monomial() && (p.terms().front().first == 1 || p.terms().front().first == -1)))
      matched = false;
  }
  for (const auto& [i, n] : involvement)
    if (n > 1) matched = false;

  if (matched) {
    std::set<int> paired;
    for (const auto& [idx, p] : r.entries()) {
      paired.insert(idx.first);
      paired.insert(idx.second);
      out.minus.towers.push_back({r.gen(idx.first).component, r.gen(idx.first).grading,
                                  p.terms().front().second});
    }
    for (int i = 0; i < r.size(); ++i)
      if (!paired.count(i))
        out.minus.towers.push_back({r.gen(i).component, r.gen(i).grading, 0});
  } else {
    for (const auto& [idx, p] : r.entries())
      out.minus.residual.push_back({r.gen(idx.second).name, r.gen(idx.first).name, p});
    for (int i = 0; i < r.size(); ++i)
      if (!involvement.count(i))
        out.minus.towers.push_back({r.gen(i).component, r.gen(i).grading, 0});
  }
  std::sort(out.minus.towers.begin(), out.minus.towers.end());
  return out;
}

HatHomology truncated_homology(const GradedComplex& c, int truncation) {
  if (truncation < 1) throw std::invalid_argument("truncated_homology: truncation must be >= 1");
  // The copy x@j stands for U^j x.  With the grading rule
  // gr(y) = gr(x) - 1 - 2k, placing x@j at gr(x) + 2j makes every truncated
  // entry drop grading by exactly 1.
  std::vector<Generator> gens;
  for (int j = 0; j < truncation; ++j)
    for (const auto& g : c.generators())
      gens.push_back({g.name + "@" + std::to_string(j), g.grading + 2 * j, g.component});
  GradedComplex t(std::move(gens));
  int n = c.size();
  for (const auto& [idx, p] : c.entries())
    for (const auto& [coef, exp] : p.terms())
      for (int j = 0; j + exp < truncation; ++j)
        t.add_entry(idx.first + n * (j + exp), idx.second + n * j, UPoly::constant(coef));
  return homology_hat(t);
}

InvariantTuple invariant_tuple(const GradedComplex& c, int truncation) {
  return InvariantTuple{homology_hat(specialize_hat(c)).pinned(),
                        truncated_homology(c, truncation).pinned()};
}

std::string describe(const HatHomology& h) {
  std::ostringstream os;
  bool any = false;
  for (const auto& [k, g] : h.groups) {
    if (g.trivial()) continue;
    any = true;
    os << k.first << " gr " << k.second << ": ";
    if (g.free_rank > 0) os << "Z^" << g.free_rank;
    if (g.free_rank > 0 && !g.torsion.empty()) os << " + ";
    for (size_t i = 0; i < g.torsion.size(); ++i)
      os << (i ? " + " : "") << "Z/" << g.torsion[i];
    os << "\n";
  }
  if (!any) os << "trivial\n";
  return os.str();
}

}  // namespace floer
