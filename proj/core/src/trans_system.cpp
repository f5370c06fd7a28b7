#include "floer/trans_system.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace floer {

std::string mode_name(CompareMode m) {
  switch (m) {
    case CompareMode::Strict: return "strict";
    case CompareMode::UpToSign: return "sign";
    case CompareMode::UpToSignHomotopy: return "sign-homotopy";
  }
  return "?";
}

CompareMode mode_from_name(const std::string& s) {
  if (s == "strict") return CompareMode::Strict;
  if (s == "sign") return CompareMode::UpToSign;
  if (s == "sign-homotopy") return CompareMode::UpToSignHomotopy;
  throw std::invalid_argument("unknown comparison mode '" + s + "'");
}

CompareMode weaker_mode(CompareMode a, CompareMode b) {
  return static_cast<int>(a) >= static_cast<int>(b) ? a : b;
}

bool DirectedIndex::has(const std::string& a) const {
  return std::find(elements.begin(), elements.end(), a) != elements.end();
}

std::vector<std::string> DirectedIndex::validate() const {
  std::vector<std::string> problems;
  for (const auto& [a, b] : relation)
    if (!has(a) || !has(b)) problems.push_back("relation pair (" + a + ", " + b + ") off the element set");
  for (const auto& e : elements)
    if (!leq(e, e)) problems.push_back("relation not reflexive at " + e);
  for (const auto& [a, b] : relation)
    for (const auto& [c, d] : relation)
      if (b == c && !leq(a, d))
        problems.push_back("relation not transitive: " + a + " <= " + b + " <= " + d);
  for (const auto& a : elements)
    for (const auto& b : elements) {
      bool bounded = false;
      for (const auto& c : elements)
        if (leq(a, c) && leq(b, c)) bounded = true;
      if (!bounded) problems.push_back("no upper bound for {" + a + ", " + b + "}");
    }
  return problems;
}

DirectedIndex DirectedIndex::total_order(std::vector<std::string> elements) {
  std::sort(elements.begin(), elements.end());
  DirectedIndex ix;
  ix.elements = elements;
  for (size_t i = 0; i < elements.size(); ++i)
    for (size_t j = i; j < elements.size(); ++j) ix.relation.insert({elements[i], elements[j]});
  return ix;
}

bool maps_agree(const SystemMap& a, const SystemMap& b, CompareMode mode) {
  if (a.index() != b.index()) return false;
  if (std::holds_alternative<LinearMap>(a)) {
    const auto& f = std::get<LinearMap>(a);
    const auto& g = std::get<LinearMap>(b);
    switch (mode) {
      case CompareMode::Strict: return f == g;
      case CompareMode::UpToSign: return f.equals_up_to_sign(g);
      case CompareMode::UpToSignHomotopy:
        if (!(f.source() == g.source()) || !(f.target() == g.target()) ||
            f.degree() != g.degree())
          return false;
        return projectively_homotopic(f, g);
    }
  }
  const auto& f = std::get<IntMat>(a);
  const auto& g = std::get<IntMat>(b);
  if (f.rows() != g.rows() || f.cols() != g.cols()) return false;
  if (mode == CompareMode::Strict) return f == g;
  // modules carry no homotopies: both projective modes compare up to sign
  if (f == g) return true;
  IntMat neg(g.rows(), g.cols());
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) neg.at(i, j) = -g.at(i, j);
  return f == neg;
}

SystemMap compose_maps(const SystemMap& g, const SystemMap& f) {
  if (g.index() != f.index()) throw std::invalid_argument("compose_maps: mixed map kinds");
  if (std::holds_alternative<LinearMap>(g))
    return compose(std::get<LinearMap>(g), std::get<LinearMap>(f));
  return std::get<IntMat>(g) * std::get<IntMat>(f);
}

SystemMap identity_map(const SystemObject& o) {
  if (std::holds_alternative<GradedComplex>(o))
    return LinearMap::identity(std::get<GradedComplex>(o));
  return IntMat::identity(std::get<ModulePresentation>(o).rank);
}

namespace {

bool map_shapes_fit(const SystemMap& m, const SystemObject& src, const SystemObject& dst) {
  if (std::holds_alternative<LinearMap>(m)) {
    if (!std::holds_alternative<GradedComplex>(src) || !std::holds_alternative<GradedComplex>(dst))
      return false;
    const auto& f = std::get<LinearMap>(m);
    return f.source() == std::get<GradedComplex>(src) && f.target() == std::get<GradedComplex>(dst);
  }
  if (!std::holds_alternative<ModulePresentation>(src) ||
      !std::holds_alternative<ModulePresentation>(dst))
    return false;
  const auto& f = std::get<IntMat>(m);
  return f.cols() == std::get<ModulePresentation>(src).rank &&
         f.rows() == std::get<ModulePresentation>(dst).rank;
}

}  // namespace

SystemReport validate_system(const TransSystem& s) {
  SystemReport rep;
  for (const auto& p : s.index.validate()) rep.structural.push_back(p);
  for (const auto& e : s.index.elements)
    if (!s.objects.count(e)) rep.structural.push_back("missing object for index " + e);
  for (const auto& [i, j] : s.index.relation) {
    auto it = s.maps.find({i, j});
    if (it == s.maps.end()) {
      rep.structural.push_back("missing map for " + i + " <= " + j);
      continue;
    }
    if (s.objects.count(i) && s.objects.count(j) &&
        !map_shapes_fit(it->second, s.objects.at(i), s.objects.at(j)))
      rep.structural.push_back("map shape mismatch for " + i + " <= " + j);
  }
  if (!rep.structural.empty()) return rep;

  for (const auto& e : s.index.elements)
    if (!maps_agree(s.maps.at({e, e}), identity_map(s.objects.at(e)), s.mode))
      rep.counterexamples.push_back({e, e, e});

  for (const auto& i : s.index.elements)
    for (const auto& j : s.index.elements) {
      if (!s.index.leq(i, j)) continue;
      for (const auto& k : s.index.elements) {
        if (!s.index.leq(j, k)) continue;
        SystemMap composite = compose_maps(s.maps.at({j, k}), s.maps.at({i, j}));
        if (!maps_agree(s.maps.at({i, k}), composite, s.mode))
          rep.counterexamples.push_back({i, j, k});
      }
    }
  return rep;
}

SystemReport validate_sys_morphism(const SysMorphism& m, const TransSystem& s1,
                                   const TransSystem& s2) {
  SystemReport rep;
  CompareMode mode = weaker_mode(s1.mode, s2.mode);
  for (const auto& i : s1.index.elements) {
    auto mi = m.index_map.find(i);
    if (mi == m.index_map.end()) {
      rep.structural.push_back("index map undefined at " + i);
      continue;
    }
    if (!s2.index.has(mi->second))
      rep.structural.push_back("index image " + mi->second + " outside the target system");
    if (!m.components.count(i)) rep.structural.push_back("missing component at " + i);
  }
  if (!rep.structural.empty()) return rep;

  for (const auto& [i, j] : s1.index.relation) {
    const std::string &Mi = m.index_map.at(i), &Mj = m.index_map.at(j);
    if (!s2.index.leq(Mi, Mj)) {
      rep.structural.push_back("index map not monotone on " + i + " <= " + j);
      continue;
    }
    SystemMap lhs = compose_maps(m.components.at(j), s1.maps.at({i, j}));
    SystemMap rhs = compose_maps(s2.maps.at({Mi, Mj}), m.components.at(i));
    if (!maps_agree(lhs, rhs, mode)) rep.counterexamples.push_back({i, j, "square"});
  }
  return rep;
}

TransSystem flatten_product(const TwoLevelSystem& t) {
  if (t.inner.empty()) throw std::invalid_argument("flatten_product: no inner systems");
  const DirectedIndex& I = t.inner.begin()->second.index;
  for (const auto& [j, sys] : t.inner)
    if (!(sys.index.elements == I.elements && sys.index.relation == I.relation))
      throw std::invalid_argument("flatten_product: inner index sets differ");
  for (const auto& [jj, con] : t.connectors)
    for (const auto& [i, img] : con.index_map)
      if (img != i) throw std::invalid_argument("flatten_product: connector index map must be the identity");

  auto pname = [](const std::string& i, const std::string& j) { return i + "*" + j; };
  TransSystem out;
  out.mode = t.mode;
  for (const auto& i : I.elements)
    for (const auto& j : t.outer.elements) out.index.elements.push_back(pname(i, j));
  for (const auto& [i1, i2] : I.relation)
    for (const auto& [j1, j2] : t.outer.relation)
      out.index.relation.insert({pname(i1, j1), pname(i2, j2)});

  for (const auto& j : t.outer.elements)
    for (const auto& i : I.elements) out.objects[pname(i, j)] = t.inner.at(j).objects.at(i);

  for (const auto& [i1, i2] : I.relation)
    for (const auto& [j1, j2] : t.outer.relation) {
      SystemMap inner_leg = t.inner.at(j1).maps.at({i1, i2});
      SystemMap map = (j1 == j2)
                          ? inner_leg
                          : compose_maps(t.connectors.at({j1, j2}).components.at(i2), inner_leg);
      out.maps[{pname(i1, j1), pname(i2, j2)}] = std::move(map);
    }
  return out;
}

ColimitResult colimit_modules(const TransSystem& s, int path_bound) {
  ColimitResult out;
  for (const auto& [ij, m] : s.maps) {
    if (!std::holds_alternative<IntMat>(m)) {
      out.problems.push_back("non-module map at (" + ij.first + ", " + ij.second + ")");
      continue;
    }
    const IntMat& f = std::get<IntMat>(m);
    if (f.rows() != f.cols() || (f.det() != 1 && f.det() != -1))
      out.problems.push_back("non-isomorphism map at (" + ij.first + ", " + ij.second + ")");
  }
  if (!out.problems.empty()) return out;

  std::vector<std::string> sorted = s.index.elements;
  std::sort(sorted.begin(), sorted.end());
  out.representative = sorted.front();
  out.object = std::get<ModulePresentation>(s.objects.at(out.representative));

  const std::string& r = out.representative;
  for (const auto& i : s.index.elements) {
    // choose an upper bound of {i, r} and set inj_i = f_{r,u}^{-1} o f_{i,u}
    std::string u;
    for (const auto& c : sorted)
      if (s.index.leq(i, c) && s.index.leq(r, c)) { u = c; break; }
    if (u.empty()) {
      out.problems.push_back("no upper bound for {" + i + ", " + r + "}");
      continue;
    }
    IntMat fiu = std::get<IntMat>(s.maps.at({i, u}));
    IntMat fru = std::get<IntMat>(s.maps.at({r, u}));
    out.injections[i] = fru.inverse_unimodular() * fiu;
  }
  if (!out.problems.empty()) return out;

  // path coherence: along every chain i <= ... <= j of length <= path_bound,
  // inj_j o (composite) agrees with inj_i
  std::vector<std::vector<std::string>> chains;
  for (const auto& i : s.index.elements) chains.push_back({i});
  for (int len = 1; len <= path_bound; ++len) {
    std::vector<std::vector<std::string>> next;
    for (const auto& ch : chains) {
      if (static_cast<int>(ch.size()) != len) continue;
      for (const auto& j : s.index.elements) {
        if (j == ch.back() || !s.index.leq(ch.back(), j)) continue;
        auto ext = ch;
        ext.push_back(j);
        next.push_back(ext);
      }
    }
    for (auto& ch : next) chains.push_back(std::move(ch));
  }
  for (const auto& ch : chains) {
    if (ch.size() < 2) continue;
    IntMat composite = IntMat::identity(std::get<ModulePresentation>(s.objects.at(ch.front())).rank);
    for (size_t k = 0; k + 1 < ch.size(); ++k)
      composite = std::get<IntMat>(s.maps.at({ch[k], ch[k + 1]})) * composite;
    SystemMap lhs = out.injections.at(ch.back()) * composite;
    SystemMap rhs = out.injections.at(ch.front());
    if (!maps_agree(lhs, rhs, s.mode)) {
      std::string path;
      for (const auto& e : ch) path += (path.empty() ? "" : " <= ") + e;
      out.problems.push_back("injections differ along " + path);
    }
  }
  return out;
}

}  // namespace floer
