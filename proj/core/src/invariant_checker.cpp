#include "floer/invariant_checker.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace floer {

namespace {

std::string path_name(const MoveGraph& gr, const std::vector<int>& path) {
  if (path.empty()) return "(empty)";
  std::string s;
  for (int e : path) s += (s.empty() ? "" : " ; ") + gr.edge_name(e);
  return s;
}

}  // namespace

LinearMap GraphFunctor::along(const std::vector<int>& path, int at) const {
  LinearMap acc = LinearMap::identity(objects.at(at));
  for (int e : path) acc = compose(map_of(e), acc);
  return acc;
}

std::vector<std::string> GraphFunctor::structural_problems() const {
  std::vector<std::string> out;
  if (objects.size() != graph.vertices().size()) out.push_back("object assignment not total");
  if (morphisms.size() != graph.edges().size()) out.push_back("morphism assignment not total");
  if (!out.empty()) return out;
  for (size_t i = 0; i < graph.edges().size(); ++i) {
    const MoveEdge& e = graph.edges()[i];
    const LinearMap& f = map_of(static_cast<int>(i));
    if (!(f.source() == objects[e.from]) || !(f.target() == objects[e.to]))
      out.push_back("edge " + graph.edge_name(static_cast<int>(i)) +
                    " morphism endpoints do not match the assigned objects");
    if (f.degree() != 0)
      out.push_back("edge " + graph.edge_name(static_cast<int>(i)) + " morphism has nonzero degree");
    else if (!f.is_chain_map())
      out.push_back("edge " + graph.edge_name(static_cast<int>(i)) + " morphism is not a chain map");
  }
  for (const auto& p : graph.validate()) out.push_back(p);
  return out;
}

bool agree(const LinearMap& f, const LinearMap& g, CompareMode mode) {
  return maps_agree(SystemMap(f), SystemMap(g), mode);
}

bool invertible(const LinearMap& f, CompareMode mode) {
  if (mode == CompareMode::UpToSignHomotopy) return is_contractible(mapping_cone(f));
  if (f.source().size() != f.target().size()) return false;
  // Degree-0 graded maps have monomial determinant; the units of Z[U] are
  // +-1, so f is invertible iff det = +-1.  Leibniz expansion with column
  // masking; sparse entries prune the recursion hard at desk scale.
  int n = f.source().size();
  if (n > 12) throw std::invalid_argument("invertible: matrix too large for the expansion");
  std::vector<bool> used(n, false);
  UPoly det;
  std::function<void(int, UPoly, int)> expand = [&](int row, UPoly acc, int sign) {
    if (row == n) {
      det += sign > 0 ? acc : -acc;
      return;
    }
    for (int col = 0; col < n; ++col) {
      if (used[col]) continue;
      const UPoly& v = f.entry(row, col);
      if (v.is_zero()) continue;
      int used_smaller = 0;
      for (int c2 = 0; c2 < col; ++c2)
        if (used[c2]) ++used_smaller;
      int inv = row - used_smaller;  // inversions added by sigma(row) = col
      used[col] = true;
      expand(row + 1, acc * v, (inv % 2 == 0) ? sign : -sign);
      used[col] = false;
    }
  };
  expand(0, UPoly::one(), 1);
  return det.is_monomial() && det.terms().front().second == 0 &&
         (det.terms().front().first == 1 || det.terms().front().first == -1);
}

WeakReport check_weak(const GraphFunctor& F) {
  WeakReport rep;
  rep.structural = F.structural_problems();
  if (!rep.structural.empty()) return rep;
  for (size_t i = 0; i < F.graph.edges().size(); ++i)
    if (!invertible(F.map_of(static_cast<int>(i)), F.mode))
      rep.failures.push_back(F.graph.edge_name(static_cast<int>(i)) +
                             ": image is not invertible in mode " + mode_name(F.mode));
  return rep;
}

StrongReport check_strong(const GraphFunctor& F, int word_bound) {
  StrongReport rep;
  rep.weak = check_weak(F);
  if (!rep.weak.structural.empty()) return rep;
  const MoveGraph& gr = F.graph;

  // Axiom 1: functoriality on the alpha / beta / diffeo subgraphs: any two
  // parallel words of length <= word_bound agree.
  for (MoveKind kind : {MoveKind::AlphaEquiv, MoveKind::BetaEquiv, MoveKind::Diffeo}) {
    std::vector<MoveKind> filter = {kind};
    for (int a = 0; a < static_cast<int>(gr.vertices().size()); ++a)
      for (int b = 0; b < static_cast<int>(gr.vertices().size()); ++b) {
        auto paths = enumerate_paths(gr, a, b, word_bound, &filter);
        for (size_t i = 0; i < paths.size(); ++i)
          for (size_t j = i + 1; j < paths.size(); ++j)
            if (!agree(F.along(paths[i], a), F.along(paths[j], a), F.mode))
              rep.functoriality.push_back(kind_name(kind) + " words disagree: " +
                                          path_name(gr, paths[i]) + "  vs  " +
                                          path_name(gr, paths[j]));
      }
  }
  // Axiom 1, stabilization half: F(destab) is the two-sided inverse of F(stab).
  for (size_t i = 0; i < gr.edges().size(); ++i) {
    const MoveEdge& e = gr.edges()[i];
    if (e.kind != MoveKind::Stab) continue;
    for (size_t j = 0; j < gr.edges().size(); ++j) {
      const MoveEdge& d = gr.edges()[j];
      if (d.kind != MoveKind::Destab || d.from != e.to || d.to != e.from || d.slot != e.slot)
        continue;
      LinearMap round = compose(F.map_of(static_cast<int>(j)), F.map_of(static_cast<int>(i)));
      LinearMap round2 = compose(F.map_of(static_cast<int>(i)), F.map_of(static_cast<int>(j)));
      if (!agree(round, LinearMap::identity(F.objects[e.from]), F.mode) ||
          !agree(round2, LinearMap::identity(F.objects[e.to]), F.mode))
        rep.functoriality.push_back("stab/destab pair not mutually inverse: " +
                                    gr.edge_name(static_cast<int>(i)));
    }
  }

  // Axiom 2: distinguished rectangles commute.
  for (const auto& [r, rc] : enumerate_rectangles(gr)) {
    LinearMap left = compose(F.map_of(r.g), F.map_of(r.e));
    LinearMap right = compose(F.map_of(r.h), F.map_of(r.f));
    if (!agree(left, right, F.mode)) {
      std::ostringstream os;
      os << "type " << rc.type << " rectangle fails: e=" << gr.edge_name(r.e)
         << " f=" << gr.edge_name(r.f) << " g=" << gr.edge_name(r.g)
         << " h=" << gr.edge_name(r.h);
      rep.commutativity.push_back(os.str());
    }
  }

  // Axiom 3: diffeomorphisms isotopic to the identity act as the identity.
  for (size_t i = 0; i < gr.edges().size(); ++i) {
    const MoveEdge& e = gr.edges()[i];
    if (e.kind != MoveKind::Diffeo || !e.diffeo.isotopic_to_identity) continue;
    if (e.from != e.to) {
      rep.continuity.push_back(gr.edge_name(static_cast<int>(i)) +
                               ": flagged edge is not a self-loop");
      continue;
    }
    if (!agree(F.map_of(static_cast<int>(i)), LinearMap::identity(F.objects[e.from]), F.mode))
      rep.continuity.push_back(gr.edge_name(static_cast<int>(i)) + ": image is not the identity");
  }

  // Axiom 4: simple handleswaps compose to the identity.
  for (const auto& tri : enumerate_handleswaps(gr)) {
    LinearMap comp =
        compose(F.map_of(tri[2]), compose(F.map_of(tri[1]), F.map_of(tri[0])));
    if (!agree(comp, LinearMap::identity(F.objects[gr.edge(tri[0]).from]), F.mode))
      rep.handleswap.push_back("handleswap triangle fails: " + gr.edge_name(tri[0]) + " ; " +
                               gr.edge_name(tri[1]) + " ; " + gr.edge_name(tri[2]));
  }
  return rep;
}

PathIndependenceReport path_independence(const GraphFunctor& F, int a, int b, int max_len) {
  PathIndependenceReport rep;
  auto paths = enumerate_paths(F.graph, a, b, max_len);
  for (size_t i = 0; i < paths.size(); ++i)
    for (size_t j = i + 1; j < paths.size(); ++j) {
      ++rep.pairs_checked;
      if (!agree(F.along(paths[i], a), F.along(paths[j], a), F.mode))
        rep.discrepancies.push_back(
            {path_name(F.graph, paths[i]), path_name(F.graph, paths[j])});
    }
  return rep;
}

AssembledSystem assemble_system(const GraphFunctor& F, const std::vector<int>& component,
                                CompareMode mode) {
  AssembledSystem out;
  TransSystem sys;
  sys.mode = mode;
  std::vector<std::string> names;
  for (int v : component) names.push_back(F.graph.vtx(v).name);
  sys.index = DirectedIndex::total_order(names);
  for (int v : component) sys.objects[F.graph.vtx(v).name] = F.objects[v];

  int max_len = static_cast<int>(F.graph.edges().size());
  for (int u : component)
    for (int v : component) {
      const std::string &nu = F.graph.vtx(u).name, &nv = F.graph.vtx(v).name;
      if (!sys.index.leq(nu, nv)) continue;
      auto path = find_oriented_path(F.graph, u, v, max_len);
      if (!path) {
        out.error = "component not connected: no oriented path " + nu + " -> " + nv;
        return out;
      }
      sys.maps[{nu, nv}] = F.along(*path, u);
    }
  out.system = std::move(sys);
  return out;
}

}  // namespace floer
