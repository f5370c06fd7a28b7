#include "floer/move_graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace floer {

namespace {

std::string piece_key(const Piece& p) {
  PointedDiagram d{{p}, false};
  return diagram_key(d);
}

std::vector<int> effective_perm(const DiffeoData& d, size_t n) {
  if (d.piece_perm.empty()) {
    std::vector<int> id(n);
    for (size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
    return id;
  }
  return d.piece_perm;
}

}  // namespace

std::string kind_name(MoveKind k) {
  switch (k) {
    case MoveKind::AlphaEquiv: return "alpha_equiv";
    case MoveKind::BetaEquiv: return "beta_equiv";
    case MoveKind::Stab: return "stab";
    case MoveKind::Destab: return "destab";
    case MoveKind::Diffeo: return "diffeo";
  }
  return "?";
}

int MoveGraph::add_vertex(const std::string& name, PointedDiagram d) {
  if (vertex(name) >= 0) throw std::invalid_argument("MoveGraph: duplicate vertex '" + name + "'");
  vertices_.push_back({name, d, diagram_key(d)});
  return static_cast<int>(vertices_.size()) - 1;
}

int MoveGraph::vertex(const std::string& name) const {
  for (size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].name == name) return static_cast<int>(i);
  return -1;
}

int MoveGraph::add_edge(MoveEdge e) {
  if (e.from < 0 || e.from >= static_cast<int>(vertices_.size()) || e.to < 0 ||
      e.to >= static_cast<int>(vertices_.size()))
    throw std::out_of_range("MoveGraph: edge endpoint out of range");
  edges_.push_back(std::move(e));
  return static_cast<int>(edges_.size()) - 1;
}

int MoveGraph::add_alpha(int from, int to) { return add_edge({MoveKind::AlphaEquiv, from, to}); }
int MoveGraph::add_beta(int from, int to) { return add_edge({MoveKind::BetaEquiv, from, to}); }

int MoveGraph::add_stab(int from, int to, int slot) {
  MoveEdge s{MoveKind::Stab, from, to};
  s.slot = slot;
  int id = add_edge(s);
  MoveEdge d{MoveKind::Destab, to, from};
  d.slot = slot;
  add_edge(d);
  return id;
}

int MoveGraph::add_diffeo(int from, int to, DiffeoData data) {
  MoveEdge e{MoveKind::Diffeo, from, to};
  e.diffeo = std::move(data);
  return add_edge(e);
}

std::string MoveGraph::edge_name(int i) const {
  const MoveEdge& e = edges_.at(i);
  std::ostringstream os;
  os << kind_name(e.kind);
  if (e.kind == MoveKind::Stab || e.kind == MoveKind::Destab) os << "@" << e.slot;
  if (e.kind == MoveKind::Diffeo) os << "[" << e.diffeo.label << "]";
  os << ":" << vtx(e.from).name << "->" << vtx(e.to).name;
  return os.str();
}

std::vector<std::string> MoveGraph::validate() const {
  std::vector<std::string> problems;
  std::set<std::pair<int, int>> alpha_pairs, beta_pairs;
  for (size_t i = 0; i < edges_.size(); ++i) {
    const MoveEdge& e = edges_[i];
    if (e.kind == MoveKind::AlphaEquiv && !alpha_pairs.insert({e.from, e.to}).second)
      problems.push_back("duplicate alpha edge " + edge_name(static_cast<int>(i)));
    if (e.kind == MoveKind::BetaEquiv && !beta_pairs.insert({e.from, e.to}).second)
      problems.push_back("duplicate beta edge " + edge_name(static_cast<int>(i)));
    if (e.kind == MoveKind::Stab || e.kind == MoveKind::Destab) {
      MoveKind inv = e.kind == MoveKind::Stab ? MoveKind::Destab : MoveKind::Stab;
      bool found = false;
      for (const MoveEdge& o : edges_)
        if (o.kind == inv && o.from == e.to && o.to == e.from && o.slot == e.slot) found = true;
      if (!found)
        problems.push_back("missing inverse for " + edge_name(static_cast<int>(i)));
    }
  }
  return problems;
}

RectangleClass classify_rectangle(const MoveGraph& gr, const Rectangle& r) {
  const MoveEdge& e = gr.edge(r.e);
  const MoveEdge& f = gr.edge(r.f);
  const MoveEdge& g = gr.edge(r.g);
  const MoveEdge& h = gr.edge(r.h);
  if (e.from != f.from || g.from != e.to || h.from != f.to || g.to != h.to) return {0, "not a square"};
  auto kinds = [&](MoveKind a, MoveKind b, MoveKind c, MoveKind d) {
    return e.kind == a && f.kind == b && g.kind == c && h.kind == d;
  };
  bool eh_equiv = (e.kind == MoveKind::AlphaEquiv && h.kind == MoveKind::AlphaEquiv) ||
                  (e.kind == MoveKind::BetaEquiv && h.kind == MoveKind::BetaEquiv);

  // type 1: e,h strong alpha-equivalences and f,g strong beta-equivalences
  // (or the transposed reading of the same square)
  if (kinds(MoveKind::AlphaEquiv, MoveKind::BetaEquiv, MoveKind::BetaEquiv, MoveKind::AlphaEquiv))
    return {1, "e,h alpha-equivalences; f,g beta-equivalences"};
  if (kinds(MoveKind::BetaEquiv, MoveKind::AlphaEquiv, MoveKind::AlphaEquiv, MoveKind::BetaEquiv))
    return {1, "e,h beta-equivalences; f,g alpha-equivalences"};

  // type 2: e,h both alpha or both beta; f,g stabilizations at the same slot
  if (eh_equiv && f.kind == MoveKind::Stab && g.kind == MoveKind::Stab) {
    if (f.slot == g.slot)
      return {2, "e,h equivalences; f,g stabilizations at slot " + std::to_string(f.slot)};
    return {0, "stabilization slots differ"};
  }

  // type 3: e,h both alpha or both beta; f,g equal diffeomorphisms
  if (eh_equiv && f.kind == MoveKind::Diffeo && g.kind == MoveKind::Diffeo) {
    size_t n1 = gr.vtx(e.from).diagram.pieces.size();
    size_t n2 = gr.vtx(e.to).diagram.pieces.size();
    if (f.diffeo.label == g.diffeo.label &&
        effective_perm(f.diffeo, n1) == effective_perm(g.diffeo, n2) &&
        f.diffeo.fixture_relabel_slot == g.diffeo.fixture_relabel_slot)
      return {3, "e,h equivalences; f = g = diffeo '" + f.diffeo.label + "'"};
    return {0, "f and g are different diffeomorphisms"};
  }

  // type 4: four stabilizations at disjoint sites
  if (e.kind == MoveKind::Stab && f.kind == MoveKind::Stab && g.kind == MoveKind::Stab &&
      h.kind == MoveKind::Stab) {
    int se = e.slot, sf = f.slot;
    if (se == sf) return {0, "stabilization sites coincide"};
    int sg_expected = sf + (se <= sf ? 1 : 0);
    int sh_expected = se + (sf <= se ? 1 : 0);
    if (g.slot == sg_expected && h.slot == sh_expected)
      return {4, "disjoint stabilization sites " + std::to_string(se) + " and " + std::to_string(sf)};
    return {0, "stabilization sites are not disjointly aligned"};
  }

  // type 5: e,h stabilizations; f,g diffeos with g an extension of f
  if (e.kind == MoveKind::Stab && h.kind == MoveKind::Stab && f.kind == MoveKind::Diffeo &&
      g.kind == MoveKind::Diffeo) {
    if (f.diffeo.label != g.diffeo.label) return {0, "extension labels differ"};
    size_t n1 = gr.vtx(e.from).diagram.pieces.size();
    auto pf = effective_perm(f.diffeo, n1);
    auto pg = effective_perm(g.diffeo, n1 + 1);
    int s = e.slot, sp = h.slot;
    if (pg.size() != n1 + 1 || static_cast<size_t>(s) >= pg.size()) return {0, "perm sizes off"};
    if (pg[s] != sp) return {0, "new piece not carried to the stabilized slot"};
    for (size_t i = 0; i < n1; ++i) {
      size_t i2 = i + (static_cast<int>(i) >= s ? 1 : 0);
      int expected = pf[i] + (pf[i] >= sp ? 1 : 0);
      if (pg[i2] != expected) return {0, "g does not restrict to f off the stabilized disks"};
    }
    return {5, "g extends f across the stabilization at slot " + std::to_string(s)};
  }
  return {0, "no distinguished pattern matches"};
}

std::vector<std::pair<Rectangle, RectangleClass>> enumerate_rectangles(const MoveGraph& gr) {
  std::vector<std::pair<Rectangle, RectangleClass>> out;
  std::set<std::array<int, 4>> seen;  // canonical {min(e,f),max(e,f),min(g,h),max(g,h)}
  int E = static_cast<int>(gr.edges().size());
  for (int e = 0; e < E; ++e)
    for (int f = 0; f < E; ++f) {
      if (e == f) continue;
      if (gr.edge(e).from != gr.edge(f).from) continue;
      for (int g = 0; g < E; ++g) {
        if (gr.edge(g).from != gr.edge(e).to) continue;
        for (int h = 0; h < E; ++h) {
          if (h == g) continue;
          if (gr.edge(h).from != gr.edge(f).to) continue;
          if (gr.edge(h).to != gr.edge(g).to) continue;
          Rectangle r{e, f, g, h};
          RectangleClass rc = classify_rectangle(gr, r);
          if (rc.type == 0) continue;
          std::array<int, 4> key{std::min(e, f), std::max(e, f), std::min(g, h), std::max(g, h)};
          if (seen.insert(key).second) out.push_back({r, rc});
        }
      }
    }
  return out;
}

HandleswapCheck verify_handleswap(const MoveGraph& gr, int e, int f, int g) {
  const MoveEdge& ee = gr.edge(e);
  const MoveEdge& fe = gr.edge(f);
  const MoveEdge& ge = gr.edge(g);
  if (ee.to != fe.from || fe.to != ge.from || ge.to != ee.from)
    return {false, "edges do not close into a triangle", -1};
  if (ee.kind != MoveKind::AlphaEquiv) return {false, "e is not a strong alpha-equivalence", -1};
  if (fe.kind != MoveKind::BetaEquiv) return {false, "f is not a strong beta-equivalence", -1};
  if (ge.kind != MoveKind::Diffeo) return {false, "g is not a diffeomorphism", -1};

  const PointedDiagram& H1 = gr.vtx(ee.from).diagram;
  const PointedDiagram& H2 = gr.vtx(ee.to).diagram;
  const PointedDiagram& H3 = gr.vtx(fe.to).diagram;
  if (H1.pieces.size() != H2.pieces.size() || H1.pieces.size() != H3.pieces.size())
    return {false, "piece counts differ", -1};
  if (H1.orientation_reversed != H2.orientation_reversed ||
      H1.orientation_reversed != H3.orientation_reversed)
    return {false, "orientation flags differ", -1};

  auto is_pair = [](const Piece& p, const char* a, const char* b) {
    if (!std::holds_alternative<FixturePiece>(p)) return false;
    const auto& fp = std::get<FixturePiece>(p);
    return fp.a == a && fp.b == b;
  };
  int slot = -1;
  for (size_t k = 0; k < H1.pieces.size(); ++k) {
    if (is_pair(H1.pieces[k], "alpha0", "beta0") && is_pair(H2.pieces[k], "alpha0p", "beta0") &&
        is_pair(H3.pieces[k], "alpha0p", "beta0p")) {
      slot = static_cast<int>(k);
      break;
    }
  }
  if (slot < 0) return {false, "no slot runs through the handleswap fixtures in cyclic order", -1};
  for (size_t k = 0; k < H1.pieces.size(); ++k) {
    if (static_cast<int>(k) == slot) continue;
    std::string k1 = piece_key(H1.pieces[k]);
    if (k1 != piece_key(H2.pieces[k]) || k1 != piece_key(H3.pieces[k]))
      return {false, "diagrams disagree away from the genus-2 slot", -1};
  }
  if (ge.diffeo.fixture_relabel_slot != slot)
    return {false, "g lacks the fixture relabeling on the genus-2 slot", -1};
  size_t n = H1.pieces.size();
  if (effective_perm(ge.diffeo, n) != effective_perm(DiffeoData{}, n))
    return {false, "g permutes pieces", -1};
  return {true, "standard simple handleswap at slot " + std::to_string(slot), slot};
}

std::vector<std::array<int, 3>> enumerate_handleswaps(const MoveGraph& gr) {
  std::vector<std::array<int, 3>> out;
  int E = static_cast<int>(gr.edges().size());
  for (int e = 0; e < E; ++e)
    for (int f = 0; f < E; ++f)
      for (int g = 0; g < E; ++g)
        if (verify_handleswap(gr, e, f, g).ok) out.push_back({e, f, g});
  return out;
}

std::optional<std::vector<int>> find_oriented_path(const MoveGraph& gr, int a, int b, int max_len) {
  if (a == b) return std::vector<int>{};
  // breadth-first over edge indices, respecting orientation
  std::vector<int> prev_edge(gr.vertices().size(), -1);
  std::vector<int> dist(gr.vertices().size(), -1);
  std::vector<int> frontier = {a};
  dist[a] = 0;
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int v : frontier) {
      if (dist[v] >= max_len) continue;
      for (size_t i = 0; i < gr.edges().size(); ++i) {
        const MoveEdge& e = gr.edges()[i];
        if (e.from != v || dist[e.to] >= 0) continue;
        dist[e.to] = dist[v] + 1;
        prev_edge[e.to] = static_cast<int>(i);
        if (e.to == b) {
          std::vector<int> path;
          int cur = b;
          while (cur != a) {
            path.push_back(prev_edge[cur]);
            cur = gr.edge(prev_edge[cur]).from;
          }
          std::reverse(path.begin(), path.end());
          return path;
        }
        next.push_back(e.to);
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

namespace {

void enumerate_rec(const MoveGraph& gr, int cur, int b, int max_len,
                   const std::vector<MoveKind>* kinds, std::vector<int>& path,
                   std::vector<bool>& used, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(path.size()) >= max_len) return;
  for (size_t i = 0; i < gr.edges().size(); ++i) {
    const MoveEdge& e = gr.edges()[i];
    if (e.from != cur) continue;
    if (kinds && std::find(kinds->begin(), kinds->end(), e.kind) == kinds->end()) continue;
    if (e.to == b) {  // arrival ends a simple path
      path.push_back(static_cast<int>(i));
      out.push_back(path);
      path.pop_back();
      continue;
    }
    if (used[e.to]) continue;
    used[e.to] = true;
    path.push_back(static_cast<int>(i));
    enumerate_rec(gr, e.to, b, max_len, kinds, path, used, out);
    path.pop_back();
    used[e.to] = false;
  }
}

}  // namespace

std::vector<std::vector<int>> enumerate_paths(const MoveGraph& gr, int a, int b, int max_len,
                                              const std::vector<MoveKind>* kinds) {
  std::vector<std::vector<int>> out;
  if (a == b) out.push_back({});
  std::vector<bool> used(gr.vertices().size(), false);
  used[a] = true;
  std::vector<int> path;
  enumerate_rec(gr, a, b, max_len, kinds, path, used, out);
  return out;
}

}  // namespace floer
