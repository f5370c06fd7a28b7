#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "floer/diagrams.hpp"

namespace floer {

enum class MoveKind { AlphaEquiv, BetaEquiv, Stab, Destab, Diffeo };

std::string kind_name(MoveKind k);

struct DiffeoData {
  std::string label;
  bool isotopic_to_identity = false;
  std::vector<int> piece_perm;    // image slot per source slot; empty = identity
  int fixture_relabel_slot = -1;  // slot carrying the handleswap relabeling
};

struct MoveEdge {
  MoveKind kind;
  int from = -1, to = -1;
  int slot = -1;      // stab/destab site
  DiffeoData diffeo;  // meaningful when kind == Diffeo
};

struct GraphVertex {
  std::string name;
  PointedDiagram diagram;
  std::string key;  // isotopy-class proxy
};

class MoveGraph {
 public:
  int add_vertex(const std::string& name, PointedDiagram d);
  int vertex(const std::string& name) const;  // -1 when absent

  int add_alpha(int from, int to);
  int add_beta(int from, int to);
  // adds the destabilization inverse automatically; returns the stab edge id
  int add_stab(int from, int to, int slot);
  int add_diffeo(int from, int to, DiffeoData data);

  const std::vector<GraphVertex>& vertices() const { return vertices_; }
  const std::vector<MoveEdge>& edges() const { return edges_; }
  const GraphVertex& vtx(int i) const { return vertices_.at(i); }
  const MoveEdge& edge(int i) const { return edges_.at(i); }
  std::string edge_name(int i) const;

  // Structural invariants: stab/destab in inverse pairs, at most one alpha and
  // one beta edge per ordered vertex pair, endpoints in range.
  std::vector<std::string> validate() const;

 private:
  int add_edge(MoveEdge e);
  std::vector<GraphVertex> vertices_;
  std::vector<MoveEdge> edges_;
};

// Rectangle in the orientation e: H1->H2, f: H1->H3, g: H2->H4, h: H3->H4.
struct Rectangle {
  int e, f, g, h;
};

struct RectangleClass {
  int type = 0;  // 1..5, or 0 for none
  std::string evidence;
};

RectangleClass classify_rectangle(const MoveGraph& gr, const Rectangle& r);

// All distinct classified rectangles (each geometric square reported once).
std::vector<std::pair<Rectangle, RectangleClass>> enumerate_rectangles(const MoveGraph& gr);

struct HandleswapCheck {
  bool ok = false;
  std::string evidence;
  int slot = -1;  // the genus-2 slot when ok
};

// Triangle e: H1->H2 (alpha), f: H2->H3 (beta), g: H3->H1 (diffeo carrying the
// fixture relabeling); the three diagrams must agree off the genus-2 slot.
HandleswapCheck verify_handleswap(const MoveGraph& gr, int e, int f, int g);

std::vector<std::array<int, 3>> enumerate_handleswaps(const MoveGraph& gr);

// Oriented simple paths as edge-index lists.  find returns a shortest path
// (empty when a == b); enumerate returns every simple path with at most
// max_len edges in deterministic order, including the empty path when a == b.
std::optional<std::vector<int>> find_oriented_path(const MoveGraph& gr, int a, int b, int max_len);
std::vector<std::vector<int>> enumerate_paths(const MoveGraph& gr, int a, int b, int max_len,
                                              const std::vector<MoveKind>* kinds = nullptr);

}  // namespace floer
