#include "floer/corpus.hpp"

namespace floer {

namespace {

PointedDiagram diag(std::vector<Piece> pieces) { return PointedDiagram{std::move(pieces), false}; }

struct CorpusEdges {
  int gH = -1;      // handleswap diffeomorphism
  int dA = -1;      // flagged small isotopy
  int eU12 = -1;    // a type-1 rectangle edge (mutation target)
};

MoveGraph build_graph(CorpusEdges* ids) {
  TorusPiece P = standard_torus_piece();
  FixturePiece X1{"alpha0", "beta0"};    // {a}: the double stabilizer
  FixturePiece X2{"alpha0p", "beta0"};   // {b}
  FixturePiece X3{"alpha0p", "beta0p"};  // {c}

  MoveGraph g;
  int A = g.add_vertex("A", diag({P}));
  int B = g.add_vertex("B1", diag({P, P}));
  int B2 = g.add_vertex("B2", diag({P, P, P}));
  int V1 = g.add_vertex("V1", diag({P, X1}));
  int V2 = g.add_vertex("V2", diag({P, X2}));
  int V3 = g.add_vertex("V3", diag({P, X3}));
  int V1s = g.add_vertex("V1s", diag({X1, P}));
  int V2s = g.add_vertex("V2s", diag({X2, P}));
  int W1 = g.add_vertex("W1", diag({P, X1, P}));
  int W2 = g.add_vertex("W2", diag({P, X2, P}));
  int W1p = g.add_vertex("W1p", diag({X1, P, P}));
  int U1 = g.add_vertex("U1", diag({P, X1, X2}));
  int U2 = g.add_vertex("U2", diag({P, X2, X2}));
  int U3 = g.add_vertex("U3", diag({P, X1, X3}));
  int U4 = g.add_vertex("U4", diag({P, X2, X3}));

  // stabilizations (destabilizations added automatically)
  g.add_stab(A, B, 0);
  g.add_stab(A, B, 1);
  g.add_stab(B, B2, 2);   // type 4: with the two above and the next
  g.add_stab(B, B2, 0);
  g.add_stab(V1, W1, 2);  // type 2 side
  g.add_stab(V2, W2, 2);
  g.add_stab(V1s, W1p, 2);  // type 5 side

  // strong equivalences
  int eV = g.add_alpha(V1, V2);  // handleswap e
  g.add_alpha(W1, W2);           // type 2 bottom
  g.add_alpha(V1s, V2s);         // type 3 bottom
  if (ids) ids->eU12 = g.add_alpha(U1, U2);
  else g.add_alpha(U1, U2);
  g.add_alpha(U3, U4);
  int fV = g.add_beta(V2, V3);  // handleswap f
  g.add_beta(U1, U3);
  g.add_beta(U2, U4);
  (void)eV;
  (void)fV;

  // diffeomorphisms
  DiffeoData hswap;
  hswap.label = "hswap";
  hswap.fixture_relabel_slot = 1;
  int gH = g.add_diffeo(V3, V1, hswap);
  if (ids) ids->gH = gH;

  DiffeoData swap01;
  swap01.label = "swap01";
  swap01.piece_perm = {1, 0};
  g.add_diffeo(V1, V1s, swap01);
  g.add_diffeo(V2, V2s, swap01);  // type 3: f = g
  DiffeoData swap01w = swap01;
  swap01w.piece_perm = {1, 0, 2};
  g.add_diffeo(W1, W1p, swap01w);  // type 5: extension of swap01

  DiffeoData small_iso;
  small_iso.label = "small_iso";
  small_iso.isotopic_to_identity = true;
  int dA = g.add_diffeo(A, A, small_iso);
  if (ids) ids->dA = dA;

  DiffeoData regroup;
  regroup.label = "regroup";  // [P,P,P] and [P, double-stabilizer] present the same diagram
  g.add_diffeo(B2, V1, regroup);
  return g;
}

GraphFunctor build_functor(CompareMode mode, bool negate_projective_edges) {
  CorpusEdges ids;
  GraphFunctor F;
  F.graph = build_graph(&ids);
  F.mode = mode;
  for (const auto& v : F.graph.vertices()) F.objects.push_back(diagram_complex(v.diagram));
  for (size_t i = 0; i < F.graph.edges().size(); ++i) {
    const MoveEdge& e = F.graph.edges()[i];
    LinearMap f(F.objects[e.from], F.objects[e.to], 0);
    Coef sign = 1;
    if (negate_projective_edges &&
        (static_cast<int>(i) == ids.gH || static_cast<int>(i) == ids.dA))
      sign = -1;
    f.set_entry(0, 0, UPoly::constant(sign));
    F.morphisms.push_back(SignClass(f));
  }
  return F;
}

}  // namespace

MoveGraph corpus_graph() { return build_graph(nullptr); }

GraphFunctor corpus_functor_strict() { return build_functor(CompareMode::Strict, false); }

GraphFunctor corpus_functor_projective() {
  return build_functor(CompareMode::UpToSign, true);
}

std::vector<std::string> corpus_s3_chain() { return {"A", "B1", "B2"}; }

}  // namespace floer
