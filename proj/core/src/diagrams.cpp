#include "floer/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "floer/snf.hpp"

namespace floer {

namespace {

Rational rfrac(Rational r) {
  long long fl = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() < 0) --fl;
  return r - fl;
}

std::string rstr(const Rational& r) {
  std::ostringstream os;
  os << r.numerator();
  if (r.denominator() != 1) os << "/" << r.denominator();
  return os.str();
}

long long egcd(long long a, long long b, long long& x, long long& y) {
  if (b == 0) {
    x = (a >= 0) ? 1 : -1;
    y = 0;
    return std::llabs(a);
  }
  long long x1, y1;
  long long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

bool primitive(std::pair<long long, long long> v) {
  long long x, y;
  if (v.first == 0 && v.second == 0) return false;
  return egcd(v.first, v.second, x, y) == 1;
}

long long imod(long long a, long long n) { return ((a % n) + n) % n; }

// ----- normalized models -----

struct GeoModel {
  long long n = 0;        // |det|, number of crossings
  long long m = 0;        // reduced twist, 0 <= m < n
  long long rp = 0;       // unreduced twist r' (strand slope r'/n)
  Rational x_base{0};     // crossing j at x' = x_base + j/n
  Rational a_s{0};        // normalized alpha height
  long long M[2][2];      // normalization, M * alpha = (1, 0)
  long long Minv[2][2];
  std::vector<std::string> names;  // crossing names by alpha-position index
  long long z_face = 0;            // index i of face F_i containing z
};

struct WigModel {
  int fingers = 0;
  std::vector<Rational> pos;       // 2m positions (parameters along the straight curve)
  std::vector<std::string> names;  // crossing names by position index
  bool on_alpha = false;
  // z region: 0..m-1 tips, m..2m-1 uppers, 2m annulus
  int z_region = 0;
};

std::string point_name(Rational x, Rational y) {
  return "pt(" + rstr(rfrac(x)) + "," + rstr(rfrac(y)) + ")";
}

bool is_wiggle(const TorusPiece& t) { return t.wiggle.has_value(); }

void validate_piece(const TorusPiece& t) {
  if (!primitive(t.alpha)) throw std::invalid_argument("torus piece: alpha vector not primitive");
  if (!primitive(t.beta)) throw std::invalid_argument("torus piece: beta vector not primitive");
  long long det = t.alpha.first * t.beta.second - t.alpha.second * t.beta.first;
  if (is_wiggle(t)) {
    if (det != 0)
      throw std::invalid_argument("torus piece: wiggle mode requires parallel curves");
    const auto& p = t.wiggle->positions;
    if (p.size() < 2 || p.size() % 2 != 0)
      throw std::invalid_argument("torus piece: wiggle needs an even crossing count >= 2");
    for (size_t i = 0; i < p.size(); ++i) {
      if (p[i].numerator() < 0 || p[i] >= Rational(1))
        throw std::invalid_argument("torus piece: wiggle position out of [0,1)");
      if (i > 0 && p[i] <= p[i - 1])
        throw std::invalid_argument("torus piece: wiggle positions must increase strictly");
    }
  } else {
    if (det == 0) throw std::invalid_argument("torus piece: non-transverse geodesics (det = 0)");
  }
}

// SL2(Z) change of basis taking alpha to (1, 0).
void normalization(std::pair<long long, long long> alpha, long long M[2][2], long long Minv[2][2]) {
  long long p = alpha.first, q = alpha.second;
  if (q < 0 || (q == 0 && p < 0)) { p = -p; q = -q; }
  long long u, v;
  egcd(p, q, u, v);  // u p + v q = 1
  M[0][0] = u; M[0][1] = v; M[1][0] = -q; M[1][1] = p;
  Minv[0][0] = p; Minv[0][1] = -v; Minv[1][0] = q; Minv[1][1] = u;
}

std::pair<Rational, Rational> apply2(const long long M[2][2], Rational x, Rational y) {
  return {M[0][0] * x + M[0][1] * y, M[1][0] * x + M[1][1] * y};
}

GeoModel build_geo(const TorusPiece& t) {
  validate_piece(t);
  GeoModel g;
  normalization(t.alpha, g.M, g.Minv);
  long long rp = g.M[0][0] * t.beta.first + g.M[0][1] * t.beta.second;
  long long sp = g.M[1][0] * t.beta.first + g.M[1][1] * t.beta.second;
  if (sp < 0) { rp = -rp; sp = -sp; }
  g.n = sp;
  g.rp = rp;
  g.m = (g.n == 1) ? 0 : imod(rp, g.n);

  // alpha passes through alpha_offset * (-q, p); beta through beta_offset * (-s, r).
  auto A = apply2(g.M, -t.alpha_offset * t.alpha.second, t.alpha_offset * t.alpha.first);
  auto B = apply2(g.M, -t.beta_offset * t.beta.second, t.beta_offset * t.beta.first);
  g.a_s = A.second;
  // beta is { n x' - r' y' = c (mod 1) }; crossings sit on y' = a_s
  Rational c = rfrac(g.n * B.first - rp * B.second);
  g.x_base = (c + rp * g.a_s) / g.n;

  for (long long j = 0; j < g.n; ++j) {
    Rational xj = rfrac(g.x_base + Rational(j, g.n));
    auto orig = apply2(g.Minv, xj, g.a_s);
    g.names.push_back(point_name(orig.first, orig.second));
  }

  auto Z = apply2(g.M, t.basepoint_x, t.basepoint_y);
  Rational ytil = rfrac(Z.second - g.a_s);
  if (ytil.numerator() == 0) throw std::invalid_argument("torus piece: basepoint lies on alpha");
  if (rfrac(g.n * Z.first - rp * Z.second) == c)
    throw std::invalid_argument("torus piece: basepoint lies on beta");
  Rational u = rfrac(Z.first - Rational(g.rp) * ytil / g.n - g.x_base);
  Rational un = u * g.n;
  g.z_face = un.numerator() / un.denominator();
  if (g.z_face >= g.n) g.z_face = g.n - 1;
  return g;
}

WigModel build_wig(const TorusPiece& t) {
  validate_piece(t);
  WigModel w;
  w.pos = t.wiggle->positions;
  w.fingers = static_cast<int>(w.pos.size()) / 2;
  w.on_alpha = t.wiggle->on_alpha;

  long long M[2][2], Minv[2][2];
  const auto straight_vec = w.on_alpha ? t.beta : t.alpha;
  Rational straight_off = w.on_alpha ? t.beta_offset : t.alpha_offset;
  Rational curved_off = w.on_alpha ? t.alpha_offset : t.beta_offset;
  normalization(straight_vec, M, Minv);
  auto S = apply2(M, -straight_off * straight_vec.second, straight_off * straight_vec.first);
  auto W = apply2(M, -curved_off * straight_vec.second, curved_off * straight_vec.first);
  Rational a_s = S.second;
  Rational h = rfrac(W.second - a_s);
  if (h.numerator() == 0) throw std::invalid_argument("torus piece: wiggle curves coincide");
  Rational x0 = S.first;

  for (const Rational& p : w.pos) {
    auto orig = apply2(Minv, rfrac(x0 + p), a_s);
    w.names.push_back(point_name(orig.first, orig.second));
  }

  auto Z = apply2(M, t.basepoint_x, t.basepoint_y);
  Rational yz = rfrac(Z.second - a_s);
  if (yz.numerator() == 0) throw std::invalid_argument("torus piece: basepoint lies on the straight curve");
  Rational u = rfrac(Z.first - x0);
  Rational dip = (Rational(1) - h) / Rational(2);
  int m = w.fingers;
  w.z_region = 2 * m;  // annulus unless one of the zones matches
  for (int i = 0; i < m; ++i) {
    if (u > w.pos[2 * i] && u < w.pos[2 * i + 1] && yz > 1 - dip) w.z_region = i;
    bool wraps = (2 * i + 2 >= 2 * m);
    Rational right = wraps ? w.pos[0] + Rational(1) : w.pos[2 * i + 2];
    Rational uu = (wraps && u < w.pos[2 * i + 1]) ? u + Rational(1) : u;
    if (uu > w.pos[2 * i + 1] && uu < right && yz < h) w.z_region = m + i;
  }
  return w;
}

// ----- per-piece linear system (corner conditions) -----

// One row per crossing over the piece's regions; region order:
//   geodesic: F_0..F_{n-1};  wiggle: tip_0..tip_{m-1}, up_0..up_{m-1}, annulus.
struct PieceSystem {
  std::vector<std::string> regions;
  int z_region;                        // column of the region containing z
  IntMat rows;
  std::vector<std::string> crossings;  // names, row order
};

PieceSystem piece_system(const TorusPiece& t) {
  PieceSystem ps;
  if (!is_wiggle(t)) {
    GeoModel g = build_geo(t);
    int n = static_cast<int>(g.n);
    for (int i = 0; i < n; ++i) ps.regions.push_back("F" + std::to_string(i));
    ps.z_region = static_cast<int>(g.z_face);
    ps.crossings = g.names;
    // m_i = c_{F_i} - c_{F_{i-m}}; equation at crossing p reads m_{p-1} - m_p
    ps.rows = IntMat(n, n);
    for (int p = 0; p < n; ++p) {
      int i1 = static_cast<int>(imod(p - 1, n));
      ps.rows.at(p, i1) += 1;
      ps.rows.at(p, static_cast<int>(imod(i1 - g.m, n))) -= 1;
      ps.rows.at(p, p) -= 1;
      ps.rows.at(p, static_cast<int>(imod(p - g.m, n))) += 1;
    }
  } else {
    WigModel w = build_wig(t);
    int m = w.fingers, N = 2 * m;
    for (int i = 0; i < m; ++i) ps.regions.push_back("tip" + std::to_string(i));
    for (int i = 0; i < m; ++i) ps.regions.push_back("up" + std::to_string(i));
    ps.regions.push_back("ann");
    ps.z_region = w.z_region;
    ps.crossings = w.names;
    // m_{2i} = c_ann - c_tip_i ; m_{2i+1} = c_up_i - c_ann
    ps.rows = IntMat(N, N + 1);
    auto add_m = [&](int p, int j, int s) {
      int ann = N;
      if (j % 2 == 0) {
        ps.rows.at(p, ann) += s;
        ps.rows.at(p, j / 2) -= s;
      } else {
        ps.rows.at(p, m + j / 2) += s;
        ps.rows.at(p, ann) -= s;
      }
    };
    for (int p = 0; p < N; ++p) {
      add_m(p, static_cast<int>(imod(p - 1, N)), +1);
      add_m(p, p, -1);
    }
  }
  return ps;
}

// ----- fixture tables -----

struct FixtureTable {
  std::vector<std::pair<std::string, int>> points;  // (name, grading)
};

const std::map<std::pair<std::string, std::string>, FixtureTable>& fixture_tables() {
  static const std::map<std::pair<std::string, std::string>, FixtureTable> tables = [] {
    std::map<std::pair<std::string, std::string>, FixtureTable> t;
    t[{"alpha0", "beta0"}] = {{{"a", 0}}};
    t[{"alpha0p", "beta0"}] = {{{"b", 0}}};
    t[{"alpha0p", "beta0p"}] = {{{"c", 0}}};
    t[{"alpha0p", "alpha0"}] = {{{"theta1+theta2+", 2},
                                 {"theta1+theta2-", 1},
                                 {"theta1-theta2+", 1},
                                 {"theta1-theta2-", 0}}};
    t[{"beta0", "beta0p"}] = {{{"theta1'+theta2'+", 2},
                               {"theta1'+theta2'-", 1},
                               {"theta1'-theta2'+", 1},
                               {"theta1'-theta2'-", 0}}};
    return t;
  }();
  return tables;
}

const FixtureTable& fixture_table(const FixturePiece& f) {
  const auto& tables = fixture_tables();
  auto it = tables.find({f.a, f.b});
  if (it != tables.end()) return it->second;
  it = tables.find({f.b, f.a});  // conjugated pieces reverse the pair
  if (it != tables.end()) return it->second;
  throw std::invalid_argument("fixture piece: pair (" + f.a + ", " + f.b + ") is not transcribed");
}

// ----- per-piece point data -----

struct PiecePoints {
  std::vector<std::string> names;
  std::vector<int> gradings;
  std::vector<int> classes;  // per-piece Spin^c class ids
};

std::vector<Bigon> piece_bigons(const TorusPiece& t, bool reversed, SignRule);

PiecePoints piece_points(const Piece& piece, bool reversed) {
  PiecePoints pp;
  if (std::holds_alternative<FixturePiece>(piece)) {
    const auto& table = fixture_table(std::get<FixturePiece>(piece));
    for (const auto& [name, gr] : table.points) {
      pp.names.push_back(name);
      pp.gradings.push_back(gr);
      pp.classes.push_back(0);
    }
    return pp;
  }
  const TorusPiece& t = std::get<TorusPiece>(piece);
  PieceSystem ps = piece_system(t);
  pp.names = ps.crossings;
  int n = static_cast<int>(pp.names.size());

  // classes: x ~ y iff the crossing system with rhs e_y - e_x is integer solvable
  std::vector<int> cls(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    cls[x] = next;
    for (int y = x + 1; y < n; ++y) {
      if (cls[y] >= 0) continue;
      std::vector<Coef> rhs(ps.rows.rows(), 0);
      rhs[y] += 1;
      rhs[x] -= 1;
      if (solve_integer(ps.rows, rhs)) cls[y] = next;
    }
    ++next;
  }
  pp.classes = cls;

  // gradings from bigon chains
  std::vector<Bigon> bigons = piece_bigons(t, reversed, SignRule::CornerFrame);
  auto index_of = [&](const std::string& nm) {
    for (int i = 0; i < n; ++i)
      if (pp.names[i] == nm) return i;
    throw std::logic_error("piece_points: unknown crossing " + nm);
  };
  std::vector<int> gr(n, 0);
  std::vector<bool> assigned(n, false);
  for (int start = 0; start < n; ++start) {
    if (assigned[start]) continue;
    gr[start] = 0;
    assigned[start] = true;
    std::vector<int> queue = {start};
    while (!queue.empty()) {
      int v = queue.back();
      queue.pop_back();
      for (const auto& b : bigons) {
        int f = index_of(b.from), to = index_of(b.to);
        int other = -1, want = 0;
        if (f == v) { other = to; want = gr[v] - 1; }
        else if (to == v) { other = f; want = gr[v] + 1; }
        else continue;
        if (!assigned[other]) {
          gr[other] = want;
          assigned[other] = true;
          queue.push_back(other);
        } else if (gr[other] != want) {
          throw std::logic_error("piece_points: inconsistent bigon gradings");
        }
      }
    }
  }
  // pin min = 0 within each class
  for (int k = 0; k < next; ++k) {
    int mn = 0;
    bool seen = false;
    for (int i = 0; i < n; ++i)
      if (cls[i] == k && (!seen || gr[i] < mn)) { mn = gr[i]; seen = true; }
    for (int i = 0; i < n; ++i)
      if (cls[i] == k) gr[i] -= mn;
  }
  pp.gradings = gr;
  return pp;
}

std::vector<Bigon> piece_bigons(const TorusPiece& t, bool reversed, SignRule) {
  validate_piece(t);
  std::vector<Bigon> out;
  if (!is_wiggle(t)) return out;  // transverse geodesics are in minimal position
  WigModel w = build_wig(t);
  int m = w.fingers;
  // Boundary traversal keeps the region on the left (right when the surface
  // orientation is reversed); the initial corner is where the traversal
  // enters the alpha arc, and the sign compares that entry direction with the
  // alpha curve's own orientation.  Worked out per case:
  bool standard = (w.on_alpha == reversed);
  for (int i = 0; i < m; ++i) {
    if (w.z_region != i) {
      int down = 2 * i, up = 2 * i + 1;
      if (standard)
        out.push_back({w.names[up], w.names[down], -1, "tip" + std::to_string(i)});
      else
        out.push_back({w.names[down], w.names[up], +1, "tip" + std::to_string(i)});
    }
    if (w.z_region != m + i) {
      int up = 2 * i + 1, next_down = (2 * i + 2) % (2 * m);
      if (standard)
        out.push_back({w.names[up], w.names[next_down], +1, "up" + std::to_string(i)});
      else
        out.push_back({w.names[next_down], w.names[up], -1, "up" + std::to_string(i)});
    }
  }
  return out;
}

struct ProductData {
  std::vector<PiecePoints> pieces;
  std::vector<std::vector<int>> tuples;  // generator index -> per-piece point index
  std::vector<std::string> names;
  std::vector<int> gradings;
  std::vector<std::string> components;
};

ProductData product_data(const PointedDiagram& d) {
  if (d.pieces.empty()) throw std::invalid_argument("diagram: no pieces");
  ProductData pd;
  for (const auto& p : d.pieces) pd.pieces.push_back(piece_points(p, d.orientation_reversed));
  std::vector<int> idx(d.pieces.size(), 0);
  for (;;) {
    std::string name;
    int gr = 0;
    std::string comp = "s";
    for (size_t k = 0; k < idx.size(); ++k) {
      if (k) { name += "|"; comp += "."; }
      name += pd.pieces[k].names[idx[k]];
      gr += pd.pieces[k].gradings[idx[k]];
      comp += std::to_string(pd.pieces[k].classes[idx[k]]);
    }
    pd.tuples.push_back(idx);
    pd.names.push_back(name);
    pd.gradings.push_back(gr);
    pd.components.push_back(comp);
    int k = static_cast<int>(idx.size()) - 1;
    while (k >= 0) {
      if (++idx[k] < static_cast<int>(pd.pieces[k].names.size())) break;
      idx[k] = 0;
      --k;
    }
    if (k < 0) break;
  }
  return pd;
}

// Assembled crossing system over all torus pieces, shared basepoint region as
// the last column.
struct DiagramSystem {
  std::vector<std::string> regions;  // non-z regions, then "Z"
  IntMat rows;
  std::vector<std::pair<size_t, std::string>> crossings;  // (piece index, name), row order
};

DiagramSystem diagram_system(const PointedDiagram& d) {
  DiagramSystem ds;
  std::vector<PieceSystem> systems;
  int total_rows = 0, total_cols = 0;
  for (size_t k = 0; k < d.pieces.size(); ++k) {
    if (!std::holds_alternative<TorusPiece>(d.pieces[k])) continue;
    PieceSystem ps = piece_system(std::get<TorusPiece>(d.pieces[k]));
    total_rows += ps.rows.rows();
    total_cols += ps.rows.cols() - 1;  // the z column is shared
    for (const auto& nm : ps.crossings) ds.crossings.push_back({k, nm});
    for (int j = 0; j < static_cast<int>(ps.regions.size()); ++j)
      if (j != ps.z_region) ds.regions.push_back(std::to_string(k) + ":" + ps.regions[j]);
    systems.push_back(std::move(ps));
  }
  ds.regions.push_back("Z");
  ds.rows = IntMat(total_rows, total_cols + 1);
  int row0 = 0, col0 = 0;
  for (const auto& ps : systems) {
    for (int r = 0; r < ps.rows.rows(); ++r)
      for (int j = 0; j < ps.rows.cols(); ++j) {
        if (ps.rows.at(r, j) == 0) continue;
        int col = (j == ps.z_region) ? total_cols : col0 + (j < ps.z_region ? j : j - 1);
        ds.rows.at(row0 + r, col) += ps.rows.at(r, j);
      }
    row0 += ps.rows.rows();
    col0 += ps.rows.cols() - 1;
  }
  return ds;
}

}  // namespace

// ----- public API -----

int PointedDiagram::genus() const {
  int g = 0;
  for (const auto& p : pieces) g += std::holds_alternative<TorusPiece>(p) ? 1 : 2;
  return g;
}

TorusPiece standard_torus_piece() { return TorusPiece{}; }

PointedDiagram s3_diagram() { return PointedDiagram{{standard_torus_piece()}, false}; }

PointedDiagram lens_diagram(long long p) {
  TorusPiece t;
  t.beta = {1, p};
  t.basepoint_x = Rational(1, 3);
  t.basepoint_y = Rational(1, 5);  // misses { y = 0 } and (t, p t) for every p
  return PointedDiagram{{t}, false};
}

PointedDiagram wiggle_s1s2(int fingers) {
  TorusPiece t;
  t.beta = {1, 0};
  t.beta_offset = Rational(1, 2);
  Wiggle w;
  for (int i = 0; i < 2 * fingers; ++i) w.positions.push_back(Rational(1 + 2 * i, 4 * fingers));
  t.wiggle = w;
  t.basepoint_x = Rational(0);
  t.basepoint_y = Rational(3, 4);  // above the parallel curve, in the annulus
  return PointedDiagram{{t}, false};
}

FixturePiece fixture_by_name(const std::string& name) {
  if (name == "handleswap_alpha") return {"alpha0p", "alpha0"};
  if (name == "handleswap_beta") return {"beta0", "beta0p"};
  if (name == "double_stabilizer") return {"alpha0", "beta0"};
  throw std::invalid_argument("unknown fixture name '" + name + "'");
}

std::vector<DiagramPoint> intersection_points(const PointedDiagram& d) {
  ProductData pd = product_data(d);
  std::vector<DiagramPoint> out;
  for (size_t i = 0; i < pd.names.size(); ++i) {
    DiagramPoint p;
    p.name = pd.names[i];
    for (size_t k = 0; k < pd.pieces.size(); ++k)
      p.coords.push_back(pd.pieces[k].names[pd.tuples[i][k]]);
    out.push_back(std::move(p));
  }
  return out;
}

RegionDecomposition region_decomposition(const TorusPiece& t) {
  RegionDecomposition rd;
  if (!is_wiggle(t)) {
    GeoModel g = build_geo(t);
    int n = static_cast<int>(g.n);
    rd.crossings = g.names;
    for (int i = 0; i < n; ++i) rd.regions.push_back({"F" + std::to_string(i), true});
    rd.basepoint_region = "F" + std::to_string(g.z_face);
    auto F = [](long long i) { return "F" + std::to_string(i); };
    for (int i = 0; i < n; ++i)
      rd.arcs.push_back({"A" + std::to_string(i), 'a', g.names[i], g.names[(i + 1) % n],
                         F(i), F(imod(i - g.m, n))});
    for (int k = 0; k < n; ++k) {
      long long pk = imod(k * g.m, g.n);
      rd.arcs.push_back({"B" + std::to_string(k), 'b', g.names[pk],
                         g.names[imod(pk + g.m, g.n)], F(imod(pk - 1, g.n)), F(pk)});
    }
  } else {
    WigModel w = build_wig(t);
    int m = w.fingers, N = 2 * m;
    rd.crossings = w.names;
    for (int i = 0; i < m; ++i) rd.regions.push_back({"tip" + std::to_string(i), true});
    for (int i = 0; i < m; ++i) rd.regions.push_back({"up" + std::to_string(i), true});
    rd.regions.push_back({"ann", false});
    rd.basepoint_region = rd.regions[w.z_region].name;
    char sc = w.on_alpha ? 'b' : 'a';  // the straight curve's role
    char wc = w.on_alpha ? 'a' : 'b';
    for (int j = 0; j < N; ++j) {
      std::string left = (j % 2 == 0) ? "ann" : "up" + std::to_string(j / 2);
      std::string right = (j % 2 == 0) ? "tip" + std::to_string(j / 2) : "ann";
      rd.arcs.push_back({"S" + std::to_string(j), sc, w.names[j], w.names[(j + 1) % N],
                         left, right});
    }
    for (int i = 0; i < m; ++i) {
      rd.arcs.push_back({"T" + std::to_string(i), wc, w.names[2 * i], w.names[2 * i + 1],
                         "tip" + std::to_string(i), "ann"});
      rd.arcs.push_back({"O" + std::to_string(i), wc, w.names[2 * i + 1],
                         w.names[(2 * i + 2) % N], "ann", "up" + std::to_string(i)});
    }
  }
  return rd;
}

std::vector<Bigon> enumerate_bigons(const TorusPiece& t, bool orientation_reversed,
                                    SignRule rule) {
  return piece_bigons(t, orientation_reversed, rule);
}

GradedComplex torus_complex(const TorusPiece& t, bool orientation_reversed, SignRule rule) {
  return diagram_complex(PointedDiagram{{t}, orientation_reversed}, rule);
}

GradedComplex diagram_complex(const PointedDiagram& d, SignRule rule) {
  ProductData pd = product_data(d);
  std::vector<Generator> gens;
  for (size_t i = 0; i < pd.names.size(); ++i)
    gens.push_back({pd.names[i], pd.gradings[i], pd.components[i]});
  GradedComplex c(gens);

  // d(x_1 (x) ... (x) x_r) = sum_k (-1)^(gr x_1 + .. + gr x_{k-1}) x_1 .. dx_k .. x_r
  for (size_t k = 0; k < d.pieces.size(); ++k) {
    if (!std::holds_alternative<TorusPiece>(d.pieces[k])) continue;  // fixtures: zero
    const auto& piece = std::get<TorusPiece>(d.pieces[k]);
    auto bigons = piece_bigons(piece, d.orientation_reversed, rule);
    if (bigons.empty()) continue;
    auto pidx = [&](const std::string& nm) {
      for (size_t i = 0; i < pd.pieces[k].names.size(); ++i)
        if (pd.pieces[k].names[i] == nm) return static_cast<int>(i);
      throw std::logic_error("diagram_complex: unknown crossing");
    };
    for (size_t gi = 0; gi < pd.tuples.size(); ++gi) {
      int prefix = 0;
      for (size_t j = 0; j < k; ++j) prefix += pd.pieces[j].gradings[pd.tuples[gi][j]];
      int koszul = (prefix % 2 == 0) ? 1 : -1;
      for (const auto& b : bigons) {
        if (pd.tuples[gi][k] != pidx(b.from)) continue;
        std::vector<int> target = pd.tuples[gi];
        target[k] = pidx(b.to);
        size_t ti = 0;
        for (; ti < pd.tuples.size(); ++ti)
          if (pd.tuples[ti] == target) break;
        c.add_entry(static_cast<int>(ti), static_cast<int>(gi), UPoly(koszul * b.sign, 0));
      }
    }
  }
  return c;
}

std::map<std::string, std::string> spinc_partition(const PointedDiagram& d) {
  ProductData pd = product_data(d);
  std::map<std::string, std::string> out;
  for (size_t i = 0; i < pd.names.size(); ++i) out[pd.names[i]] = pd.components[i];
  return out;
}

std::optional<DomainVector> connecting_domain(const PointedDiagram& d, const std::string& x,
                                              const std::string& y) {
  ProductData pd = product_data(d);
  int xi = -1, yi = -1;
  for (size_t i = 0; i < pd.names.size(); ++i) {
    if (pd.names[i] == x) xi = static_cast<int>(i);
    if (pd.names[i] == y) yi = static_cast<int>(i);
  }
  if (xi < 0 || yi < 0) throw std::invalid_argument("connecting_domain: unknown generator name");

  DiagramSystem ds = diagram_system(d);
  std::vector<Coef> rhs(ds.rows.rows(), 0);
  for (int r = 0; r < ds.rows.rows(); ++r) {
    auto [piece, cname] = ds.crossings[r];
    // map the piece index to its tuple coordinate
    const auto& names = pd.pieces[piece].names;
    int local = -1;
    for (size_t i = 0; i < names.size(); ++i)
      if (names[i] == cname) local = static_cast<int>(i);
    if (pd.tuples[yi][piece] == local) rhs[r] += 1;
    if (pd.tuples[xi][piece] == local) rhs[r] -= 1;
  }
  auto sol = solve_integer(ds.rows, rhs);
  if (!sol) return std::nullopt;
  DomainVector dv;
  dv.regions = ds.regions;
  dv.coefficients = *sol;
  dv.n_z = sol->back();
  return dv;
}

DomainLattice periodic_domains(const PointedDiagram& d) {
  DiagramSystem ds = diagram_system(d);
  IntMat m(ds.rows.rows(), ds.rows.cols() - 1);  // n_z = 0: drop the Z column
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = ds.rows.at(r, c);
  DomainLattice lat;
  lat.regions.assign(ds.regions.begin(), ds.regions.end() - 1);
  lat.basis = integer_kernel(m);
  for (const auto& p : d.pieces)
    if (std::holds_alternative<FixturePiece>(p)) lat.declared_fixture_rank += 2;
  return lat;
}

std::optional<std::vector<Coef>> admissibility_counterexample(
    const std::vector<std::vector<Coef>>& basis, const std::vector<Coef>& pairing, int bound) {
  if (basis.empty()) return std::nullopt;
  size_t rank = basis.size();
  if (pairing.size() != rank)
    throw std::invalid_argument("admissibility: pairing functional size mismatch");
  Coef maxentry = 1;
  for (const auto& v : basis)
    for (Coef c : v) maxentry = std::max(maxentry, std::llabs(c));
  long long lambda_bound = bound * maxentry;
  std::vector<long long> lambda(rank, -lambda_bound);
  for (;;) {
    bool zero = true;
    for (long long l : lambda)
      if (l != 0) zero = false;
    if (!zero) {
      std::vector<Coef> v(basis[0].size(), 0);
      Coef pair = 0;
      for (size_t i = 0; i < rank; ++i) {
        pair += lambda[i] * pairing[i];
        for (size_t j = 0; j < v.size(); ++j) v[j] += lambda[i] * basis[i][j];
      }
      Coef mx = 0, sup = 0;
      bool nonzero = false;
      for (Coef c : v) {
        mx = std::max(mx, c);
        sup = std::max(sup, std::llabs(c));
        if (c != 0) nonzero = true;
      }
      if (nonzero && sup <= bound && pair >= 0 && pair % 2 == 0 && !(mx > pair / 2)) return v;
    }
    size_t k = 0;
    while (k < rank && lambda[k] == lambda_bound) lambda[k++] = -lambda_bound;
    if (k == rank) break;
    ++lambda[k];
  }
  return std::nullopt;
}

std::map<std::string, AdmissibilityVerdict> check_admissibility(
    const PointedDiagram& d, int bound, const std::map<std::string, std::vector<Coef>>& pairing) {
  DomainLattice lat = periodic_domains(d);
  bool has_fixture = lat.declared_fixture_rank > 0;
  std::set<std::string> components;
  for (const auto& [name, comp] : spinc_partition(d)) components.insert(comp);

  std::map<std::string, AdmissibilityVerdict> out;
  for (const auto& comp : components) {
    AdmissibilityVerdict v;
    v.fixture_declared = has_fixture;
    std::vector<Coef> p(lat.basis.size(), 0);
    if (auto it = pairing.find(comp); it != pairing.end()) {
      if (it->second.size() != lat.basis.size())
        throw std::invalid_argument("check_admissibility: pairing size mismatch for " + comp);
      p = it->second;
    } else if (!lat.basis.empty() && !pairing.empty()) {
      throw std::invalid_argument("check_admissibility: missing pairing data for " + comp);
    }
    if (auto ce = admissibility_counterexample(lat.basis, p, bound)) {
      v.admissible = false;
      v.counterexample = *ce;
    }
    out[comp] = v;
  }
  return out;
}

Stabilization stabilize_diagram(const PointedDiagram& d, int slot) {
  if (slot < 0) slot = static_cast<int>(d.pieces.size());
  if (slot > static_cast<int>(d.pieces.size()))
    throw std::invalid_argument("stabilize_diagram: slot out of range");
  Stabilization st;
  st.slot = slot;
  st.diagram = d;
  st.diagram.pieces.insert(st.diagram.pieces.begin() + slot, standard_torus_piece());

  std::string cname = point_name(Rational(0), Rational(0));
  for (const auto& p : intersection_points(d)) {
    std::vector<std::string> parts = p.coords;
    parts.insert(parts.begin() + slot, cname);
    std::string nn;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (i) nn += "|";
      nn += parts[i];
    }
    st.generator_bijection[p.name] = nn;
  }
  return st;
}

PointedDiagram conjugate_diagram(const PointedDiagram& d) {
  PointedDiagram out;
  out.orientation_reversed = !d.orientation_reversed;
  for (const auto& p : d.pieces) {
    if (std::holds_alternative<TorusPiece>(p)) {
      TorusPiece t = std::get<TorusPiece>(p);
      std::swap(t.alpha, t.beta);
      std::swap(t.alpha_offset, t.beta_offset);
      if (t.wiggle) t.wiggle->on_alpha = !t.wiggle->on_alpha;
      out.pieces.push_back(t);
    } else {
      FixturePiece f = std::get<FixturePiece>(p);
      std::swap(f.a, f.b);
      out.pieces.push_back(f);
    }
  }
  return out;
}

LinearMap eta_map(const PointedDiagram& d) {
  GradedComplex src = diagram_complex(d);
  GradedComplex dst = diagram_complex(conjugate_diagram(d));
  if (src.size() != dst.size())
    throw std::logic_error("eta_map: generator mismatch between diagram and conjugate");
  LinearMap eta(src, dst, 0);
  for (int i = 0; i < src.size(); ++i) {
    int j = dst.index_of(src.gen(i).name);
    if (j < 0) throw std::logic_error("eta_map: generator " + src.gen(i).name + " missing");
    eta.set_entry(j, i, UPoly::one());
  }
  if (!eta.is_chain_map()) throw std::logic_error("eta_map: identity is not a chain map");
  return eta;
}

std::string diagram_key(const PointedDiagram& d) {
  std::ostringstream os;
  os << (d.orientation_reversed ? "rev;" : "std;");
  for (const auto& p : d.pieces) {
    if (std::holds_alternative<TorusPiece>(p)) {
      const auto& t = std::get<TorusPiece>(p);
      auto norm = [](std::pair<long long, long long> v) {
        if (v.second < 0 || (v.second == 0 && v.first < 0))
          return std::make_pair(-v.first, -v.second);
        return v;
      };
      auto a = norm(t.alpha), b = norm(t.beta);
      os << "T[" << a.first << "," << a.second << "|" << b.first << "," << b.second;
      if (t.wiggle)
        os << "|w" << t.wiggle->positions.size() << (t.wiggle->on_alpha ? "a" : "b");
      os << "]";
    } else {
      const auto& f = std::get<FixturePiece>(p);
      os << "G2[" << f.a << "," << f.b << "]";
    }
  }
  return os.str();
}

}  // namespace floer
