#include "floer/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace floer {

namespace {

[[noreturn]] void schema_error(const std::string& what) {
  throw std::runtime_error("schema error: " + what);
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      schema_error("bad rational '" + s + "'");
    }
  }
  schema_error("rational must be an integer or a 'p/q' string");
}

json rational_to_json(const Rational& r) {
  if (r.denominator() == 1) return json(r.numerator());
  std::ostringstream os;
  os << r.numerator() << "/" << r.denominator();
  return json(os.str());
}

UPoly poly_from_json(const json& j) {
  if (!j.is_array()) schema_error("poly must be an array of [coeff, exp] pairs");
  UPoly p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) schema_error("poly term must be [coeff, exp]");
    p += UPoly(t[0].get<long long>(), t[1].get<int>());
  }
  return p;
}

json poly_to_json(const UPoly& p) {
  json out = json::array();
  for (const auto& [c, e] : p.terms()) out.push_back(json::array({c, e}));
  return out;
}

std::string resolve(const std::string& base_dir, const std::string& ref) {
  std::filesystem::path p(ref);
  if (p.is_absolute() || base_dir.empty()) return ref;
  return (std::filesystem::path(base_dir) / p).string();
}

GradedComplex complex_from_file(const std::string& path) {
  return complex_from_json(load_json_file(path));
}

}  // namespace

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema_error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    schema_error("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

GradedComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators")) schema_error("complex needs 'generators'");
  std::vector<Generator> gens;
  for (const auto& g : j.at("generators")) {
    if (!g.contains("name")) schema_error("generator needs 'name'");
    gens.push_back({g.at("name").get<std::string>(),
                    g.value("grading", 0),
                    g.value("component", std::string("s0"))});
  }
  std::sort(gens.begin(), gens.end(),
            [](const Generator& a, const Generator& b) { return a.name < b.name; });
  GradedComplex c(gens);
  if (j.contains("differential"))
    for (const auto& e : j.at("differential")) {
      int from = c.index_of(e.at("from").get<std::string>());
      int to = c.index_of(e.at("to").get<std::string>());
      if (from < 0 || to < 0) schema_error("differential entry references unknown generators");
      c.set_entry(to, from, poly_from_json(e.at("poly")));
    }
  return pin_gradings(c);
}

json complex_to_json(const GradedComplex& c) {
  json j;
  j["generators"] = json::array();
  for (const auto& g : c.generators())
    j["generators"].push_back({{"name", g.name}, {"grading", g.grading}, {"component", g.component}});
  j["differential"] = json::array();
  for (const auto& [idx, p] : c.entries())
    j["differential"].push_back({{"from", c.gen(idx.second).name},
                                 {"to", c.gen(idx.first).name},
                                 {"poly", poly_to_json(p)}});
  return j;
}

LinearMap chain_map_from_json(const json& j, const std::string& base_dir) {
  if (!j.contains("source") || !j.contains("target")) schema_error("chain map needs 'source' and 'target'");
  GradedComplex src = complex_from_file(resolve(base_dir, j.at("source").get<std::string>()));
  GradedComplex dst = complex_from_file(resolve(base_dir, j.at("target").get<std::string>()));
  LinearMap f(src, dst, j.value("degree", 0));
  if (j.contains("entries"))
    for (const auto& e : j.at("entries")) {
      int from = src.index_of(e.at("from").get<std::string>());
      int to = dst.index_of(e.at("to").get<std::string>());
      if (from < 0 || to < 0) schema_error("chain-map entry references unknown generators");
      try {
        f.set_entry(to, from, poly_from_json(e.at("poly")));
      } catch (const std::invalid_argument& ex) {
        schema_error(ex.what());
      }
    }
  return f;
}

json chain_map_to_json(const LinearMap& f, const std::string& source_ref,
                       const std::string& target_ref) {
  json j;
  j["source"] = source_ref;
  j["target"] = target_ref;
  j["degree"] = f.degree();
  j["entries"] = json::array();
  for (const auto& [idx, p] : f.entries())
    j["entries"].push_back({{"from", f.source().gen(idx.second).name},
                            {"to", f.target().gen(idx.first).name},
                            {"poly", poly_to_json(p)}});
  return j;
}

bool looks_like_diagram(const json& j) { return j.is_object() && j.contains("pieces"); }

PointedDiagram diagram_from_json(const json& j) {
  if (!looks_like_diagram(j)) schema_error("diagram needs 'pieces'");
  PointedDiagram d;
  d.orientation_reversed = j.value("orientation_reversed", false);
  for (const auto& pj : j.at("pieces")) {
    if (pj.contains("fixture")) {
      std::string name = pj.at("fixture").get<std::string>();
      if (pj.contains("pair")) {
        const auto& pr = pj.at("pair");
        if (!pr.is_array() || pr.size() != 2) schema_error("fixture pair must be [a, b]");
        d.pieces.push_back(FixturePiece{pr[0].get<std::string>(), pr[1].get<std::string>()});
      } else {
        d.pieces.push_back(fixture_by_name(name));
      }
      continue;
    }
    TorusPiece t;
    if (pj.contains("alpha")) {
      t.alpha = {pj.at("alpha")[0].get<long long>(), pj.at("alpha")[1].get<long long>()};
    }
    if (pj.contains("beta"))
      t.beta = {pj.at("beta")[0].get<long long>(), pj.at("beta")[1].get<long long>()};
    if (pj.contains("alpha_offset")) t.alpha_offset = rational_from_json(pj.at("alpha_offset"));
    if (pj.contains("beta_offset")) t.beta_offset = rational_from_json(pj.at("beta_offset"));
    if (pj.contains("basepoint")) {
      t.basepoint_x = rational_from_json(pj.at("basepoint")[0]);
      t.basepoint_y = rational_from_json(pj.at("basepoint")[1]);
    }
    if (pj.contains("wiggle")) {
      Wiggle w;
      for (const auto& pos : pj.at("wiggle").at("positions")) w.positions.push_back(rational_from_json(pos));
      w.on_alpha = pj.at("wiggle").value("on_alpha", false);
      t.wiggle = w;
    }
    d.pieces.push_back(t);
  }
  return d;
}

json diagram_to_json(const PointedDiagram& d) {
  json j;
  j["orientation_reversed"] = d.orientation_reversed;
  j["pieces"] = json::array();
  for (const auto& p : d.pieces) {
    if (std::holds_alternative<FixturePiece>(p)) {
      const auto& f = std::get<FixturePiece>(p);
      j["pieces"].push_back({{"fixture", "genus2"}, {"pair", json::array({f.a, f.b})}});
    } else {
      const auto& t = std::get<TorusPiece>(p);
      json pj;
      pj["alpha"] = json::array({t.alpha.first, t.alpha.second});
      pj["alpha_offset"] = rational_to_json(t.alpha_offset);
      pj["beta"] = json::array({t.beta.first, t.beta.second});
      pj["beta_offset"] = rational_to_json(t.beta_offset);
      pj["basepoint"] = json::array({rational_to_json(t.basepoint_x), rational_to_json(t.basepoint_y)});
      if (t.wiggle) {
        json w;
        w["positions"] = json::array();
        for (const auto& pos : t.wiggle->positions) w["positions"].push_back(rational_to_json(pos));
        w["on_alpha"] = t.wiggle->on_alpha;
        pj["wiggle"] = w;
      }
      j["pieces"].push_back(pj);
    }
  }
  return j;
}

MoveGraph move_graph_from_json(const json& j, const std::string& base_dir) {
  if (!j.contains("vertices") || !j.contains("edges")) schema_error("graph needs 'vertices' and 'edges'");
  MoveGraph g;
  for (const auto& vj : j.at("vertices")) {
    std::string name = vj.at("name").get<std::string>();
    json dj = vj.contains("diagram") && vj.at("diagram").is_string()
                  ? load_json_file(resolve(base_dir, vj.at("diagram").get<std::string>()))
                  : vj.at("diagram");
    g.add_vertex(name, diagram_from_json(dj));
  }
  for (const auto& ej : j.at("edges")) {
    int from = g.vertex(ej.at("from").get<std::string>());
    int to = g.vertex(ej.at("to").get<std::string>());
    if (from < 0 || to < 0) schema_error("edge references unknown vertices");
    std::string kind = ej.at("kind").get<std::string>();
    if (kind == "alpha_equiv") {
      g.add_alpha(from, to);
    } else if (kind == "beta_equiv") {
      g.add_beta(from, to);
    } else if (kind == "stab") {
      g.add_stab(from, to, ej.value("slot", static_cast<int>(g.vtx(from).diagram.pieces.size())));
    } else if (kind == "destab") {
      // inverse of a listed stab; added automatically with it
      continue;
    } else if (kind == "diffeo") {
      DiffeoData d;
      d.label = ej.value("label", std::string(""));
      d.isotopic_to_identity = ej.value("isotopic_to_identity", false);
      if (ej.contains("perm")) d.piece_perm = ej.at("perm").get<std::vector<int>>();
      d.fixture_relabel_slot = ej.value("fixture_relabel_slot", -1);
      g.add_diffeo(from, to, d);
    } else {
      schema_error("unknown edge kind '" + kind + "'");
    }
  }
  return g;
}

json move_graph_to_json(const MoveGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (const auto& v : g.vertices())
    j["vertices"].push_back({{"name", v.name}, {"diagram", diagram_to_json(v.diagram)}});
  j["edges"] = json::array();
  for (const auto& e : g.edges()) {
    json ej;
    ej["from"] = g.vtx(e.from).name;
    ej["to"] = g.vtx(e.to).name;
    ej["kind"] = kind_name(e.kind);
    if (e.kind == MoveKind::Destab) continue;  // re-created from the stab entry
    if (e.kind == MoveKind::Stab) ej["slot"] = e.slot;
    if (e.kind == MoveKind::Diffeo) {
      ej["label"] = e.diffeo.label;
      ej["isotopic_to_identity"] = e.diffeo.isotopic_to_identity;
      if (!e.diffeo.piece_perm.empty()) ej["perm"] = e.diffeo.piece_perm;
      if (e.diffeo.fixture_relabel_slot >= 0)
        ej["fixture_relabel_slot"] = e.diffeo.fixture_relabel_slot;
    }
    j["edges"].push_back(ej);
  }
  return j;
}

GraphFunctor functor_from_json(const json& j, const std::string& base_dir) {
  if (!j.contains("graph")) schema_error("functor needs 'graph'");
  GraphFunctor F;
  json gj = j.at("graph").is_string()
                ? load_json_file(resolve(base_dir, j.at("graph").get<std::string>()))
                : j.at("graph");
  F.graph = move_graph_from_json(gj, base_dir);
  F.mode = mode_from_name(j.value("mode", std::string("sign")));

  for (const auto& v : F.graph.vertices()) {
    if (j.contains("objects") && j.at("objects").contains(v.name)) {
      F.objects.push_back(
          complex_from_file(resolve(base_dir, j.at("objects").at(v.name).get<std::string>())));
    } else {
      F.objects.push_back(diagram_complex(v.diagram));
    }
  }

  auto find_binding = [&](const MoveEdge& e) -> const json* {
    if (!j.contains("maps")) return nullptr;
    for (const auto& mj : j.at("maps")) {
      if (mj.at("from").get<std::string>() != F.graph.vtx(e.from).name) continue;
      if (mj.at("to").get<std::string>() != F.graph.vtx(e.to).name) continue;
      if (mj.contains("kind") && mj.at("kind").get<std::string>() != kind_name(e.kind)) continue;
      if (mj.contains("slot") && mj.at("slot").get<int>() != e.slot) continue;
      if (mj.contains("label") &&
          (e.kind != MoveKind::Diffeo || mj.at("label").get<std::string>() != e.diffeo.label))
        continue;
      return &mj;
    }
    return nullptr;
  };

  for (size_t i = 0; i < F.graph.edges().size(); ++i) {
    const MoveEdge& e = F.graph.edges()[i];
    const json* binding = find_binding(e);
    if (binding) {
      json mj = binding->at("map").is_string()
                    ? load_json_file(resolve(base_dir, binding->at("map").get<std::string>()))
                    : binding->at("map");
      LinearMap f = chain_map_from_json(mj, base_dir);
      if (!(f.source() == F.objects[e.from]) || !(f.target() == F.objects[e.to]))
        schema_error("bound chain map does not match the assigned objects on edge " +
                     F.graph.edge_name(static_cast<int>(i)));
      F.morphisms.push_back(SignClass(f));
    } else {
      // default: sign +1 on matching generator names
      LinearMap f(F.objects[e.from], F.objects[e.to], 0);
      if (F.objects[e.from].size() == 1 && F.objects[e.to].size() == 1) {
        f.set_entry(0, 0, UPoly::one());
      } else {
        for (int s = 0; s < F.objects[e.from].size(); ++s) {
          int t = F.objects[e.to].index_of(F.objects[e.from].gen(s).name);
          if (t >= 0) f.set_entry(t, s, UPoly::one());
        }
      }
      F.morphisms.push_back(SignClass(f));
    }
  }
  return F;
}

TransSystem system_from_json(const json& j, const std::string& base_dir) {
  if (!j.contains("index")) schema_error("system needs 'index'");
  TransSystem s;
  s.mode = mode_from_name(j.value("mode", std::string("strict")));
  for (const auto& e : j.at("index").at("elements")) s.index.elements.push_back(e.get<std::string>());
  for (const auto& p : j.at("index").at("pairs")) {
    if (!p.is_array() || p.size() != 2) schema_error("index pair must be [i, j]");
    s.index.relation.insert({p[0].get<std::string>(), p[1].get<std::string>()});
  }
  if (!j.contains("objects")) schema_error("system needs 'objects'");
  for (const auto& [name, oj] : j.at("objects").items()) {
    if (oj.is_string())
      s.objects[name] = complex_from_file(resolve(base_dir, oj.get<std::string>()));
    else if (oj.contains("rank"))
      s.objects[name] = ModulePresentation{oj.at("rank").get<int>()};
    else
      s.objects[name] = complex_from_json(oj);
  }
  if (j.contains("maps"))
    for (const auto& mj : j.at("maps")) {
      std::string from = mj.at("from").get<std::string>();
      std::string to = mj.at("to").get<std::string>();
      const json& body = mj.at("map");
      if (body.is_string()) {
        s.maps[{from, to}] = chain_map_from_json(load_json_file(resolve(base_dir, body.get<std::string>())), base_dir);
      } else if (body.contains("matrix")) {
        const auto& rows = body.at("matrix");
        int r = static_cast<int>(rows.size());
        int c = r ? static_cast<int>(rows[0].size()) : 0;
        IntMat m(r, c);
        for (int i = 0; i < r; ++i)
          for (int k = 0; k < c; ++k) m.at(i, k) = rows[i][k].get<long long>();
        s.maps[{from, to}] = m;
      } else {
        LinearMap f = chain_map_from_json(body, base_dir);
        s.maps[{from, to}] = f;
      }
    }
  return s;
}

InvolutiveJob involutive_job_from_json(const json& j, const std::string& base_dir) {
  if (!j.contains("diagram") || !j.contains("psi")) schema_error("involutive job needs 'diagram' and 'psi'");
  InvolutiveJob job;
  json dj = j.at("diagram").is_string()
                ? load_json_file(resolve(base_dir, j.at("diagram").get<std::string>()))
                : j.at("diagram");
  job.diagram = diagram_from_json(dj);
  json pj = j.at("psi").is_string()
                ? load_json_file(resolve(base_dir, j.at("psi").get<std::string>()))
                : j.at("psi");
  // psi's endpoints are determined by the diagram; accept entry lists without
  // source/target references as well
  if (pj.contains("source")) {
    job.psi = chain_map_from_json(pj, base_dir);
  } else {
    GradedComplex src = diagram_complex(conjugate_diagram(job.diagram));
    GradedComplex dst = diagram_complex(job.diagram);
    LinearMap f(src, dst, pj.value("degree", 0));
    for (const auto& e : pj.at("entries")) {
      int from = src.index_of(e.at("from").get<std::string>());
      int to = dst.index_of(e.at("to").get<std::string>());
      if (from < 0 || to < 0) schema_error("psi entry references unknown generators");
      try {
        f.set_entry(to, from, poly_from_json(e.at("poly")));
      } catch (const std::invalid_argument& ex) {
        schema_error(ex.what());
      }
    }
    job.psi = f;
  }
  job.truncation = j.value("truncation", 3);
  return job;
}

}  // namespace floer
