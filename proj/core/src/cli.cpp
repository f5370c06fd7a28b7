#include "floer/cli.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "floer/corpus.hpp"
#include "floer/homology.hpp"
#include "floer/involutive.hpp"
#include "floer/json_io.hpp"

namespace floer {

namespace {

std::string base_dir_of(const std::string& path) {
  return std::filesystem::path(path).parent_path().string();
}

std::string violation_line(const GradedComplex& c, const Violation& v) {
  std::string kind = v.kind == Violation::Kind::Grading     ? "grading"
                     : v.kind == Violation::Kind::Component ? "component"
                                                            : "d^2";
  (void)c;
  return kind + ": " + v.from + " -> " + v.to + ": " + v.detail;
}

std::string group_str(const GradedGroup& g) {
  std::ostringstream os;
  bool any = false;
  if (g.free_rank > 0) {
    os << "Z";
    if (g.free_rank > 1) os << "^" << g.free_rank;
    any = true;
  }
  for (Coef t : g.torsion) {
    if (any) os << " + ";
    os << "Z/" << t;
    any = true;
  }
  if (!any) os << "0";
  return os.str();
}

void describe_hat(std::ostringstream& os, nlohmann::json& sj, const HatHomology& h) {
  int total = 0;
  std::vector<Coef> torsion;
  for (const auto& [k, g] : h.groups) {
    if (g.trivial()) continue;
    os << "  " << k.first << " gr " << k.second << ": " << group_str(g) << "\n";
    sj["groups"].push_back({{"component", k.first},
                            {"grading", k.second},
                            {"free_rank", g.free_rank},
                            {"torsion", g.torsion}});
    total += g.free_rank;
    torsion.insert(torsion.end(), g.torsion.begin(), g.torsion.end());
  }
  std::sort(torsion.begin(), torsion.end());
  os << "free rank " << total << ", torsion ";
  if (torsion.empty()) {
    os << "none";
  } else {
    for (size_t i = 0; i < torsion.size(); ++i) os << (i ? ", " : "") << "Z/" << torsion[i];
  }
  os << "\n";
  sj["free_rank"] = total;
  sj["torsion"] = torsion;
}

struct Commands {
  CliResult out;
  std::ostringstream text;
  nlohmann::json sj;

  void fail(int code) { out.exit_code = std::max(out.exit_code, code); }

  int cmd_validate(const std::string& input, int bound);
  int cmd_homology(const std::string& input);
  int cmd_cone(const std::string& input);
  int cmd_involutive(const std::string& input, int truncation);
  int cmd_graph_rectangles(const std::string& input);
  int cmd_graph_handleswap(const std::string& input);
  int cmd_invariant_check(const std::string& input, const std::string& mode);
  int cmd_paths(const std::string& input, const std::string& from, const std::string& to,
                int max_len, bool enumerate);
  int cmd_system_validate(const std::string& input);
};

int Commands::cmd_validate(const std::string& input, int bound) {
  json j = load_json_file(input);
  if (looks_like_diagram(j)) {
    PointedDiagram d = diagram_from_json(j);
    GradedComplex c = diagram_complex(d);
    auto rep = validate_complex(c);
    text << "validate diagram: " << intersection_points(d).size() << " generators, genus "
         << d.genus() << "\n";
    sj["generators"] = c.size();
    sj["violations"] = json::array();
    for (const auto& v : rep.violations) {
      text << "  " << violation_line(c, v) << "\n";
      sj["violations"].push_back(violation_line(c, v));
    }
    auto lat = periodic_domains(d);
    text << "periodic-domain lattice rank: " << lat.basis.size() << "\n";
    sj["periodic_rank"] = lat.basis.size();
    bool bad = !rep.ok();
    auto adm = check_admissibility(d, bound);
    for (const auto& [comp, v] : adm) {
      text << "component " << comp << ": "
           << (v.admissible ? "admissible" : "admissibility counterexample") << "\n";
      sj["admissibility"][comp] = v.admissible;
      if (!v.admissible) bad = true;
    }
    text << (bad ? "INVALID\n" : "valid\n");
    return bad ? 1 : 0;
  }
  GradedComplex c = complex_from_json(j);
  auto rep = validate_complex(c);
  text << "validate complex: " << c.size() << " generators\n";
  sj["generators"] = c.size();
  sj["violations"] = json::array();
  for (const auto& v : rep.violations) {
    text << "  " << violation_line(c, v) << "\n";
    sj["violations"].push_back(violation_line(c, v));
  }
  text << (rep.ok() ? "valid\n" : "INVALID\n");
  return rep.ok() ? 0 : 1;
}

int Commands::cmd_homology(const std::string& input) {
  json j = load_json_file(input);
  GradedComplex c = looks_like_diagram(j) ? diagram_complex(diagram_from_json(j))
                                          : complex_from_json(j);
  auto rep = validate_complex(c);
  if (!rep.ok()) {
    text << "input complex is invalid; refusing to compute homology\n";
    return 1;
  }
  HomologyPresentation pres = present_homology(c);
  text << "hat homology:\n";
  describe_hat(text, sj["hat"], pres.hat);
  text << "minus-flavor presentation:\n";
  for (const auto& t : pres.minus.towers) {
    if (t.exponent == 0)
      text << "  " << t.component << " gr " << t.grading << ": Z[U]\n";
    else
      text << "  " << t.component << " gr " << t.grading << ": Z[U]/U^" << t.exponent << "\n";
    sj["minus"]["towers"].push_back(
        {{"component", t.component}, {"grading", t.grading}, {"exponent", t.exponent}});
  }
  if (pres.minus.stalled()) {
    text << "  residual presentation (reduction stalled):\n";
    for (const auto& r : pres.minus.residual) {
      text << "    " << r.from << " -> " << r.to << ": " << r.value.str() << "\n";
      sj["minus"]["residual"].push_back({{"from", r.from}, {"to", r.to}, {"value", r.value.str()}});
    }
  }
  return 0;
}

int Commands::cmd_cone(const std::string& input) {
  LinearMap f = chain_map_from_json(load_json_file(input), base_dir_of(input));
  GradedComplex cone = mapping_cone(f);
  auto rep = validate_complex(cone);
  text << "cone: " << cone.size() << " generators (" << f.source().size() << " shifted + "
       << f.target().size() << ")\n";
  sj["generators"] = cone.size();
  for (const auto& v : rep.violations) text << "  " << violation_line(cone, v) << "\n";
  text << "hat homology of the cone:\n";
  describe_hat(text, sj["hat"], homology_hat(specialize_hat(cone)));
  return rep.ok() ? 0 : 1;
}

int Commands::cmd_involutive(const std::string& input, int truncation) {
  InvolutiveJob job = involutive_job_from_json(load_json_file(input), base_dir_of(input));
  if (truncation > 0) job.truncation = truncation;
  IotaData data = build_iota(job.diagram, job.psi);
  auto order = iota_order(data.iota);
  text << "iota minimal projective order: "
       << (order.minimal_order ? std::to_string(order.minimal_order) : std::string("none <= 4"))
       << "\n";
  text << "iota^4 projectively homotopic to the identity: " << (order.order_at_most_4 ? "yes" : "no")
       << "\n";
  sj["minimal_order"] = order.minimal_order;
  sj["order_at_most_4"] = order.order_at_most_4;

  ConePair pair = build_cfi_pair(data);
  text << "Cone(1 + iota): " << pair.plus.size() << " generators; hat homology:\n";
  describe_hat(text, sj["plus"]["hat"], homology_hat(specialize_hat(pair.plus)));
  text << "Cone(1 - iota): " << pair.minus.size() << " generators; hat homology:\n";
  describe_hat(text, sj["minus"]["hat"], homology_hat(specialize_hat(pair.minus)));

  auto inv = cone_pair_invariant(pair, job.truncation);
  text << "truncated invariants computed at U-truncation " << job.truncation << "\n";
  text << "self-comparison (unordered pair): "
       << (compare_cone_pairs(pair, pair, job.truncation) ? "equal" : "UNEQUAL") << "\n";
  sj["truncation"] = job.truncation;
  (void)inv;
  return order.order_at_most_4 ? 0 : 1;
}

int Commands::cmd_graph_rectangles(const std::string& input) {
  MoveGraph g = move_graph_from_json(load_json_file(input), base_dir_of(input));
  auto problems = g.validate();
  for (const auto& p : problems) text << "graph problem: " << p << "\n";
  auto rects = enumerate_rectangles(g);
  std::map<int, int> counts;
  for (const auto& [r, rc] : rects) {
    ++counts[rc.type];
    text << "type " << rc.type << ": e=" << g.edge_name(r.e) << " f=" << g.edge_name(r.f)
         << " g=" << g.edge_name(r.g) << " h=" << g.edge_name(r.h) << "\n";
    sj["rectangles"].push_back({{"type", rc.type},
                                {"e", g.edge_name(r.e)},
                                {"f", g.edge_name(r.f)},
                                {"g", g.edge_name(r.g)},
                                {"h", g.edge_name(r.h)},
                                {"evidence", rc.evidence}});
  }
  text << "rectangles: " << rects.size();
  for (int t = 1; t <= 5; ++t) text << " type" << t << "=" << counts[t];
  text << "\n";
  sj["total"] = rects.size();
  return problems.empty() ? 0 : 1;
}

int Commands::cmd_graph_handleswap(const std::string& input) {
  MoveGraph g = move_graph_from_json(load_json_file(input), base_dir_of(input));
  auto triangles = enumerate_handleswaps(g);
  for (const auto& t : triangles) {
    auto check = verify_handleswap(g, t[0], t[1], t[2]);
    text << "handleswap: e=" << g.edge_name(t[0]) << " f=" << g.edge_name(t[1])
         << " g=" << g.edge_name(t[2]) << " (" << check.evidence << ")\n";
    sj["handleswaps"].push_back({{"e", g.edge_name(t[0])},
                                 {"f", g.edge_name(t[1])},
                                 {"g", g.edge_name(t[2])},
                                 {"evidence", check.evidence}});
  }
  text << "verified handleswap triangles: " << triangles.size() << "\n";
  sj["total"] = triangles.size();
  return 0;
}

int Commands::cmd_invariant_check(const std::string& input, const std::string& mode) {
  GraphFunctor F;
  if (input == "builtin:projective") {
    F = corpus_functor_projective();
  } else if (input == "builtin:strict") {
    F = corpus_functor_strict();
  } else {
    F = functor_from_json(load_json_file(input), base_dir_of(input));
  }
  if (!mode.empty()) F.mode = mode_from_name(mode);
  text << "mode: " << mode_name(F.mode) << "\n";
  auto rep = check_strong(F);
  auto section = [&](const std::string& name, const std::vector<std::string>& fails) {
    text << name << ": " << (fails.empty() ? "PASS" : "FAIL") << "\n";
    for (const auto& f : fails) text << "  " << f << "\n";
    sj[name] = fails;
  };
  section("weak", rep.weak.failures);
  for (const auto& s : rep.weak.structural) text << "  structural: " << s << "\n";
  section("axiom1-functoriality", rep.functoriality);
  section("axiom2-commutativity", rep.commutativity);
  section("axiom3-continuity", rep.continuity);
  section("axiom4-handleswap", rep.handleswap);
  text << (rep.ok() ? "strong Heegaard invariant axioms: PASS\n"
                    : "strong Heegaard invariant axioms: FAIL\n");
  sj["ok"] = rep.ok();
  return rep.ok() && rep.weak.structural.empty() ? 0 : 1;
}

int Commands::cmd_paths(const std::string& input, const std::string& from, const std::string& to,
                        int max_len, bool enumerate) {
  MoveGraph g = move_graph_from_json(load_json_file(input), base_dir_of(input));
  int a = g.vertex(from), b = g.vertex(to);
  if (a < 0 || b < 0) throw std::runtime_error("schema error: unknown vertex name");
  if (enumerate) {
    auto paths = enumerate_paths(g, a, b, max_len);
    for (const auto& p : paths) {
      std::string line;
      for (int e : p) line += (line.empty() ? "" : " ; ") + g.edge_name(e);
      if (p.empty()) line = "(empty)";
      text << line << "\n";
      sj["paths"].push_back(line);
    }
    text << "paths: " << paths.size() << " (max length " << max_len << ")\n";
    sj["total"] = paths.size();
    return paths.empty() ? 1 : 0;
  }
  auto p = find_oriented_path(g, a, b, max_len);
  if (!p) {
    text << "no oriented path within length " << max_len << "\n";
    sj["found"] = false;
    return 1;
  }
  std::string line;
  for (int e : *p) line += (line.empty() ? "" : " ; ") + g.edge_name(e);
  if (p->empty()) line = "(empty)";
  text << "path: " << line << "\n";
  sj["found"] = true;
  sj["path"] = line;
  return 0;
}

int Commands::cmd_system_validate(const std::string& input) {
  TransSystem s = system_from_json(load_json_file(input), base_dir_of(input));
  auto rep = validate_system(s);
  text << "mode: " << mode_name(s.mode) << "\n";
  for (const auto& p : rep.structural) {
    text << "structural: " << p << "\n";
    sj["structural"].push_back(p);
  }
  for (const auto& ce : rep.counterexamples) {
    text << "counterexample: (" << ce[0] << ", " << ce[1] << ", " << ce[2] << ")\n";
    sj["counterexamples"].push_back({ce[0], ce[1], ce[2]});
  }
  text << (rep.ok() ? "transitive system axioms: PASS\n" : "transitive system axioms: FAIL\n");
  sj["ok"] = rep.ok();
  return rep.ok() ? 0 : 1;
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact-arithmetic workbench for pointed-diagram chain complexes"};
  app.require_subcommand(1);

  std::string input, out_path, mode, from, to;
  int max_len = 6, bound = 3, truncation = 0;
  bool enumerate = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("input", input, "input file")->required();
    cmd->add_option("--out", out_path, "write the text report here (sidecar at PATH.json)");
  };
  auto* v = app.add_subcommand("validate", "validate a complex or diagram file");
  add_common(v);
  v->add_option("--bound", bound, "admissibility coefficient bound for diagrams");
  auto* h = app.add_subcommand("homology", "hat and minus-flavor homology");
  add_common(h);
  auto* cn = app.add_subcommand("cone", "mapping cone of a chain-map file");
  add_common(cn);
  auto* inv = app.add_subcommand("involutive", "iota order and the CFI cone pair");
  add_common(inv);
  inv->add_option("--truncation", truncation, "U-truncation for the invariants");
  auto* gr = app.add_subcommand("graph-rectangles", "classify distinguished rectangles");
  add_common(gr);
  auto* gh = app.add_subcommand("graph-handleswap", "verify simple handleswap triangles");
  add_common(gh);
  auto* ic = app.add_subcommand("invariant-check", "weak and strong Heegaard-invariant axioms");
  add_common(ic);
  ic->add_option("--mode", mode, "strict | sign | sign-homotopy");
  auto* pa = app.add_subcommand("paths", "oriented path search");
  add_common(pa);
  pa->add_option("--from", from, "start vertex")->required();
  pa->add_option("--to", to, "end vertex")->required();
  pa->add_option("--max-len", max_len, "maximum path length");
  pa->add_flag("--enumerate", enumerate, "list all simple paths");
  auto* sv = app.add_subcommand("system-validate", "transitive-system axioms");
  add_common(sv);

  Commands c;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    os << "usage error: " << e.what() << "\n";
    return {2, os.str(), {}};
  }

  try {
    int code = 0;
    if (v->parsed()) code = c.cmd_validate(input, bound);
    else if (h->parsed()) code = c.cmd_homology(input);
    else if (cn->parsed()) code = c.cmd_cone(input);
    else if (inv->parsed()) code = c.cmd_involutive(input, truncation);
    else if (gr->parsed()) code = c.cmd_graph_rectangles(input);
    else if (gh->parsed()) code = c.cmd_graph_handleswap(input);
    else if (ic->parsed()) code = c.cmd_invariant_check(input, mode);
    else if (pa->parsed()) code = c.cmd_paths(input, from, to, max_len, enumerate);
    else if (sv->parsed()) code = c.cmd_system_validate(input);
    c.out.exit_code = code;
  } catch (const std::exception& e) {
    c.text << "error: " << e.what() << "\n";
    c.out.exit_code = 2;
  }
  c.out.text = c.text.str();
  c.out.sidecar = c.sj;
  if (!out_path.empty() && c.out.exit_code != 2) {
    std::ofstream f(out_path);
    f << c.out.text;
    std::ofstream fj(out_path + ".json");
    fj << c.out.sidecar.dump(2) << "\n";
  }
  return c.out;
}

}  // namespace floer
