#include <set>
#include <stdexcept>

#include "doctest.h"
#include "floer/diagrams.hpp"
#include "floer/homology.hpp"
#include "floer/snf.hpp"
#include "helpers.hpp"

using namespace floer;

TEST_CASE("intersection points: lattice counts") {
  CHECK(intersection_points(s3_diagram()).size() == 1);          // |det| = 1
  CHECK(intersection_points(lens_diagram(3)).size() == 3);       // |det| = 3
  CHECK(intersection_points(wiggle_s1s2()).size() == 2);         // minimal wiggle
  for (int p = 1; p <= 7; ++p) CHECK(intersection_points(lens_diagram(p)).size() == static_cast<size_t>(p));
  // independent lattice-count oracle: primitive vectors (p,q),(r,s) meet in
  // |ps - qr| points
  auto count = [](long long p, long long q, long long r, long long s) {
    TorusPiece t;
    t.alpha = {p, q};
    t.beta = {r, s};
    t.basepoint_x = Rational(1, 97);
    t.basepoint_y = Rational(1, 89);
    return intersection_points(PointedDiagram{{t}, false}).size();
  };
  CHECK(count(1, 2, 1, 3) == 1);
  CHECK(count(2, 1, 1, 2) == 3);
  CHECK(count(1, -1, 2, 3) == 5);
  CHECK(count(3, 2, -2, 1) == 7);
}

TEST_CASE("non-transverse configuration rejected") {
  TorusPiece t;
  t.beta = {1, 0};
  t.beta_offset = Rational(1, 2);
  CHECK_THROWS_AS(intersection_points(PointedDiagram{{t}, false}), std::invalid_argument);
  t.alpha = {2, 0};  // not primitive
  CHECK_THROWS_AS(intersection_points(PointedDiagram{{t}, false}), std::invalid_argument);
}

TEST_CASE("region decomposition: frozen counts and Euler check") {
  auto rd1 = region_decomposition(standard_torus_piece());
  CHECK(rd1.regions.size() == 1);
  CHECK(rd1.regions[0].is_disk);
  CHECK(rd1.basepoint_region == "F0");

  auto l3 = std::get<TorusPiece>(lens_diagram(3).pieces[0]);
  auto rd3 = region_decomposition(l3);
  CHECK(rd3.regions.size() == 3);
  for (const auto& r : rd3.regions) CHECK(r.is_disk);

  auto w = std::get<TorusPiece>(wiggle_s1s2().pieces[0]);
  auto rdw = region_decomposition(w);
  REQUIRE(rdw.regions.size() == 3);  // two bigon disks + annulus with z
  int disks = 0;
  for (const auto& r : rdw.regions) disks += r.is_disk;
  CHECK(disks == 2);
  CHECK(rdw.basepoint_region == "ann");

  // Euler characteristic: V - E + sum chi(face) = 0 on the torus
  for (const auto& rd : {rd1, rd3, rdw}) {
    int chi_faces = 0;
    for (const auto& r : rd.regions) chi_faces += r.is_disk ? 1 : 0;
    CHECK(static_cast<int>(rd.crossings.size()) - static_cast<int>(rd.arcs.size()) + chi_faces == 0);
  }
  // arc incidence sanity
  for (const auto& rd : {rd1, rd3, rdw}) {
    std::set<std::string> xs(rd.crossings.begin(), rd.crossings.end());
    std::set<std::string> rs;
    for (const auto& r : rd.regions) rs.insert(r.name);
    for (const auto& a : rd.arcs) {
      CHECK(xs.count(a.tail));
      CHECK(xs.count(a.head));
      CHECK(rs.count(a.left));
      CHECK(rs.count(a.right));
    }
  }
}

TEST_CASE("spinc partition: frozen class counts") {
  auto part_count = [](const PointedDiagram& d) {
    std::set<std::string> cls;
    for (const auto& [n, c] : spinc_partition(d)) cls.insert(c);
    return cls.size();
  };
  CHECK(part_count(s3_diagram()) == 1);
  for (int p = 1; p <= 7; ++p) CHECK(part_count(lens_diagram(p)) == static_cast<size_t>(p));
  CHECK(part_count(wiggle_s1s2()) == 1);       // the bigon connects the two generators
  CHECK(part_count(wiggle_s1s2(2)) == 1);
}

TEST_CASE("connecting domains exist exactly within classes") {
  for (const auto& d : {lens_diagram(3), lens_diagram(5), wiggle_s1s2(), wiggle_s1s2(2)}) {
    auto part = spinc_partition(d);
    auto pts = intersection_points(d);
    for (const auto& x : pts)
      for (const auto& y : pts) {
        bool same = part.at(x.name) == part.at(y.name);
        CHECK(connecting_domain(d, x.name, y.name).has_value() == same);
      }
  }
}

TEST_CASE("periodic domains: frozen lattices") {
  CHECK(periodic_domains(s3_diagram()).basis.empty());
  for (int p = 2; p <= 7; ++p) CHECK(periodic_domains(lens_diagram(p)).basis.empty());

  auto lat = periodic_domains(wiggle_s1s2());
  REQUIRE(lat.basis.size() == 1);
  REQUIRE(lat.regions == std::vector<std::string>{"0:tip0", "0:up0"});
  // generator is the (tip) - (upper) vector up to sign: coefficients {+1,-1}
  std::multiset<Coef> coeffs(lat.basis[0].begin(), lat.basis[0].end());
  CHECK(coeffs == std::multiset<Coef>{-1, 1});

  // connect sum of two S^3 diagrams: still trivial
  PointedDiagram two{{standard_torus_piece(), standard_torus_piece()}, false};
  CHECK(periodic_domains(two).basis.empty());
  PointedDiagram ll{{std::get<TorusPiece>(lens_diagram(3).pieces[0]),
                     std::get<TorusPiece>(lens_diagram(5).pieces[0])},
                    false};
  CHECK(periodic_domains(ll).basis.empty());
}

TEST_CASE("admissibility") {
  for (const auto& d : {s3_diagram(), lens_diagram(5)}) {
    for (const auto& [comp, v] : check_admissibility(d, 3)) CHECK(v.admissible);
  }
  for (const auto& [comp, v] : check_admissibility(wiggle_s1s2(), 3)) CHECK(v.admissible);
  // synthetic lattice {1, 0} with pairing 0: the sign-flipped vector violates
  auto ce = admissibility_counterexample({{1, 0}}, {0}, 2);
  REQUIRE(ce.has_value());
  CHECK((*ce)[0] < 0);
  CHECK_FALSE(admissibility_counterexample({{1, -1}}, {0}, 3).has_value());
}

TEST_CASE("bigon differential: catalog") {
  GradedComplex s3 = diagram_complex(s3_diagram());
  CHECK(s3.size() == 1);
  CHECK(s3.entries().empty());
  CHECK(homology_hat(specialize_hat(s3)).total_free_rank() == 1);

  for (int p = 1; p <= 7; ++p) {
    GradedComplex c = diagram_complex(lens_diagram(p));
    CHECK(c.size() == p);
    CHECK(c.entries().empty());  // geodesics are in minimal position
    CHECK(homology_hat(specialize_hat(c)).total_free_rank() == p);
  }

  auto piece = std::get<TorusPiece>(wiggle_s1s2().pieces[0]);
  auto bigons = enumerate_bigons(piece, false);
  REQUIRE(bigons.size() == 2);
  CHECK(bigons[0].from == bigons[1].from);
  CHECK(bigons[0].to == bigons[1].to);
  CHECK(bigons[0].sign + bigons[1].sign == 0);
  GradedComplex w = diagram_complex(wiggle_s1s2());
  CHECK(w.size() == 2);
  CHECK(w.entries().empty());  // signed counts cancel over Z
  CHECK(homology_hat(specialize_hat(w)).total_free_rank() == 2);
}

TEST_CASE("d^2 = 0 and rank 2 for randomized wiggle configurations") {
  auto rng = testing::make_rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    int m = testing::pick(rng, 1, 4);
    std::set<long long> nums;
    while (static_cast<int>(nums.size()) < 2 * m) nums.insert(testing::pick(rng, 0, 999));
    TorusPiece t;
    t.beta = {1, 0};
    t.beta_offset = Rational(1, 2);
    Wiggle wg;
    for (long long v : nums) wg.positions.push_back(Rational(v, 1000));
    wg.on_alpha = testing::pick(rng, 0, 1) == 1;
    t.wiggle = wg;
    t.basepoint_y = Rational(3, 4);
    t.basepoint_x = Rational(2 * testing::pick(rng, 0, 999) + 1, 2000);
    PointedDiagram d{{t}, testing::pick(rng, 0, 1) == 1};
    GradedComplex c = diagram_complex(d);
    CHECK(validate_complex(c).ok());
    auto rd = region_decomposition(t);
    if (rd.basepoint_region == "ann")
      CHECK(homology_hat(specialize_hat(c)).total_free_rank() == 2);
  }
}

TEST_CASE("fixture pieces: the paper's tables") {
  PointedDiagram hsa{{fixture_by_name("handleswap_alpha")}, false};
  GradedComplex c = diagram_complex(hsa);
  REQUIRE(c.size() == 4);
  CHECK(c.index_of("theta1+theta2+") >= 0);
  CHECK(c.index_of("theta1-theta2-") >= 0);
  CHECK(c.entries().empty());
  CHECK(homology_hat(specialize_hat(c)).total_free_rank() == 4);

  PointedDiagram ds{{fixture_by_name("double_stabilizer")}, false};
  CHECK(diagram_complex(ds).size() == 1);
  CHECK(intersection_points(ds)[0].name == "a");

  FixturePiece b{"alpha0p", "beta0"};
  CHECK(intersection_points(PointedDiagram{{b}, false})[0].name == "b");
  FixturePiece cpair{"alpha0p", "beta0p"};
  CHECK(intersection_points(PointedDiagram{{cpair}, false})[0].name == "c");
  CHECK_THROWS_AS(intersection_points(PointedDiagram{{FixturePiece{"alpha0", "beta0p"}}, false}),
                  std::invalid_argument);
}

TEST_CASE("connect sums: product structure") {
  PointedDiagram d{{fixture_by_name("handleswap_alpha"),
                    std::get<TorusPiece>(lens_diagram(3).pieces[0])},
                   false};
  CHECK(intersection_points(d).size() == 12);
  GradedComplex c = diagram_complex(d);
  CHECK(validate_complex(c).ok());
  std::set<std::string> comps;
  for (const auto& g : c.generators()) comps.insert(g.component);
  CHECK(comps.size() == 3);  // one fixture class x three lens classes

  auto w = std::get<TorusPiece>(wiggle_s1s2().pieces[0]);
  PointedDiagram ww{{w, w}, false};
  GradedComplex cw = diagram_complex(ww);
  CHECK(cw.size() == 4);
  CHECK(validate_complex(cw).ok());
}

TEST_CASE("stabilization: bijection and homology transport") {
  for (const auto& d : {s3_diagram(), lens_diagram(3), wiggle_s1s2()}) {
    auto st = stabilize_diagram(d);
    CHECK(st.diagram.genus() == d.genus() + 1);
    auto before = intersection_points(d);
    auto after = intersection_points(st.diagram);
    CHECK(before.size() == after.size());
    CHECK(st.generator_bijection.size() == before.size());
    GradedComplex cb = diagram_complex(d);
    GradedComplex ca = diagram_complex(st.diagram);
    // stabilization relabels components; compare label-insensitive profiles
    CHECK(testing::component_profiles(homology_hat(specialize_hat(cb))) ==
          testing::component_profiles(homology_hat(specialize_hat(ca))));
    for (const auto& [idx, p] : cb.entries()) {
      int ti = ca.require_index(st.generator_bijection.at(cb.gen(idx.first).name));
      int si = ca.require_index(st.generator_bijection.at(cb.gen(idx.second).name));
      CHECK(ca.entry(ti, si) == p);
    }
  }
}

TEST_CASE("disjoint stabilizations commute on generators") {
  PointedDiagram d = lens_diagram(3);
  auto ab = stabilize_diagram(stabilize_diagram(d, 0).diagram, 2);
  auto ba = stabilize_diagram(stabilize_diagram(d, 1).diagram, 0);
  CHECK(diagram_key(ab.diagram) == diagram_key(ba.diagram));
  auto pa = intersection_points(ab.diagram);
  auto pb = intersection_points(ba.diagram);
  REQUIRE(pa.size() == pb.size());
  for (size_t i = 0; i < pa.size(); ++i) CHECK(pa[i].name == pb[i].name);
}

TEST_CASE("conjugation is an involution and permutes classes") {
  for (const auto& d : {s3_diagram(), lens_diagram(3), wiggle_s1s2()}) {
    PointedDiagram cc = conjugate_diagram(conjugate_diagram(d));
    CHECK(diagram_key(cc) == diagram_key(d));
    auto p1 = spinc_partition(d);
    auto p2 = spinc_partition(conjugate_diagram(d));
    CHECK(p1.size() == p2.size());
    std::set<std::string> c1, c2;
    for (const auto& [n, c] : p1) c1.insert(c);
    for (const auto& [n, c] : p2) c2.insert(c);
    CHECK(c1.size() == c2.size());  // classes permuted by conjugation
  }
  PointedDiagram cs3 = conjugate_diagram(s3_diagram());
  CHECK(intersection_points(cs3).size() == 1);
  CHECK(diagram_key(cs3) != diagram_key(s3_diagram()));
}

TEST_CASE("eta is the identity chain isomorphism") {
  for (const auto& d : {s3_diagram(), lens_diagram(3), wiggle_s1s2(), wiggle_s1s2(2)}) {
    LinearMap eta = eta_map(d);
    CHECK(eta.is_chain_map());
    CHECK(eta.degree() == 0);
    for (int i = 0; i < eta.source().size(); ++i) {
      int j = eta.target().index_of(eta.source().gen(i).name);
      CHECK(eta.entry(j, i) == UPoly::one());
    }
  }
  PointedDiagram hsa{{fixture_by_name("handleswap_alpha")}, false};
  CHECK(eta_map(hsa).is_chain_map());
}

TEST_CASE("diagram keys erase offsets but keep structure") {
  TorusPiece a = standard_torus_piece();
  TorusPiece b = standard_torus_piece();
  b.alpha_offset = Rational(1, 3);
  b.basepoint_x = Rational(2, 7);
  CHECK(diagram_key(PointedDiagram{{a}, false}) == diagram_key(PointedDiagram{{b}, false}));
  CHECK(diagram_key(s3_diagram()) != diagram_key(lens_diagram(2)));
  CHECK(diagram_key(s3_diagram()) != diagram_key(stabilize_diagram(s3_diagram()).diagram));
}
