#include <stdexcept>

#include "doctest.h"
#include "floer/chain_map.hpp"
#include "floer/homology.hpp"
#include "helpers.hpp"

using namespace floer;

TEST_CASE("grading legality enforced on entries") {
  GradedComplex a({{"x", 0, "s"}});
  GradedComplex b({{"y", 1, "s"}});
  LinearMap f(a, b, 0);
  CHECK_THROWS_AS(f.set_entry(0, 0, UPoly::one()), std::invalid_argument);  // gr shift +1
  LinearMap g(b, a, 0);
  CHECK_THROWS_AS(g.set_entry(0, 0, UPoly::one()), std::invalid_argument);  // needs U^(1/2)
  GradedComplex c({{"z", -2, "s"}});
  LinearMap h(a, c, 0);
  h.set_entry(0, 0, UPoly(3, 1));  // gr drop 2 = one U power, fine
  CHECK(h.entry(0, 0) == UPoly(3, 1));
}

TEST_CASE("random chain maps commute; compositions are chain maps") {
  auto rng = testing::make_rng(21);
  for (int i = 0; i < 80; ++i) {
    GradedComplex a = testing::random_complex(rng);
    GradedComplex b = testing::random_complex(rng);
    LinearMap f = testing::random_chain_map(rng, a, b);
    CHECK(f.is_chain_map());
    LinearMap g = testing::random_chain_map(rng, b, b);
    CHECK(compose(g, f).is_chain_map());
    CHECK(compose(LinearMap::identity(b), f) == f);
    CHECK(compose(f, LinearMap::identity(a)) == f);
  }
}

TEST_CASE("mapping cone: block structure is the paper's matrix") {
  auto rng = testing::make_rng(22);
  for (int i = 0; i < 60; ++i) {
    GradedComplex a = testing::random_complex(rng);
    GradedComplex b = testing::random_complex(rng);
    LinearMap f = testing::random_chain_map(rng, a, b);
    GradedComplex cone = mapping_cone(f);
    CHECK(validate_complex(cone).ok());
    REQUIRE(cone.size() == a.size() + b.size());
    int off = a.size();
    // shifted block = -d_source, target block = d_target, mixed = f, other corner 0
    for (int t = 0; t < a.size(); ++t)
      for (int s = 0; s < a.size(); ++s) CHECK(cone.entry(t, s) == -a.entry(t, s));
    for (int t = 0; t < b.size(); ++t)
      for (int s = 0; s < b.size(); ++s) CHECK(cone.entry(t + off, s + off) == b.entry(t, s));
    for (int t = 0; t < b.size(); ++t)
      for (int s = 0; s < a.size(); ++s) CHECK(cone.entry(t + off, s) == f.entry(t, s));
    for (int t = 0; t < a.size(); ++t)
      for (int s = 0; s < b.size(); ++s) CHECK(cone.entry(t, s + off).is_zero());
    // generator multiset = shifted copy (one grading up) + originals
    for (int s = 0; s < a.size(); ++s) {
      CHECK(cone.gen(s).grading == a.gen(s).grading + 1);
      CHECK(cone.gen(s).component == a.gen(s).component);
    }
    for (int t = 0; t < b.size(); ++t) CHECK(cone.gen(t + off) == b.gen(t));
  }
}

TEST_CASE("cone of identity is acyclic; cone of zero is a direct sum") {
  auto rng = testing::make_rng(23);
  for (int i = 0; i < 100; ++i) {
    GradedComplex c = testing::random_complex(rng);
    GradedComplex cone = mapping_cone(LinearMap::identity(c));
    CHECK(validate_complex(cone).ok());
    CHECK(homology_hat(specialize_hat(cone)).acyclic());
    CHECK(is_contractible(cone));
  }
  GradedComplex a({{"a", 0, "s"}});
  GradedComplex b({{"b", 0, "s"}});
  GradedComplex z = mapping_cone(LinearMap::zero(a, b));
  CHECK(z.size() == 2);
  CHECK(z.entries().empty());
}

TEST_CASE("cone rejects non-chain maps with the failing entry") {
  GradedComplex a({{"x", 1, "s"}, {"y", 0, "s"}});
  a.set_entry(1, 0, UPoly::constant(2));
  GradedComplex b({{"u", 1, "s"}, {"v", 0, "s"}});
  b.set_entry(1, 0, UPoly::constant(3));
  LinearMap f(a, b, 0);
  f.set_entry(0, 0, UPoly::one());  // u <- x but no v <- y: does not commute
  CHECK_THROWS_WITH_AS(mapping_cone(f), doctest::Contains("commutation fails"),
                       std::invalid_argument);
}

TEST_CASE("cone of multiplication by 2 has Z/2 hat homology") {
  GradedComplex c({{"a", 0, "s"}});
  LinearMap two(c, c, 0);
  two.set_entry(0, 0, UPoly::constant(2));
  GradedComplex cone = mapping_cone(two);
  auto h = homology_hat(specialize_hat(cone));
  GradedGroup g0 = h.groups.at({"s", 0});
  CHECK(g0.free_rank == 0);
  CHECK(g0.torsion == std::vector<Coef>{2});
  CHECK(h.groups.at({"s", 1}).trivial());
}

TEST_CASE("homotopy witness: trivial, negative and constructed cases") {
  GradedComplex c({{"a", 0, "s"}});
  LinearMap id = LinearMap::identity(c);
  auto w = homotopy_witness(id, id);
  REQUIRE(w);
  CHECK(w->is_zero());
  // id vs -id on a rank-1 zero-differential complex: 2*id is not a boundary
  CHECK_FALSE(homotopy_witness(id, -id));
  CHECK(projectively_homotopic(id, -id));
  // id vs 2*id: neither id nor 3*id is a boundary
  LinearMap twice(c, c, 0);
  twice.set_entry(0, 0, UPoly::constant(2));
  CHECK_FALSE(projectively_homotopic(id, twice));
}

TEST_CASE("homotopy witness: soundness and completeness on random data") {
  auto rng = testing::make_rng(24);
  for (int i = 0; i < 60; ++i) {
    GradedComplex a = testing::random_complex(rng);
    GradedComplex b = testing::random_complex(rng);
    LinearMap f = testing::random_chain_map(rng, a, b);
    LinearMap k = testing::random_homotopy(rng, a, b);
    LinearMap g = f + homotopy_boundary(k);
    CHECK(g.is_chain_map());
    auto w = homotopy_witness(g, f);
    REQUIRE(w);  // witness must be found when one exists
    CHECK(homotopy_boundary(*w) == g - f);  // and must be exact
  }
}

TEST_CASE("projective homotopy respects composition") {
  auto rng = testing::make_rng(25);
  for (int i = 0; i < 40; ++i) {
    GradedComplex a = testing::random_complex(rng, 2);
    GradedComplex b = testing::random_complex(rng, 2);
    GradedComplex c = testing::random_complex(rng, 2);
    LinearMap f = testing::random_chain_map(rng, a, b);
    LinearMap g = testing::random_chain_map(rng, b, c);
    int sf = testing::pick(rng, 0, 1) ? 1 : -1;
    int sg = testing::pick(rng, 0, 1) ? 1 : -1;
    LinearMap f2 = (f + homotopy_boundary(testing::random_homotopy(rng, a, b))).operator-();
    if (sf > 0) f2 = -f2;
    LinearMap g2 = g + homotopy_boundary(testing::random_homotopy(rng, b, c));
    if (sg < 0) g2 = -g2;
    CHECK(projectively_homotopic(f, f2));
    CHECK(projectively_homotopic(g, g2));
    CHECK(projectively_homotopic(compose(g, f), compose(g2, f2)));
  }
}

TEST_CASE("sign classes: equality, composition, associativity") {
  auto rng = testing::make_rng(26);
  for (int i = 0; i < 200; ++i) {
    GradedComplex a = testing::random_complex(rng, 2);
    GradedComplex b = testing::random_complex(rng, 2);
    GradedComplex c = testing::random_complex(rng, 2);
    GradedComplex d = testing::random_complex(rng, 2);
    LinearMap f = testing::random_chain_map(rng, a, b);
    LinearMap g = testing::random_chain_map(rng, b, c);
    LinearMap h = testing::random_chain_map(rng, c, d);
    SignClass sf(testing::pick(rng, 0, 1) ? f : -f);
    SignClass sg(testing::pick(rng, 0, 1) ? g : -g);
    SignClass sh(testing::pick(rng, 0, 1) ? h : -h);
    CHECK(sf == SignClass(-f));
    CHECK(compose(sg, sf) == SignClass(compose(g, f)));
    CHECK(compose(sh, compose(sg, sf)) == compose(compose(sh, sg), sf));
    CHECK(compose(sf, SignClass(LinearMap::identity(a))) == sf);
  }
}
