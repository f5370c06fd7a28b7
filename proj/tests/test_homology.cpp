#include <stdexcept>

#include "doctest.h"
#include "floer/homology.hpp"
#include "helpers.hpp"

using namespace floer;

TEST_CASE("hat homology of the rank-4 zero-differential fixture is Z^4") {
  GradedComplex c({{"theta1+theta2+", 2, "s0"},
                   {"theta1+theta2-", 1, "s0"},
                   {"theta1-theta2+", 1, "s0"},
                   {"theta1-theta2-", 0, "s0"}});
  auto h = homology_hat(c);
  CHECK(h.total_free_rank() == 4);
  CHECK(h.groups.at({"s0", 1}).free_rank == 2);
  for (const auto& [k, g] : h.groups) CHECK(g.torsion.empty());
}

TEST_CASE("d = [2] gives torsion Z/2 and free rank 0") {
  GradedComplex c({{"a", 1, "s"}, {"b", 0, "s"}});
  c.set_entry(1, 0, UPoly::constant(2));
  auto h = homology_hat(c);
  CHECK(h.total_free_rank() == 0);
  CHECK(h.groups.at({"s", 0}).torsion == std::vector<Coef>{2});
}

TEST_CASE("precondition: positive U powers rejected") {
  GradedComplex c({{"a", 1, "s"}, {"b", -2, "s"}});
  c.set_entry(1, 0, UPoly(1, 1));
  CHECK_THROWS_AS(homology_hat(c), std::domain_error);
}

TEST_CASE("homology invariant under generator permutation") {
  auto rng = testing::make_rng(31);
  for (int i = 0; i < 200; ++i) {
    GradedComplex c = specialize_hat(testing::random_complex(rng, 3, 2));
    std::vector<int> perm(c.size());
    for (int j = 0; j < c.size(); ++j) perm[j] = j;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Generator> gens(c.size());
    for (int j = 0; j < c.size(); ++j) gens[perm[j]] = c.gen(j);
    GradedComplex p(gens);
    for (const auto& [idx, v] : c.entries()) p.set_entry(perm[idx.first], perm[idx.second], v);
    CHECK(homology_hat(c).nontrivial() == homology_hat(p).nontrivial());
  }
}

TEST_CASE("reduce: dx = y collapses, dx = U y stalls") {
  GradedComplex c({{"x", 1, "s"}, {"y", 0, "s"}});
  c.set_entry(1, 0, UPoly::one());
  auto red = reduce_complex(c);
  CHECK(red.reduced.size() == 0);

  GradedComplex u({{"x", 1, "s"}, {"y", -2, "s"}});
  u.set_entry(1, 0, UPoly(1, 1));
  CHECK(reduce_complex(u).reduced == u);
}

TEST_CASE("reduce: homotopy equivalence data is exact") {
  auto rng = testing::make_rng(32);
  for (int i = 0; i < 100; ++i) {
    GradedComplex c = testing::random_complex(rng, 3, 1);
    auto red = reduce_complex(c);
    CHECK(validate_complex(red.reduced).ok());
    CHECK(red.to_reduced.is_chain_map());
    CHECK(red.from_reduced.is_chain_map());
    CHECK(compose(red.to_reduced, red.from_reduced) == LinearMap::identity(red.reduced));
    LinearMap round = compose(red.from_reduced, red.to_reduced);
    CHECK(homotopy_witness(round, LinearMap::identity(c)).has_value());
    CHECK(homology_hat(specialize_hat(red.reduced)).nontrivial() == homology_hat(specialize_hat(c)).nontrivial());
    // no unit entries remain
    for (const auto& [idx, p] : red.reduced.entries()) {
      bool unit = p.is_monomial() && p.terms().front().second == 0 &&
                  (p.terms().front().first == 1 || p.terms().front().first == -1);
      CHECK_FALSE(unit);
    }
  }
}

TEST_CASE("minus presentation: towers from matched reductions") {
  // dx = U^2 y next to a lone generator z.
  GradedComplex c({{"x", 3, "s"}, {"y", -2, "s"}, {"z", 0, "s"}});
  c.set_entry(1, 0, UPoly(1, 2));
  auto pres = present_homology(c);
  CHECK_FALSE(pres.minus.stalled());
  REQUIRE(pres.minus.towers.size() == 2);
  CHECK(pres.minus.towers[0] == TowerSummand{"s", -2, 2});  // Z[U]/U^2 at the target
  CHECK(pres.minus.towers[1] == TowerSummand{"s", 0, 0});   // free tower from z

  // dx = 2y stalls: residual [2]
  GradedComplex d({{"x", 1, "s"}, {"y", 0, "s"}});
  d.set_entry(1, 0, UPoly::constant(2));
  auto p2 = present_homology(d);
  CHECK(p2.minus.stalled());
  REQUIRE(p2.minus.residual.size() == 1);
  CHECK(p2.minus.residual[0].value == UPoly::constant(2));
}

TEST_CASE("truncated homology: frozen values") {
  // A free Z[U] tower truncated at T contributes T classes, one per U-slice.
  GradedComplex free1({{"a", 0, "s"}});
  auto t = truncated_homology(free1, 3);
  CHECK(t.total_free_rank() == 3);
  CHECK(t.groups.at({"s", 0}).free_rank == 1);
  CHECK(t.groups.at({"s", 2}).free_rank == 1);
  CHECK(t.groups.at({"s", 4}).free_rank == 1);

  // dx = U y is a Z[U]/U piece: the tower bottom y@0 survives, the slices
  // x@j / y@(j+1) cancel, and the truncation edge leaves the top x-slice.
  GradedComplex c({{"x", 1, "s"}, {"y", -2, "s"}});
  c.set_entry(1, 0, UPoly(1, 1));
  auto h = truncated_homology(c, 1);  // only the U^0 slice: differential drops to 0
  CHECK(h.groups.at({"s", 1}).free_rank == 1);
  CHECK(h.groups.at({"s", -2}).free_rank == 1);
  auto h3 = truncated_homology(c, 3);
  CHECK(h3.total_free_rank() == 2);
  CHECK(h3.groups.at({"s", -2}).free_rank == 1);
  CHECK(h3.groups.at({"s", 5}).free_rank == 1);
  CHECK(h3.groups.at({"s", 0}).trivial());
  CHECK(h3.groups.at({"s", 2}).trivial());
}

TEST_CASE("truncated homology is a homotopy invariant") {
  auto rng = testing::make_rng(33);
  for (int i = 0; i < 50; ++i) {
    GradedComplex c = testing::random_complex(rng, 3, 1);
    auto red = reduce_complex(c);
    CHECK(truncated_homology(c, 3).pinned() == truncated_homology(red.reduced, 3).pinned());
    CHECK(invariant_tuple(c, 3) == invariant_tuple(red.reduced, 3));
  }
}

TEST_CASE("homology invariant under reduce (randomized, many trials)") {
  auto rng = testing::make_rng(34);
  for (int i = 0; i < 1000; ++i) {
    GradedComplex c = testing::random_complex(rng, testing::pick(rng, 1, 4),
                                              testing::pick(rng, 1, 2), 3);
    auto red = reduce_complex(c);
    CHECK(homology_hat(specialize_hat(c)).nontrivial() == homology_hat(specialize_hat(red.reduced)).nontrivial());
  }
}
