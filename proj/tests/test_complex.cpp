#include <stdexcept>

#include "doctest.h"
#include "floer/complex.hpp"
#include "floer/homology.hpp"
#include "helpers.hpp"

using namespace floer;

namespace {

// Multiset of prime powers; invariant factors are not stable under
// concatenation (Z/2 + Z/3 = Z/6), primary parts are.
std::vector<Coef> primary_parts(std::vector<Coef> orders) {
  std::vector<Coef> out;
  for (Coef n : orders)
    for (Coef p = 2; p * p <= n || n > 1; ++p) {
      if (p * p > n && n > 1) { out.push_back(n); break; }
      Coef q = 1;
      while (n % p == 0) { n /= p; q *= p; }
      if (q > 1) out.push_back(q);
      if (n == 1) break;
    }
  std::sort(out.begin(), out.end());
  return out;
}

GradedComplex fixture_theta_complex() {
  // Four theta generators with gradings by +-markers, zero differential.
  return GradedComplex({{"theta1+theta2+", 2, "s0"},
                        {"theta1+theta2-", 1, "s0"},
                        {"theta1-theta2+", 1, "s0"},
                        {"theta1-theta2-", 0, "s0"}});
}

}  // namespace

TEST_CASE("validate: zero-differential rank-4 complex is valid") {
  CHECK(validate_complex(fixture_theta_complex()).ok());
}

TEST_CASE("validate: grading violation with witness") {
  GradedComplex c({{"a", 1, "s"}, {"b", 0, "s"}});
  c.set_entry(1, 0, UPoly(1, 1));  // da = U b, needs gr(b) = -2
  auto rep = validate_complex(c);
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].kind == Violation::Kind::Grading);
  CHECK(rep.violations[0].from == "a");
  CHECK(rep.violations[0].to == "b");
  CHECK(rep.violations[0].detail.find("-2") != std::string::npos);
}

TEST_CASE("validate: d-squared violation with witness (c,a)") {
  GradedComplex c({{"a", 2, "s"}, {"b", 1, "s"}, {"c", 0, "s"}});
  c.set_entry(1, 0, UPoly::one());
  c.set_entry(2, 1, UPoly::one());
  auto rep = validate_complex(c);
  bool found = false;
  for (const auto& v : rep.violations)
    if (v.kind == Violation::Kind::DSquared && v.from == "a" && v.to == "c") found = true;
  CHECK(found);
}

TEST_CASE("validate: component violation") {
  GradedComplex c({{"a", 1, "s"}, {"b", 0, "t"}});
  c.set_entry(1, 0, UPoly::one());
  auto rep = validate_complex(c);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.violations[0].kind == Violation::Kind::Component);
}

TEST_CASE("structural error distinct from invariant violation") {
  GradedComplex c({{"a", 0, "s"}});
  CHECK_THROWS_AS(c.set_entry(0, 5, UPoly::one()), std::out_of_range);
  CHECK_THROWS_AS(GradedComplex({{"a", 0, "s"}, {"a", 1, "s"}}), std::invalid_argument);
}

TEST_CASE("specialize_hat") {
  GradedComplex c({{"a", 1, "s"}, {"b", 0, "s"}, {"x", 3, "s"}, {"y", 0, "s"}});
  c.set_entry(3, 2, UPoly(1, 1));                    // dx = U y
  c.set_entry(1, 0, UPoly::one() + UPoly(1, 1));     // not valid, but hat drops U
  GradedComplex h = specialize_hat(c);
  CHECK(h.entry(3, 2).is_zero());
  CHECK(h.entry(1, 0) == UPoly::one());

  GradedComplex z({{"a", 0, "s"}});
  CHECK(specialize_hat(z) == z);
}

TEST_CASE("shift") {
  GradedComplex c({{"a", 0, "s"}});
  CHECK(shift(c, -1).gen(0).grading == -1);
  CHECK(shift(c, 0) == c);
  auto rng = testing::make_rng(11);
  for (int i = 0; i < 50; ++i) {
    GradedComplex r = testing::random_complex(rng);
    CHECK(shift(shift(r, 2), -2) == r);
    CHECK(validate_complex(shift(r, testing::pick(rng, -3, 3))).ok());
  }
}

TEST_CASE("direct_sum: identity on empty, rank adds, homology concatenates") {
  GradedComplex a({{"a", 0, "s"}});
  GradedComplex empty;
  CHECK(direct_sum(a, empty) == a);

  GradedComplex two = direct_sum(a, a);
  CHECK(two.size() == 2);
  CHECK(two.gen(1).name == "a_2");
  CHECK(validate_complex(two).ok());

  auto rng = testing::make_rng(12);
  for (int i = 0; i < 30; ++i) {
    GradedComplex x = testing::random_complex(rng, 3, 1);
    GradedComplex y = testing::random_complex(rng, 3, 1);
    GradedComplex s = direct_sum(x, y);
    CHECK(validate_complex(s).ok());
    auto hs = homology_hat(specialize_hat(s));
    auto hx = homology_hat(specialize_hat(x));
    auto hy = homology_hat(specialize_hat(y));
    for (const auto& [k, g] : hs.groups) {
      GradedGroup expect;
      if (hx.groups.count(k)) expect.free_rank += hx.groups.at(k).free_rank;
      if (hy.groups.count(k)) expect.free_rank += hy.groups.at(k).free_rank;
      std::vector<Coef> tor;
      if (hx.groups.count(k))
        tor.insert(tor.end(), hx.groups.at(k).torsion.begin(), hx.groups.at(k).torsion.end());
      if (hy.groups.count(k))
        tor.insert(tor.end(), hy.groups.at(k).torsion.begin(), hy.groups.at(k).torsion.end());
      CHECK(g.free_rank == expect.free_rank);
      CHECK(primary_parts(g.torsion) == primary_parts(tor));
    }
  }
}

TEST_CASE("pin_gradings normalizes per component") {
  GradedComplex c({{"a", 5, "s"}, {"b", 4, "s"}, {"c", -2, "t"}});
  c.set_entry(1, 0, UPoly::constant(2));
  GradedComplex p = pin_gradings(c);
  CHECK(p.gen(0).grading == 1);
  CHECK(p.gen(1).grading == 0);
  CHECK(p.gen(2).grading == 0);
  CHECK(p.entry(1, 0) == UPoly::constant(2));
}

TEST_CASE("random constructions stay valid") {
  auto rng = testing::make_rng(13);
  for (int i = 0; i < 200; ++i) {
    GradedComplex c = testing::random_complex(rng, testing::pick(rng, 1, 4),
                                              testing::pick(rng, 1, 2));
    CHECK(validate_complex(c).ok());
  }
}
