#include <stdexcept>

#include "doctest.h"
#include "floer/upoly.hpp"
#include "helpers.hpp"

using namespace floer;

TEST_CASE("ring laws on random triples") {
  auto rng = testing::make_rng(1);
  auto rand_poly = [&] {
    UPoly p;
    int terms = testing::pick(rng, 0, 3);
    for (int i = 0; i < terms; ++i)
      p += UPoly(testing::pick(rng, -4, 4), testing::pick(rng, 0, 4));
    return p;
  };
  for (int i = 0; i < 500; ++i) {
    UPoly a = rand_poly(), b = rand_poly(), c = rand_poly();
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * UPoly::one() == a);
    CHECK(a + b == b + a);
    CHECK(a - a == UPoly::zero());
  }
}

TEST_CASE("canonical form drops zeros and sorts exponents") {
  UPoly p = UPoly(2, 3) + UPoly(1, 0) + UPoly(-2, 3);
  CHECK(p == UPoly::one());
  CHECK(p.is_monomial());
  UPoly q = UPoly(1, 2) + UPoly(1, 0);
  CHECK(q.min_exp() == 0);
  CHECK(q.max_exp() == 2);
  CHECK(q.coeff(1) == 0);
  CHECK(q.u0_coeff() == 1);
}

TEST_CASE("truncation") {
  UPoly q = UPoly(5, 0) + UPoly(3, 2) + UPoly(-1, 4);
  CHECK(q.truncated(3) == UPoly(5, 0) + UPoly(3, 2));
  CHECK(q.truncated(1) == UPoly::constant(5));
  CHECK(q.truncated(0).is_zero());
}

TEST_CASE("negative exponent rejected") {
  CHECK_THROWS_AS(UPoly(1, -1), std::invalid_argument);
}

TEST_CASE("printing") {
  CHECK(UPoly::zero().str() == "0");
  CHECK((UPoly(1, 1) + UPoly::constant(1)).str() == "1+U");
  CHECK(UPoly(-2, 3).str() == "-2*U^3");
}
