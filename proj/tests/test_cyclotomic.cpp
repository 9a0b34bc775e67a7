#include "doctest.h"
#include "projstat/cyclotomic.hpp"
#include "projstat/errors.hpp"

using namespace projstat;

namespace {

IntPoly poly(std::initializer_list<int> c) {
  IntPoly out;
  for (int x : c) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == poly({-1, 1}));
  CHECK(cyclotomic_poly(2) == poly({1, 1}));
  CHECK(cyclotomic_poly(3) == poly({1, 1, 1}));
  CHECK(cyclotomic_poly(4) == poly({1, 0, 1}));
  CHECK(cyclotomic_poly(6) == poly({1, -1, 1}));
  CHECK(cyclotomic_poly(12) == poly({1, 0, -1, 0, 1}));
  for (int r = 1; r <= 30; ++r) {
    const auto phi = cyclotomic_poly(r);
    CHECK(static_cast<int>(phi.size()) - 1 == euler_phi(r));
    CHECK(phi.back() == 1);
  }
}

TEST_CASE("powers of zeta") {
  CHECK(zeta_pow(2, 1) == CycInt(2, -1));
  CHECK(zeta_pow(4, 2) == CycInt(4, -1));
  for (int r = 1; r <= 12; ++r) {
    CHECK(zeta_pow(r, 0) == CycInt(r, 1));
    CHECK(zeta_pow(r, r) == CycInt(r, 1));
    for (int e = -2 * r; e <= 2 * r; ++e) {
      CHECK(zeta_pow(r, e) * zeta_pow(r, r - e) == CycInt(r, 1));
      for (int f = -r; f <= r; ++f) CHECK(zeta_pow(r, e) * zeta_pow(r, f) == zeta_pow(r, e + f));
    }
  }
}

TEST_CASE("the r-th roots of unity sum to zero") {
  for (int r = 2; r <= 12; ++r) {
    CycInt sum(r);
    for (int e = 0; e < r; ++e) sum += zeta_pow(r, e);
    CHECK(sum.is_zero());
  }
}

TEST_CASE("ring arithmetic") {
  CHECK(zeta_pow(3, 1) + zeta_pow(3, 2) == CycInt(3, -1));
  const CycInt one(4, 1);
  const CycInt z = zeta_pow(4, 1);
  CHECK((one + z) * (one - z) == CycInt(4, 2));
  CHECK(z * one == z);
  CHECK(-z + z == CycInt(4));
  CycInt twice = z * BigInt(6);
  CHECK(twice.divide_exact(3) == z * BigInt(2));
  CHECK_THROWS_AS(CycInt(4, 3).divide_exact(2), RangeError);
  CHECK_THROWS_AS(CycInt(3, 1) + CycInt(4, 1), ConductorMismatchError);
  CHECK_THROWS_AS(CycInt(3, 1) * CycInt(6, 1), ConductorMismatchError);
}

TEST_CASE("exponent counts and text") {
  const std::vector<BigInt> counts{1, 1, 1};
  CHECK(CycInt::from_exponent_counts(3, counts).is_zero());
  CHECK(CycInt(6, 0).to_string().find("@6") != std::string::npos);
}

TEST_CASE("coefficients are not bounded by machine integers") {
  CycInt x(5, 1);
  const CycInt step = CycInt(5, 1) + zeta_pow(5, 1) * BigInt(3);
  for (int i = 0; i < 80; ++i) x *= step;
  CycInt y = x;
  for (int i = 0; i < 80; ++i) y *= step;
  CHECK_FALSE(y == x);
  CycInt z = x;
  for (int i = 0; i < 80; ++i) z *= step;
  CHECK(z == y);
}
