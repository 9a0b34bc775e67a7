#include "doctest.h"
#include "projstat/errors.hpp"
#include "projstat/identities.hpp"

using namespace projstat;

namespace {

std::string check(const VerificationReport& rep, const char* name) {
  return rep.details["checks"][name]["outcome"].get<std::string>();
}

}  // namespace

TEST_CASE("character twisted sums") {
  const auto b2 = wreath_group(2, 2);
  const auto rep = verify_character_fmaj(b2, -1, 1);
  CHECK(rep.matched());
  CHECK(rep.count == 8);
  CHECK(rep.details["sum"] == "(1 @2) + (-1 @2)*q^4");

  CHECK(verify_character_fmaj(make_group(1, 1, 1, 3), -1, 0).details["sum"] == "(1 @1) + (-1 @1)*q^3");
  for (int p : {1, 2}) {
    for (int s : {1, 2, 4}) {
      if (12 % (p * s)) continue;
      const auto g = make_group(4, p, s, 3);
      for (int eps : {1, -1}) {
        for (int k = 0; k < 4 / p; ++k) {
          if ((k * 3) % s) continue;
          CHECK(verify_character_fmaj(g, eps, k).matched());
        }
      }
    }
  }
}

TEST_CASE("character preconditions") {
  const auto g = make_group(4, 1, 2, 3);
  CHECK_THROWS_AS(verify_character_fmaj(g, 1, 1), CharacterConditionError);
  CHECK_THROWS_AS(verify_character_fmaj(g, 1, 4), CharacterConditionError);
  CHECK_THROWS_AS(verify_character_fmaj(make_group(4, 2, 1, 3), 1, 2), CharacterConditionError);
  CHECK_THROWS_AS(verify_character_fmaj(g, 0, 0), CharacterConditionError);
  CHECK_THROWS_AS(verify_character_fmaj(g, 1, -1), CharacterConditionError);
}

TEST_CASE("signed multinomial") {
  auto lhs = [](int n, std::vector<int> comp) {
    const auto rep = verify_signed_multinomial(n, comp);
    CHECK(rep.matched());
    return rep.details["checks"]["signed-count"]["lhs"].get<std::string>();
  };
  CHECK(lhs(3, {2, 1}) == "1");
  CHECK(lhs(2, {1, 1}) == "0");
  CHECK(lhs(4, {2, 2}) == "2");
  CHECK_THROWS_AS(verify_signed_multinomial(3, {2, 2}), CompositionError);
  CHECK_THROWS_AS(verify_signed_multinomial(1, {2, -1}), CompositionError);
  CHECK_THROWS_AS(verify_signed_multinomial(13, {13}), BudgetExceededError);
}

TEST_CASE("signed sums over wreath products") {
  CHECK(verify_signed_wreath(1, 3).details["sum"] == "1 + -1*q^3");
  CHECK(verify_signed_wreath(2, 1).details["sum"] == "1 + q");
  const auto rep = verify_signed_wreath(3, 2);
  CHECK(rep.matched());
  CHECK(rep.count == 18);
  CHECK(check(rep, "increasing-elements") == "MATCH");
  CHECK_THROWS_AS(verify_signed_wreath(2, 9, {0, 1000}), BudgetExceededError);
}

TEST_CASE("lift identity") {
  CHECK(verify_lift_identity(3, 1, 2).matched());
  CHECK(verify_lift_identity(2, 2, 2).matched());
  const auto rep = verify_lift_identity(6, 3, 2);
  CHECK(rep.matched());
  CHECK(rep.count == 24);
  CHECK_THROWS_AS(verify_lift_identity(4, 3, 2), DivisibilityError);
}

TEST_CASE("Carlitz identities") {
  CHECK(verify_carlitz_des(make_group(1, 1, 1, 2), {4, 6, 0}).matched());
  CHECK(verify_carlitz_fdes(wreath_group(2, 2), {6, 6, 0}).matched());
  CHECK(verify_carlitz_fdes(make_group(1, 1, 1, 4), {6, 8, 0}).matched());
  const auto des = verify_carlitz_des(make_group(4, 2, 2, 3), {6, 8, 6});
  CHECK(des.matched());
  CHECK(check(des, "a=1") == "MATCH");
  CHECK_THROWS_AS(verify_carlitz_des(wreath_group(2, 2), {-1, 4, 4}), RegionError);
  CHECK_THROWS_AS(verify_carlitz_fdes(wreath_group(2, 2), {4, -1, 4}), RegionError);
}

TEST_CASE("trivariate fdes identity and its variants") {
  const auto rep = verify_fdes_trivariate(make_group(2, 1, 2, 2), {6, 6, 6});
  CHECK(rep.matched());
  CHECK(rep.count == 4);
  CHECK(check(rep, "a=1") == "MATCH");
  const auto wide = verify_fdes_trivariate(wreath_group(4, 4), {8, 8, 8});
  CHECK(wide.matched());
  CHECK(wide.details["variants"]["m=k"] == "MISMATCH");
}

TEST_CASE("six statistics") {
  CHECK(verify_six_stats(1, 1, 1, 2, {4, 6, 2}).matched());
  CHECK(verify_six_stats(2, 1, 1, 2, {4, 6, 2}).matched());
  CHECK(verify_six_stats(2, 2, 2, 2, {4, 6, 2}).matched());
  CHECK_THROWS_AS(verify_six_stats(4, 3, 1, 2, {4, 6, 2}), DivisibilityError);
  CHECK_THROWS_AS(verify_six_stats(2, 1, 1, 2, {-1, 6, 2}), RegionError);
}

TEST_CASE("Hilbert series") {
  const auto classical = verify_hilbert(1, 1, 1, 3, 5);
  CHECK(classical.matched());
  const auto rep = verify_hilbert(2, 2, 1, 3, 5);
  CHECK(rep.matched());
  bool exchanged = false;
  for (const auto& [key, value] : rep.details["variants"].items()) {
    if (key.find("lr/p") != std::string::npos) exchanged = value == "MATCH";
  }
  CHECK(exchanged);
  CHECK_THROWS_AS(verify_hilbert(4, 3, 1, 2, 4), DivisibilityError);
  CHECK_THROWS_AS(verify_hilbert(1, 1, 1, 2, -1), RegionError);
}

TEST_CASE("reports are deterministic and independent of the thread count") {
  const auto g = make_group(4, 2, 2, 4);
  const auto a = verify_character_fmaj(g, -1, 0, {1}).to_json(false).dump();
  const auto b = verify_character_fmaj(g, -1, 0, {4}).to_json(false).dump();
  const auto c = verify_character_fmaj(g, -1, 0, {4}).to_json(false).dump();
  CHECK(a == b);
  CHECK(b == c);
  const auto d = verify_six_stats(2, 1, 2, 3, {3, 6, 3}, {1}).to_json(false).dump();
  const auto e = verify_six_stats(2, 1, 2, 3, {3, 6, 3}, {3}).to_json(false).dump();
  CHECK(d == e);
  const auto json = verify_carlitz_des(g, {4, 4, 4}).to_json(false);
  CHECK(json["schema"] == 1);
  CHECK_FALSE(json.contains("millis"));
  CHECK(json["outcome"] == "MATCH");
  CHECK_FALSE(verify_carlitz_des(g, {4, 4, 4}).to_table().empty());
}

TEST_CASE("identity names") {
  const auto& names = identity_names();
  CHECK(names.size() == 9);
  CHECK(std::find(names.begin(), names.end(), "hilbert") != names.end());
}
