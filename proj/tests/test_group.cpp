#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "projstat/errors.hpp"
#include "projstat/group.hpp"

using namespace projstat;

namespace {

ProjectiveElement elem(const char* text, const GroupDescriptor& g) { return parse_element(text, g); }

std::vector<GroupDescriptor> small_groups() {
  std::vector<GroupDescriptor> out;
  for (int r = 1; r <= 6; ++r) {
    for (int p = 1; p <= r; ++p) {
      for (int s = 1; s <= r; ++s) {
        if (r % p || r % s) continue;
        for (int n = 1; n <= 3; ++n) {
          if ((r * n) % (p * s)) continue;
          out.push_back(make_group(r, p, s, n));
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("residue is nonnegative for every integer") {
  CHECK(residue(-1, 6) == 5);
  CHECK(residue(-12, 6) == 0);
  CHECK(residue(13, 6) == 1);
}

TEST_CASE("make_group validates divisibility") {
  const auto g = make_group(6, 2, 3, 8);
  CHECK(g.order() == 1679616ull * 40320ull / 6ull);
  CHECK(make_group(1, 1, 1, 3).order() == 6);
  CHECK_THROWS_AS(make_group(2, 2, 2, 1), DivisibilityError);
  CHECK_THROWS_AS(make_group(4, 3, 1, 2), DivisibilityError);
  CHECK_THROWS_AS(make_group(4, 1, 3, 2), DivisibilityError);
  CHECK_THROWS_AS(make_group(0, 1, 1, 2), RangeError);
  CHECK(g.to_string() == "G(6,2,3,8)");
  CHECK(parse_group("G(6,2,3,8)") == g);
  CHECK_THROWS_AS(parse_group("G(6,2,3"), ParseError);
}

TEST_CASE("window parsing and formatting") {
  const auto g = make_group(6, 2, 3, 8);
  const auto x = elem("[2^2,7^3,6^3,4^5,8^1,1^1,5^3,3^2]", g);
  CHECK(format_element(x) == "[2,7^1,6^1,4^3,8^5,1^5,5^1,3]");
  const auto b2 = wreath_group(2, 2);
  CHECK(format_element(elem("[2^1,1]", b2)) == "[2^1,1]");
  CHECK(elem("[-2,1]", b2) == elem("[2^1,1]", b2));
  CHECK(format_element(elem("[2^1,1]", b2), WindowStyle::Signed) == "[-2,1]");
  CHECK_THROWS_AS(elem("[2^1,1", b2), ParseError);
  CHECK_THROWS_AS(elem("[1,1]", b2), RangeError);
  CHECK_THROWS_AS(elem("[1^2,2]", b2), RangeError);
  CHECK_THROWS_AS(elem("[1,2,3]", b2), RangeError);
  CHECK_THROWS_AS(elem("[1^1,2]", make_group(2, 2, 1, 2)), MembershipError);
}

TEST_CASE("multiplication against monomial matrices") {
  const auto g = wreath_group(3, 2);
  // (0,2;id)(1,0;21) = (0,0;21)
  const auto a = canonicalize({{1, 2}, {0, 2}}, g);
  const auto b = canonicalize({{2, 1}, {1, 0}}, g);
  CHECK(multiply(a, b) == canonicalize({{2, 1}, {0, 0}}, g));
  CHECK_THROWS_AS(multiply(a, identity_element(wreath_group(3, 3))), GroupMismatchError);
}

TEST_CASE("inverse examples") {
  const auto b2 = wreath_group(2, 2);
  CHECK(inverse(elem("[2^1,1]", b2)) == elem("[2,1^1]", b2));
  CHECK(inverse(elem("[1^1,2^1]", b2)) == elem("[1^1,2^1]", b2));
  CHECK(inverse(identity_element(b2)).is_identity());
}

TEST_CASE("group axioms hold exhaustively on small groups") {
  for (const auto& group : small_groups()) {
    if (group.order() > 200) continue;
    const auto all = enumerate(group);
    const auto e = identity_element(group);
    for (const auto& a : all) {
      CHECK((e * a) == a);
      CHECK((a * e) == a);
      CHECK((a * inverse(a)).is_identity());
      for (const auto& b : all) {
        for (const auto& c : all) {
          if (((a * b) * c) != (a * (b * c))) FAIL("associativity in " << group.to_string());
        }
      }
    }
  }
}

TEST_CASE("multiply does not depend on the chosen lifts") {
  for (const auto& group : small_groups()) {
    if (group.s == 1 || group.order() > 300) continue;
    const auto all = enumerate(group);
    for (const auto& a : all) {
      for (const auto& b : all) {
        const auto expected = a * b;
        for (const auto& la : lifts(a)) {
          for (const auto& lb : lifts(b)) {
            CHECK(canonicalize(compose(la, lb, group.r), group) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("enumeration size and canonical representatives") {
  for (const auto& group : small_groups()) {
    const auto all = enumerate(group);
    CHECK(all.size() == group.order());
    std::set<ColoredPermutation> seen;
    for (const auto& g : all) {
      seen.insert(g.lift());
      CHECK(g.color(group.n) < group.lift_step());
      CHECK(in_reflection_group(g.lift(), group.r, group.p));
    }
    CHECK(seen.size() == all.size());
  }
}

TEST_CASE("enumeration is stable and matches the stream") {
  const auto group = make_group(4, 2, 2, 3);
  const auto all = enumerate(group);
  ElementStream stream(group);
  std::size_t i = 0;
  while (auto g = stream.next()) {
    REQUIRE(i < all.size());
    CHECK(*g == all[i++]);
  }
  CHECK(i == all.size());
  CHECK_THROWS_AS(enumerate(make_group(2, 1, 1, 9), 1000), BudgetExceededError);
}

TEST_CASE("canonicalize") {
  SUBCASE("shift by r/s") {
    const auto g = make_group(2, 1, 2, 2);
    CHECK(format_element(canonicalize({{1, 2}, {1, 1}}, g)) == "[1,2]");
  }
  SUBCASE("s = 1 keeps the lift") {
    const auto g = wreath_group(3, 2);
    const ColoredPermutation w{{2, 1}, {1, 2}};
    CHECK(canonicalize(w, g).lift() == w);
  }
  SUBCASE("golden element") {
    const auto g = make_group(6, 2, 3, 8);
    const ColoredPermutation w{{2, 7, 6, 4, 8, 1, 5, 3}, {4, 5, 5, 1, 3, 3, 5, 4}};
    CHECK(canonicalize(w, g).lift().colors == std::vector<int>{0, 1, 1, 3, 5, 5, 1, 0});
  }
  SUBCASE("membership") {
    CHECK_THROWS_AS(canonicalize({{1, 2}, {1, 0}}, make_group(2, 2, 1, 2)), MembershipError);
  }
}

TEST_CASE("lifts") {
  const auto g = make_group(2, 1, 2, 2);
  const auto ls = lifts(elem("[1,2]", g));
  REQUIRE(ls.size() == 2);
  CHECK(ls[0] == ColoredPermutation{{1, 2}, {0, 0}});
  CHECK(ls[1] == ColoredPermutation{{1, 2}, {1, 1}});
  CHECK(lifts(identity_element(wreath_group(3, 2))).size() == 1);
  for (const auto& group : small_groups()) {
    for (const auto& x : enumerate(group)) {
      const auto ls2 = lifts(x);
      CHECK(ls2.size() == static_cast<std::size_t>(group.s));
      std::set<std::vector<int>> colors;
      for (const auto& w : ls2) {
        colors.insert(w.colors);
        CHECK(w.sigma == x.lift().sigma);
        CHECK(canonicalize(w, group) == x);
      }
      CHECK(colors.size() == ls2.size());
    }
  }
}
