#include <map>

#include "doctest.h"
#include "projstat/errors.hpp"
#include "projstat/statistics.hpp"

using namespace projstat;

namespace {

std::vector<int> divisors(int r) {
  std::vector<int> out;
  for (int d = 1; d <= r; ++d) {
    if (r % d == 0) out.push_back(d);
  }
  return out;
}

}  // namespace

TEST_CASE("color and prime orders") {
  CHECK(compare(Order::Color, {2, 1}, {0, 0}) == std::strong_ordering::less);
  CHECK(compare(Order::Color, {1, 2}, {1, 1}) == std::strong_ordering::less);
  CHECK(compare(Order::Color, {3, 0}, {1, 0}) == std::strong_ordering::greater);
  CHECK(compare(Order::Prime, {2, 1}, {1, 2}) == std::strong_ordering::less);
  CHECK(compare(Order::Prime, {2, 2}, {2, 1}) == std::strong_ordering::less);
  CHECK(compare(Order::Color, {4, 1}, {4, 1}) == std::strong_ordering::equal);
  CHECK(compare(Order::Prime, {4, 1}, {4, 1}) == std::strong_ordering::equal);
}

TEST_CASE("golden element") {
  const auto group = make_group(6, 2, 3, 8);
  const auto g = parse_element("[2^2,7^3,6^3,4^5,8^1,1^1,5^3,3^2]", group);
  const auto rec = stat_record(g);
  CHECK(rec.hdes == PositionSet{2, 5});
  CHECK(rec.hvec == std::vector<int>{2, 2, 1, 1, 1, 0, 0, 0});
  CHECK(rec.kvec == std::vector<int>{18, 13, 13, 9, 5, 5, 1, 0});
  CHECK(rec.lambda == std::vector<int>{30, 25, 19, 15, 11, 5, 1, 0});
  CHECK(rec.fdes == 30);
  CHECK(rec.des == 15);
  CHECK(rec.col == 6);
  CHECK(rec.fmaj == 106);
}

TEST_CASE("identity has all statistics zero") {
  for (const auto& group : {make_group(6, 2, 3, 4), wreath_group(3, 3), make_group(1, 1, 1, 5)}) {
    const auto rec = stat_record(identity_element(group));
    CHECK(rec.fmaj == 0);
    CHECK(rec.des == 0);
    CHECK(rec.fdes == 0);
    CHECK(rec.col == 0);
    CHECK(rec.lambda == std::vector<int>(group.n, 0));
    CHECK(des_set(identity_element(group), Order::Color).empty());
  }
}

TEST_CASE("a small signed permutation") {
  const auto g = parse_element("[2^1,1]", wreath_group(2, 2));
  const auto rec = stat_record(g);
  CHECK(des_set(g, Order::Color) == PositionSet{0});
  CHECK(rec.maj == 0);
  CHECK(rec.fmaj == 1);
  CHECK(rec.des == 1);
  CHECK(rec.fdes == 1);
  CHECK(rec.col == 1);
  CHECK(rec.lambda == std::vector<int>{1, 0});
}

TEST_CASE("descent sets in both orders") {
  const auto b2 = wreath_group(2, 2);
  const auto g = parse_element("[1^1,2^1]", b2);
  CHECK(des_set(g, Order::Color) == PositionSet{0});
  CHECK(des_set(g, Order::Prime) == PositionSet{0, 1});
  CHECK(fmaj_prime(g) == 4);
  CHECK(fmaj_prime(identity_element(b2)) == 0);
  CHECK_THROWS_AS(des_set(identity_element(make_group(2, 1, 2, 2)), Order::Prime),
                  OrderScopeError);
  CHECK_THROWS_AS(fmaj_prime(identity_element(make_group(2, 2, 1, 2))), OrderScopeError);
}

TEST_CASE("worked B7 element") {
  const auto g = parse_element("[5,-2,-1,-4,6,-3,-7]", wreath_group(2, 7));
  CHECK(bn_descent_split(g).neg == PositionSet{2, 3, 4, 6, 7});
  const auto img = parse_element("[5,-3,-7,-1,6,-4,-2]", wreath_group(2, 7));
  CHECK(des_set(g, Order::Color) == des_set(img, Order::Prime));
  CHECK(des_set(g, Order::Color) == PositionSet{1, 2, 5});
}

TEST_CASE("the B_n descent split reconstructs both descent sets") {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& g : enumerate(wreath_group(2, n))) {
      const auto split = bn_descent_split(g);
      CHECK(split.descent_union() == des_set(g, Order::Color));
      CHECK(split.prime_descent_union() == des_set(g, Order::Prime));
    }
  }
  const auto id = bn_descent_split(identity_element(wreath_group(2, 3)));
  CHECK(id.hdes0.empty());
  CHECK(id.hdes1.empty());
  CHECK(id.desPM.empty());
  CHECK(id.neg.empty());
  CHECK_FALSE(id.d0);
  CHECK_THROWS_AS(bn_descent_split(identity_element(wreath_group(3, 2))), ScopeError);
}

TEST_CASE("col_residues") {
  const std::vector<int> f{2, 3, 3, 5, 1, 1, 3, 2};
  CHECK(col_residues(f, 2) == 6);
  CHECK(col_residues(f, 1) == 0);
  CHECK(col_residues(std::vector<int>{3, 1}, 2) == 2);
}

TEST_CASE("record invariants over every small group") {
  for (int r : {1, 2, 3, 4, 6}) {
    for (int n = 1; n <= 3; ++n) {
      for (int p : divisors(r)) {
        for (int s : divisors(r)) {
          if ((r * n) % (p * s)) continue;
          const auto group = make_group(r, p, s, n);
          if (group.order() > 20000) continue;
          for (const auto& g : enumerate(group)) {
            const auto rec = stat_record(g);
            int sum = 0;
            for (int i = 0; i < n; ++i) {
              CHECK(rec.lambda[i] == r * rec.hvec[i] + rec.kvec[i]);
              CHECK(residue(rec.kvec[i] - g.color(i + 1), r) == 0);
              CHECK(residue(rec.lambda[i] - g.color(i + 1), r / s) == 0);
              if (i > 0) CHECK(rec.lambda[i - 1] >= rec.lambda[i]);
              sum += rec.lambda[i];
            }
            CHECK(rec.fmaj == sum);
            CHECK(rec.fdes == rec.lambda[0]);
            CHECK(rec.des == (s * rec.lambda[0] + r - s) / r);
            CHECK(rec.col == col_residues(rec.lambda, r / s));
            for (const auto& w : lifts(g)) CHECK(stat_record(canonicalize(w, group)) == rec);
          }
        }
      }
    }
  }
}

TEST_CASE("fmaj and fmaj' are equidistributed on B_2") {
  std::map<int, int> a, b;
  for (const auto& g : enumerate(wreath_group(2, 2))) {
    ++a[flag_major(g)];
    ++b[fmaj_prime(g)];
  }
  CHECK(a == b);
}

TEST_CASE("wreath products: des and fmaj reduce to the classical statistics") {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& g : enumerate(wreath_group(r, n))) {
        const auto rec = stat_record(g);
        CHECK(rec.des == rec.desG);
        CHECK(rec.fmaj == r * rec.maj + rec.col);
      }
    }
  }
}

TEST_CASE("inversions and signs") {
  CHECK(inversions(std::vector<int>{1, 2, 3}) == 0);
  CHECK(inversions(std::vector<int>{3, 2, 1}) == 3);
  const auto rec = stat_record(parse_element("[3,1,2]", wreath_group(1, 3)));
  CHECK(rec.invAbs == 2);
  CHECK(rec.signAbs == 1);
}
