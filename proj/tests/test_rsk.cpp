#include <algorithm>
#include <set>

#include "doctest.h"
#include "projstat/errors.hpp"
#include "projstat/rsk.hpp"

using namespace projstat;

namespace {

using Rows = std::vector<std::vector<int>>;

PositionSet shifted_pairs(const Tableau& a, const Tableau& b) {
  const auto ca = a.content();
  const auto cb = b.content();
  PositionSet out;
  for (int i : ca) {
    if (std::binary_search(cb.begin(), cb.end(), i + 1)) out.push_back(i);
  }
  return out;
}

bool holds(const Tableau& t, int x) {
  const auto c = t.content();
  return std::binary_search(c.begin(), c.end(), x);
}

}  // namespace

TEST_CASE("row insertion and reverse bumping") {
  Tableau t;
  for (int x : {2, 1, 4, 3, 7}) row_insert(t, x);
  CHECK(t.rows == Rows{{1, 3, 7}, {2, 4}});
  CHECK(t.shape() == std::vector<int>{3, 2});
  CHECK(is_standard(t));
  CHECK(transpose(t).rows == Rows{{1, 2}, {3, 4}, {7}});
  CHECK(tableau_descents(Tableau{Rows{{1, 3}, {2}}}) == PositionSet{1});
  CHECK(reverse_bump(t, 1) == 3);
  CHECK(t.rows == Rows{{1, 4, 7}, {2}});
  CHECK_FALSE(is_standard(Tableau{Rows{{2, 1}}}));
}

TEST_CASE("worked example") {
  const auto g = parse_element("[5,-2,-1,-4,6,-3,-7]", wreath_group(2, 7));
  const auto t = rs_correspondence(g);
  CHECK(t.p0.rows == Rows{{5, 6}});
  CHECK(t.p1.rows == Rows{{1, 3, 7}, {2, 4}});
  CHECK(t.q0.rows == Rows{{1, 5}});
  CHECK(t.q1.rows == Rows{{2, 4, 7}, {3, 6}});
  CHECK(rs_inverse(t) == g);
  CHECK(format_element(rs_transpose_map(g), WindowStyle::Signed) == "[5,-3,-7,-1,6,-4,-2]");
}

TEST_CASE("identity") {
  const auto t = rs_correspondence(identity_element(wreath_group(2, 4)));
  CHECK(t.p0.rows == Rows{{1, 2, 3, 4}});
  CHECK(t.q0.rows == Rows{{1, 2, 3, 4}});
  CHECK(t.p1.empty());
  CHECK(t.q1.empty());
}

TEST_CASE("round trip and descent bookkeeping on B4") {
  std::size_t count = 0;
  for (const auto& g : enumerate(wreath_group(2, 4))) {
    const auto t = rs_correspondence(g);
    CHECK(rs_inverse(t) == g);
    const auto split = bn_descent_split(g);
    const auto inv = bn_descent_split(inverse(g));
    CHECK(t.q1.content() == split.neg);
    CHECK(t.p1.content() == inv.neg);
    CHECK(tableau_descents(t.q0) == split.hdes0);
    CHECK(tableau_descents(t.q1) == split.hdes1);
    CHECK(tableau_descents(t.p0) == inv.hdes0);
    CHECK(tableau_descents(t.p1) == inv.hdes1);
    CHECK(shifted_pairs(t.q0, t.q1) == split.desPM);
    CHECK(shifted_pairs(t.p0, t.p1) == inv.desPM);
    CHECK(holds(t.q1, 1) == split.d0);
    CHECK(holds(t.p1, 1) == inv.d0);
    ++count;
  }
  CHECK(count == 384);
}

TEST_CASE("transpose map") {
  for (int n : {4, 5}) {
    std::set<ColoredPermutation> images;
    for (const auto& g : enumerate(wreath_group(2, n))) {
      const auto img = rs_transpose_map(g);
      images.insert(img.lift());
      CHECK(bn_descent_split(img).neg == bn_descent_split(g).neg);
      CHECK(des_set(g, Order::Color) == des_set(img, Order::Prime));
      CHECK(des_set(inverse(g), Order::Color) == des_set(inverse(img), Order::Prime));
    }
    CHECK(images.size() == (n == 4 ? 384u : 3840u));
  }
  for (const auto& g : enumerate(wreath_group(1, 4))) {
    const auto lifted = canonicalize(g.lift(), wreath_group(2, 4));
    CHECK(rs_transpose_map(lifted) == lifted);
  }
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(rs_correspondence(identity_element(wreath_group(3, 2))), ScopeError);
  Bitableau bad;
  bad.p0.rows = Rows{{1, 2}};
  bad.q0.rows = Rows{{1}, {2}};
  CHECK_THROWS_AS(rs_inverse(bad), ShapeMismatchError);
  Bitableau gap;
  gap.p0.rows = Rows{{1, 3}};
  gap.q0.rows = Rows{{1, 2}};
  CHECK_THROWS_AS(rs_inverse(gap), ShapeMismatchError);
}
