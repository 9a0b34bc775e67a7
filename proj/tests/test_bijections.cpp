#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "projstat/bijections.hpp"
#include "projstat/errors.hpp"
#include "projstat/statistics.hpp"

using namespace projstat;

TEST_CASE("nvec examples") {
  const auto b2 = wreath_group(2, 2);
  const auto g = parse_element("[1^1,2^1]", b2);
  CHECK(nvec_decode(g, {1, 0}, 0) == std::vector<int>{3, 1});
  const auto t = nvec_encode({3, 1}, b2);
  CHECK(t.element == g);
  CHECK(t.lambda == Partition{1, 0});
  CHECK(t.h == 0);
  CHECK(nvec_decode(identity_element(b2), {0, 0}, 0) == std::vector<int>{0, 0});
  const auto z = nvec_encode({0, 0, 0}, make_group(4, 2, 2, 3));
  CHECK(z.element.is_identity());
  CHECK(z.lambda == Partition{0, 0, 0});
  CHECK(z.h == 0);
}

TEST_CASE("nvec errors") {
  const auto group = make_group(4, 2, 2, 3);
  CHECK_THROWS_AS(nvec_encode({1, 0, 0}, group), MembershipError);
  CHECK_THROWS_AS(nvec_decode(identity_element(group), {0, 0, 0}, 2), RangeError);
  CHECK_THROWS_AS(nvec_decode(identity_element(group), {0, 1, 0}, 0), RangeError);
}

TEST_CASE("nvec round trip on a box") {
  const auto group = make_group(4, 2, 2, 3);
  int count = 0;
  for (int a = 0; a <= 7; ++a) {
    for (int b = 0; b <= 7; ++b) {
      for (int c = 0; c <= 7; ++c) {
        if ((a + b + c) % 2) continue;
        const std::vector<int> f{a, b, c};
        const auto t = nvec_encode(f, group);
        CHECK(nvec_decode(t.element, t.lambda, t.h) == f);
        ++count;
      }
    }
  }
  CHECK(count == 256);
}

TEST_CASE("nvec statistics on random triples") {
  const auto group = make_group(6, 2, 3, 3);
  const auto all = enumerate(group);
  std::mt19937 rng(17);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& g = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    Partition lambda(3);
    lambda[2] = std::uniform_int_distribution<int>(0, 2)(rng);
    lambda[1] = lambda[2] + std::uniform_int_distribution<int>(0, 2)(rng);
    lambda[0] = lambda[1] + std::uniform_int_distribution<int>(0, 2)(rng);
    const int h = std::uniform_int_distribution<int>(0, 2)(rng);
    const auto f = nvec_decode(g, lambda, h);
    const auto rec = stat_record(g);
    int sum = 0, top = 0;
    for (int x : f) {
      sum += x;
      top = std::max(top, x);
    }
    CHECK(top == rec.lambda[0] + 6 * lambda[0] + 2 * h);
    CHECK(sum == rec.fmaj + 6 * (lambda[0] + lambda[1] + lambda[2]) + 6 * h);
    CHECK(col_residues(f, 2) == rec.col);
    CHECK(sum % 2 == 0);
  }
}

TEST_CASE("bipartite examples") {
  const auto b2 = wreath_group(2, 2);
  const auto z = bipartite_from_tuple(identity_element(b2), {0, 0}, {0, 0}, 0, 0);
  CHECK(z.top == std::vector<int>{0, 0});
  CHECK(z.bottom == std::vector<int>{0, 0});
  const auto f = bipartite_from_tuple(parse_element("[1^1,2^1]", b2), {1, 0}, {0, 0}, 0, 0);
  CHECK(f.top == std::vector<int>{3, 1});
  CHECK(f.bottom == std::vector<int>{1, 1});
  CHECK(is_bipartite_partition(f));
  CHECK(bipartite_type(f, 2, 1) == 0);
  CHECK_FALSE(is_bipartite_partition({{1, 2}, {0, 0}}));
  CHECK(bipartite_type({{1, 1}, {0, 1}}, 2, 1) == -1);
  CHECK_THROWS_AS(bipartite_from_tuple(identity_element(b2), {0, 0}, {0, 0}, 1, 0), RangeError);
}

TEST_CASE("bipartite map: membership, statistics and injectivity") {
  const auto group = make_group(6, 1, 3, 2);
  const auto all = enumerate(group);
  std::mt19937 rng(23);
  for (int trial = 0; trial < 500; ++trial) {
    const auto& g = all[std::uniform_int_distribution<std::size_t>(0, all.size() - 1)(rng)];
    Partition lambda{0, 0}, mu{0, 0};
    lambda[1] = std::uniform_int_distribution<int>(0, 2)(rng);
    lambda[0] = lambda[1] + std::uniform_int_distribution<int>(0, 2)(rng);
    mu[1] = std::uniform_int_distribution<int>(0, 2)(rng);
    mu[0] = mu[1] + std::uniform_int_distribution<int>(0, 2)(rng);
    const int h = std::uniform_int_distribution<int>(0, 2)(rng);
    const int k = std::uniform_int_distribution<int>(0, 2)(rng);
    const auto f = bipartite_from_tuple(g, lambda, mu, h, k);
    CHECK(is_bipartite_partition(f));
    CHECK(bipartite_type(f, 6, 3) >= 0);
    const auto rec = stat_record(g);
    const auto inv = stat_record(inverse(g));
    int top_sum = 0, bottom_sum = 0, top_max = 0, bottom_max = 0;
    for (int i = 0; i < 2; ++i) {
      top_sum += f.top[i];
      bottom_sum += f.bottom[i];
      top_max = std::max(top_max, f.top[i]);
      bottom_max = std::max(bottom_max, f.bottom[i]);
    }
    CHECK(top_max == rec.fdes + 6 * lambda[0] + 2 * h);
    CHECK(bottom_max == inv.fdes + 6 * mu[0] + 2 * k);
    CHECK(top_sum == rec.fmaj + 6 * (lambda[0] + lambda[1]) + 4 * h);
    CHECK(bottom_sum == inv.fmaj + 6 * (mu[0] + mu[1]) + 4 * k);
    CHECK(col_residues(f.top, 2) == rec.col);
    CHECK(col_residues(f.bottom, 2) == inv.col);
  }

  // injective on a box of tuples
  std::set<Bipartite2Partition> images;
  std::size_t tuples = 0;
  const std::vector<Partition> parts{{0, 0}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {2, 2}};
  for (const auto& g : all) {
    for (const auto& lambda : parts) {
      for (const auto& mu : parts) {
        for (int h = 0; h < 3; ++h) {
          for (int k = 0; k < 3; ++k) {
            images.insert(bipartite_from_tuple(g, lambda, mu, h, k));
            ++tuples;
          }
        }
      }
    }
  }
  CHECK(images.size() == tuples);
}

TEST_CASE("order involution") {
  const auto b2 = wreath_group(2, 2);
  CHECK(order_involution(parse_element("[1^1,2^1]", b2)) == parse_element("[2^1,1^1]", b2));
  for (const auto& g : enumerate(wreath_group(1, 4))) CHECK(order_involution(g) == g);
  for (const auto& g : enumerate(wreath_group(2, 4))) {
    const auto img = order_involution(g);
    CHECK(des_set(img, Order::Color) == des_set(g, Order::Prime));
    CHECK(color_statistic(img) == color_statistic(g));
    CHECK(order_involution(img) == g);
  }
  std::set<ColoredPermutation> images;
  for (const auto& g : enumerate(wreath_group(3, 3))) {
    const auto img = order_involution(g);
    CHECK(des_set(img, Order::Color) == des_set(g, Order::Prime));
    CHECK(color_statistic(img) == color_statistic(g));
    CHECK(flag_major(img) == fmaj_prime(g));
    images.insert(img.lift());
  }
  CHECK(images.size() == 162);
  CHECK_THROWS_AS(order_involution(identity_element(make_group(2, 2, 1, 2))), ScopeError);
  CHECK_THROWS_AS(order_involution(identity_element(make_group(2, 1, 2, 2))), ScopeError);
}

TEST_CASE("(Des, col) and (Des', col) are equidistributed") {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 4; ++n) {
      std::map<std::pair<PositionSet, int>, int> a, b;
      for (const auto& g : enumerate(wreath_group(r, n))) {
        ++a[{des_set(g, Order::Color), color_statistic(g)}];
        ++b[{des_set(g, Order::Prime), color_statistic(g)}];
      }
      CHECK(a == b);
    }
  }
}
