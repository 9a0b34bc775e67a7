#include "projstat/statistics.hpp"

#include <algorithm>
#include <iterator>
#include <tuple>

namespace projstat {

namespace {

// Colored values sort before 0, uncolored after.
auto sort_key(Order order, ColoredValue x) {
  if (x.color == 0) return std::tuple{1, x.value, 0};
  if (order == Order::Color) return std::tuple{0, -x.color, x.value};
  return std::tuple{0, -x.value, -x.color};
}

ColoredValue entry(const ColoredPermutation& w, int position) {
  if (position == 0) return {0, 0};
  return {w.sigma[position - 1], w.colors[position - 1]};
}

PositionSet set_union(const PositionSet& a, const PositionSet& b) {
  PositionSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

PositionSet raw_des_set(const ColoredPermutation& w, Order order) {
  PositionSet out;
  for (int i = 0; i < w.size(); ++i) {
    if (compare(order, entry(w, i), entry(w, i + 1)) == std::strong_ordering::greater) {
      out.push_back(i);
    }
  }
  return out;
}

}  // namespace

std::strong_ordering compare(Order order, ColoredValue a, ColoredValue b) {
  return sort_key(order, a) <=> sort_key(order, b);
}

PositionSet homogeneous_descents(const ProjectiveElement& g) {
  const ColoredPermutation& w = g.lift();
  PositionSet out;
  for (int i = 1; i < w.size(); ++i) {
    if (w.colors[i - 1] == w.colors[i] && w.sigma[i - 1] > w.sigma[i]) out.push_back(i);
  }
  return out;
}

std::vector<int> flag_partition(const ColoredPermutation& lift, int r, int s) {
  const int n = lift.size();
  std::vector<int> lambda(n);
  int h = 0;
  int k = residue(lift.colors[n - 1], r / s);
  lambda[n - 1] = k;
  for (int i = n - 2; i >= 0; --i) {
    if (lift.colors[i] == lift.colors[i + 1] && lift.sigma[i] > lift.sigma[i + 1]) ++h;
    k += residue(lift.colors[i] - lift.colors[i + 1], r);
    lambda[i] = r * h + k;
  }
  return lambda;
}

std::vector<int> flag_partition(const ProjectiveElement& g) {
  return flag_partition(g.lift(), g.group().r, g.group().s);
}

int flag_major(const ProjectiveElement& g) {
  const auto lambda = flag_partition(g);
  int total = 0;
  for (int part : lambda) total += part;
  return total;
}

int flag_descents(const ProjectiveElement& g) { return flag_partition(g).front(); }

int descents(const ProjectiveElement& g) {
  const GroupDescriptor& grp = g.group();
  return (grp.s * flag_descents(g) + grp.r - grp.s) / grp.r;
}

int color_statistic(const ProjectiveElement& g) {
  return col_residues(g.lift().colors, g.group().lift_step());
}

int inversions(std::span<const int> sigma) {
  int count = 0;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      if (sigma[i] > sigma[j]) ++count;
    }
  }
  return count;
}

int col_residues(std::span<const int> f, int k) {
  int total = 0;
  for (int x : f) total += residue(x, k);
  return total;
}

StatRecord stat_record(const ProjectiveElement& g) {
  const GroupDescriptor& grp = g.group();
  const ColoredPermutation& w = g.lift();
  const int n = grp.n;
  StatRecord rec;

  const PositionSet desG = raw_des_set(w, Order::Color);
  rec.desG = static_cast<int>(desG.size());
  for (int i : desG) {
    if (i == 0) continue;
    ++rec.desA;
    rec.maj += i;
  }

  rec.hdes = homogeneous_descents(g);
  rec.hvec.assign(n, 0);
  rec.kvec.assign(n, 0);
  rec.kvec[n - 1] = residue(w.colors[n - 1], grp.lift_step());
  for (int i = n - 2; i >= 0; --i) {
    rec.kvec[i] = rec.kvec[i + 1] + residue(w.colors[i] - w.colors[i + 1], grp.r);
  }
  for (int i : rec.hdes) {
    for (int j = 0; j < i; ++j) ++rec.hvec[j];  // h_j counts descents at positions >= j
  }
  rec.lambda.resize(n);
  for (int i = 0; i < n; ++i) {
    rec.lambda[i] = grp.r * rec.hvec[i] + rec.kvec[i];
    rec.fmaj += rec.lambda[i];
  }
  rec.fdes = rec.lambda.front();
  rec.des = (grp.s * rec.fdes + grp.r - grp.s) / grp.r;
  rec.col = col_residues(w.colors, grp.lift_step());
  rec.invAbs = inversions(w.sigma);
  rec.signAbs = (rec.invAbs % 2 == 0) ? 1 : -1;
  rec.colorClass = residue(w.color_sum(), grp.r);
  return rec;
}

PositionSet des_set(const ProjectiveElement& g, Order order) {
  if (order == Order::Prime && !g.group().is_wreath()) {
    throw OrderScopeError("the prime order is only defined on G(r,n); got " +
                          g.group().to_string());
  }
  return raw_des_set(g.lift(), order);
}

int fmaj_prime(const ProjectiveElement& g) {
  int sum = 0;
  for (int i : des_set(g, Order::Prime)) sum += i;
  return g.group().r * sum + color_statistic(g);
}

PositionSet BnDescentSplit::descent_union() const {
  PositionSet out = set_union(set_union(hdes0, hdes1), desPM);
  if (d0) out.insert(out.begin(), 0);
  return out;
}

PositionSet BnDescentSplit::prime_descent_union() const {
  PositionSet nn_minus;
  std::set_difference(nn.begin(), nn.end(), hdes1.begin(), hdes1.end(),
                      std::back_inserter(nn_minus));
  PositionSet out = set_union(set_union(hdes0, nn_minus), desPM);
  if (d0) out.insert(out.begin(), 0);
  return out;
}

BnDescentSplit bn_descent_split(const ProjectiveElement& g) {
  const GroupDescriptor& grp = g.group();
  if (grp.r != 2 || !grp.is_wreath()) {
    throw ScopeError("descent splitting needs a signed permutation group, got " + grp.to_string());
  }
  const ColoredPermutation& w = g.lift();
  const int n = grp.n;
  BnDescentSplit out;
  for (int i = 1; i <= n; ++i) {
    if (w.colors[i - 1] == 1) out.neg.push_back(i);
  }
  out.d0 = w.colors[0] == 1;
  for (int i = 1; i < n; ++i) {
    const ColoredValue a = entry(w, i);
    const ColoredValue b = entry(w, i + 1);
    const bool descends = compare(Order::Color, a, b) == std::strong_ordering::greater;
    const bool a_neg = a.color == 1;
    const bool b_neg = b.color == 1;
    if (a_neg && b_neg) out.nn.push_back(i);
    if (!descends) continue;
    if (!a_neg && !b_neg) {
      out.hdes0.push_back(i);
    } else if (a_neg && b_neg) {
      out.hdes1.push_back(i);
    } else if (!a_neg && b_neg) {
      out.desPM.push_back(i);
    }
  }
  return out;
}

}  // namespace projstat
