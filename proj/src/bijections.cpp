#include "projstat/bijections.hpp"

#include <algorithm>
#include <numeric>

#include "projstat/statistics.hpp"

namespace projstat {

namespace {

void require_padded_partition(const Partition& lambda, int n, const char* what) {
  if (static_cast<int>(lambda.size()) != n || !is_partition(lambda)) {
    throw RangeError(std::string(what) + " must be a partition with exactly " +
                     std::to_string(n) + " parts (zeros allowed)");
  }
}

void require_lift_index(int h, int s, const char* what) {
  if (h < 0 || h >= s) {
    throw RangeError(std::string(what) + "=" + std::to_string(h) + " is outside [0," +
                     std::to_string(s - 1) + "]");
  }
}

}  // namespace

bool is_partition(const Partition& lambda) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    if (lambda[i] < 0) return false;
    if (i > 0 && lambda[i] > lambda[i - 1]) return false;
  }
  return true;
}

std::vector<int> nvec_decode(const ProjectiveElement& g, const Partition& lambda, int h) {
  const GroupDescriptor& grp = g.group();
  require_padded_partition(lambda, grp.n, "lambda");
  require_lift_index(h, grp.s, "h");
  const auto lam_g = flag_partition(g);
  std::vector<int> f(grp.n);
  for (int i = 0; i < grp.n; ++i) {
    f[g.lift().sigma[i] - 1] = lam_g[i] + grp.r * lambda[i] + h * grp.lift_step();
  }
  return f;
}

NVecTriple nvec_encode(const std::vector<int>& f, const GroupDescriptor& group) {
  const int n = group.n;
  if (static_cast<int>(f.size()) != n) {
    throw RangeError("vector length " + std::to_string(f.size()) + " does not match rank " +
                     std::to_string(n));
  }
  if (std::any_of(f.begin(), f.end(), [](int x) { return x < 0; })) {
    throw RangeError("vector entries must be nonnegative");
  }
  const long long total = std::accumulate(f.begin(), f.end(), 0LL);
  if (residue(total, group.p) != 0) {
    throw MembershipError("|f|=" + std::to_string(total) + " is not divisible by p=" +
                          std::to_string(group.p));
  }
  // Values sorted by f descending, ties by value ascending.
  ColoredPermutation lift;
  lift.sigma.resize(n);
  std::iota(lift.sigma.begin(), lift.sigma.end(), 1);
  std::stable_sort(lift.sigma.begin(), lift.sigma.end(),
                   [&](int a, int b) { return f[a - 1] > f[b - 1]; });
  lift.colors.resize(n);
  std::vector<int> mu(n);
  for (int i = 0; i < n; ++i) {
    mu[i] = f[lift.sigma[i] - 1];
    lift.colors[i] = residue(mu[i], group.r);
  }
  ProjectiveElement g = canonicalize(std::move(lift), group);
  const auto lam_g = flag_partition(g);

  const int step = group.lift_step();
  const int offset = residue(mu[n - 1] - lam_g[n - 1], group.r);
  if (offset % step != 0) throw RangeError("internal: mu - lambda(g) is not g-compatible");
  NVecTriple out{g, Partition(n), offset / step};
  for (int i = 0; i < n; ++i) {
    const int diff = mu[i] - lam_g[i] - offset;
    if (diff < 0 || diff % group.r != 0) {
      throw RangeError("internal: mu - lambda(g) is not g-compatible");
    }
    out.lambda[i] = diff / group.r;
  }
  if (!is_partition(out.lambda)) throw RangeError("internal: recovered lambda is not a partition");
  return out;
}

bool is_bipartite_partition(const Bipartite2Partition& f) {
  if (f.top.size() != f.bottom.size()) return false;
  for (std::size_t i = 0; i < f.top.size(); ++i) {
    if (f.top[i] < 0 || f.bottom[i] < 0) return false;
    if (i == 0) continue;
    if (f.top[i] > f.top[i - 1]) return false;
    if (f.top[i] == f.top[i - 1] && f.bottom[i] > f.bottom[i - 1]) return false;
  }
  return true;
}

int bipartite_type(const Bipartite2Partition& f, int r, int s) {
  if (!is_bipartite_partition(f)) return -1;
  const int step = r / s;
  int type = -1;
  for (std::size_t i = 0; i < f.top.size(); ++i) {
    const int col = residue(f.top[i] + f.bottom[i], r);
    if (col % step != 0) return -1;
    const int l = col / step;
    if (type >= 0 && l != type) return -1;
    type = l;
  }
  return type < 0 ? 0 : type;
}

Bipartite2Partition bipartite_from_tuple(const ProjectiveElement& g, const Partition& lambda,
                                         const Partition& mu, int h, int k) {
  const GroupDescriptor& grp = g.group();
  if (grp.p != 1) {
    throw ScopeError("2-partite encoding is defined on G(r,1,s,n), got " + grp.to_string());
  }
  require_padded_partition(lambda, grp.n, "lambda");
  require_padded_partition(mu, grp.n, "mu");
  require_lift_index(h, grp.s, "h");
  require_lift_index(k, grp.s, "k");
  const auto lam_g = flag_partition(g);
  const auto lam_inv = flag_partition(inverse(g));
  const int step = grp.lift_step();
  Bipartite2Partition out;
  out.top.resize(grp.n);
  out.bottom.resize(grp.n);
  for (int i = 0; i < grp.n; ++i) {
    const int v = g.lift().sigma[i] - 1;
    out.top[i] = lam_g[i] + grp.r * lambda[i] + h * step;
    out.bottom[i] = lam_inv[v] + grp.r * mu[v] + k * step;
  }
  return out;
}

ProjectiveElement order_involution(const ProjectiveElement& g) {
  const GroupDescriptor& grp = g.group();
  if (!grp.is_wreath()) {
    throw ScopeError("the order involution is defined on G(r,n), got " + grp.to_string());
  }
  const int n = grp.n;
  const ColoredPermutation& w = g.lift();
  std::vector<ColoredValue> values(n);
  for (int i = 0; i < n; ++i) values[i] = {w.sigma[i], w.colors[i]};

  auto by = [&](Order order) {
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
      return compare(order, values[a], values[b]) == std::strong_ordering::less;
    });
    return idx;
  };
  // iota(x) < iota(y) iff x <' y: the j-th smallest in <' goes to the j-th
  // smallest in <.
  const auto prime_rank = by(Order::Prime);
  const auto color_rank = by(Order::Color);
  ColoredPermutation out = w;
  for (int j = 0; j < n; ++j) {
    const ColoredValue target = values[color_rank[j]];
    out.sigma[prime_rank[j]] = target.value;
    out.colors[prime_rank[j]] = target.color;
  }
  return canonicalize(std::move(out), grp);
}

}  // namespace projstat
