#pragma once

// Encodings of integer vectors and 2-partite partitions by group elements
// plus partitions, and the involution exchanging the two colored orders.

#include <vector>

#include "projstat/group.hpp"

namespace projstat {

/// Weakly decreasing sequence of nonnegative integers, padded to length n.
using Partition = std::vector<int>;

bool is_partition(const Partition& lambda);

/// f in N^n, the triple encoding (g, lambda, h).
struct NVecTriple {
  ProjectiveElement element;
  Partition lambda;
  int h = 0;
};

/// f_{sigma(i)} = lambda_i(g) + r*lambda_i + h*r/s. Throws RangeError when
/// h is outside [0, s-1] or lambda is not a partition of length n.
std::vector<int> nvec_decode(const ProjectiveElement& g, const Partition& lambda, int h);

/// Inverse of nvec_decode. Throws MembershipError when sum(f) is not
/// divisible by p.
NVecTriple nvec_encode(const std::vector<int>& f, const GroupDescriptor& group);

/// Two rows of length n: row one weakly decreasing, row two weakly
/// decreasing on ties of row one.
struct Bipartite2Partition {
  std::vector<int> top;
  std::vector<int> bottom;

  friend bool operator==(const Bipartite2Partition&, const Bipartite2Partition&) = default;
  friend auto operator<=>(const Bipartite2Partition&, const Bipartite2Partition&) = default;
};

bool is_bipartite_partition(const Bipartite2Partition& f);

/// Type l in [0, s-1] if every column sum is congruent to l*r/s mod r, -1
/// if the column sums disagree (or f is not a 2-partite partition).
int bipartite_type(const Bipartite2Partition& f, int r, int s);

/// f^(1)_i = lambda_i(g) + r*lambda_i + h*r/s,
/// f^(2)_i = lambda_{|g(i)|}(g^-1) + r*mu_{|g(i)|} + k*r/s.
/// Requires g in G(r,1,s,n) and h, k in [0, s-1].
Bipartite2Partition bipartite_from_tuple(const ProjectiveElement& g, const Partition& lambda,
                                         const Partition& mu, int h, int k);

/// Relabels the window of g in G(r,n) by the unique bijection of its value
/// set that carries the prime order onto the color order.
ProjectiveElement order_involution(const ProjectiveElement& g);

}  // namespace projstat
