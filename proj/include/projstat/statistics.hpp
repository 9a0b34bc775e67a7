#pragma once

// Descent-type statistics on G(r,p,s,n).

#include <compare>
#include <span>
#include <vector>

#include "projstat/group.hpp"

namespace projstat {

/// The two total orders on colored values.
///   Color: 1^{r-1} < ... < n^{r-1} < ... < 1^1 < ... < n^1 < 0 < 1 < ... < n
///   Prime: n^{r-1} < ... < n^1 < ... < 1^{r-1} < ... < 1^1 < 0 < 1 < ... < n
enum class Order { Color, Prime };

/// A value in [0, n] with a color; 0 is always uncolored.
struct ColoredValue {
  int value = 0;
  int color = 0;
};

std::strong_ordering compare(Order order, ColoredValue a, ColoredValue b);

/// Sorted positions.
using PositionSet = std::vector<int>;

struct StatRecord {
  int desG = 0;
  int desA = 0;
  int maj = 0;
  int fmaj = 0;
  int fdes = 0;
  int des = 0;
  int col = 0;
  int invAbs = 0;
  int signAbs = 1;
  PositionSet hdes;
  std::vector<int> hvec;
  std::vector<int> kvec;
  std::vector<int> lambda;
  int colorClass = 0;  // R_r of the canonical lift's color sum

  friend bool operator==(const StatRecord&, const StatRecord&) = default;
};

StatRecord stat_record(const ProjectiveElement& g);

/// Homogeneous descents: i in [n-1] with c_i = c_{i+1} and sigma(i) > sigma(i+1).
PositionSet homogeneous_descents(const ProjectiveElement& g);

/// The partition lambda(g), lambda_i = r*h_i + k_i.
std::vector<int> flag_partition(const ProjectiveElement& g);

/// Same, from a raw lift with an explicit (r, s).
std::vector<int> flag_partition(const ColoredPermutation& lift, int r, int s);

int flag_major(const ProjectiveElement& g);
int flag_descents(const ProjectiveElement& g);
/// floor((s*lambda_1 + r - s)/r)
int descents(const ProjectiveElement& g);
/// Sum of R_{r/s}(c_i).
int color_statistic(const ProjectiveElement& g);

int inversions(std::span<const int> sigma);

/// Descent set in [0, n-1] with the convention g(0) = 0. Order::Prime is
/// only defined on wreath products (throws OrderScopeError otherwise).
PositionSet des_set(const ProjectiveElement& g, Order order);

/// r * (sum of positive descents in the prime order) + col.
int fmaj_prime(const ProjectiveElement& g);

/// sum_i R_k(f_i).
int col_residues(std::span<const int> f, int k);

/// Descent decomposition of a signed permutation (r = 2, p = s = 1).
struct BnDescentSplit {
  PositionSet hdes0;  // g(i) > g(i+1) > 0
  PositionSet hdes1;  // 0 > g(i) > g(i+1)
  PositionSet desPM;  // g(i) > 0 > g(i+1)
  bool d0 = false;    // g(1) < 0
  PositionSet nn;     // g(i) < 0 and g(i+1) < 0
  PositionSet neg;    // positions carrying color 1

  /// hdes0 + hdes1 + desPM + {0 if d0}
  PositionSet descent_union() const;
  /// hdes0 + (nn - hdes1) + desPM + {0 if d0}
  PositionSet prime_descent_union() const;
};

BnDescentSplit bn_descent_split(const ProjectiveElement& g);

}  // namespace projstat
