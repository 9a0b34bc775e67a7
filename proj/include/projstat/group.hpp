#pragma once

// Colored permutations, the reflection groups G(r,p,n) and their scalar
// quotients G(r,p,s,n).

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "projstat/errors.hpp"

namespace projstat {

/// Residue of x modulo m, always in [0, m-1] (also for negative x).
constexpr int residue(long long x, int m) {
  long long rem = x % m;
  return static_cast<int>(rem < 0 ? rem + m : rem);
}

/// Parameters (r, p, s, n) of G(r,p,s,n). Only make_group builds valid ones.
struct GroupDescriptor {
  int r = 1;
  int p = 1;
  int s = 1;
  int n = 1;

  /// Shift between consecutive lifts of a class, r/s.
  int lift_step() const { return r / s; }
  bool is_wreath() const { return p == 1 && s == 1; }

  /// r^n * n! / (p*s); saturates at UINT64_MAX.
  std::uint64_t order() const;

  std::string to_string() const;

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

/// Validates p|r, s|r and ps|rn. Throws DivisibilityError naming the failed
/// condition, RangeError for non-positive arguments.
GroupDescriptor make_group(int r, int p, int s, int n);

/// Parses "G(r,p,s,n)".
GroupDescriptor parse_group(std::string_view text);

/// The wreath product G(r,n) = G(r,1,1,n).
inline GroupDescriptor wreath_group(int r, int n) { return make_group(r, 1, 1, n); }

/// A permutation with a color in [0, r-1] attached to every position.
/// Stored 0-based: sigma[i-1] is the value at position i (values are 1..n),
/// colors[i-1] is c_i.
struct ColoredPermutation {
  std::vector<int> sigma;
  std::vector<int> colors;

  int size() const { return static_cast<int>(sigma.size()); }
  long long color_sum() const;

  friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;
  friend auto operator<=>(const ColoredPermutation&, const ColoredPermutation&) = default;
};

ColoredPermutation identity_permutation(int n);

/// Checks bijectivity of sigma and the color range [0, r-1].
bool is_valid(const ColoredPermutation& w, int r);

/// Membership of a valid colored permutation in G(r,p,n).
bool in_reflection_group(const ColoredPermutation& w, int r, int p);

/// An element of G(r,p,s,n), held through its canonical lift: the unique
/// lift whose last color lies in [0, r/s).
class ProjectiveElement {
 public:
  const GroupDescriptor& group() const { return group_; }
  const ColoredPermutation& lift() const { return lift_; }
  int rank() const { return group_.n; }

  /// 1-based accessors on the canonical lift.
  int value(int position) const { return lift_.sigma[position - 1]; }
  int color(int position) const { return lift_.colors[position - 1]; }

  bool is_identity() const;

  friend bool operator==(const ProjectiveElement&, const ProjectiveElement&) = default;
  friend auto operator<=>(const ProjectiveElement& a, const ProjectiveElement& b) {
    return a.lift_ <=> b.lift_;
  }

 private:
  friend ProjectiveElement canonicalize(ColoredPermutation, const GroupDescriptor&);
  ProjectiveElement(GroupDescriptor group, ColoredPermutation lift)
      : group_(group), lift_(std::move(lift)) {}

  GroupDescriptor group_;
  ColoredPermutation lift_;
};

/// Maps a lift in G(r,p,n) to its class. Throws MembershipError when the
/// color sum is not divisible by p, RangeError on malformed input.
ProjectiveElement canonicalize(ColoredPermutation lift, const GroupDescriptor& group);

ProjectiveElement identity_element(const GroupDescriptor& group);

/// Product (d;tau)(c;sigma) = (R_r(c_i + d_sigma(i)); tau sigma), applied to
/// canonical lifts and re-canonicalized.
ProjectiveElement multiply(const ProjectiveElement& a, const ProjectiveElement& b);
ProjectiveElement inverse(const ProjectiveElement& g);

inline ProjectiveElement operator*(const ProjectiveElement& a, const ProjectiveElement& b) {
  return multiply(a, b);
}

/// Raw product on colored permutations of G(r,n).
ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b, int r);
ColoredPermutation invert(const ColoredPermutation& w, int r);

/// The s lifts of g in G(r,p,n); lift j adds j*r/s to every color.
std::vector<ColoredPermutation> lifts(const ProjectiveElement& g);

// ---------------------------------------------------------------------------
// Enumeration

inline constexpr std::uint64_t kDefaultBudget = 1'000'000;

/// Enumeration budget: PROJSTAT_BUDGET when set, kDefaultBudget otherwise.
std::uint64_t default_budget();

/// Throws BudgetExceededError when the group order exceeds the budget.
void check_budget(const GroupDescriptor& group, std::uint64_t budget);

/// Visits every element once: lexicographic in the one-line form of sigma,
/// then in the color vector of the canonical lift. The callback receives
/// the canonical lift by reference; it is valid only during the call.
void for_each_lift(const GroupDescriptor& group,
                   const std::function<void(const ColoredPermutation&)>& visit,
                   std::uint64_t budget = default_budget());

/// Same order restricted to permutations with lexicographic rank in
/// [first_rank, last_rank). Used to split work across threads.
void for_each_lift_in_ranks(const GroupDescriptor& group, std::uint64_t first_rank,
                            std::uint64_t last_rank,
                            const std::function<void(const ColoredPermutation&)>& visit);

/// Pull-style stream over the same order.
class ElementStream {
 public:
  explicit ElementStream(const GroupDescriptor& group,
                         std::uint64_t budget = default_budget());

  std::optional<ProjectiveElement> next();

 private:
  bool advance_colors();

  GroupDescriptor group_;
  ColoredPermutation current_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<ProjectiveElement> enumerate(const GroupDescriptor& group,
                                         std::uint64_t budget = default_budget());

/// Lexicographic unranking of permutations of [n] (values 1..n).
std::vector<int> permutation_from_rank(int n, std::uint64_t rank);
std::uint64_t factorial(int n);

// ---------------------------------------------------------------------------
// Window notation: "[2^2,7^3,1]"; for r = 2, "-k" is an alias of "k^1".

enum class WindowStyle { Caret, Signed };

/// Parses a window into a colored permutation with colors in [0, r-1].
ColoredPermutation parse_window(std::string_view text, int r);

ProjectiveElement parse_element(std::string_view text, const GroupDescriptor& group);

std::string format_window(const ColoredPermutation& w, WindowStyle style = WindowStyle::Caret);
std::string format_element(const ProjectiveElement& g, WindowStyle style = WindowStyle::Caret);

}  // namespace projstat
