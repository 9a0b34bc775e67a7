#include "projstat/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace projstat {

namespace {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

void require_same_group(const ProjectiveElement& a, const ProjectiveElement& b) {
  if (a.group() != b.group()) {
    throw GroupMismatchError("elements of " + a.group().to_string() + " and " +
                             b.group().to_string() + " cannot be combined");
  }
}

// Advances colors to the next vector (lexicographic) with c_i in [0, r) for
// i < n, c_n in [0, step) and color sum divisible by p. Returns false when
// exhausted.
bool next_colors(std::vector<int>& colors, int r, int step, int p) {
  const int n = static_cast<int>(colors.size());
  while (true) {
    int i = n - 1;
    while (i >= 0) {
      const int bound = (i == n - 1) ? step : r;
      if (++colors[i] < bound) break;
      colors[i] = 0;
      --i;
    }
    if (i < 0) return false;
    long long sum = std::accumulate(colors.begin(), colors.end(), 0LL);
    if (residue(sum, p) == 0) return true;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t GroupDescriptor::order() const {
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) total = saturating_mul(total, static_cast<std::uint64_t>(r));
  total = saturating_mul(total, factorial(n));
  if (total == std::numeric_limits<std::uint64_t>::max()) return total;
  return total / static_cast<std::uint64_t>(p * s);
}

std::string GroupDescriptor::to_string() const {
  std::ostringstream out;
  out << "G(" << r << ',' << p << ',' << s << ',' << n << ')';
  return out.str();
}

GroupDescriptor make_group(int r, int p, int s, int n) {
  if (r < 1 || p < 1 || s < 1 || n < 1) {
    throw RangeError("group parameters must be positive, got G(" + std::to_string(r) + "," +
                     std::to_string(p) + "," + std::to_string(s) + "," + std::to_string(n) + ")");
  }
  const GroupDescriptor g{r, p, s, n};
  if (r % p != 0) throw DivisibilityError(g.to_string() + ": p does not divide r");
  if (r % s != 0) throw DivisibilityError(g.to_string() + ": s does not divide r");
  if ((static_cast<long long>(r) * n) % (static_cast<long long>(p) * s) != 0) {
    throw DivisibilityError(g.to_string() + ": ps does not divide rn");
  }
  return g;
}

GroupDescriptor parse_group(std::string_view text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto expect = [&](char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c) {
      throw ParseError(std::string("expected '") + c + "' in group descriptor", pos);
    }
    ++pos;
  };
  auto number = [&] {
    skip_ws();
    int value = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError("expected integer in group descriptor", pos);
    pos = static_cast<std::size_t>(end - text.data());
    return value;
  };
  expect('G');
  expect('(');
  const int r = number();
  expect(',');
  const int p = number();
  expect(',');
  const int s = number();
  expect(',');
  const int n = number();
  expect(')');
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after group descriptor", pos);
  return make_group(r, p, s, n);
}

// ---------------------------------------------------------------------------

long long ColoredPermutation::color_sum() const {
  return std::accumulate(colors.begin(), colors.end(), 0LL);
}

ColoredPermutation identity_permutation(int n) {
  ColoredPermutation w;
  w.sigma.resize(n);
  std::iota(w.sigma.begin(), w.sigma.end(), 1);
  w.colors.assign(n, 0);
  return w;
}

bool is_valid(const ColoredPermutation& w, int r) {
  const int n = w.size();
  if (static_cast<int>(w.colors.size()) != n) return false;
  std::vector<char> seen(n + 1, 0);
  for (int v : w.sigma) {
    if (v < 1 || v > n || seen[v]) return false;
    seen[v] = 1;
  }
  return std::all_of(w.colors.begin(), w.colors.end(), [r](int c) { return c >= 0 && c < r; });
}

bool in_reflection_group(const ColoredPermutation& w, int r, int p) {
  return is_valid(w, r) && residue(w.color_sum(), p) == 0;
}

bool ProjectiveElement::is_identity() const {
  for (int i = 0; i < group_.n; ++i) {
    if (lift_.sigma[i] != i + 1 || lift_.colors[i] != 0) return false;
  }
  return true;
}

ProjectiveElement canonicalize(ColoredPermutation lift, const GroupDescriptor& group) {
  if (lift.size() != group.n || !is_valid(lift, group.r)) {
    throw RangeError("not a colored permutation of rank " + std::to_string(group.n) +
                     " with colors in [0," + std::to_string(group.r - 1) + "]");
  }
  if (residue(lift.color_sum(), group.p) != 0) {
    throw MembershipError("color sum " + std::to_string(lift.color_sum()) +
                          " is not divisible by p=" + std::to_string(group.p));
  }
  const int step = group.lift_step();
  const int shift = (lift.colors.back() / step) * step;
  if (shift != 0) {
    for (int& c : lift.colors) c = residue(c - shift, group.r);
  }
  return ProjectiveElement(group, std::move(lift));
}

ProjectiveElement identity_element(const GroupDescriptor& group) {
  return canonicalize(identity_permutation(group.n), group);
}

ColoredPermutation compose(const ColoredPermutation& a, const ColoredPermutation& b, int r) {
  // a = (d; tau), b = (c; sigma)
  const int n = a.size();
  ColoredPermutation out;
  out.sigma.resize(n);
  out.colors.resize(n);
  for (int i = 0; i < n; ++i) {
    const int sigma_i = b.sigma[i];
    out.sigma[i] = a.sigma[sigma_i - 1];
    out.colors[i] = residue(b.colors[i] + a.colors[sigma_i - 1], r);
  }
  return out;
}

ColoredPermutation invert(const ColoredPermutation& w, int r) {
  const int n = w.size();
  ColoredPermutation out;
  out.sigma.resize(n);
  out.colors.resize(n);
  for (int i = 0; i < n; ++i) out.sigma[w.sigma[i] - 1] = i + 1;
  // c_i(g^-1) = R_r(-c_{sigma^-1(i)})
  for (int i = 0; i < n; ++i) out.colors[i] = residue(-w.colors[out.sigma[i] - 1], r);
  return out;
}

ProjectiveElement multiply(const ProjectiveElement& a, const ProjectiveElement& b) {
  require_same_group(a, b);
  return canonicalize(compose(a.lift(), b.lift(), a.group().r), a.group());
}

ProjectiveElement inverse(const ProjectiveElement& g) {
  return canonicalize(invert(g.lift(), g.group().r), g.group());
}

std::vector<ColoredPermutation> lifts(const ProjectiveElement& g) {
  const GroupDescriptor& grp = g.group();
  std::vector<ColoredPermutation> out;
  out.reserve(grp.s);
  for (int j = 0; j < grp.s; ++j) {
    ColoredPermutation w = g.lift();
    for (int& c : w.colors) c = residue(c + j * grp.lift_step(), grp.r);
    out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::uint64_t factorial(int n) {
  std::uint64_t out = 1;
  for (int i = 2; i <= n; ++i) out = saturating_mul(out, static_cast<std::uint64_t>(i));
  return out;
}

std::vector<int> permutation_from_rank(int n, std::uint64_t rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (int i = n; i >= 1; --i) {
    const std::uint64_t block = factorial(i - 1);
    const auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return out;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("PROJSTAT_BUDGET")) {
    std::uint64_t value = 0;
    const std::string_view text(env);
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc{} && end == text.data() + text.size() && value > 0) return value;
  }
  return kDefaultBudget;
}

void check_budget(const GroupDescriptor& group, std::uint64_t budget) {
  const std::uint64_t order = group.order();
  if (order > budget) {
    throw BudgetExceededError(group.to_string() + " has order " + std::to_string(order) +
                              ", above the enumeration budget " + std::to_string(budget));
  }
}

void for_each_lift_in_ranks(const GroupDescriptor& group, std::uint64_t first_rank,
                            std::uint64_t last_rank,
                            const std::function<void(const ColoredPermutation&)>& visit) {
  const int n = group.n;
  last_rank = std::min(last_rank, factorial(n));
  if (first_rank >= last_rank) return;
  ColoredPermutation w;
  w.sigma = permutation_from_rank(n, first_rank);
  w.colors.assign(n, 0);
  for (std::uint64_t rank = first_rank; rank < last_rank; ++rank) {
    std::fill(w.colors.begin(), w.colors.end(), 0);
    // The all-zero vector always qualifies.
    do {
      visit(w);
    } while (next_colors(w.colors, group.r, group.lift_step(), group.p));
    std::next_permutation(w.sigma.begin(), w.sigma.end());
  }
}

void for_each_lift(const GroupDescriptor& group,
                   const std::function<void(const ColoredPermutation&)>& visit,
                   std::uint64_t budget) {
  check_budget(group, budget);
  for_each_lift_in_ranks(group, 0, factorial(group.n), visit);
}

ElementStream::ElementStream(const GroupDescriptor& group, std::uint64_t budget)
    : group_(group), current_(identity_permutation(group.n)) {
  check_budget(group, budget);
}

bool ElementStream::advance_colors() {
  return next_colors(current_.colors, group_.r, group_.lift_step(), group_.p);
}

std::optional<ProjectiveElement> ElementStream::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
  } else if (!advance_colors()) {
    std::fill(current_.colors.begin(), current_.colors.end(), 0);
    if (!std::next_permutation(current_.sigma.begin(), current_.sigma.end())) {
      done_ = true;
      return std::nullopt;
    }
  }
  return canonicalize(current_, group_);
}

std::vector<ProjectiveElement> enumerate(const GroupDescriptor& group, std::uint64_t budget) {
  check_budget(group, budget);
  std::vector<ProjectiveElement> out;
  out.reserve(static_cast<std::size_t>(group.order()));
  for_each_lift(
      group, [&](const ColoredPermutation& w) { out.push_back(canonicalize(w, group)); },
      budget);
  return out;
}

// ---------------------------------------------------------------------------

ColoredPermutation parse_window(std::string_view text, int r) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  auto read_int = [&](const char* what) {
    skip_ws();
    int value = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError(std::string("expected ") + what, pos);
    pos = static_cast<std::size_t>(end - text.data());
    return value;
  };

  ColoredPermutation w;
  skip_ws();
  if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
  ++pos;
  while (true) {
    skip_ws();
    const std::size_t item_pos = pos;
    int value = read_int("window entry");
    int color = 0;
    if (value < 0) {
      if (r != 2) throw ParseError("negative entries are only accepted for r=2", item_pos);
      value = -value;
      color = 1;
    }
    skip_ws();
    if (pos < text.size() && text[pos] == '^') {
      if (color != 0) throw ParseError("negative entry cannot carry a color", pos);
      ++pos;
      const std::size_t color_pos = pos;
      color = read_int("color");
      if (color < 1 || color >= r) {
        throw RangeError("color " + std::to_string(color) + " at position " +
                         std::to_string(color_pos) + " is outside [1," + std::to_string(r - 1) +
                         "]");
      }
    }
    if (value < 1) {
      throw RangeError("window value " + std::to_string(value) + " at position " +
                       std::to_string(item_pos) + " must be positive");
    }
    w.sigma.push_back(value);
    w.colors.push_back(color);
    skip_ws();
    if (pos >= text.size()) throw ParseError("unterminated window", pos);
    if (text[pos] == ',') {
      ++pos;
      continue;
    }
    if (text[pos] == ']') {
      ++pos;
      break;
    }
    throw ParseError("expected ',' or ']'", pos);
  }
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing characters after window", pos);
  if (!is_valid(w, r)) {
    throw RangeError("window values must be a permutation of 1.." + std::to_string(w.size()));
  }
  return w;
}

ProjectiveElement parse_element(std::string_view text, const GroupDescriptor& group) {
  ColoredPermutation w = parse_window(text, group.r);
  if (w.size() != group.n) {
    throw RangeError("window has " + std::to_string(w.size()) + " entries, " +
                     group.to_string() + " needs " + std::to_string(group.n));
  }
  return canonicalize(std::move(w), group);
}

std::string format_window(const ColoredPermutation& w, WindowStyle style) {
  std::string out = "[";
  for (int i = 0; i < w.size(); ++i) {
    if (i > 0) out += ',';
    if (style == WindowStyle::Signed && w.colors[i] == 1) {
      out += '-';
      out += std::to_string(w.sigma[i]);
      continue;
    }
    out += std::to_string(w.sigma[i]);
    if (w.colors[i] != 0) {
      out += '^';
      out += std::to_string(w.colors[i]);
    }
  }
  out += ']';
  return out;
}

std::string format_element(const ProjectiveElement& g, WindowStyle style) {
  return format_window(g.lift(), style);
}

}  // namespace projstat
