#include "projstat/rsk.hpp"

#include <algorithm>
#include <map>

namespace projstat {

namespace {

void require_signed(const GroupDescriptor& grp) {
  if (grp.r != 2 || !grp.is_wreath()) {
    throw ScopeError("Robinson-Schensted is implemented for G(2,n), got " + grp.to_string());
  }
}

// Inverse Schensted on one (P, Q) pair; returns position -> value.
std::map<int, int> unwind(Tableau p, Tableau q) {
  std::map<int, int> out;
  while (!q.empty()) {
    int best_row = -1;
    int best = 0;
    for (int row = 0; row < static_cast<int>(q.rows.size()); ++row) {
      const int last = q.rows[row].back();
      if (last > best) {
        best = last;
        best_row = row;
      }
    }
    q.rows[best_row].pop_back();
    if (q.rows[best_row].empty()) q.rows.erase(q.rows.begin() + best_row);
    out[best] = reverse_bump(p, best_row);
  }
  return out;
}

}  // namespace

std::vector<int> Tableau::shape() const {
  std::vector<int> out;
  out.reserve(rows.size());
  for (const auto& row : rows) out.push_back(static_cast<int>(row.size()));
  return out;
}

std::vector<int> Tableau::content() const {
  std::vector<int> out;
  for (const auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  std::sort(out.begin(), out.end());
  return out;
}

int Tableau::size() const {
  int total = 0;
  for (const auto& row : rows) total += static_cast<int>(row.size());
  return total;
}

bool is_standard(const Tableau& t) {
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& row = t.rows[i];
    if (row.empty()) return false;
    if (i > 0 && row.size() > t.rows[i - 1].size()) return false;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] < 1) return false;
      if (j > 0 && row[j] <= row[j - 1]) return false;
      if (i > 0 && row[j] <= t.rows[i - 1][j]) return false;
    }
  }
  const auto c = t.content();
  return std::adjacent_find(c.begin(), c.end()) == c.end();
}

Tableau transpose(const Tableau& t) {
  Tableau out;
  if (t.rows.empty()) return out;
  out.rows.resize(t.rows.front().size());
  for (const auto& row : t.rows) {
    for (std::size_t j = 0; j < row.size(); ++j) out.rows[j].push_back(row[j]);
  }
  return out;
}

PositionSet tableau_descents(const Tableau& t) {
  std::map<int, int> row_of;
  for (int i = 0; i < static_cast<int>(t.rows.size()); ++i) {
    for (int x : t.rows[i]) row_of[x] = i;
  }
  PositionSet out;
  for (const auto& [x, row] : row_of) {
    auto next = row_of.find(x + 1);
    if (next != row_of.end() && row < next->second) out.push_back(x);
  }
  return out;
}

std::pair<int, int> row_insert(Tableau& t, int x) {
  for (int row = 0;; ++row) {
    if (row == static_cast<int>(t.rows.size())) {
      t.rows.push_back({x});
      return {row, 0};
    }
    auto& r = t.rows[row];
    auto it = std::upper_bound(r.begin(), r.end(), x);
    if (it == r.end()) {
      r.push_back(x);
      return {row, static_cast<int>(r.size()) - 1};
    }
    std::swap(*it, x);
  }
}

int reverse_bump(Tableau& t, int row) {
  int x = t.rows[row].back();
  t.rows[row].pop_back();
  if (t.rows[row].empty()) t.rows.erase(t.rows.begin() + row);
  for (int up = row - 1; up >= 0; --up) {
    auto& r = t.rows[up];
    // largest entry smaller than x
    auto it = std::lower_bound(r.begin(), r.end(), x);
    --it;
    std::swap(*it, x);
  }
  return x;
}

Bitableau rs_correspondence(const ProjectiveElement& g) {
  require_signed(g.group());
  Bitableau out;
  for (int i = 1; i <= g.rank(); ++i) {
    const bool colored = g.color(i) != 0;
    Tableau& p = colored ? out.p1 : out.p0;
    Tableau& q = colored ? out.q1 : out.q0;
    const auto [row, col] = row_insert(p, g.value(i));
    if (row == static_cast<int>(q.rows.size())) q.rows.emplace_back();
    q.rows[row].push_back(i);
    (void)col;
  }
  return out;
}

ProjectiveElement rs_inverse(const Bitableau& t) {
  if (t.p0.shape() != t.q0.shape() || t.p1.shape() != t.q1.shape()) {
    throw ShapeMismatchError("bitableau components have different shapes");
  }
  for (const Tableau* part : {&t.p0, &t.p1, &t.q0, &t.q1}) {
    if (!is_standard(*part)) throw ShapeMismatchError("bitableau component is not standard");
  }
  const int n = t.p0.size() + t.p1.size();
  auto fills = [n](const Tableau& a, const Tableau& b) {
    std::vector<int> all = a.content();
    const auto other = b.content();
    all.insert(all.end(), other.begin(), other.end());
    std::sort(all.begin(), all.end());
    for (int i = 0; i < n; ++i) {
      if (all[i] != i + 1) return false;
    }
    return true;
  };
  if (n == 0 || !fills(t.p0, t.p1) || !fills(t.q0, t.q1)) {
    throw ShapeMismatchError("bitableau entries must fill 1..n");
  }
  ColoredPermutation w;
  w.sigma.assign(n, 0);
  w.colors.assign(n, 0);
  for (const auto& [pos, value] : unwind(t.p0, t.q0)) w.sigma[pos - 1] = value;
  for (const auto& [pos, value] : unwind(t.p1, t.q1)) {
    w.sigma[pos - 1] = value;
    w.colors[pos - 1] = 1;
  }
  return canonicalize(std::move(w), wreath_group(2, n));
}

ProjectiveElement rs_transpose_map(const ProjectiveElement& g) {
  Bitableau t = rs_correspondence(g);
  t.p1 = transpose(t.p1);
  t.q1 = transpose(t.q1);
  return rs_inverse(t);
}

}  // namespace projstat
