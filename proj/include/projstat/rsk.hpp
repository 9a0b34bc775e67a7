#pragma once

// Robinson-Schensted correspondence for signed permutations (G(2,n)).

#include <vector>

#include "projstat/group.hpp"
#include "projstat/statistics.hpp"

namespace projstat {

/// Rows of a (partial) standard tableau: rows increase left to right,
/// columns increase top to bottom, entries are distinct positive integers.
struct Tableau {
  std::vector<std::vector<int>> rows;

  std::vector<int> shape() const;
  std::vector<int> content() const;  // sorted entries
  bool empty() const { return rows.empty(); }
  int size() const;

  friend bool operator==(const Tableau&, const Tableau&) = default;
};

bool is_standard(const Tableau& t);

Tableau transpose(const Tableau& t);

/// {i : i and i+1 both in T, i in a strictly higher row than i+1}.
PositionSet tableau_descents(const Tableau& t);

/// Schensted row insertion of x; returns the (row, column) of the new cell.
std::pair<int, int> row_insert(Tableau& t, int x);

/// Removes the corner cell at `row` by reverse bumping; returns the value
/// ejected from the first row.
int reverse_bump(Tableau& t, int row);

/// [(P0, P1), (Q0, Q1)]: uncolored and colored subwords inserted separately.
struct Bitableau {
  Tableau p0;
  Tableau p1;
  Tableau q0;
  Tableau q1;

  friend bool operator==(const Bitableau&, const Bitableau&) = default;
};

Bitableau rs_correspondence(const ProjectiveElement& g);

/// Inverse map. Throws ShapeMismatchError when the shapes disagree or the
/// entries do not fill [n].
ProjectiveElement rs_inverse(const Bitableau& t);

/// Transposes P1 and Q1 and maps back.
ProjectiveElement rs_transpose_map(const ProjectiveElement& g);

}  // namespace projstat
