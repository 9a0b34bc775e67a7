#pragma once

// JSON forms of the library's value types.

#include "projstat/bijections.hpp"
#include "projstat/qseries.hpp"
#include "projstat/report.hpp"
#include "projstat/rsk.hpp"
#include "projstat/statistics.hpp"

namespace projstat {

Json to_json(const GroupDescriptor& group);
Json to_json(const StatRecord& rec);
/// Rows of the tableau.
Json to_json(const Tableau& t);
Json to_json(const Bitableau& t);
Json to_json(const Bipartite2Partition& f);

/// [{"exps": {var: e, ...}, "coef": "..."}] in graded order.
template <class C>
Json to_json(const Series<C>& f) {
  Json out = Json::array();
  for (const auto& [m, c] : f.sorted_terms()) {
    Json e = Json::object();
    for (int i = 0; i < f.vars().size(); ++i) e[f.vars().name(i)] = m.e[i];
    out.push_back({{"exps", e}, {"coef", CoeffTraits<C>::to_string(c)}});
  }
  return out;
}

}  // namespace projstat
