#include "projstat/json_io.hpp"

namespace projstat {

Json to_json(const GroupDescriptor& group) {
  return Json{{"r", group.r}, {"p", group.p}, {"s", group.s}, {"n", group.n}};
}

Json to_json(const StatRecord& rec) {
  return Json{{"desG", rec.desG},     {"desA", rec.desA},   {"maj", rec.maj},
              {"fmaj", rec.fmaj},     {"fdes", rec.fdes},   {"des", rec.des},
              {"col", rec.col},       {"invAbs", rec.invAbs}, {"signAbs", rec.signAbs},
              {"hdes", rec.hdes},     {"hvec", rec.hvec},   {"kvec", rec.kvec},
              {"lambda", rec.lambda}, {"colorClass", rec.colorClass}};
}

Json to_json(const Tableau& t) { return Json(t.rows); }

Json to_json(const Bitableau& t) {
  return Json{{"P0", to_json(t.p0)}, {"P1", to_json(t.p1)}, {"Q0", to_json(t.q0)},
              {"Q1", to_json(t.q1)}};
}

Json to_json(const Bipartite2Partition& f) { return Json::array({f.top, f.bottom}); }

}  // namespace projstat
