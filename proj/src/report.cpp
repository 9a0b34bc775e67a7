#include "projstat/report.hpp"

#include <iomanip>
#include <sstream>

namespace projstat {

std::string to_string(Outcome outcome) {
  return outcome == Outcome::Match ? "MATCH" : "MISMATCH";
}

void VerificationReport::fail(Mismatch m) {
  outcome = Outcome::Mismatch;
  if (!firstMismatch) firstMismatch = std::move(m);
}

void VerificationReport::absorb_scalar(const std::string& label, const std::string& lhs,
                                       const std::string& rhs) {
  ++compared;
  const bool ok = lhs == rhs;
  details["checks"][label] = {{"outcome", ok ? "MATCH" : "MISMATCH"}, {"lhs", lhs}, {"rhs", rhs}};
  if (!ok) fail(Mismatch{Json::object(), lhs, rhs, label});
}

Json VerificationReport::to_json(bool with_timing) const {
  Json out = Json::object();
  out["schema"] = 1;
  out["identity"] = identity;
  out["params"] = params;
  out["region"] = region;
  out["outcome"] = to_string(outcome);
  if (firstMismatch) {
    out["firstMismatch"] = {{"monomial", firstMismatch->monomial},
                            {"lhs", firstMismatch->lhs},
                            {"rhs", firstMismatch->rhs},
                            {"context", firstMismatch->context}};
  } else {
    out["firstMismatch"] = nullptr;
  }
  out["count"] = count;
  out["compared"] = compared;
  if (with_timing) out["millis"] = millis;
  out["details"] = details;
  return out;
}

std::string VerificationReport::to_table() const {
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(14) << key << value << '\n';
  };
  row("identity", identity);
  row("params", params.dump());
  row("region", region.dump());
  row("outcome", to_string(outcome));
  row("count", std::to_string(count));
  row("compared", std::to_string(compared));
  {
    std::ostringstream ms;
    ms << std::fixed << std::setprecision(1) << millis;
    row("millis", ms.str());
  }
  if (firstMismatch) {
    row("mismatch", firstMismatch->context + " at " + firstMismatch->monomial.dump());
    row("  lhs", firstMismatch->lhs);
    row("  rhs", firstMismatch->rhs);
  }
  if (details.contains("checks")) {
    for (const auto& [label, entry] : details["checks"].items()) {
      row("  check", label + ": " + entry["outcome"].get<std::string>());
    }
  }
  for (const auto& [key, value] : details.items()) {
    if (key == "checks") continue;
    row("  " + key, value.dump());
  }
  return out.str();
}

Json region_json(const VarList& vars, const Exponents& region) {
  Json out = Json::object();
  for (int i = 0; i < vars.size(); ++i) out[vars.name(i)] = region[i];
  return out;
}

}  // namespace projstat
