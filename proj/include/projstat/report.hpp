#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "projstat/qseries.hpp"

namespace projstat {

using Json = nlohmann::ordered_json;

enum class Outcome { Match, Mismatch };

std::string to_string(Outcome outcome);

struct Mismatch {
  Json monomial = Json::object();  // variable -> exponent; empty for scalar checks
  std::string lhs;
  std::string rhs;
  std::string context;  // which sub-check failed
};

/// Outcome of one identity check.
struct VerificationReport {
  std::string identity;
  Json params = Json::object();
  Json region = Json::object();
  Outcome outcome = Outcome::Match;
  std::optional<Mismatch> firstMismatch;
  std::uint64_t count = 0;     // group elements (or objects) enumerated
  std::uint64_t compared = 0;  // coefficients compared
  double millis = 0.0;
  Json details = Json::object();

  bool matched() const { return outcome == Outcome::Match; }

  /// Records a failed sub-check; the first one wins.
  void fail(Mismatch m);

  /// Folds a series comparison into the report under `label`.
  template <class C>
  void absorb(const std::string& label, const Comparison<C>& cmp, const VarList& vars) {
    compared += cmp.compared;
    Json entry = Json::object();
    entry["outcome"] = cmp.match ? "MATCH" : "MISMATCH";
    entry["compared"] = cmp.compared;
    details["checks"][label] = entry;
    if (cmp.match) return;
    Mismatch m;
    for (int i = 0; i < vars.size(); ++i) {
      if (cmp.first_mismatch->e[i] != 0) m.monomial[vars.name(i)] = cmp.first_mismatch->e[i];
    }
    m.lhs = CoeffTraits<C>::to_string(cmp.lhs);
    m.rhs = CoeffTraits<C>::to_string(cmp.rhs);
    m.context = label;
    fail(std::move(m));
  }

  /// Scalar sub-check.
  void absorb_scalar(const std::string& label, const std::string& lhs, const std::string& rhs);

  /// JSON form; `with_timing = false` drops `millis` for byte-stable output.
  Json to_json(bool with_timing = true) const;
  std::string to_table() const;
};

/// Region object {var: cap} for the first vars.size() entries.
Json region_json(const VarList& vars, const Exponents& region);

}  // namespace projstat
