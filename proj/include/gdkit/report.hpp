#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gdkit {

/// Outcome of one claim on one instance. Counts are carried as decimal
/// strings so nothing downstream can lose precision.
struct Report {
  std::string claim_id;
  std::string instance;
  bool holds = true;
  std::string lhs;
  std::string rhs;
  std::string notes;
  std::optional<std::string> value;  // set when the report carries a computed count

  friend bool operator==(const Report&, const Report&) = default;
};

inline void to_json(nlohmann::json& j, const Report& r) {
  j = nlohmann::json{{"claim_id", r.claim_id}, {"instance", r.instance}, {"holds", r.holds},
                     {"lhs", r.lhs},           {"rhs", r.rhs},           {"notes", r.notes}};
  if (r.value) j["value"] = *r.value;
}

inline void from_json(const nlohmann::json& j, Report& r) {
  j.at("claim_id").get_to(r.claim_id);
  j.at("instance").get_to(r.instance);
  j.at("holds").get_to(r.holds);
  j.at("lhs").get_to(r.lhs);
  j.at("rhs").get_to(r.rhs);
  j.at("notes").get_to(r.notes);
  if (j.contains("value"))
    r.value = j.at("value").get<std::string>();
  else
    r.value.reset();
}

inline bool all_hold(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (!r.holds) return false;
  return true;
}

}  // namespace gdkit
