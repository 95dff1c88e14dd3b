#pragma once

// JSON views of results. Coordinates and selections are 1-based; every
// top-level document carries "format_version".

#include <json.hpp>

#include "satmat/classification.hpp"
#include "satmat/exact_search.hpp"
#include "satmat/saturation.hpp"

namespace satmat {

inline constexpr int kFormatVersion = 1;

using nlohmann::json;

inline json to_json_value(const Coord& c) { return json(c.values()); }

inline json to_json_value(const Matrix01& m) {
  return json{{"dims", m.shape().extents()}, {"bits", m.bits()}, {"weight", m.weight()}};
}

inline json to_json_value(const CrossSectionSpec& s) {
  json fixed = json::array();
  for (auto [dim, value] : s.fixed) fixed.push_back(json{{"dim", dim + 1}, {"value", value}});
  return json{{"fixed", fixed}};
}

inline json to_json_value(const Staircase& s) {
  json coords = json::array();
  for (const Coord& c : s) coords.push_back(to_json_value(c));
  return coords;
}

inline json witness_json(const std::optional<Embedding>& e) {
  json j{{"format_version", kFormatVersion}, {"found", e.has_value()}};
  j["selections"] = e ? json(e->selections) : json::array();
  return j;
}

inline json to_json_value(const SaturationReport& r) {
  json j{{"format_version", kFormatVersion}, {"verdict", r.verdict}};
  j["failure_kind"] = r.failure_kind ? json(to_string(*r.failure_kind)) : json(nullptr);
  if (r.dead_flip)
    j["counterexample"] = json{{"zero_entry", to_json_value(*r.dead_flip)}};
  else if (r.existing_copy)
    j["counterexample"] = json{{"selections", r.existing_copy->selections}};
  else
    j["counterexample"] = nullptr;
  return j;
}

inline json to_json_value(const SsatVerdict& v) {
  json j{{"format_version", kFormatVersion},
         {"bounded", v.bounded},
         {"property_i_holds", v.property_i_holds},
         {"property_ii_holds", v.property_ii_holds}};
  j["failing_face"] = v.failing_face ? to_json_value(*v.failing_face) : json(nullptr);
  j["witness_entry"] = v.witness_entry ? to_json_value(*v.witness_entry) : json(nullptr);
  return j;
}

inline json to_json_value(const ExactResult& r) {
  json j{{"format_version", kFormatVersion}, {"status", to_string(r.status)}, {"nodes", r.nodes}};
  if (r.status == SearchStatus::ok) {
    j["value"] = r.value;
    j["witness"] = r.witness ? to_json_value(*r.witness) : json(nullptr);
  } else {
    j["value"] = nullptr;
    j["witness"] = nullptr;
  }
  return j;
}

inline json to_json_value(const RecurrenceReport& r) {
  return json{{"format_version", kFormatVersion},
              {"status", to_string(r.status)},
              {"shell_term", r.shell_term},
              {"sat_large", r.sat_large},
              {"sat_small", r.sat_small},
              {"ex_large", r.ex_large},
              {"ex_small", r.ex_small},
              {"sat_holds", r.sat_holds},
              {"ex_holds", r.ex_holds}};
}

}  // namespace satmat
