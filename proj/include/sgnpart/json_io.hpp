#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sgnpart/bijection.hpp"
#include "sgnpart/error.hpp"
#include "sgnpart/partition.hpp"
#include "sgnpart/stirling.hpp"

namespace sgnpart {

// Key order follows the documented schemas, hence ordered_json throughout.
// Exact integers ride as decimal strings so that values beyond the double
// mantissa survive any JSON round trip unchanged.
using json = nlohmann::ordered_json;

inline json to_json(const signed_partition& p) {
  return json{{"n", p.n}, {"zero", p.zero}, {"pairs", p.pairs}};
}

inline signed_partition partition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("zero") ||
      !j.contains("pairs"))
    fail(errc::syntax_error, "partition JSON needs n, zero and pairs");
  return validate(j.at("n").get<int>(), j.at("zero").get<std::vector<int>>(),
                  j.at("pairs").get<std::vector<std::vector<int>>>());
}

inline json to_json(const urn_assignment& f) {
  return json{{"m", f.m}, {"f", f.urns}};
}

inline urn_assignment assignment_from_json(const json& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("f"))
    fail(errc::syntax_error, "assignment JSON needs m and f");
  urn_assignment out;
  out.m = j.at("m").get<int>();
  out.urns = j.at("f").get<std::vector<int>>();
  out.n = static_cast<int>(out.urns.size());
  return out;
}

inline json to_json(const decoded_assignment& d) {
  json j = to_json(d.partition);
  j["choices"] = d.choices;
  return j;
}

inline json coefficients_json(const std::vector<bigint>& coeffs) {
  json arr = json::array();
  for (const auto& c : coeffs) arr.push_back(c.to_string());
  return arr;
}

inline json to_json(const identity_report& rep) {
  return json{{"n", rep.n},
              {"type", std::string(1, triangle_kind_letter(rep.kind))},
              {"equal", rep.equal},
              {"lhs", coefficients_json(rep.lhs.coeffs())},
              {"rhs", coefficients_json(rep.rhs.coeffs())}};
}

inline json to_json(const bijection_report& rep) {
  return json{{"n", rep.n},
              {"m", rep.m},
              {"functions", rep.functions},
              {"encoded", rep.encoded},
              {"distinct", rep.distinct},
              {"partitions", rep.partitions},
              {"partitions_encoded", rep.partitions_encoded},
              {"per_partition_counts_ok", rep.per_partition_counts_ok},
              {"decode_encode_ok", rep.decode_encode_ok},
              {"encode_decode_ok", rep.encode_decode_ok},
              {"pass", rep.pass}};
}

inline json triangle_json(triangle_kind kind, int max_n) {
  stirling_triangle t(kind);
  json rows = json::array();
  for (int n = 0; n <= max_n; ++n) {
    json row = json::array();
    for (const auto& v : t.row(n)) row.push_back(v.to_string());
    rows.push_back(std::move(row));
  }
  return json{{"type", std::string(1, triangle_kind_letter(kind))},
              {"max_n", max_n},
              {"rows", rows}};
}

}  // namespace sgnpart
