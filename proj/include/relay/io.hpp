#pragma once

// JSON interchange for instances (.ddi) and solutions (.dds).
//
// Instance: {"vertices": n, "edges": [[u, v, w], ...], "path": [...],
//            "agents": [...], "budgets": b | [b_1, ..., b_k]}   (budgets optional)
// Solution: {"solver": name, "parameters": text, "range": R,
//            "legs": [[agent, pickup_index, drop_index], ...]}

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "relay/errors.hpp"
#include "relay/model.hpp"

namespace relay {

namespace detail {

using Json = nlohmann::ordered_json;

inline Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": malformed JSON");
  }
}

inline const Json& field(const Json& doc, const char* name) {
  if (!doc.is_object()) throw ParseError("document is not a JSON object");
  auto it = doc.find(name);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

inline std::int64_t integer(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) throw ParseError(where + ": expected an integer");
  return value.get<std::int64_t>();
}

inline std::int64_t non_negative(const Json& value, const std::string& where) {
  const std::int64_t x = integer(value, where);
  if (x < 0) throw ParseError(where + ": must be non-negative, got " + std::to_string(x));
  return x;
}

inline const Json& array(const Json& value, const std::string& where) {
  if (!value.is_array()) throw ParseError(where + ": expected an array");
  return value;
}

inline std::vector<VertexId> vertex_list(const Json& doc, const char* name) {
  std::vector<VertexId> out;
  const Json& list = array(field(doc, name), name);
  for (std::size_t i = 0; i < list.size(); ++i) {
    out.push_back(static_cast<VertexId>(
        non_negative(list[i], std::string(name) + "[" + std::to_string(i) + "]")));
  }
  return out;
}

/// One key per line, compact values.
inline std::string render(const Json& doc) {
  std::string out = "{\n";
  std::size_t i = 0;
  for (const auto& [key, value] : doc.items()) {
    out += "  " + Json(key).dump() + ": " + value.dump();
    out += ++i < doc.size() ? ",\n" : "\n";
  }
  out += "}\n";
  return out;
}

}  // namespace detail

inline std::string serialize(const DeliveryInstance& instance) {
  detail::Json doc;
  doc["vertices"] = instance.graph().vertex_count();
  doc["edges"] = detail::Json::array();
  for (const Edge& e : instance.graph().edges()) doc["edges"].push_back({e.u, e.v, e.weight});
  doc["path"] = instance.path().vertices();
  doc["agents"] = instance.agents();
  if (const auto& budgets = instance.budgets()) {
    const bool uniform = std::all_of(budgets->begin(), budgets->end(),
                                     [&](Energy b) { return b == budgets->front(); });
    if (uniform) {
      doc["budgets"] = budgets->front();
    } else {
      doc["budgets"] = *budgets;
    }
  }
  return detail::render(doc);
}

inline DeliveryInstance deserialize_instance(std::string_view text) {
  using detail::field;
  const detail::Json doc = detail::parse_document(text);
  const auto n = static_cast<std::size_t>(detail::non_negative(field(doc, "vertices"), "vertices"));

  std::vector<Edge> edges;
  const auto& list = detail::array(field(doc, "edges"), "edges");
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    const auto& e = detail::array(list[i], where);
    if (e.size() != 3) throw ParseError(where + ": expected [u, v, w]");
    edges.push_back({static_cast<VertexId>(detail::non_negative(e[0], where + "[0]")),
                     static_cast<VertexId>(detail::non_negative(e[1], where + "[1]")),
                     detail::non_negative(e[2], where + "[2]")});
  }
  std::vector<VertexId> path = detail::vertex_list(doc, "path");
  std::vector<VertexId> agents = detail::vertex_list(doc, "agents");

  std::optional<std::vector<Energy>> budgets;
  if (auto it = doc.find("budgets"); it != doc.end()) {
    if (it->is_array()) {
      budgets.emplace();
      for (std::size_t i = 0; i < it->size(); ++i) {
        budgets->push_back(
            detail::non_negative((*it)[i], "budgets[" + std::to_string(i) + "]"));
      }
    } else {
      budgets.emplace(agents.size(), detail::non_negative(*it, "budgets"));
    }
  }

  try {
    return DeliveryInstance(WeightedGraph(n, std::move(edges)), std::move(path),
                            std::move(agents), std::move(budgets));
  } catch (const GraphError& e) {
    throw ParseError(std::string("invalid instance: ") + e.what());
  }
}

inline std::string serialize(const SolveResult& result) {
  detail::Json doc;
  doc["solver"] = result.solver_name;
  doc["parameters"] = result.parameters;
  doc["range"] = result.range;
  doc["legs"] = detail::Json::array();
  for (const Leg& leg : result.schedule.legs) {
    doc["legs"].push_back({leg.agent, leg.pickup, leg.drop});
  }
  return detail::render(doc);
}

/// Reads a solution for `instance`. Fetch distances and per-agent costs are
/// recomputed from the instance; the stated range is kept as written so the
/// validator can compare it.
inline SolveResult deserialize_result(std::string_view text, const DeliveryInstance& instance) {
  using detail::field;
  const detail::Json doc = detail::parse_document(text);
  SolveResult result;
  const auto& solver = field(doc, "solver");
  if (!solver.is_string()) throw ParseError("solver: expected a string");
  result.solver_name = solver.get<std::string>();
  if (auto it = doc.find("parameters"); it != doc.end() && it->is_string()) {
    result.parameters = it->get<std::string>();
  }
  result.range = detail::integer(field(doc, "range"), "range");

  const auto& list = detail::array(field(doc, "legs"), "legs");
  std::vector<VertexId> starts;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = "legs[" + std::to_string(i) + "]";
    const auto& l = detail::array(list[i], where);
    if (l.size() != 3) throw ParseError(where + ": expected [agent, pickup, drop]");
    Leg leg;
    leg.agent = static_cast<AgentId>(detail::non_negative(l[0], where + "[0]"));
    leg.pickup = static_cast<std::size_t>(detail::non_negative(l[1], where + "[1]"));
    leg.drop = static_cast<std::size_t>(detail::non_negative(l[2], where + "[2]"));
    if (leg.agent < instance.agent_count()) starts.push_back(instance.start(leg.agent));
    result.schedule.legs.push_back(leg);
  }

  const DistanceTable distances = shortest_distances(instance.graph(), starts);
  const PathRef& path = instance.path();
  for (Leg& leg : result.schedule.legs) {
    if (leg.agent >= instance.agent_count() || leg.pickup > path.last() ||
        leg.drop > path.last()) {
      continue;
    }
    const auto fetch = distances.at(instance.start(leg.agent), path.vertex(leg.pickup));
    if (!fetch) continue;
    leg.fetch_distance = *fetch;
    result.per_agent_cost[leg.agent] = *fetch + path.distance(leg.pickup, leg.drop);
  }
  return result;
}

}  // namespace relay
