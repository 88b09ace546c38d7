#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "invindel/distance.hpp"

namespace invindel {

// The serializable part of a DistanceReport. Every node id is a component id
// of the diagram (-1 for a square node of the chained tree).
struct ReportSummary {
  struct Step {
    std::string kind;
    std::string cls;
    int u = -1, v = -1, cost = 0;
    bool operator==(const Step&) const = default;
  };
  struct ComponentInfo {
    int id = 0;
    std::string kind;
    std::string tags;
    std::vector<int> cycles;
    bool operator==(const ComponentInfo&) const = default;
  };

  int distance = 0;
  int g_count = 0;
  int cycles = 0;
  int indel_potential_sum = 0;
  int tau_star = 0;
  std::string anchor;
  std::vector<std::string> rotated_anchors;
  std::string tau_route;
  std::optional<std::string> case_label;
  std::optional<int> capping;
  std::optional<int> solo_leaf;
  std::vector<ComponentPath> cover;
  std::optional<int> reduction_cost;
  std::vector<Step> reduction;
  std::optional<std::string> residual;  // bracket text of the residual tree
  std::optional<std::string> composition;
  std::vector<ComponentInfo> components;

  bool operator==(const ReportSummary&) const;
};

ReportSummary summarize(const DistanceReport& r);
nlohmann::json to_json(const ReportSummary& s);
ReportSummary summary_from_json(const nlohmann::json& j);

nlohmann::json topology_json(const TopologyReport& t);

}  // namespace invindel
