#include "invindel/report.hpp"

#include <array>

#include "invindel/error.hpp"

namespace invindel {

using nlohmann::json;

bool ReportSummary::operator==(const ReportSummary& o) const {
  auto paths = [](const std::vector<ComponentPath>& p) {
    std::vector<std::array<int, 3>> out;
    for (const ComponentPath& x : p) out.push_back({x.u, x.v, x.cost});
    return out;
  };
  return distance == o.distance && g_count == o.g_count && cycles == o.cycles &&
         indel_potential_sum == o.indel_potential_sum && tau_star == o.tau_star && anchor == o.anchor &&
         rotated_anchors == o.rotated_anchors && tau_route == o.tau_route && case_label == o.case_label &&
         capping == o.capping && solo_leaf == o.solo_leaf && paths(cover) == paths(o.cover) &&
         reduction_cost == o.reduction_cost && reduction == o.reduction && residual == o.residual &&
         composition == o.composition && components == o.components;
}

ReportSummary summarize(const DistanceReport& r) {
  ReportSummary s;
  s.distance = r.distance;
  s.g_count = r.g_count;
  s.cycles = r.cycles;
  s.indel_potential_sum = r.lambda_sum;
  s.tau_star = r.tau_star;
  s.anchor = r.anchor;
  s.rotated_anchors = r.rotated;
  s.tau_route = r.tau_route;
  s.capping = r.capping;
  s.solo_leaf = r.solo_leaf;
  s.cover = r.component_cover;
  if (r.residual) {
    const ResidualResult& res = *r.residual;
    s.case_label = res.case_label;
    s.reduction_cost = res.reduction_cost;
    for (const ReductionStep& st : res.steps) {
      Tags shared = r.contracted.tags(st.path.u) & r.contracted.tags(st.path.v);
      s.reduction.push_back({step_name(st.kind), std::string(1, class_letter(st.cls)),
                             component_id(r, st.path.u, shared), component_id(r, st.path.v, shared), st.cost});
    }
    s.residual = res.residual.str();
    s.composition = composition_of(res.residual).key();
  }
  for (const Component& c : r.components)
    s.components.push_back({c.id, kind_name(c.kind), tags_str(c.tags), c.cycles});
  return s;
}

namespace {

template <class T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json path_json(const ComponentPath& p) { return {{"u", p.u}, {"v", p.v}, {"cost", p.cost}}; }

}  // namespace

json to_json(const ReportSummary& s) {
  json cover = json::array();
  for (const ComponentPath& p : s.cover) cover.push_back(path_json(p));
  json steps = json::array();
  for (const auto& st : s.reduction)
    steps.push_back({{"kind", st.kind}, {"class", st.cls}, {"u", st.u}, {"v", st.v}, {"cost", st.cost}});
  json comps = json::array();
  for (const auto& c : s.components)
    comps.push_back({{"id", c.id}, {"kind", c.kind}, {"tags", c.tags}, {"cycles", c.cycles}});
  return {
      {"distance", s.distance},
      {"g_count", s.g_count},
      {"cycles", s.cycles},
      {"indel_potential_sum", s.indel_potential_sum},
      {"tau_star", s.tau_star},
      {"anchor", s.anchor},
      {"rotated_anchors", s.rotated_anchors},
      {"tau_route", s.tau_route},
      {"case_label", opt(s.case_label)},
      {"capping", opt(s.capping)},
      {"solo_leaf", opt(s.solo_leaf)},
      {"cover", cover},
      {"reduction_cost", opt(s.reduction_cost)},
      {"reduction", steps},
      {"residual", opt(s.residual)},
      {"composition", opt(s.composition)},
      {"components", comps},
  };
}

ReportSummary summary_from_json(const json& j) {
  try {
    ReportSummary s;
    s.distance = j.at("distance").get<int>();
    s.g_count = j.at("g_count").get<int>();
    s.cycles = j.at("cycles").get<int>();
    s.indel_potential_sum = j.at("indel_potential_sum").get<int>();
    s.tau_star = j.at("tau_star").get<int>();
    s.anchor = j.at("anchor").get<std::string>();
    s.rotated_anchors = j.at("rotated_anchors").get<std::vector<std::string>>();
    s.tau_route = j.at("tau_route").get<std::string>();
    s.case_label = get_opt<std::string>(j, "case_label");
    s.capping = get_opt<int>(j, "capping");
    s.solo_leaf = get_opt<int>(j, "solo_leaf");
    for (const json& p : j.at("cover")) s.cover.push_back({p.at("u"), p.at("v"), p.at("cost")});
    s.reduction_cost = get_opt<int>(j, "reduction_cost");
    for (const json& st : j.at("reduction"))
      s.reduction.push_back({st.at("kind"), st.at("class"), st.at("u"), st.at("v"), st.at("cost")});
    s.residual = get_opt<std::string>(j, "residual");
    s.composition = get_opt<std::string>(j, "composition");
    for (const json& c : j.at("components"))
      s.components.push_back({c.at("id"), c.at("kind"), c.at("tags"), c.at("cycles").get<std::vector<int>>()});
    return s;
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

json topology_json(const TopologyReport& t) {
  json leaf_branches = json::array();
  for (auto [leaf, is_long] : t.leaf_branches) leaf_branches.push_back({{"leaf", leaf}, {"long", is_long}});
  return {
      {"composition", t.composition.key()},
      {"canonical_subtrees", t.canonical_subtrees},
      {"isolation", t.isolation},
      {"mates", t.mates},
      {"solo_candidates", t.solo_candidates},
      {"fully_co_rooted", t.fully_co_rooted},
      {"fully_separated", t.fully_separated},
      {"leaf_branches", leaf_branches},
  };
}

}  // namespace invindel
