#include "invindel/distance.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "invindel/error.hpp"

namespace invindel {

namespace {

int component_of(const ChainedTree& ct, const TaggedTree& contracted, int v, Tags want) {
  int fallback = -1;
  for (const Origin& o : contracted.node(v).origin) {
    int c = ct.component_of_node[o.id];
    if (c < 0) continue;
    if (ct.tree.bad(o.id) && (!want || (o.tags & want))) return c;
    if (fallback < 0) fallback = c;
  }
  return fallback;
}

}  // namespace

int component_id(const DistanceReport& r, int contracted_node, Tags prefer) {
  if (!r.chained || contracted_node < 0 || contracted_node >= r.contracted.size()) return -1;
  return component_of(*r.chained, r.contracted, contracted_node, prefer);
}

DistanceReport compute_distance(const GenomePair& pair, const DistanceOptions& opt) {
  DistanceReport r;
  r.g_count = static_cast<int>(pair.common.size());
  if (r.g_count <= 1) {
    r.distance = !pair.a_only.empty() + !pair.b_only.empty();
    r.tau_route = "trivial";
    if (r.g_count == 1) r.anchor = *pair.common.begin();
    return r;
  }

  std::vector<std::string> order(pair.common.begin(), pair.common.end());
  std::string anchor = opt.anchor ? *opt.anchor : default_anchor(pair);
  if (!pair.common.count(anchor)) throw Error(Errc::AnchorNotCommon, anchor);
  size_t start = std::find(order.begin(), order.end(), anchor) - order.begin();

  RelationalDiagram d = build_relational_diagram(pair, anchor);
  std::vector<Component> comps = find_components(d);
  if (anchor_wraps(comps, d)) {
    // markers sitting between two components come first, then the rest in order
    std::vector<int> comp_of_edge(d.g_count());
    for (const Component& c : comps)
      for (int e : c.a_edges) comp_of_edge[e] = c.id;
    std::vector<std::string> cands;
    for (int e = 1; e < d.g_count(); ++e)
      if (comp_of_edge[e - 1] != comp_of_edge[e]) cands.push_back(d.upper[2 * e].marker);
    for (size_t k = 1; k < order.size(); ++k) cands.push_back(order[(start + k) % order.size()]);
    std::set<std::string> tried{anchor};
    r.rotated.push_back(anchor);
    for (const std::string& cand : cands) {
      if (!tried.insert(cand).second) continue;
      RelationalDiagram dk = build_relational_diagram(pair, cand);
      std::vector<Component> ck = find_components(dk);
      if (!anchor_wraps(ck, dk)) {
        d = std::move(dk);
        comps = std::move(ck);
        break;
      }
      r.rotated.push_back(cand);
    }
  }
  if (r.rotated.size() == order.size()) r.rotated.clear();  // every anchor wraps: keep the first
  r.anchor = d.anchor;
  r.cycles = d.c();
  r.lambda_sum = d.lambda_sum();

  ChainedTree ct = build_chained_tree(comps, d);
  apply_run_observations(ct, comps);
  TaggedTree contracted = flower_contract(ct.tree);

  TauResult tau = tau_star(contracted);
  r.tau_star = tau.cost;
  r.tau_route = tau.route;
  r.cover = tau.cover;
  for (const CoverPath& p : tau.cover.paths) {
    Tags shared = contracted.tags(p.u) & contracted.tags(p.v);
    r.component_cover.push_back({component_of(ct, contracted, p.u, shared),
                                 component_of(ct, contracted, p.v, shared), p.cost});
  }
  if (tau.residual && tau.residual->solo_leaf)
    r.solo_leaf = component_of(ct, contracted, *tau.residual->solo_leaf, 0);
  r.residual = std::move(tau.residual);

  r.distance = r.g_count - r.cycles + r.lambda_sum + r.tau_star;
  if (r.tau_star < 0 || r.distance < r.lower_bound())
    throw Error(Errc::PreconditionViolated, "distance below the DCJ-indel bound");

  r.diagram = std::move(d);
  r.components = std::move(comps);
  r.chained = std::move(ct);
  r.contracted = std::move(contracted);
  return r;
}

DistanceReport compute_linear_distance(const GenomePair& pair, const DistanceOptions& opt) {
  std::array<GenomePair, 2> capped = cap_linear_pair(pair);
  DistanceReport best;
  for (int k = 0; k < 2; ++k) {
    DistanceReport r = compute_distance(capped[k], opt);
    r.capping = k;
    if (k == 0 || r.distance < best.distance) best = std::move(r);
  }
  return best;
}

DistanceReport compute(const Chromosome& a, const Chromosome& b, const DistanceOptions& opt) {
  GenomePair pair = partition_markers(a, b);
  if (a.shape == Shape::linear || b.shape == Shape::linear) {
    if (a.shape != b.shape) throw Error(Errc::NotLinear, "both chromosomes must be linear");
    return compute_linear_distance(pair, opt);
  }
  return compute_distance(pair, opt);
}

}  // namespace invindel
