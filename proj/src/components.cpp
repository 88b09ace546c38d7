#include "invindel/components.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "invindel/error.hpp"

namespace invindel {

const char* kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::trivial: return "trivial";
    case ComponentKind::good: return "good";
    case ComponentKind::bad: return "bad";
  }
  return "?";
}

static bool has_inside(const std::vector<int>& pts, int lo, int hi) {
  auto it = std::upper_bound(pts.begin(), pts.end(), lo);
  return it != pts.end() && *it < hi;
}

bool interleave(const Cycle& x, const Cycle& y) {
  if (x.trivial() || y.trivial()) return false;
  const auto& px = x.a_sorted;
  const auto& py = y.a_sorted;
  return has_inside(px, py.front(), py.back()) && has_inside(py, px.front(), px.back());
}

std::vector<Component> find_components(const RelationalDiagram& d) {
  const int k = d.c();
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };

  std::vector<int> open;
  for (int i = 0; i < k; ++i)
    if (!d.cycles[i].trivial()) open.push_back(i);
  for (size_t i = 0; i < open.size(); ++i) {
    const Cycle& x = d.cycles[open[i]];
    for (size_t j = i + 1; j < open.size(); ++j) {
      const Cycle& y = d.cycles[open[j]];
      if (y.a_sorted.front() > x.a_sorted.back() || x.a_sorted.front() > y.a_sorted.back()) continue;
      if (interleave(x, y)) parent[find(open[i])] = find(open[j]);
    }
  }

  std::map<int, int> index;
  std::vector<Component> comps;
  // components numbered by their first A-edge
  for (int e = 0; e < d.g_count(); ++e) {
    int r = find(d.cycle_of_a_edge[e]);
    if (index.count(r)) continue;
    index[r] = static_cast<int>(comps.size());
    comps.emplace_back();
    comps.back().id = static_cast<int>(comps.size()) - 1;
  }
  for (int i = 0; i < k; ++i) {
    Component& c = comps[index[find(i)]];
    const Cycle& cyc = d.cycles[i];
    c.cycles.push_back(i);
    c.a_edges.insert(c.a_edges.end(), cyc.a_edges.begin(), cyc.a_edges.end());
    if (cyc.has_run('A')) c.tags |= kTagA;
    if (cyc.has_run('B')) c.tags |= kTagB;
    c.max_runs = std::max(c.max_runs, cyc.runs);
  }
  for (Component& c : comps) {
    std::sort(c.a_edges.begin(), c.a_edges.end());
    if (c.cycles.size() == 1 && d.cycles[c.cycles[0]].trivial()) {
      c.kind = ComponentKind::trivial;
    } else {
      bool all_bad = std::all_of(c.cycles.begin(), c.cycles.end(),
                                 [&](int i) { return d.cycles[i].bad; });
      c.kind = all_bad ? ComponentKind::bad : ComponentKind::good;
    }
  }
  return comps;
}

bool anchor_wraps(const std::vector<Component>& comps, const RelationalDiagram& d) {
  if (comps.size() < 2) return false;
  std::vector<int> comp_of_edge(d.g_count());
  for (const Component& c : comps)
    for (int e : c.a_edges) comp_of_edge[e] = c.id;
  return comp_of_edge.front() == comp_of_edge.back();
}

ChainedTree build_chained_tree(const std::vector<Component>& comps, const RelationalDiagram& d) {
  const int n = d.g_count();
  std::vector<int> comp_of_edge(n);
  for (const Component& c : comps)
    for (int e : c.a_edges) comp_of_edge[e] = c.id;

  ChainedTree ct;
  TaggedTree& t = ct.tree;
  t.add_node(false, 0, "root", true);
  ct.component_of_node.push_back(-1);
  ct.node_of_component.assign(comps.size(), -1);
  std::map<std::pair<int, int>, int> square_of_gap;  // (component, gap) -> square node
  std::vector<int> seen(comps.size(), 0);
  std::vector<int> stack;

  for (int e = 0; e < n; ++e) {
    const Component& c = comps[comp_of_edge[e]];
    if (c.first_edge() == e) {
      int sq = 0;
      if (!stack.empty()) {
        int top = stack.back();
        auto key = std::make_pair(top, seen[top]);
        auto it = square_of_gap.find(key);
        if (it == square_of_gap.end()) {
          sq = t.add_node(false, 0, {}, true);
          ct.component_of_node.push_back(-1);
          t.add_edge(ct.node_of_component[top], sq);
          square_of_gap[key] = sq;
        } else {
          sq = it->second;
        }
      }
      int v = t.add_node(c.kind == ComponentKind::bad, c.tags, "K" + std::to_string(c.id));
      ct.component_of_node.push_back(c.id);
      ct.node_of_component[c.id] = v;
      t.add_edge(sq, v);
      if (c.last_edge() != e) stack.push_back(c.id);
    } else if (stack.empty() || stack.back() != c.id) {
      throw Error(Errc::PreconditionViolated, "components are not properly nested");
    }
    ++seen[c.id];
    if (c.last_edge() == e && c.first_edge() != e) stack.pop_back();
  }
  return ct;
}

void apply_run_observations(ChainedTree& ct, const std::vector<Component>& comps) {
  std::vector<int> multi;
  for (const Component& c : comps)
    if (c.max_runs >= 2) multi.push_back(c.id);
  TaggedTree& t = ct.tree;
  if (multi.size() == 1) {
    const Component& c = comps[multi[0]];
    int v = ct.node_of_component[c.id];
    if (c.max_runs >= 4 && t.bad(v)) {
      t.node(v).bad = false;
      ct.merged_by_observation.push_back(c.id);
    }
    return;
  }
  if (multi.size() < 2) return;
  // Steiner subtree of the nodes holding such cycles
  const int n = t.size();
  std::vector<char> keep(n, 1), req(n, 0);
  std::vector<int> deg(n);
  for (int id : multi) req[ct.node_of_component[id]] = 1;
  std::vector<int> q;
  for (int v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1 && !req[v]) q.push_back(v);
  }
  while (!q.empty()) {
    int v = q.back();
    q.pop_back();
    if (!keep[v]) continue;
    keep[v] = 0;
    for (int w : t.adj(v))
      if (keep[w] && --deg[w] <= 1 && !req[w]) q.push_back(w);
  }
  for (int v = 0; v < n; ++v)
    if (keep[v] && t.bad(v)) {
      t.node(v).bad = false;
      ct.merged_by_observation.push_back(ct.component_of_node[v]);
    }
}

std::string ChainedTree::str() const {
  std::ostringstream o;
  std::function<void(int, int, int)> rec = [&](int v, int p, int depth) {
    const TreeNode& nd = tree.node(v);
    o << std::string(2 * depth, ' ');
    if (nd.square) o << "[chain]";
    else o << nd.label << " " << (nd.bad ? "bad" : "good") << (nd.tags ? " " + tags_str(nd.tags) : "");
    o << "\n";
    for (int w : tree.adj(v))
      if (w != p) rec(w, v, depth + 1);
  };
  if (!tree.empty()) rec(0, -1, 0);
  return o.str();
}

}  // namespace invindel
