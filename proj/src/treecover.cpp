#include "invindel/treecover.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "invindel/error.hpp"

namespace invindel {

CoverPath path_cost(const TaggedTree& t, int u, int v) {
  if (u == v) {
    if (!t.bad(u)) throw Error(Errc::ShortPathOnGoodNode, "node " + std::to_string(u));
    return {u, u, 1};
  }
  std::vector<int> p = t.path(u, v);
  int bad = 0, last = -1;
  for (int x : p)
    if (t.bad(x)) ++bad, last = x;
  if (bad == 0) throw Error(Errc::PreconditionViolated, "path covers no bad node");
  if (bad == 1) return {last, last, 1};
  return {u, v, (t.tags(u) & t.tags(v)) ? 1 : 2};
}

std::string cover_violation(const TaggedTree& t, const Cover& c) {
  std::vector<char> covered(t.size(), 0);
  int total = 0;
  for (const CoverPath& p : c.paths) {
    if (p.u < 0 || p.v < 0 || p.u >= t.size() || p.v >= t.size()) return "endpoint out of range";
    CoverPath q;
    try {
      q = path_cost(t, p.u, p.v);
    } catch (const Error& e) {
      return e.what();
    }
    if (q.cost != p.cost)
      return "path " + std::to_string(p.u) + "-" + std::to_string(p.v) + " declared cost " +
             std::to_string(p.cost) + ", actual " + std::to_string(q.cost);
    total += p.cost;
    for (int x : t.path(p.u, p.v)) covered[x] = 1;
  }
  if (total != c.total_cost) return "total cost mismatch";
  for (int x = 0; x < t.size(); ++x)
    if (t.bad(x) && !covered[x]) return "bad node " + std::to_string(x) + " uncovered";
  return {};
}

Cover map_cover(const Cover& c, const TaggedTree& derived, const TaggedTree& parent) {
  Cover out;
  for (const CoverPath& p : c.paths) {
    std::vector<int> nodes = derived.path(p.u, p.v);
    int bad = 0, last = -1;
    for (int x : nodes)
      if (derived.bad(x)) ++bad, last = x;
    if (bad <= 1) {
      int target = -1;
      for (const Origin& o : derived.node(last).origin)
        if (parent.bad(o.id)) target = o.id;
      out.add(path_cost(parent, target, target));
      continue;
    }
    const auto& ou = derived.node(p.u).origin;
    const auto& ov = derived.node(p.v).origin;
    int bu = ou[0].id, bv = ov[0].id;
    bool found = false;
    for (const Origin& a : ou) {
      for (const Origin& b : ov)
        if (a.tags & b.tags) {
          bu = a.id, bv = b.id;
          found = true;
          break;
        }
      if (found) break;
    }
    out.add(path_cost(parent, bu, bv));
  }
  return out;
}

std::vector<int> circular_leaf_order(const TaggedTree& t) {
  std::vector<int> order;
  if (t.empty()) return order;
  std::vector<char> seen(t.size(), 0);
  std::vector<std::pair<int, size_t>> stack{{0, 0}};
  std::vector<std::vector<int>> nb(t.size());
  for (int v = 0; v < t.size(); ++v) {
    nb[v] = t.adj(v);
    std::sort(nb[v].begin(), nb[v].end());
  }
  seen[0] = 1;
  if (t.is_leaf(0)) order.push_back(0);
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i == nb[v].size()) {
      stack.pop_back();
      continue;
    }
    int w = nb[v][i++];
    if (seen[w]) continue;
    seen[w] = 1;
    if (t.is_leaf(w)) order.push_back(w);
    stack.push_back({w, 0});
  }
  return order;
}

std::vector<std::pair<int, int>> pair_traversals(const std::vector<int>& leaves) {
  if (leaves.size() % 2) throw Error(Errc::OddLeafCount, std::to_string(leaves.size()) + " leaves");
  size_t n = leaves.size() / 2;
  std::vector<std::pair<int, int>> out;
  for (size_t i = 0; i < n; ++i) out.push_back({leaves[i], leaves[i + n]});
  return out;
}

std::vector<std::pair<int, int>> cover_tree_with_traversals(const TaggedTree& t) {
  return pair_traversals(circular_leaf_order(t));
}

LeafBranch leaf_branch(const TaggedTree& t, int leaf) {
  LeafBranch b;
  b.leaf = leaf;
  int leaves = 0;
  for (int v = 0; v < t.size(); ++v) leaves += t.is_leaf(v);
  if (leaves <= 2) {
    // the tree is a path: its single leaf-branch is the whole tree
    int prev = -1, cur = leaf;
    while (cur != -1) {
      b.nodes.push_back(cur);
      int nxt = -1;
      for (int w : t.adj(cur))
        if (w != prev) nxt = w;
      prev = cur;
      cur = nxt;
    }
  } else {
    int prev = -1, cur = leaf;
    while (cur != -1 && (cur == leaf || t.degree(cur) == 2)) {
      b.nodes.push_back(cur);
      int nxt = -1;
      for (int w : t.adj(cur))
        if (w != prev) nxt = w;
      prev = cur;
      cur = nxt;
    }
  }
  for (int x : b.nodes) b.bad_count += t.bad(x);
  return b;
}

bool all_leaves_share_tag(const TaggedTree& t) {
  Tags common = kTagAB;
  for (int v : t.leaves()) common &= t.tags(v);
  return common != 0;
}

bool all_leaves_clean(const TaggedTree& t) {
  for (int v : t.leaves())
    if (t.tags(v)) return false;
  return true;
}

// Traversal cover of the tree minus one leaf-branch, plus an extra path for
// the removed leaf (short when its branch is short and `short_ok`).
static Cover odd_cover(const TaggedTree& t, const LeafBranch& br, bool short_ok) {
  std::vector<char> removed(t.size(), 0);
  for (int x : br.nodes) removed[x] = 1;
  std::vector<int> rest;
  for (int v : circular_leaf_order(t))
    if (!removed[v]) rest.push_back(v);
  Cover c;
  for (auto [u, v] : pair_traversals(rest)) c.add(path_cost(t, u, v));
  if (short_ok && !br.is_long()) c.add(path_cost(t, br.leaf, br.leaf));
  else c.add(path_cost(t, br.leaf, rest.front()));
  return c;
}

static Cover single_node_cover(const TaggedTree& t) {
  Cover c;
  if (t.size() == 1) c.add(path_cost(t, 0, 0));
  return c;
}

Cover tau_shared_tag(const TaggedTree& t) {
  if (t.empty() || !all_leaves_share_tag(t))
    throw Error(Errc::PreconditionViolated, "leaves do not share a tag");
  if (t.size() == 1) return single_node_cover(t);
  std::vector<int> order = circular_leaf_order(t);
  if (order.size() % 2 == 0) {
    Cover c;
    for (auto [u, v] : pair_traversals(order)) c.add(path_cost(t, u, v));
    return c;
  }
  return odd_cover(t, leaf_branch(t, order.front()), false);
}

Cover tau_all_clean(const TaggedTree& t) {
  if (t.empty() || !all_leaves_clean(t))
    throw Error(Errc::PreconditionViolated, "leaves are not all clean");
  if (t.size() == 1) return single_node_cover(t);
  std::vector<int> order = circular_leaf_order(t);
  if (order.size() % 2 == 0) {
    Cover c;
    for (auto [u, v] : pair_traversals(order)) c.add(path_cost(t, u, v));
    return c;
  }
  for (int leaf : order) {
    LeafBranch br = leaf_branch(t, leaf);
    if (!br.is_long()) return odd_cover(t, br, true);
  }
  return odd_cover(t, leaf_branch(t, order.front()), false);
}

LeafClass class_of(Tags t) {
  switch (t) {
    case kTagA: return kClassA;
    case kTagB: return kClassB;
    case kTagAB: return kClassX;
    default: return kClassC;
  }
}

char class_letter(int cls) { return "ABCX"[cls]; }

ClassSet parse_class_set(const std::string& letters) {
  ClassSet s = 0;
  for (char ch : letters) {
    switch (ch) {
      case 'A': s |= kSetA; break;
      case 'B': s |= kSetB; break;
      case 'C': s |= kSetC; break;
      case 'X': s |= kSetX; break;
      default: throw Error(Errc::ParseError, std::string("bad leaf class '") + ch + "'");
    }
  }
  return s;
}

std::string class_set_str(ClassSet s) {
  std::string out;
  for (int c = 0; c < 4; ++c)
    if (s & (1 << c)) out += class_letter(c);
  return out;
}

std::string Composition::key() const {
  return std::to_string(la) + std::to_string(lb) + std::to_string(lc) + std::to_string(lab);
}

Composition composition_of(const TaggedTree& t) {
  Composition c;
  for (int v : t.leaves()) {
    switch (class_of(t.tags(v))) {
      case kClassA: ++c.la; break;
      case kClassB: ++c.lb; break;
      case kClassC: ++c.lc; break;
      case kClassX: ++c.lab; break;
    }
  }
  return c;
}

Topology::Topology(const TaggedTree& t) : t_(t) {
  for (int v : t_.leaves()) leaves_[class_of(t_.tags(v))].push_back(v);
  comp_ = {static_cast<int>(leaves_[0].size()), static_cast<int>(leaves_[1].size()),
           static_cast<int>(leaves_[2].size()), static_cast<int>(leaves_[3].size())};
  for (int c = 0; c < 4; ++c)
    if (!leaves_[c].empty()) present_ |= static_cast<ClassSet>(1 << c);
  for (int v : t_.leaves()) {
    branches_.push_back(leaf_branch(t_, v));
    if (t_.tags(v) == 0 && !branches_.back().is_long()) solo_.push_back(v);
  }
}

const std::vector<char>& Topology::subtree(ClassSet s) const {
  auto it = subtrees_.find(s);
  if (it != subtrees_.end()) return it->second;
  const int n = t_.size();
  std::vector<char> keep(n, 0), req(n, 0);
  int required = 0;
  for (int c = 0; c < 4; ++c)
    if (s & (1 << c))
      for (int v : leaves_[c]) req[v] = 1, ++required;
  if (required > 0) {
    std::vector<int> deg(n);
    std::deque<int> q;
    for (int v = 0; v < n; ++v) {
      keep[v] = 1;
      deg[v] = t_.degree(v);
    }
    for (int v = 0; v < n; ++v)
      if (deg[v] <= 1 && !req[v]) q.push_back(v);
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      if (!keep[v]) continue;
      keep[v] = 0;
      for (int w : t_.adj(v))
        if (keep[w] && --deg[w] <= 1 && !req[w]) q.push_back(w);
    }
  }
  return subtrees_.emplace(s, std::move(keep)).first->second;
}

bool Topology::intersect(ClassSet s1, ClassSet s2) const {
  const auto& a = subtree(s1);
  const auto& b = subtree(s2);
  for (int v = 0; v < t_.size(); ++v)
    if (a[v] && b[v]) return true;
  return false;
}

Topology::Link Topology::link(ClassSet s1, ClassSet s2) const {
  const auto& a = subtree(s1);
  const auto& b = subtree(s2);
  std::vector<int> par(t_.size(), -2);
  std::deque<int> q;
  for (int v = 0; v < t_.size(); ++v)
    if (a[v]) par[v] = -1, q.push_back(v);
  int hit = -1;
  while (!q.empty() && hit < 0) {
    int v = q.front();
    q.pop_front();
    if (b[v]) {
      hit = v;
      break;
    }
    for (int w : t_.adj(v))
      if (par[w] == -2) par[w] = v, q.push_back(w);
  }
  Link l;
  if (hit < 0) throw Error(Errc::PreconditionViolated, "empty subtree in link query");
  for (int x = par[hit]; x >= 0 && par[x] != -1; x = par[x]) l.nodes.push_back(x);
  std::reverse(l.nodes.begin(), l.nodes.end());
  for (int x : l.nodes) l.bad += t_.bad(x);
  return l;
}

bool Topology::separated(ClassSet s1, ClassSet s2) const {
  if (!has(s1) || !has(s2)) throw Error(Errc::PreconditionViolated, "separation query on an empty class");
  if (intersect(s1, s2)) return false;
  return link(s1, s2).bad > 0;
}

bool Topology::isolated(ClassSet s) const {
  ClassSet rest = present_ & static_cast<ClassSet>(~s);
  if (rest == 0) return false;
  return separated(s, rest);
}

bool Topology::short_bad_link(ClassSet s1, ClassSet s2) const {
  return separated(s1, s2) && link(s1, s2).bad == 1;
}

bool Topology::mate(ClassSet s, Tags tag, ClassSet other) const {
  if (!separated(s, other)) return false;
  Link l = link(s, other);
  size_t p = 0;
  for (size_t i = 0; i < l.nodes.size(); ++i)
    if (t_.bad(l.nodes[i])) p = i;
  for (size_t i = p; i < l.nodes.size(); ++i)
    if (t_.tags(l.nodes[i]) & tag) return true;
  const auto& o = subtree(other);
  for (int v = 0; v < t_.size(); ++v)
    if (o[v] && (t_.tags(v) & tag)) return true;
  return false;
}

bool Topology::fully_co_rooted() const {
  for (int c = 0; c < 4; ++c) {
    ClassSet s = static_cast<ClassSet>(1 << c);
    if ((present_ & s) && isolated(s)) return false;
  }
  ClassSet ab = present_ & (kSetA | kSetB);
  if (ab && isolated(ab)) return false;
  return true;
}

bool Topology::fully_separated() const {
  for (int c = 0; c < 4; ++c) {
    ClassSet s = static_cast<ClassSet>(1 << c);
    if ((present_ & s) && !isolated(s)) return false;
  }
  if (present_ == (kSetA | kSetB | kSetC | kSetX))
    return isolated(kSetA | kSetB) || isolated(kSetA | kSetC) || isolated(kSetA | kSetX);
  return true;
}

TopologyReport analyze_topology(const TaggedTree& t) {
  Topology topo(t);
  TopologyReport r;
  r.composition = topo.composition();
  ClassSet present = topo.present();
  for (int c = 0; c < 4; ++c) {
    ClassSet s = static_cast<ClassSet>(1 << c);
    if (!(present & s)) continue;
    std::vector<int> nodes;
    const auto& sub = topo.subtree(s);
    for (int v = 0; v < t.size(); ++v)
      if (sub[v]) nodes.push_back(v);
    r.canonical_subtrees[std::string(1, class_letter(c))] = nodes;
  }
  for (ClassSet s = 1; s < 16; ++s) {
    if ((s & present) != s || s == present) continue;
    ClassSet rest = present & static_cast<ClassSet>(~s);
    if (s > rest) continue;  // each split once
    std::string state = "co-rooted";
    if (topo.separated(s, rest)) state = topo.link(s, rest).bad == 1 ? "separated-short" : "separated-long";
    r.isolation[class_set_str(s) + "|" + class_set_str(rest)] = state;
  }
  for (int c = 0; c < 4; ++c) {
    ClassSet s = static_cast<ClassSet>(1 << c);
    if (!(present & s)) continue;
    for (ClassSet o = 1; o < 16; ++o) {
      if ((o & present) != o || (o & s)) continue;
      for (Tags tag : {kTagA, kTagB})
        if (topo.mate(s, tag, o))
          r.mates.push_back(class_set_str(s) + ":" + (tag == kTagA ? "a" : "b") + "@" + class_set_str(o));
    }
  }
  r.solo_candidates = topo.solo_candidates();
  r.fully_co_rooted = topo.fully_co_rooted();
  r.fully_separated = topo.fully_separated();
  for (const LeafBranch& b : topo.branches()) r.leaf_branches.push_back({b.leaf, b.is_long()});
  return r;
}

std::string TopologyReport::str() const {
  std::ostringstream o;
  o << "composition <" << composition.key() << ">\n";
  for (const auto& [k, nodes] : canonical_subtrees) {
    o << "T(" << k << ") =";
    for (int v : nodes) o << ' ' << v;
    o << '\n';
  }
  for (const auto& [k, v] : isolation) o << "split " << k << ": " << v << '\n';
  o << "mates:";
  for (const auto& m : mates) o << ' ' << m;
  o << "\nsolo candidates:";
  for (int v : solo_candidates) o << ' ' << v;
  o << "\nfully co-rooted: " << (fully_co_rooted ? "yes" : "no")
    << "\nfully separated: " << (fully_separated ? "yes" : "no") << "\nleaf-branches:";
  for (auto [leaf, lng] : leaf_branches) o << ' ' << leaf << (lng ? "(long)" : "(short)");
  o << '\n';
  return o.str();
}

}  // namespace invindel
