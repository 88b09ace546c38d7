#include "invindel/reduction.hpp"

#include <algorithm>
#include <sstream>

#include "invindel/error.hpp"
#include "invindel/residual.hpp"

namespace invindel {

const char* step_name(StepKind k) {
  switch (k) {
    case StepKind::balanced_in_traversal: return "balanced_in_traversal";
    case StepKind::three_to_one: return "three_to_one";
    case StepKind::solo_safe_clean: return "solo_safe_clean";
  }
  return "?";
}

TaggedTree apply_p_reduction(const TaggedTree& t, const std::vector<std::pair<int, int>>& paths) {
  TaggedTree w = t;
  for (auto [u, v] : paths)
    for (int x : w.path(u, v)) w.node(x).bad = false;
  return flower_contract(w);
}

TaggedTree apply_p_reduction(const TaggedTree& t, int u, int v) {
  return apply_p_reduction(t, std::vector<std::pair<int, int>>{{u, v}});
}

std::vector<int> class_leaves(const TaggedTree& t, LeafClass cls) {
  std::vector<int> out;
  for (int v : circular_leaf_order(t))
    if (class_of(t.tags(v)) == cls) out.push_back(v);
  return out;
}

// Node of `derived` that still is the bad node `old` of its parent.
static int survivor(const TaggedTree& derived, int old) {
  for (int v = 0; v < derived.size(); ++v) {
    if (!derived.bad(v)) continue;
    for (const Origin& o : derived.node(v).origin)
      if (o.id == old) return v;
  }
  return -1;
}

static std::vector<int> in_circular_order(const TaggedTree& t, const std::vector<int>& leaves) {
  std::vector<int> out;
  for (int v : circular_leaf_order(t))
    if (std::find(leaves.begin(), leaves.end(), v) != leaves.end()) out.push_back(v);
  return out;
}

BalancedResult balanced_simultaneous_reduction(const TaggedTree& t, const std::vector<int>& leaves,
                                               bool can_reduce_to_2, std::optional<int> solo) {
  const size_t l = leaves.size();
  if (!(l >= 4 || (l % 2 == 0 && can_reduce_to_2 && l >= 2)))
    throw Error(Errc::PreconditionViolated, "balanced reduction on " + std::to_string(l) + " leaves");
  std::vector<int> lp = in_circular_order(t, leaves);
  if (l % 2) {
    int u = solo ? *solo : lp.front();
    std::erase(lp, u);
  }
  std::vector<std::pair<int, int>> paths = pair_traversals(lp);
  // every traversal pairs leaves n apart in circular order, so "closest
  // endpoints" ties everywhere and the first one is dropped
  if (l % 2 == 0) {
    auto it = paths.begin();
    if (solo)
      it = std::find_if(paths.begin(), paths.end(),
                        [&](auto p) { return p.first == *solo || p.second == *solo; });
    if (it != paths.end()) paths.erase(it);
  }
  if ((l % 2) || !can_reduce_to_2)
    if (!paths.empty()) paths.erase(paths.begin());

  BalancedResult r;
  r.tree = apply_p_reduction(t, paths);
  r.spent = paths;
  for (int x : leaves) {
    int y = survivor(r.tree, x);
    if (y >= 0 && r.tree.is_leaf(y)) r.remaining.push_back(y);
  }
  return r;
}

static std::vector<char> steiner(const TaggedTree& t, const std::vector<int>& req_nodes) {
  const int n = t.size();
  std::vector<char> keep(n, 1), req(n, 0);
  std::vector<int> deg(n), q;
  for (int v : req_nodes) req[v] = 1;
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
  return keep;
}

int essential_leaf(const TaggedTree& t, const std::vector<int>& leaves) {
  if (leaves.size() != 3) throw Error(Errc::PreconditionViolated, "essential leaf needs 3 leaves");
  std::vector<int> L = in_circular_order(t, leaves);
  std::vector<char> sub = steiner(t, L);
  auto sub_degree = [&](int v) {
    int d = 0;
    for (int w : t.adj(v)) d += sub[w];
    return d;
  };
  // leaf-branch of each leaf inside T(L)
  std::vector<std::vector<int>> branch(3);
  for (int i = 0; i < 3; ++i) {
    int prev = -1, cur = L[i];
    while (cur != -1 && (cur == L[i] || sub_degree(cur) == 2)) {
      branch[i].push_back(cur);
      int nxt = -1;
      for (int w : t.adj(cur))
        if (sub[w] && w != prev) nxt = w;
      prev = cur;
      cur = nxt;
    }
  }
  // leaf classes found in the parts of T outside T(L) hanging off each branch
  std::vector<ClassSet> hanging(3, 0);
  std::vector<char> touches(3, 0);
  for (int i = 0; i < 3; ++i) {
    std::vector<char> seen(t.size(), 0);
    std::vector<int> stack;
    for (int x : branch[i])
      for (int w : t.adj(x))
        if (!sub[w] && !seen[w]) seen[w] = 1, stack.push_back(w);
    touches[i] = !stack.empty();
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      if (t.is_leaf(v)) hanging[i] |= static_cast<ClassSet>(1 << class_of(t.tags(v)));
      for (int w : t.adj(v))
        if (!sub[w] && !seen[w]) seen[w] = 1, stack.push_back(w);
    }
  }
  for (int i = 0; i < 3; ++i)
    if (!touches[i]) return L[i];
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (hanging[i] & hanging[j]) return L[i];
  return L[0];
}

ThreeToOneResult reduce_from_3_to_1(const TaggedTree& t, const std::vector<int>& leaves) {
  int u = essential_leaf(t, leaves);
  std::vector<int> rest;
  for (int x : in_circular_order(t, leaves))
    if (x != u) rest.push_back(x);
  ThreeToOneResult r;
  r.spent = {rest[0], rest[1]};
  r.tree = apply_p_reduction(t, rest[0], rest[1]);
  r.kept = survivor(r.tree, u);
  return r;
}

namespace {

// Tracks a chain of reductions of one input tree.
struct Chain {
  const TaggedTree& input;
  TaggedTree work;
  std::vector<ReductionStep> steps;
  int cost = 0;

  explicit Chain(const TaggedTree& t) : input(t), work(t) { work.reset_origins(); }

  void advance(TaggedTree next, const std::vector<std::pair<int, int>>& spent, StepKind kind,
               LeafClass cls) {
    for (auto [u, v] : spent) {
      Cover one;
      one.add(path_cost(work, u, v));
      Cover mapped = map_cover(one, work, input);
      steps.push_back({kind, mapped.paths[0], cls, one.total_cost});
      cost += one.total_cost;
    }
    compose_origins(next, work);
    work = std::move(next);
  }
};

}  // namespace

ResidualResult solo_leaf_search_and_clean_reduction(const TaggedTree& t) {
  std::vector<int> clean = class_leaves(t, kClassC);
  const size_t lc = clean.size();
  bool can_reduce_to_1 = false;
  if (lc % 2) {
    Composition c = composition_of(t);
    if (c.la != 1 || c.lb != 1 || c.lab > 0) can_reduce_to_1 = true;
  }

  auto run = [&](std::optional<int> solo) {
    Chain ch(t);
    std::vector<int> L = clean;
    std::optional<int> s = solo;
    StepKind kind = solo ? StepKind::solo_safe_clean : StepKind::balanced_in_traversal;
    if (lc >= 4) {
      BalancedResult br = balanced_simultaneous_reduction(ch.work, L, true, s);
      L = br.remaining;
      if (s) s = survivor(br.tree, *s);
      ch.advance(std::move(br.tree), br.spent, kind, kClassC);
    }
    if (can_reduce_to_1 && L.size() == 3) {
      if (!s) {
        ThreeToOneResult r = reduce_from_3_to_1(ch.work, L);
        ch.advance(std::move(r.tree), {r.spent}, StepKind::three_to_one, kClassC);
      } else {
        std::vector<int> rest;
        for (int x : in_circular_order(ch.work, L))
          if (x != *s) rest.push_back(x);
        TaggedTree next = apply_p_reduction(ch.work, rest[0], rest[1]);
        ch.advance(std::move(next), {{rest[0], rest[1]}}, StepKind::solo_safe_clean, kClassC);
      }
    }
    ResidualResult r;
    LookupResult look = cover_without_reduction(ch.work);
    r.residual = ch.work;
    r.steps = ch.steps;
    r.reduction_cost = ch.cost;
    r.solo_leaf = solo;
    r.residual_cost = look.cost;
    r.case_label = look.label;
    for (const ReductionStep& st : r.steps) r.cover.add(st.path);
    r.cover.append(map_cover(look.cover, ch.work, t));
    return r;
  };

  ResidualResult best = run(std::nullopt);
  const Topology topo(t);
  for (int s : topo.solo_candidates()) {
    ResidualResult r = run(s);
    if (r.total() < best.total()) best = std::move(r);
  }
  return best;
}

ResidualResult compute_residual(const TaggedTree& t) {
  if (t.bad_count() == 0) throw Error(Errc::DegenerateTree, "no bad node");
  Chain ch(t);
  for (LeafClass cls : {kClassA, kClassB}) {
    std::vector<int> L = class_leaves(ch.work, cls);
    if (L.size() >= 4) {
      BalancedResult br = balanced_simultaneous_reduction(ch.work, L, true, std::nullopt);
      L = br.remaining;
      ch.advance(std::move(br.tree), br.spent, StepKind::balanced_in_traversal, cls);
    }
    if (L.size() == 3) {
      ThreeToOneResult r = reduce_from_3_to_1(ch.work, L);
      ch.advance(std::move(r.tree), {r.spent}, StepKind::three_to_one, cls);
    }
  }

  bool swapped = false;
  {
    Composition c = composition_of(ch.work);
    if (c.lb > c.la) {
      ch.work = swap_ab(ch.work);
      swapped = true;
    }
  }

  std::vector<int> LX = class_leaves(ch.work, kClassX);
  if (LX.size() >= 3) {
    Composition c = composition_of(ch.work);
    const int la = c.la, lb = c.lb;
    int lcr = c.lc;
    if (lcr % 2) lcr = 1;
    else if (lcr > 0) lcr = 2;
    bool can2 = false;
    if (LX.size() % 2 == 0)
      if (lb == 0 || (lcr == 0 && la + lb < 4) || (lcr > 0 && la + lb + lcr < 5)) can2 = true;
    if (LX.size() >= 5 || can2) {
      BalancedResult br = balanced_simultaneous_reduction(ch.work, LX, can2, std::nullopt);
      LX = br.remaining;
      ch.advance(std::move(br.tree), br.spent, StepKind::balanced_in_traversal, kClassX);
    }
    if (LX.size() == 3) {
      if ((lb == 0 && la + lcr < 4) || (lcr == 0 && la + lb < 3) ||
          (lb > 0 && lcr > 0 && la + lb + lcr < 4)) {
        ThreeToOneResult r = reduce_from_3_to_1(ch.work, LX);
        ch.advance(std::move(r.tree), {r.spent}, StepKind::three_to_one, kClassX);
      }
    }
  }

  ResidualResult tail = solo_leaf_search_and_clean_reduction(ch.work);
  ResidualResult out;
  out.swapped = swapped;
  out.steps = ch.steps;
  out.reduction_cost = ch.cost;
  for (ReductionStep st : tail.steps) {
    Cover one;
    one.add(st.path);
    st.path = map_cover(one, ch.work, t).paths[0];
    out.steps.push_back(st);
    out.reduction_cost += st.cost;
  }
  if (tail.solo_leaf) {
    int s = *tail.solo_leaf;
    out.solo_leaf = ch.work.node(s).origin.front().id;
    for (const Origin& o : ch.work.node(s).origin)
      if (t.bad(o.id)) out.solo_leaf = o.id;
  }
  out.residual = tail.residual;
  compose_origins(out.residual, ch.work);
  out.residual_cost = tail.residual_cost;
  out.case_label = tail.case_label;
  for (const ReductionStep& st : ch.steps) out.cover.add(st.path);
  out.cover.append(map_cover(tail.cover, ch.work, t));
  return out;
}

std::string ResidualResult::str() const {
  std::ostringstream o;
  int running = 0;
  for (const ReductionStep& s : steps) {
    running += s.cost;
    o << step_name(s.kind) << " class " << class_letter(s.cls) << " path " << s.path.u << "-"
      << s.path.v << " cost " << s.cost << " (running " << running << ")\n";
  }
  o << "reduction cost " << reduction_cost << (swapped ? ", A/B swapped" : "")
    << (solo_leaf ? ", solo leaf " + std::to_string(*solo_leaf) : std::string()) << "\n";
  o << "residual " << residual.str() << " <" << composition_of(residual).key() << "> cost "
    << residual_cost << " via " << case_label << "\n";
  return o.str();
}

}  // namespace invindel
