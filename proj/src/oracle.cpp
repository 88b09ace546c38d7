#include "invindel/oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "invindel/distance.hpp"
#include "invindel/error.hpp"
#include "invindel/treecover.hpp"

namespace invindel {

namespace {

struct CoverSearch {
  std::vector<std::pair<uint64_t, int>> cands;  // bad-node mask, cost
  uint64_t leaf_mask = 0;
  std::unordered_map<uint64_t, int> memo;

  int lower_bound(uint64_t u) const { return (std::popcount(u & leaf_mask) + 1) / 2; }

  int solve(uint64_t u) {
    if (!u) return 0;
    auto it = memo.find(u);
    if (it != memo.end()) return it->second;
    uint64_t low = u & (~u + 1);
    int best = 1 << 20;
    for (const auto& [mask, cost] : cands) {
      if (!(mask & low)) continue;
      uint64_t rest = u & ~mask;
      if (cost + lower_bound(rest) >= best) continue;
      best = std::min(best, cost + solve(rest));
    }
    memo.emplace(u, best);
    return best;
  }
};

}  // namespace

int brute_force_tau(const TaggedTree& t, const OracleBudget& budget, bool bridges) {
  if (t.size() > budget.max_tree_nodes)
    throw Error(Errc::BudgetExceeded, std::to_string(t.size()) + " tree nodes");
  std::vector<int> bit(t.size(), -1);
  int nb = 0;
  for (int v = 0; v < t.size(); ++v)
    if (t.bad(v)) bit[v] = nb++;
  if (nb == 0) return 0;
  if (nb > 63) throw Error(Errc::BudgetExceeded, "more than 63 bad nodes");

  CoverSearch cs;
  std::map<uint64_t, int> best;
  auto offer = [&](uint64_t m, int c) {
    auto [it, fresh] = best.emplace(m, c);
    if (!fresh) it->second = std::min(it->second, c);
  };
  for (int u = 0; u < t.size(); ++u) {
    if (t.bad(u)) offer(uint64_t{1} << bit[u], 1);
    std::vector<int> par = t.parents_from(u);
    for (int v = u + 1; v < t.size(); ++v) {
      if (!bridges && !t.is_leaf(u) && !t.is_leaf(v)) continue;
      uint64_t m = 0;
      int k = 0;
      for (int x = v; x != -1; x = par[x])
        if (t.bad(x)) m |= uint64_t{1} << bit[x], ++k;
      if (k == 0) continue;
      offer(m, k == 1 ? 1 : ((t.tags(u) & t.tags(v)) ? 1 : 2));
    }
  }
  // drop candidates dominated by a superset of no greater cost
  std::vector<std::pair<uint64_t, int>> all(best.begin(), best.end());
  for (const auto& [m, c] : all) {
    bool dominated = false;
    for (const auto& [m2, c2] : all)
      if (m2 != m && (m2 & m) == m && c2 <= c) {
        dominated = true;
        break;
      }
    if (!dominated) cs.cands.push_back({m, c});
  }
  for (int v = 0; v < t.size(); ++v)
    if (t.bad(v) && t.is_leaf(v)) cs.leaf_mask |= uint64_t{1} << bit[v];
  uint64_t all_bad = nb == 64 ? ~uint64_t{0} : (uint64_t{1} << nb) - 1;
  return cs.solve(all_bad);
}

std::string canonical_circular(const CircSeq& s) {
  const size_t n = s.size();
  std::string best;
  std::string cur(n, '\0');
  for (int dir = 0; dir < 2; ++dir) {
    for (size_t r = 0; r < n; ++r) {
      for (size_t i = 0; i < n; ++i) {
        int8_t x = dir == 0 ? s[(r + i) % n] : static_cast<int8_t>(-s[(r + n - i) % n]);
        cur[i] = static_cast<char>(x);
      }
      if (best.empty() || cur < best) best = cur;
    }
  }
  return best;
}

namespace {

struct Universe {
  std::vector<std::string> names;
  int common = 0;               // codes 1..common
  std::vector<char> b_only;     // by code
  std::vector<char> exclusive;  // by code
};

Universe make_universe(const GenomePair& p) {
  Universe u;
  for (const auto& n : p.common) u.names.push_back(n);
  u.common = static_cast<int>(u.names.size());
  for (const auto& n : p.a_only) u.names.push_back(n);
  for (const auto& n : p.b_only) u.names.push_back(n);
  u.b_only.assign(u.names.size() + 1, 0);
  u.exclusive.assign(u.names.size() + 1, 0);
  for (size_t i = 0; i < u.names.size(); ++i) {
    u.exclusive[i + 1] = static_cast<int>(i) >= u.common;
    u.b_only[i + 1] = p.b_only.count(u.names[i]) > 0;
  }
  return u;
}

CircSeq encode(const Chromosome& c, const std::vector<std::string>& names) {
  CircSeq s;
  for (const Marker& m : c.markers) {
    auto it = std::find(names.begin(), names.end(), m.name);
    if (it == names.end()) throw Error(Errc::PreconditionViolated, "unknown marker " + m.name);
    int code = static_cast<int>(it - names.begin()) + 1;
    s.push_back(static_cast<int8_t>(m.reverse ? -code : code));
  }
  return s;
}

CircSeq decode(const std::string& canon) {
  return CircSeq(canon.begin(), canon.end());
}

// Every signed ordering of every nonempty subset of `pool`.
std::vector<CircSeq> blocks_from(const std::vector<int>& pool) {
  std::vector<CircSeq> out;
  const int k = static_cast<int>(pool.size());
  for (int mask = 1; mask < (1 << k); ++mask) {
    std::vector<int> sub;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) sub.push_back(pool[i]);
    std::sort(sub.begin(), sub.end());
    do {
      for (int signs = 0; signs < (1 << sub.size()); ++signs) {
        CircSeq b;
        for (size_t i = 0; i < sub.size(); ++i)
          b.push_back(static_cast<int8_t>((signs >> i) & 1 ? -sub[i] : sub[i]));
        out.push_back(b);
      }
    } while (std::next_permutation(sub.begin(), sub.end()));
  }
  return out;
}

template <class Emit>
void neighbors(const CircSeq& s, const Universe& u, bool reverse_moves, Emit emit) {
  const size_t n = s.size();
  // inversions
  for (size_t i = 0; i < n; ++i)
    for (size_t len = 1; len < n; ++len) {
      CircSeq t = s;
      for (size_t k = 0; k < len; ++k) t[(i + k) % n] = static_cast<int8_t>(-s[(i + len - 1 - k) % n]);
      emit(t);
    }
  // deletions: any non-common block forward; only B blocks backward
  auto deletable = [&](int8_t x) {
    int c = x < 0 ? -x : x;
    return reverse_moves ? u.b_only[c] != 0 : u.exclusive[c] != 0;
  };
  for (size_t i = 0; i < n; ++i)
    for (size_t len = 1; len < n; ++len) {
      bool ok = true;
      for (size_t k = 0; k < len && ok; ++k) ok = deletable(s[(i + k) % n]);
      if (!ok) break;
      CircSeq t;
      for (size_t k = len; k < n; ++k) t.push_back(s[(i + k) % n]);
      emit(t);
    }
  // insertions of absent markers: B ones forward, any exclusive backward
  std::vector<char> present(u.names.size() + 1, 0);
  for (int8_t x : s) present[x < 0 ? -x : x] = 1;
  std::vector<int> pool;
  for (int c = u.common + 1; c <= static_cast<int>(u.names.size()); ++c)
    if (!present[c] && (reverse_moves || u.b_only[c])) pool.push_back(c);
  if (pool.empty()) return;
  for (const CircSeq& blk : blocks_from(pool))
    for (size_t pos = 0; pos < n; ++pos) {
      CircSeq t(s.begin(), s.begin() + pos + 1);
      t.insert(t.end(), blk.begin(), blk.end());
      t.insert(t.end(), s.begin() + pos + 1, s.end());
      emit(t);
    }
}

void check_budget(const GenomePair& p, const OracleBudget& b) {
  if (static_cast<int>(p.common.size()) > b.max_common)
    throw Error(Errc::BudgetExceeded, std::to_string(p.common.size()) + " common markers");
  if (static_cast<int>(p.a_only.size() + p.b_only.size()) > b.max_exclusive)
    throw Error(Errc::BudgetExceeded, "too many exclusive markers");
  if (p.common.empty()) throw Error(Errc::PreconditionViolated, "no common marker");
}

}  // namespace

int brute_force_distance(const GenomePair& pair, const OracleBudget& budget) {
  check_budget(pair, budget);
  Universe u = make_universe(pair);
  std::string start = canonical_circular(encode(pair.a, u.names));
  std::string goal = canonical_circular(encode(pair.b, u.names));
  if (start == goal) return 0;
  std::unordered_map<std::string, int> dist{{start, 0}};
  std::deque<std::string> q{start};
  while (!q.empty()) {
    std::string cur = q.front();
    q.pop_front();
    int d = dist[cur];
    int found = -1;
    neighbors(decode(cur), u, false, [&](const CircSeq& t) {
      if (found >= 0) return;
      std::string c = canonical_circular(t);
      if (dist.emplace(c, d + 1).second) {
        if (c == goal) found = d + 1;
        q.push_back(c);
      }
    });
    if (found >= 0) return found;
    if (dist.size() > budget.max_states) throw Error(Errc::BudgetExceeded, "BFS state cap");
  }
  throw Error(Errc::PreconditionViolated, "target unreachable");
}

DistanceTable distances_to_target(const GenomePair& pair, const OracleBudget& budget) {
  check_budget(pair, budget);
  Universe u = make_universe(pair);
  DistanceTable table;
  table.names = u.names;
  std::string goal = canonical_circular(encode(pair.b, u.names));
  table.dist.emplace(goal, 0);
  std::deque<std::string> q{goal};
  while (!q.empty()) {
    std::string cur = q.front();
    q.pop_front();
    int d = table.dist[cur];
    neighbors(decode(cur), u, true, [&](const CircSeq& t) {
      std::string c = canonical_circular(t);
      if (table.dist.emplace(c, d + 1).second) q.push_back(c);
    });
    if (table.dist.size() > budget.max_states) throw Error(Errc::BudgetExceeded, "BFS state cap");
  }
  return table;
}

int DistanceTable::lookup(const Chromosome& c) const {
  auto it = dist.find(canonical_circular(encode(c, names)));
  return it == dist.end() ? -1 : it->second;
}

bool AnchorReport::consistent() const {
  return std::adjacent_find(distances.begin(), distances.end(), std::not_equal_to<>()) ==
         distances.end();
}

AnchorReport anchor_invariance_check(const GenomePair& pair) {
  AnchorReport r;
  for (const auto& g : pair.common) {
    DistanceOptions opt;
    opt.anchor = g;
    r.anchors.push_back(g);
    r.distances.push_back(compute_distance(pair, opt).distance);
  }
  return r;
}

}  // namespace invindel
