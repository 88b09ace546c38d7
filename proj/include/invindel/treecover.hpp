#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invindel/tree.hpp"

namespace invindel {

struct CoverPath {
  int u = -1;
  int v = -1;
  int cost = 0;

  bool is_short() const { return u == v; }
  bool operator==(const CoverPath&) const = default;
};

struct Cover {
  std::vector<CoverPath> paths;
  int total_cost = 0;

  void add(const CoverPath& p) {
    paths.push_back(p);
    total_cost += p.cost;
  }
  void append(const Cover& c) {
    for (const CoverPath& p : c.paths) add(p);
  }
};

// A path holding a single bad node is reported as the short path on it.
CoverPath path_cost(const TaggedTree& t, int u, int v);

// Empty string when every bad node is covered and the costs add up.
std::string cover_violation(const TaggedTree& t, const Cover& c);

// Cover expressed on `derived` re-expressed on the tree its origins point to.
Cover map_cover(const Cover& c, const TaggedTree& derived, const TaggedTree& parent);

// Leaves in the circular order of a fixed planar embedding: depth-first from
// node 0, neighbors in id order.
std::vector<int> circular_leaf_order(const TaggedTree& t);

// Pairs the i-th and (i+n)-th leaves in circular order.
std::vector<std::pair<int, int>> pair_traversals(const std::vector<int>& ordered_leaves);
std::vector<std::pair<int, int>> cover_tree_with_traversals(const TaggedTree& t);

struct LeafBranch {
  int leaf = -1;
  std::vector<int> nodes;  // leaf first, branching node excluded
  int bad_count = 0;
  bool is_long() const { return bad_count >= 2; }
};

LeafBranch leaf_branch(const TaggedTree& t, int leaf);

bool all_leaves_share_tag(const TaggedTree& t);
bool all_leaves_clean(const TaggedTree& t);
Cover tau_shared_tag(const TaggedTree& t);
Cover tau_all_clean(const TaggedTree& t);

enum LeafClass { kClassA = 0, kClassB = 1, kClassC = 2, kClassX = 3 };
using ClassSet = uint8_t;
inline constexpr ClassSet kSetA = 1, kSetB = 2, kSetC = 4, kSetX = 8;

LeafClass class_of(Tags t);
char class_letter(int cls);
ClassSet parse_class_set(const std::string& letters);
std::string class_set_str(ClassSet s);

struct Composition {
  int la = 0, lb = 0, lc = 0, lab = 0;

  std::string key() const;  // "2113"
  int total() const { return la + lb + lc + lab; }
  bool operator==(const Composition&) const = default;
  auto operator<=>(const Composition&) const = default;
};

Composition composition_of(const TaggedTree& t);

// Structural relations between partition subtrees of a tree.
class Topology {
 public:
  explicit Topology(const TaggedTree& t);

  const TaggedTree& tree() const { return t_; }
  Composition composition() const { return comp_; }
  const std::vector<int>& leaves_of(int cls) const { return leaves_[cls]; }
  ClassSet present() const { return present_; }

  // Steiner subtree of the leaves of the given classes.
  const std::vector<char>& subtree(ClassSet s) const;
  bool has(ClassSet s) const { return s != 0 && (s & present_) == s; }

  struct Link {
    std::vector<int> nodes;  // from the first subtree to the second, endpoints excluded
    int bad = 0;
  };
  bool intersect(ClassSet s1, ClassSet s2) const;
  Link link(ClassSet s1, ClassSet s2) const;
  bool separated(ClassSet s1, ClassSet s2) const;
  bool co_rooted(ClassSet s1, ClassSet s2) const { return !separated(s1, s2); }
  bool isolated(ClassSet s) const;
  bool short_bad_link(ClassSet s1, ClassSet s2) const;
  bool mate(ClassSet s, Tags tag, ClassSet other) const;
  bool fully_co_rooted() const;
  bool fully_separated() const;
  const std::vector<int>& solo_candidates() const { return solo_; }
  const std::vector<LeafBranch>& branches() const { return branches_; }

 private:
  TaggedTree t_;
  Composition comp_;
  ClassSet present_ = 0;
  std::array<std::vector<int>, 4> leaves_;
  mutable std::map<ClassSet, std::vector<char>> subtrees_;
  std::vector<int> solo_;
  std::vector<LeafBranch> branches_;
};

struct TopologyReport {
  Composition composition;
  std::map<std::string, std::vector<int>> canonical_subtrees;
  std::map<std::string, std::string> isolation;  // co-rooted / separated-short / separated-long
  std::vector<std::string> mates;
  std::vector<int> solo_candidates;
  bool fully_co_rooted = false;
  bool fully_separated = false;
  std::vector<std::pair<int, bool>> leaf_branches;  // leaf, is long

  std::string str() const;
};

TopologyReport analyze_topology(const TaggedTree& t);

}  // namespace invindel
