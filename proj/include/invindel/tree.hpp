#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace invindel {

using Tags = uint8_t;
inline constexpr Tags kTagA = 1;
inline constexpr Tags kTagB = 2;
inline constexpr Tags kTagAB = 3;

std::string tags_str(Tags t);  // "", "A", "B", "AB"

// A node of the tree this one was derived from, with the tags it had there.
struct Origin {
  int id;
  Tags tags;
};

struct TreeNode {
  bool bad = true;
  Tags tags = 0;
  bool square = false;
  std::string label;
  std::vector<Origin> origin;
};

// Unrooted tree of bad and good nodes carrying A/B tags. Used for the chained
// tree (square nodes are clean good nodes) and for every contracted tree.
class TaggedTree {
 public:
  int add_node(bool bad, Tags tags, std::string label = {}, bool square = false);
  void add_edge(int u, int v);

  int size() const { return static_cast<int>(nodes_.size()); }
  bool empty() const { return nodes_.empty(); }
  const TreeNode& node(int v) const { return nodes_[v]; }
  TreeNode& node(int v) { return nodes_[v]; }
  const std::vector<int>& adj(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool is_leaf(int v) const { return degree(v) <= 1; }
  bool bad(int v) const { return nodes_[v].bad; }
  Tags tags(int v) const { return nodes_[v].tags; }

  std::vector<int> leaves() const;
  std::vector<int> bad_nodes() const;
  int bad_count() const;
  std::vector<int> path(int u, int v) const;  // node sequence u..v
  std::vector<int> parents_from(int root) const;

  // origin of every node becomes the node itself
  void reset_origins();

  // Bracket text: kind[=label](child,...), rooted at node 0.
  std::string str() const;
  std::string dot(const std::string& name = "T") const;
  static TaggedTree parse(std::string_view text);

 private:
  std::vector<TreeNode> nodes_;
  std::vector<std::vector<int>> adj_;
};

// Max-flower contraction. Every output node's origin lists the input nodes
// collapsed into it (origins are relative to the argument).
TaggedTree flower_contract(const TaggedTree& t);

// Tree induced on the kept nodes (must be connected); origins point back.
TaggedTree induced(const TaggedTree& t, const std::vector<char>& keep);

// Re-express origins of `derived` (relative to `parent`) relative to whatever
// `parent`'s origins point to.
void compose_origins(TaggedTree& derived, const TaggedTree& parent);

TaggedTree swap_ab(const TaggedTree& t);

// Empty string when the tree satisfies the contracted-form invariants.
std::string contracted_form_violation(const TaggedTree& t);

}  // namespace invindel
