#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invindel/treecover.hpp"

namespace invindel {

enum class StepKind { balanced_in_traversal, three_to_one, solo_safe_clean };
const char* step_name(StepKind k);

struct ReductionStep {
  StepKind kind = StepKind::balanced_in_traversal;
  CoverPath path;  // ids of the input tree
  LeafClass cls = kClassA;
  int cost = 0;
};

struct ResidualResult {
  TaggedTree residual;  // origins point into the input tree
  std::vector<ReductionStep> steps;
  int reduction_cost = 0;
  std::optional<int> solo_leaf;  // input-tree id
  bool swapped = false;
  int residual_cost = 0;
  std::string case_label;
  Cover cover;  // complete witness on the input tree

  int total() const { return reduction_cost + residual_cost; }
  std::string str() const;
};

// Bad nodes of the paths become good, then the tree is contracted. Origins
// of the result point into `t`.
TaggedTree apply_p_reduction(const TaggedTree& t, int u, int v);
TaggedTree apply_p_reduction(const TaggedTree& t, const std::vector<std::pair<int, int>>& paths);

struct BalancedResult {
  TaggedTree tree;  // origins point into the argument
  std::vector<int> remaining;
  std::vector<std::pair<int, int>> spent;  // paths of the argument tree
};
BalancedResult balanced_simultaneous_reduction(const TaggedTree& t, const std::vector<int>& leaves,
                                               bool can_reduce_to_2, std::optional<int> solo);

int essential_leaf(const TaggedTree& t, const std::vector<int>& leaves);

struct ThreeToOneResult {
  TaggedTree tree;
  int kept = -1;  // id in the new tree
  std::pair<int, int> spent;
};
ThreeToOneResult reduce_from_3_to_1(const TaggedTree& t, const std::vector<int>& leaves);

// On an already tag-reduced tree: clean reduction under every solo
// hypothesis, keeping the cheapest.
ResidualResult solo_leaf_search_and_clean_reduction(const TaggedTree& t);

// The whole reduction chain followed by the residual lookup.
ResidualResult compute_residual(const TaggedTree& t);

// Leaves of class `cls`, in circular order.
std::vector<int> class_leaves(const TaggedTree& t, LeafClass cls);

}  // namespace invindel
