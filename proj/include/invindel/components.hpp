#pragma once

#include <string>
#include <vector>

#include "invindel/diagram.hpp"
#include "invindel/tree.hpp"

namespace invindel {

enum class ComponentKind { trivial, good, bad };
const char* kind_name(ComponentKind k);

struct Component {
  int id = 0;
  std::vector<int> cycles;
  ComponentKind kind = ComponentKind::trivial;
  Tags tags = 0;
  std::vector<int> a_edges;  // sorted
  int max_runs = 0;

  int first_edge() const { return a_edges.front(); }
  int last_edge() const { return a_edges.back(); }
};

bool interleave(const Cycle& x, const Cycle& y);
std::vector<Component> find_components(const RelationalDiagram& d);

// The first and last A-edges lie in one component although there are several.
bool anchor_wraps(const std::vector<Component>& comps, const RelationalDiagram& d);

struct ChainedTree {
  TaggedTree tree;                   // node 0 is the root square
  std::vector<int> node_of_component;
  std::vector<int> component_of_node;  // -1 for square nodes
  std::vector<int> merged_by_observation;  // components turned good before contraction

  std::string str() const;  // indented listing
};

ChainedTree build_chained_tree(const std::vector<Component>& comps, const RelationalDiagram& d);

// Zero-cost joint and neutral inversions on cycles with two or more runs:
// a single such component with four or more runs becomes good, and several of
// them merge, with everything between them, into one good node.
void apply_run_observations(ChainedTree& ct, const std::vector<Component>& comps);

}  // namespace invindel
