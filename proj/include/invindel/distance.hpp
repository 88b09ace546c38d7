#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invindel/components.hpp"
#include "invindel/diagram.hpp"
#include "invindel/genome.hpp"
#include "invindel/residual.hpp"

namespace invindel {

struct DistanceOptions {
  std::optional<std::string> anchor;
};

// A cover path expressed on component ids (-1 for a square node).
struct ComponentPath {
  int u = -1;
  int v = -1;
  int cost = 0;
};

struct DistanceReport {
  int distance = 0;
  int g_count = 0;
  int cycles = 0;
  int lambda_sum = 0;
  int tau_star = 0;
  std::string anchor;               // marker actually used
  std::vector<std::string> rotated;  // anchors rejected because a component wrapped
  std::string tau_route;
  Cover cover;                      // ids of the contracted tree
  std::vector<ComponentPath> component_cover;
  std::optional<ResidualResult> residual;
  std::optional<int> solo_leaf;    // component id
  std::optional<int> capping;      // linear input: index of the winning capping

  // trace material, filled by the full pipeline only
  std::optional<RelationalDiagram> diagram;
  std::vector<Component> components;
  std::optional<ChainedTree> chained;
  TaggedTree contracted;

  int lower_bound() const { return g_count - cycles + lambda_sum; }
};

DistanceReport compute_distance(const GenomePair& pair, const DistanceOptions& opt = {});

// Component behind a node of the contracted tree, preferring a bad one whose
// tags meet `prefer`; -1 without a chained tree.
int component_id(const DistanceReport& r, int contracted_node, Tags prefer = 0);

// Linear chromosomes: both cappings, the smaller distance wins.
DistanceReport compute_linear_distance(const GenomePair& pair, const DistanceOptions& opt = {});

// Dispatches on the shape of the chromosomes.
DistanceReport compute(const Chromosome& a, const Chromosome& b, const DistanceOptions& opt = {});

}  // namespace invindel
