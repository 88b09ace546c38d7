#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "invindel/genome.hpp"
#include "invindel/tree.hpp"

namespace invindel {

struct OracleBudget {
  int max_tree_nodes = 12;
  int max_common = 4;
  int max_exclusive = 2;
  size_t max_states = 5'000'000;
};

// Exact minimum cover cost by exhaustive search over all node-pair paths.
// Without bridges, paths joining two distinct internal nodes are left out.
int brute_force_tau(const TaggedTree& t, const OracleBudget& budget = {}, bool bridges = true);

// Signed circular sequence over marker codes 1..m; negative = reverse.
using CircSeq = std::vector<int8_t>;
std::string canonical_circular(const CircSeq& s);

// Minimum number of inversions and indels turning a into b (BFS).
int brute_force_distance(const GenomePair& pair, const OracleBudget& budget = {});

// All states from which `target` is reachable, keyed by canonical form, with
// their distance to it. Markers of `pair` outside b are A-exclusive.
struct DistanceTable {
  std::unordered_map<std::string, int> dist;
  std::vector<std::string> names;  // code i+1 -> marker name

  int lookup(const Chromosome& c) const;  // -1 when absent
};
DistanceTable distances_to_target(const GenomePair& pair, const OracleBudget& budget = {});

struct AnchorReport {
  std::vector<std::string> anchors;
  std::vector<int> distances;
  bool consistent() const;
};
AnchorReport anchor_invariance_check(const GenomePair& pair);

}  // namespace invindel
