#pragma once

#include <string>
#include <vector>

#include "invindel/genome.hpp"

namespace invindel {

enum class End : uint8_t { tail, head };

struct Extremity {
  std::string marker;
  End end = End::tail;
};

struct Cycle {
  int id = 0;
  std::vector<int> a_edges;     // in walk order
  std::vector<int> b_edges;     // in walk order
  std::vector<bool> a_forward;  // A-edge walked left to right
  std::vector<int> a_sorted;
  std::string walk_labels;      // per A/B edge along the walk: 'A', 'B' or '.'
  int runs = 0;
  int lambda = 0;
  bool bad = false;

  bool trivial() const { return a_edges.size() == 1; }
  bool labeled() const { return runs > 0; }
  bool has_run(char genome) const { return walk_labels.find(genome) != std::string::npos; }
  int edge_count() const { return 4 * static_cast<int>(a_edges.size()); }
};

struct RelationalDiagram {
  std::string anchor;
  std::vector<Extremity> upper;  // A line, positions 0..2|G|-1
  std::vector<Extremity> lower;  // B line
  std::vector<std::vector<Marker>> a_labels;  // A-edge i joins upper 2i and 2i+1
  std::vector<std::vector<Marker>> b_labels;
  std::vector<Cycle> cycles;
  std::vector<int> cycle_of_a_edge;

  int g_count() const { return static_cast<int>(a_labels.size()); }
  int c() const { return static_cast<int>(cycles.size()); }
  int lambda_sum() const;
  std::string str() const;
};

RelationalDiagram build_relational_diagram(const GenomePair& pair, const std::string& anchor);
std::string default_anchor(const GenomePair& pair);

// Number of maximal single-genome runs in a cyclic label sequence.
int run_count(const std::string& walk_labels);
int run_count(const Cycle& c);
int indel_potential(int runs);

}  // namespace invindel
