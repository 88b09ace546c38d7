#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "invindel/reduction.hpp"
#include "invindel/treecover.hpp"

namespace invindel {

struct LookupResult {
  int cost = 0;
  Cover cover;  // ids of the argument tree
  std::string label;  // "<2223> Ma", or a closed-form route
  bool witness_ok = true;
  std::vector<std::string> skipped;  // rows whose predicate held but whose recipe did not fit
  bool overridden = false;           // a cheaper realizable row replaced the selected case
};

// strict: the first row whose predicate holds, as printed.
// checked: rows must also have a realizable recipe, and any row whose recipe
// realizes a lower cost than the selected case wins.
enum class TableMode { checked, strict };
void set_table_mode(TableMode m);
TableMode table_mode();

// Table lookup for the residual compositions (after A/B normalization).
LookupResult optimal_cover_of_residual(const TaggedTree& t);

// Empty, single node, closed forms, else the table; no reduction.
LookupResult cover_without_reduction(const TaggedTree& t);

// Every row of the composition's table with its predicate value and whether
// its recipe fits the tree (not evaluated for reducible rows).
struct RowTrace {
  std::string label;
  int depth = 0;
  bool group = false;
  bool holds = false;
  bool realizable = false;
  int cost = 0;
};
std::vector<RowTrace> trace_table(const TaggedTree& t);

std::pair<TaggedTree, bool> normalize_ab_swap(const TaggedTree& t);

struct TauResult {
  int cost = 0;
  Cover cover;
  std::string route;  // empty / single / shared-tag / all-clean / residual
  std::optional<ResidualResult> residual;
};

// tau* of a contracted tree, with a witness cover on its ids.
TauResult tau_star(const TaggedTree& t);

// Residual compositions known to the table, sorted by key.
std::vector<Composition> table_compositions();
// Case labels of a composition, depth-first in table order.
std::vector<std::string> table_case_labels(const Composition& c);

}  // namespace invindel
