#include <algorithm>
#include <set>

#include "doctest.h"
#include "invindel/error.hpp"
#include "invindel/oracle.hpp"
#include "invindel/treecover.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace invindel;
using fixtures::by_label;

static std::set<int> covered_by(const TaggedTree& t, const std::vector<std::pair<int, int>>& paths) {
  std::set<int> s;
  for (auto [u, v] : paths)
    for (int x : t.path(u, v)) s.insert(x);
  return s;
}

TEST_SUITE("treecover") {
  TEST_CASE("path costs") {
    TaggedTree t = TaggedTree::parse("b(bA=a,bAB=x,b=c1,b=c2,g=g)");
    int a = by_label(t, "a"), x = by_label(t, "x"), c1 = by_label(t, "c1"), c2 = by_label(t, "c2");
    CHECK(path_cost(t, a, x).cost == 1);
    CHECK(path_cost(t, c1, c2).cost == 2);
    CHECK(path_cost(t, a, a).cost == 1);
    CHECK(path_cost(t, a, a).is_short());
    CHECK_THROWS_AS(path_cost(t, by_label(t, "g"), by_label(t, "g")), Error);
  }

  TEST_CASE("traversal covers") {
    TaggedTree star = TaggedTree::parse("g(b,b,b,b)");
    auto p = cover_tree_with_traversals(star);
    CHECK(p.size() == 2);
    CHECK(covered_by(star, p).size() == 5);

    TaggedTree line = TaggedTree::parse("b(b(b(b)))");
    auto q = cover_tree_with_traversals(line);
    REQUIRE(q.size() == 1);
    CHECK(covered_by(line, q).size() == 4);

    gen::Rng rng(5);
    int seen = 0;
    while (seen < 100) {
      TaggedTree t = gen::random_tree(rng, gen::uniform(rng, 6, 20), 0.7, 0.3);
      if (t.leaves().size() != 8) continue;
      ++seen;
      auto r = cover_tree_with_traversals(t);
      CHECK(r.size() == 4);
      CHECK(static_cast<int>(covered_by(t, r).size()) == t.size());
      // all traversals share a vertex pairwise
      for (auto [u1, v1] : r)
        for (auto [u2, v2] : r) {
          auto p1 = t.path(u1, v1), p2 = t.path(u2, v2);
          std::sort(p1.begin(), p1.end());
          std::sort(p2.begin(), p2.end());
          std::vector<int> both;
          std::set_intersection(p1.begin(), p1.end(), p2.begin(), p2.end(), std::back_inserter(both));
          CHECK_FALSE(both.empty());
        }
    }
  }

  TEST_CASE("closed forms") {
    CHECK(tau_shared_tag(TaggedTree::parse("g(bA,bA,bA,bA)")).total_cost == 2);
    CHECK(tau_shared_tag(TaggedTree::parse("bA(bA)")).total_cost == 1);
    TaggedTree five = TaggedTree::parse("g(bA,bAB,bA,b(bAB,bA))");
    CHECK(all_leaves_share_tag(five));
    CHECK(tau_shared_tag(five).total_cost == 3);
    CHECK(brute_force_tau(five) == 3);

    CHECK(tau_all_clean(TaggedTree::parse("g(b,b,b,b)")).total_cost == 4);
    CHECK(tau_all_clean(TaggedTree::parse("g(b(b),b(b),b(b))")).total_cost == 4);
    CHECK(tau_all_clean(TaggedTree::parse("g(b(b),b(b),b)")).total_cost == 3);
  }

  TEST_CASE("mates and solo candidates") {
    TaggedTree mate = TaggedTree::parse("b=p(b(bA=a),gAB=m(b(b=c1),b(b=c2)))");
    TopologyReport r = analyze_topology(mate);
    CHECK(r.composition.key() == "1020");
    CHECK(std::count(r.mates.begin(), r.mates.end(), "A:a@C") == 1);
    CHECK(r.fully_separated);

    TaggedTree solo = TaggedTree::parse("g(b(bA=a),b(bB=b),b(b=c1),b(b=c2,b=s))");
    TopologyReport s = analyze_topology(solo);
    CHECK(std::count(s.solo_candidates.begin(), s.solo_candidates.end(), by_label(solo, "s")) == 1);

    TopologyReport one = analyze_topology(TaggedTree::parse("bA"));
    CHECK(one.composition.key() == "1000");
    CHECK(one.mates.empty());
    CHECK(one.isolation.empty());
  }

  TEST_CASE("leaf branches") {
    TaggedTree t = TaggedTree::parse("g(b(g(b)),b(b),b)");
    for (int leaf : t.leaves()) {
      LeafBranch br = leaf_branch(t, leaf);
      CHECK(br.nodes.front() == leaf);
    }
    CHECK(leaf_branch(t, t.leaves().back()).is_long() == false);
  }

  TEST_CASE("cover bounds on random trees") {
    gen::Rng rng(6);
    for (int i = 0; i < 500; ++i) {
      TaggedTree t = gen::random_tree(rng, gen::uniform(rng, 1, 12));
      if (t.empty()) continue;
      int leaves = static_cast<int>(t.leaves().size());
      int tau = brute_force_tau(t);
      CHECK(tau >= (leaves + 1) / 2);
      CHECK(tau <= leaves + 1);
      if (all_leaves_share_tag(t)) CHECK(tau_shared_tag(t).total_cost == tau);
      if (all_leaves_clean(t)) CHECK(tau_all_clean(t).total_cost == tau);
    }
  }
}
