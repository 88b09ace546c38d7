#include <numeric>

#include "doctest.h"
#include "invindel/distance.hpp"
#include "invindel/error.hpp"
#include "invindel/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace invindel;

static TaggedTree relabeled(const TaggedTree& t, gen::Rng& rng) {
  std::vector<int> perm(t.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> pos(t.size());
  for (int i = 0; i < t.size(); ++i) pos[perm[i]] = i;
  TaggedTree r;
  for (int i = 0; i < t.size(); ++i) r.add_node(t.bad(perm[i]), t.tags(perm[i]));
  for (int v = 0; v < t.size(); ++v)
    for (int w : t.adj(v))
      if (v < w) r.add_edge(pos[v], pos[w]);
  return r;
}

static GenomePair pair_of(const char* a, const char* b) {
  return partition_markers(parse_chromosome(a), parse_chromosome(b));
}

TEST_SUITE("oracle") {
  TEST_CASE("cover examples") {
    CHECK(brute_force_tau(TaggedTree::parse("b")) == 1);
    CHECK(brute_force_tau(TaggedTree::parse("gA(b,b)")) == 2);
    CHECK(brute_force_tau(TaggedTree()) == 0);
    CHECK(brute_force_tau(TaggedTree::parse("b=p(bAB=tm(bA=a),g(b(b=c1),b(b=c2)))")) == 4);
    TaggedTree wide;
    for (int i = 0; i < 13; ++i) {
      wide.add_node(true, 0);
      if (i) wide.add_edge(0, i);
    }
    CHECK_THROWS_AS(brute_force_tau(wide), Error);
  }

  TEST_CASE("relabel, swap and bridges") {
    gen::Rng rng(9);
    for (int i = 0; i < 600; ++i) {
      TaggedTree t = gen::random_tree(rng, gen::uniform(rng, 1, 12), 0.65, 0.5);
      int tau = brute_force_tau(t);
      CHECK(brute_force_tau(relabeled(t, rng)) == tau);
      CHECK(brute_force_tau(swap_ab(t)) == tau);
      CHECK(brute_force_tau(t, {}, false) == tau);
    }
  }

  TEST_CASE("distance examples") {
    CHECK(brute_force_distance(pair_of("a b c", "a b c")) == 0);
    CHECK(brute_force_distance(pair_of("a b c", "-c -b -a")) == 0);  // same circle read backwards
    CHECK(brute_force_distance(pair_of("a b x", "a b")) == 1);
    CHECK(brute_force_distance(pair_of("a b", "a y b")) == 1);
    CHECK(brute_force_distance(pair_of("a -b", "a b")) == 1);
    int d = brute_force_distance(pair_of("a -c b", "a b c"));
    CHECK(d == compute_distance(classify_markers(parse_chromosome("a -c b"), parse_chromosome("a b c"))).distance);
    CHECK_THROWS_AS(brute_force_distance(pair_of("a b c d e", "a b c d e")), Error);
  }

  TEST_CASE("distance symmetry") {
    gen::Rng rng(10);
    for (int i = 0; i < 60; ++i) {
      auto [a, b] = gen::random_pair(rng, gen::uniform(rng, 2, 4), gen::uniform(rng, 0, 1), gen::uniform(rng, 0, 1));
      CHECK(brute_force_distance(partition_markers(a, b)) == brute_force_distance(partition_markers(b, a)));
    }
  }

  TEST_CASE("reverse search table") {
    gen::Rng rng(11);
    for (int i = 0; i < 40; ++i) {
      auto [a, b] = gen::random_pair(rng, gen::uniform(rng, 2, 4), gen::uniform(rng, 0, 1), gen::uniform(rng, 0, 1));
      GenomePair p = partition_markers(a, b);
      DistanceTable tab = distances_to_target(p);
      CHECK(tab.lookup(a) == brute_force_distance(p));
      CHECK(tab.lookup(b) == 0);
    }
  }

  TEST_CASE("anchor invariance") {
    AnchorReport ref = anchor_invariance_check(classify_markers(parse_chromosome(fixtures::kRefA), parse_chromosome(fixtures::kRefB)));
    CHECK(ref.anchors.size() == 15);
    CHECK(ref.consistent());
    CHECK(ref.distances.front() == 15);

    AnchorReport id = anchor_invariance_check(pair_of("a b", "a b"));
    CHECK(id.consistent());
    CHECK(id.distances.front() == 0);
  }
}
