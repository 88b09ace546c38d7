#include <numeric>

#include "doctest.h"
#include "invindel/components.hpp"
#include "invindel/oracle.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

using namespace invindel;

static RelationalDiagram diagram_of(const Chromosome& a, const Chromosome& b) {
  GenomePair p = classify_markers(a, b);
  return build_relational_diagram(p, default_anchor(p));
}

TEST_SUITE("components") {
  TEST_CASE("reference pair components") {
    RelationalDiagram d = diagram_of(parse_chromosome(fixtures::kRefA), parse_chromosome(fixtures::kRefB));
    std::vector<Component> comps = find_components(d);
    REQUIRE(comps.size() == 6);
    int good = 0, trivial = 0, bad = 0;
    for (const Component& c : comps) {
      good += c.kind == ComponentKind::good;
      trivial += c.kind == ComponentKind::trivial;
      bad += c.kind == ComponentKind::bad;
    }
    CHECK(good == 1);
    CHECK(trivial == 2);
    CHECK(bad == 3);
    CHECK(comps[4].cycles.size() == 2);

    ChainedTree ct = build_chained_tree(comps, d);
    int round = 0, round_bad = 0;
    for (int v = 0; v < ct.tree.size(); ++v)
      if (!ct.tree.node(v).square) {
        ++round;
        round_bad += ct.tree.bad(v);
      }
    CHECK(round == 6);
    CHECK(round_bad == 3);

    apply_run_observations(ct, comps);
    TaggedTree t = flower_contract(ct.tree);
    CHECK(t.str() == "bAB=K0(bAB=K4,gB=K1+K3(b=K2))");
  }

  TEST_CASE("identity is all trivial") {
    RelationalDiagram d = diagram_of(parse_chromosome("a b c d"), parse_chromosome("a b c d"));
    std::vector<Component> comps = find_components(d);
    CHECK(comps.size() == 4);
    for (const Component& c : comps) CHECK(c.kind == ComponentKind::trivial);
    ChainedTree ct = build_chained_tree(comps, d);
    CHECK(flower_contract(ct.tree).empty());
  }

  TEST_CASE("two separate bad components") {
    // (0 2 1 3) twice in a row: two unoriented components side by side
    RelationalDiagram d = diagram_of(parse_chromosome("a c b d f e g"), parse_chromosome("a b c d e f g"));
    std::vector<Component> comps = find_components(d);
    int bad = 0;
    for (const Component& c : comps) bad += c.kind == ComponentKind::bad;
    CHECK(bad == 2);
  }

  TEST_CASE("components are the closure of interleaving") {
    gen::Rng rng(3);
    for (int i = 0; i < 300; ++i) {
      auto [a, b] = gen::random_pair(rng, gen::uniform(rng, 2, 10), gen::uniform(rng, 0, 3), gen::uniform(rng, 0, 3));
      RelationalDiagram d = diagram_of(a, b);
      const int n = d.c();
      std::vector<int> uf(n);
      std::iota(uf.begin(), uf.end(), 0);
      auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
      };
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
          CHECK(interleave(d.cycles[x], d.cycles[y]) == interleave(d.cycles[y], d.cycles[x]));
          if (x != y && interleave(d.cycles[x], d.cycles[y])) uf[find(x)] = find(y);
        }
      std::vector<Component> comps = find_components(d);
      std::vector<int> comp_of(n, -1);
      for (const Component& c : comps)
        for (int x : c.cycles) comp_of[x] = c.id;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) CHECK((find(x) == find(y)) == (comp_of[x] == comp_of[y]));
    }
  }

  TEST_CASE("contraction keeps the cover cost") {
    gen::Rng rng(4);
    int checked = 0;
    for (int i = 0; i < 3000 && checked < 150; ++i) {
      auto [a, b] = gen::random_pair(rng, gen::uniform(rng, 3, 7), gen::uniform(rng, 0, 3), gen::uniform(rng, 0, 3));
      RelationalDiagram d = diagram_of(a, b);
      std::vector<Component> comps = find_components(d);
      if (anchor_wraps(comps, d)) continue;
      ChainedTree ct = build_chained_tree(comps, d);
      TaggedTree t = flower_contract(ct.tree);
      CHECK(contracted_form_violation(t).empty());
      if (ct.tree.size() > 12 || ct.tree.bad_count() == 0) continue;
      CHECK(brute_force_tau(ct.tree) == brute_force_tau(t));
      ++checked;
    }
    CHECK(checked > 50);
  }
}
