// Acceptance suite: one PASS/FAIL line per criterion, plus indented notes.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "invindel/distance.hpp"
#include "invindel/error.hpp"
#include "invindel/oracle.hpp"
#include "invindel/residual.hpp"
#include "support/fixtures.hpp"
#include "support/gen.hpp"

#ifndef INVINDEL_DATA_DIR
#define INVINDEL_DATA_DIR "tests/data"
#endif

using namespace invindel;
using Clock = std::chrono::steady_clock;

namespace {

// Pinned limits.
constexpr double kReferenceSeconds = 1.0;
constexpr int kTreesPerComposition = 400;
constexpr int kTableOracleNodes = 20;
constexpr int kRandomTrees = 10000;
constexpr int kRandomMaxNodes = 12;
constexpr int kRandomMaxLeaves = 8;
constexpr int kClosedFormTrees = 1000;
constexpr int kAnchorPairs = 500;
constexpr int kAnchorMaxCommon = 6;
constexpr double kMaxRatio = 4.5;
constexpr double kMaxSeconds8000 = 5.0;

int failures = 0;

void verdict(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s [%d] %s: %s\n", ok ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void note(const std::string& s) {
  std::printf("       %s\n", s.c_str());
  std::fflush(stdout);
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double x, int prec = 3) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, x);
  return buf;
}

void parallel_for(int n, const std::function<void(int)>& body) {
  std::atomic<int> next{0};
  int workers = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i; (i = next++) < n;) body(i);
    });
  for (auto& t : pool) t.join();
}

// "<2220> Ma (A/B swapped)" -> "Ma"
std::string case_token(const std::string& label) {
  size_t s = label.find("> ");
  if (s == std::string::npos) return label;
  std::string rest = label.substr(s + 2);
  return rest.substr(0, rest.find(' '));
}

void reference_regression(const std::string& data_dir) {
  auto t0 = Clock::now();
  std::vector<fixtures::TreeFixture> fx = fixtures::load(data_dir + "/reference_trees.txt");
  int ok = 0;
  std::vector<std::string> bad;
  for (const auto& f : fx) {
    try {
      TaggedTree t = flower_contract(TaggedTree::parse(f.tree));
      TauResult r = tau_star(t);
      if (r.cost == f.tau && cover_violation(t, r.cover).empty()) ++ok;
      else bad.push_back(f.name + " got " + std::to_string(r.cost) + " want " + std::to_string(f.tau));
    } catch (const std::exception& e) {
      bad.push_back(f.name + " threw " + e.what());
    }
  }
  DistanceReport d = compute(parse_chromosome(fixtures::kRefA), parse_chromosome(fixtures::kRefB));
  bool ref_pair = d.distance == 15 && d.g_count == 15 && d.cycles == 7 && d.lambda_sum == 5 && d.tau_star == 2;
  double secs = seconds_since(t0);
  bool pass = !fx.empty() && ok == static_cast<int>(fx.size()) && ref_pair && secs < kReferenceSeconds;
  verdict(1, "reference regression", pass,
          std::to_string(ok) + "/" + std::to_string(fx.size()) + " tree fixtures exact, reference pair d=" +
              std::to_string(d.distance) + " (c=" + std::to_string(d.cycles) + " sum-lambda=" +
              std::to_string(d.lambda_sum) + " tau=" + std::to_string(d.tau_star) + "), " + fmt(secs) +
              " s (limit " + fmt(kReferenceSeconds, 1) + " s)");
  for (size_t i = 0; i < bad.size() && i < 10; ++i) note("mismatch: " + bad[i]);
}

struct TableSample {
  TaggedTree tree;
  int oracle = 0;
};

void table_fidelity(const std::string& data_dir) {
  auto t0 = Clock::now();
  const std::vector<Composition> comps = table_compositions();
  std::vector<std::vector<TableSample>> samples(comps.size());
  std::vector<int> mismatch(comps.size()), invalid(comps.size()), gated(comps.size()), overridden(comps.size());
  std::vector<std::set<std::string>> hit(comps.size());
  std::vector<std::string> first_bad(comps.size());

  parallel_for(static_cast<int>(comps.size()), [&](int ci) {
    const Composition& c = comps[ci];
    gen::Rng rng(1000 + ci);
    while (static_cast<int>(samples[ci].size()) < kTreesPerComposition) {
      int k = static_cast<int>(samples[ci].size());
      int extra = 1 + k % 5;
      TaggedTree t;
      switch (k % 6) {
        case 0: t = gen::tree_with_composition(rng, c, extra); break;
        case 1: t = gen::clustered_tree(rng, c, extra); break;
        case 2: t = gen::clustered_tree(rng, c, 1 + k % 3, 0.75, 3); break;
        case 3: t = gen::tree_with_composition(rng, c, extra, 0.75); break;
        case 4: t = gen::clustered_tree(rng, c, 1 + k % 3, 0.2, 3, 2); break;
        default: t = gen::clustered_tree(rng, c, 1 + k % 3, 0.6, 3, 1); break;
      }
      if (t.size() > kTableOracleNodes) continue;
      int want = brute_force_tau(t, {kTableOracleNodes});
      LookupResult r = optimal_cover_of_residual(t);
      hit[ci].insert(case_token(r.label));
      bool valid = r.witness_ok && cover_violation(t, r.cover).empty() && r.cover.total_cost == r.cost;
      if (!valid) ++invalid[ci];
      if (r.cost != want) {
        ++mismatch[ci];
        if (first_bad[ci].empty())
          first_bad[ci] = c.key() + " " + t.str() + " table " + std::to_string(r.cost) + " oracle " +
                          std::to_string(want) + " via " + r.label;
      }
      gated[ci] += !r.skipped.empty();
      overridden[ci] += r.overridden;
      samples[ci].push_back({t, want});
    }
  });

  // hand-built trees for rows that the generators rarely reach
  int built = 0, built_bad = 0;
  for (const auto& f : fixtures::load(data_dir + "/case_trees.txt")) {
    TaggedTree t = flower_contract(TaggedTree::parse(f.tree));
    std::string key = composition_of(t).key();
    LookupResult r = optimal_cover_of_residual(t);
    int want = brute_force_tau(t, {32});
    ++built;
    if (r.cost != want || want != f.tau || cover_violation(t, r.cover).size() ||
        f.name != key + "_" + case_token(r.label)) {
      ++built_bad;
      note("built tree " + f.name + ": table " + std::to_string(r.cost) + " via " + r.label + ", oracle " +
           std::to_string(want));
    }
    for (size_t ci = 0; ci < comps.size(); ++ci)
      if (comps[ci].key() == key) hit[ci].insert(case_token(r.label));
  }
  double secs = seconds_since(t0);

  int total = 0, bad = built_bad, inval = 0, cases = 0, cases_hit = 0;
  std::vector<std::string> unhit;
  std::ostringstream gating;
  for (size_t ci = 0; ci < comps.size(); ++ci) {
    total += static_cast<int>(samples[ci].size());
    bad += mismatch[ci];
    inval += invalid[ci];
    std::set<std::string> labels;
    for (const std::string& l : table_case_labels(comps[ci])) labels.insert(l);
    for (const std::string& l : labels) {
      ++cases;
      if (hit[ci].count(l)) ++cases_hit;
      else unhit.push_back("<" + comps[ci].key() + "> " + l);
    }
    if (gated[ci] || overridden[ci])
      gating << " " << comps[ci].key() << ":" << gated[ci] << "/" << overridden[ci];
  }
  verdict(2, "table fidelity", comps.size() == 56 && bad == 0 && inval == 0,
          std::to_string(comps.size()) + " compositions x " + std::to_string(kTreesPerComposition) +
              " trees, " + std::to_string(bad) + " cost mismatches, " + std::to_string(inval) +
              " invalid witnesses over " + std::to_string(total) + " random + " + std::to_string(built) +
              " built trees, " + fmt(secs, 1) + " s");
  for (size_t ci = 0; ci < comps.size(); ++ci)
    if (!first_bad[ci].empty()) note("mismatch: " + first_bad[ci]);
  note("distinct case labels fired: " + std::to_string(cases_hit) + "/" + std::to_string(cases));
  if (!unhit.empty()) {
    std::string s = "never fired:";
    for (const std::string& u : unhit) s += " " + u;
    note(s);
  }
  note("rows skipped for an unrealizable recipe / cheaper row taken (composition:skipped/overridden):" +
       gating.str());

  set_table_mode(TableMode::strict);
  int strict_bad = 0;
  std::map<std::string, int> strict_by;
  for (size_t ci = 0; ci < comps.size(); ++ci)
    for (const TableSample& s : samples[ci]) {
      LookupResult r = optimal_cover_of_residual(s.tree);
      if (r.cost != s.oracle) {
        ++strict_bad;
        ++strict_by[comps[ci].key()];
      }
    }
  set_table_mode(TableMode::checked);
  std::string by;
  for (auto& [k, v] : strict_by) by += " " + k + ":" + std::to_string(v);
  note("strict table mode (rows as printed) would mismatch on " + std::to_string(strict_bad) + " trees" +
       (by.empty() ? "" : ":" + by));
}

void random_trees() {
  auto t0 = Clock::now();
  gen::Rng rng(2024);
  std::vector<TaggedTree> trees;
  std::vector<int> want;
  int bad = 0, inval = 0, errors = 0;
  std::string first;
  while (static_cast<int>(trees.size()) < kRandomTrees) {
    double p_bad = 0.4 + 0.5 * (trees.size() % 5) / 4.0;
    double tagged = 0.2 + 0.15 * (trees.size() % 4);
    TaggedTree t = gen::random_tree(rng, gen::uniform(rng, 1, kRandomMaxNodes), p_bad, tagged);
    if (t.size() > kRandomMaxNodes || static_cast<int>(t.leaves().size()) > kRandomMaxLeaves) continue;
    int w = brute_force_tau(t, {kRandomMaxNodes});
    try {
      TauResult r = tau_star(t);
      if (!cover_violation(t, r.cover).empty()) ++inval;
      if (r.cost != w) {
        if (!bad++) first = t.str() + " pipeline " + std::to_string(r.cost) + " oracle " + std::to_string(w);
      }
    } catch (const std::exception& e) {
      if (!errors++) first = t.str() + " threw " + e.what();
    }
    trees.push_back(t);
    want.push_back(w);
  }
  double secs = seconds_since(t0);
  verdict(3, "end-to-end tau*", bad == 0 && inval == 0 && errors == 0,
          std::to_string(trees.size()) + " trees (<= " + std::to_string(kRandomMaxNodes) + " nodes, <= " +
              std::to_string(kRandomMaxLeaves) + " leaves), " + std::to_string(bad) + " mismatches, " +
              std::to_string(inval) + " invalid covers, " + std::to_string(errors) + " errors, " +
              fmt(secs, 2) + " s");
  if (!first.empty()) note("first failure: " + first);

  set_table_mode(TableMode::strict);
  int strict_bad = 0;
  for (size_t i = 0; i < trees.size(); ++i) {
    try {
      strict_bad += tau_star(trees[i]).cost != want[i];
    } catch (const std::exception&) {
      ++strict_bad;
    }
  }
  set_table_mode(TableMode::checked);
  note("strict table mode would mismatch on " + std::to_string(strict_bad) + " trees");
}

// Circular signed arrangements of `names`, one per canonical form.
std::vector<Chromosome> arrangements(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  const std::vector<std::string> sorted = names;
  std::vector<Chromosome> out;
  std::set<std::string> seen;
  do {
    for (int signs = 0; signs < (1 << names.size()); ++signs) {
      Chromosome c;
      CircSeq s;
      for (size_t i = 0; i < names.size(); ++i) {
        bool rev = (signs >> i) & 1;
        c.markers.push_back({names[i], rev});
        int code = static_cast<int>(std::find(sorted.begin(), sorted.end(), names[i]) - sorted.begin()) + 1;
        s.push_back(static_cast<int8_t>(rev ? -code : code));
      }
      if (seen.insert(canonical_circular(s)).second) out.push_back(c);
    }
  } while (std::next_permutation(names.begin(), names.end()));
  return out;
}

void exhaustive_distance() {
  auto t0 = Clock::now();
  // b is fixed up to renaming and reorienting common markers: its common
  // markers read g0 g1 ... forward, so every pair is equivalent to one here
  std::vector<std::pair<Chromosome, Chromosome>> pairs;
  for (int g = 1; g <= 4; ++g)
    for (int na = 0; na <= 2; ++na)
      for (int nb = 0; na + nb <= 2; ++nb) {
        std::vector<std::string> common, an, bn;
        for (int i = 0; i < g; ++i) common.push_back("g" + std::to_string(i));
        an = bn = common;
        for (int i = 0; i < na; ++i) an.push_back("u" + std::to_string(i));
        for (int i = 0; i < nb; ++i) bn.push_back("w" + std::to_string(i));
        std::vector<Chromosome> as = arrangements(an);
        for (Chromosome b : arrangements(bn)) {
          auto first = std::find_if(b.markers.begin(), b.markers.end(), [](const Marker& m) { return m.name[0] == 'g'; });
          if (first->reverse) b = reversed(b);
          std::vector<const Marker*> cm;
          for (const Marker& m : b.markers)
            if (m.name[0] == 'g') cm.push_back(&m);
          bool identity = true;
          size_t r = std::find_if(cm.begin(), cm.end(), [](const Marker* m) { return m->name == "g0"; }) - cm.begin();
          for (int i = 0; i < g; ++i) {
            const Marker* m = cm[(r + i) % g];
            identity &= !m->reverse && m->name == common[i];
          }
          if (!identity) continue;
          for (const Chromosome& a : as) pairs.emplace_back(a, b);
        }
      }
  std::atomic<int> bad{0}, errors{0};
  std::mutex mu;
  std::vector<std::string> examples;
  parallel_for(static_cast<int>(pairs.size()), [&](int i) {
    const auto& [a, b] = pairs[i];
    GenomePair p = partition_markers(a, b);
    try {
      int want = brute_force_distance(p);
      int got = compute_distance(p).distance;
      if (got != want) {
        ++bad;
        std::lock_guard<std::mutex> lk(mu);
        if (examples.size() < 5)
          examples.push_back("(" + a.str() + ") vs (" + b.str() + "): pipeline " + std::to_string(got) +
                             " search " + std::to_string(want));
      }
    } catch (const std::exception& e) {
      ++errors;
      std::lock_guard<std::mutex> lk(mu);
      if (examples.size() < 5) examples.push_back("(" + a.str() + ") vs (" + b.str() + "): " + e.what());
    }
  });
  double secs = seconds_since(t0);
  verdict(4, "full-distance equivalence", bad == 0 && errors == 0 && !pairs.empty(),
          std::to_string(pairs.size()) + " pairs (|G| <= 4, |A|+|B| <= 2), " + std::to_string(bad.load()) +
              " mismatches, " + std::to_string(errors.load()) + " errors, " + fmt(secs, 1) + " s");
  for (const std::string& e : examples) note(e);
}

bool fortress(const TaggedTree& t) {
  std::vector<int> leaves = t.leaves();
  if (leaves.size() % 2 == 0) return false;
  for (int l : leaves)
    if (!leaf_branch(t, l).is_long()) return false;
  return true;
}

// Random contracted tree whose leaves share a tag, or are all clean.
TaggedTree closed_form_tree(gen::Rng& rng, bool shared) {
  for (;;) {
    int n = gen::uniform(rng, 2, 12);
    Tags base = gen::coin(rng, 0.5) ? kTagA : kTagB;
    TaggedTree t;
    for (int v = 0; v < n; ++v) {
      t.add_node(gen::coin(rng, 0.6), shared ? gen::random_tags(rng, 0.3) : 0);
      if (v) t.add_edge(gen::uniform(rng, 0, v - 1), v);
    }
    for (int l : t.leaves()) {
      t.node(l).bad = true;
      t.node(l).tags = shared ? (gen::coin(rng, 0.3) ? kTagAB : base) : 0;
    }
    TaggedTree c = flower_contract(t);
    if (c.size() < 2 || c.size() > 12) continue;
    if (shared ? all_leaves_share_tag(c) : all_leaves_clean(c)) return c;
  }
}

void closed_forms() {
  gen::Rng rng(55);
  int shared_bad = 0, clean_bad = 0, fortresses = 0;
  for (int i = 0; i < kClosedFormTrees; ++i) {
    TaggedTree t = closed_form_tree(rng, true);
    int l = static_cast<int>(t.leaves().size());
    Cover c = tau_shared_tag(t);
    int oracle = brute_force_tau(t);
    shared_bad += c.total_cost != (l + 1) / 2 || oracle != c.total_cost || !cover_violation(t, c).empty();
  }
  for (int i = 0; i < kClosedFormTrees; ++i) {
    TaggedTree t = closed_form_tree(rng, false);
    int l = static_cast<int>(t.leaves().size());
    bool f = fortress(t);
    fortresses += f;
    Cover c = tau_all_clean(t);
    int oracle = brute_force_tau(t);
    clean_bad += c.total_cost != l + (f ? 1 : 0) || oracle != c.total_cost || !cover_violation(t, c).empty();
  }
  int potential_bad = 0;
  for (int runs : {0, 1, 2, 4, 6, 8, 10, 12, 14, 16, 18, 20}) {
    int want = runs <= 2 ? runs : runs / 2 + 1;
    potential_bad += indel_potential(runs) != want;
  }
  verdict(5, "closed forms", shared_bad == 0 && clean_bad == 0 && potential_bad == 0,
          "shared-tag " + std::to_string(kClosedFormTrees - shared_bad) + "/" + std::to_string(kClosedFormTrees) +
              ", all-clean " + std::to_string(kClosedFormTrees - clean_bad) + "/" +
              std::to_string(kClosedFormTrees) + " (" + std::to_string(fortresses) +
              " fortresses), indel potential " + std::to_string(12 - potential_bad) + "/12");
}

void anchor_invariance() {
  gen::Rng rng(66);
  int bad = 0, anchors = 0;
  std::string first;
  for (int i = 0; i < kAnchorPairs; ++i) {
    int g = gen::uniform(rng, 2, kAnchorMaxCommon);
    auto [a, b] = gen::random_pair(rng, g, gen::uniform(rng, 0, 4), gen::uniform(rng, 0, 4));
    AnchorReport r = anchor_invariance_check(partition_markers(a, b));
    anchors += static_cast<int>(r.anchors.size());
    if (!r.consistent() && !bad++) first = "(" + a.str() + ") vs (" + b.str() + ")";
  }
  verdict(6, "anchor invariance", bad == 0,
          std::to_string(kAnchorPairs) + " pairs, " + std::to_string(anchors) + " anchor choices, " +
              std::to_string(bad) + " pairs with differing distances");
  if (!first.empty()) note("first: " + first);
}

double time_distance(const GenomePair& p) {
  double best = 1e9;
  for (int rep = 0; rep < 3; ++rep) {
    auto t0 = Clock::now();
    DistanceReport r = compute_distance(p);
    best = std::min(best, seconds_since(t0));
    if (r.distance < r.lower_bound()) throw Error(Errc::PreconditionViolated, "bound");
  }
  return best;
}

void scaling() {
  const std::vector<int> sizes{1000, 2000, 4000, 8000};
  gen::Rng rng(77);
  bool ok = true;
  std::string detail;
  for (int family = 0; family < 2; ++family) {
    std::vector<double> med;
    for (int n : sizes) {
      std::vector<double> ts;
      for (int k = 0; k < 5; ++k) {
        auto [a, b] = family == 0 ? gen::evolved_pair(rng, n * 9 / 10, n / 20)
                                  : gen::random_pair(rng, n * 8 / 10, n / 10, n / 10);
        ts.push_back(time_distance(classify_markers(a, b)));
      }
      std::sort(ts.begin(), ts.end());
      med.push_back(ts[ts.size() / 2]);
    }
    std::string line = family == 0 ? "evolved" : "shuffled";
    for (size_t i = 0; i < sizes.size(); ++i) line += " n=" + std::to_string(sizes[i]) + ":" + fmt(med[i], 4) + "s";
    for (size_t i = 1; i < sizes.size(); ++i) {
      double ratio = med[i] / med[i - 1];
      ok &= ratio <= kMaxRatio;
      line += (i == 1 ? " ratios " : " ") + fmt(ratio, 2);
    }
    ok &= med.back() < kMaxSeconds8000;
    detail += (family ? "; " : "") + line;
  }
  verdict(7, "scaling", ok, detail + " (limits: ratio <= " + fmt(kMaxRatio, 1) + ", n=8000 < " +
                                fmt(kMaxSeconds8000, 0) + " s)");
}

}  // namespace

int main(int argc, char** argv) {
  std::string data_dir = argc > 1 ? argv[1] : INVINDEL_DATA_DIR;
  std::vector<std::pair<int, std::function<void()>>> steps{
      {1, [&] { reference_regression(data_dir); }},
      {2, [&] { table_fidelity(data_dir); }},
      {3, random_trees},
      {4, exhaustive_distance},
      {5, closed_forms},
      {6, anchor_invariance},
      {7, scaling},
  };
  for (auto& [id, fn] : steps) {
    try {
      fn();
    } catch (const std::exception& e) {
      verdict(id, "criterion", false, std::string("aborted: ") + e.what());
    }
  }
  std::printf("%d of 7 criteria failed\n", failures);
  return failures ? 1 : 0;
}
