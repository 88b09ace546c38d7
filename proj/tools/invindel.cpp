#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "invindel/distance.hpp"
#include "invindel/error.hpp"
#include "invindel/oracle.hpp"
#include "invindel/report.hpp"
#include "invindel/residual.hpp"
#include "support/gen.hpp"

using namespace invindel;
using nlohmann::json;

namespace {

struct DistArgs {
  std::string file;
  std::optional<std::string> anchor;
  bool linear = false;
  bool as_json = false;
  std::vector<std::string> traces;
  bool oracle = false;
  bool strict_tables = false;
};

std::pair<Chromosome, Chromosome> read_input(const std::string& file) {
  if (file != "-") return read_genome_file(file);
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return read_genome_text(text);
}

std::string node_components(const DistanceReport& r, int v) {
  std::string out;
  if (!r.chained) return out;
  for (const Origin& o : r.contracted.node(v).origin) {
    int c = r.chained->component_of_node[o.id];
    if (c >= 0) out += (out.empty() ? "K" : ",K") + std::to_string(c);
  }
  return out;
}

void print_text(const DistanceReport& r) {
  std::printf("distance %d\n", r.distance);
  std::printf("  |G| = %d, c = %d, sum lambda = %d, tau* = %d (%s)\n", r.g_count, r.cycles, r.lambda_sum,
              r.tau_star, r.tau_route.c_str());
  if (!r.anchor.empty()) std::printf("  anchor %s\n", r.anchor.c_str());
  if (!r.rotated.empty()) {
    std::string s;
    for (const std::string& a : r.rotated) s += " " + a;
    std::printf("  rejected anchors (a component wraps):%s\n", s.c_str());
  }
  if (r.capping) std::printf("  linear input, capping %d wins\n", *r.capping);
  if (r.residual) std::printf("  case %s\n", r.residual->case_label.c_str());
}

void trace_diagram(const DistanceReport& r) {
  if (!r.diagram) return;
  std::cout << "== diagram\n" << r.diagram->str();
  for (const Component& c : r.components) {
    std::cout << "K" << c.id << " " << kind_name(c.kind) << (c.tags ? " " + tags_str(c.tags) : "") << " cycles";
    for (int x : c.cycles) std::cout << " C" << x;
    std::cout << "\n";
  }
}

void trace_tree(const DistanceReport& r) {
  if (!r.chained) return;
  std::cout << "== chained tree\n" << r.chained->str();
  if (!r.chained->merged_by_observation.empty()) {
    std::cout << "made good by run observations:";
    for (int c : r.chained->merged_by_observation) std::cout << " K" << c;
    std::cout << "\n";
  }
  std::cout << r.chained->tree.dot("chained");
  std::cout << "== contracted tree\n" << (r.contracted.empty() ? "(empty)" : r.contracted.str()) << "\n";
  for (int v = 0; v < r.contracted.size(); ++v)
    std::cout << "  node " << v << ": " << node_components(r, v) << "\n";
  if (!r.contracted.empty()) std::cout << r.contracted.dot("contracted");
}

void trace_topology(const DistanceReport& r) {
  std::cout << "== topology\n";
  if (r.contracted.empty()) {
    std::cout << "(empty tree)\n";
    return;
  }
  TopologyReport t = analyze_topology(r.contracted);
  std::cout << t.str() << topology_json(t).dump(2) << "\n";
}

void trace_reduction(const DistanceReport& r) {
  std::cout << "== reduction\n";
  if (!r.residual) {
    std::cout << "(not reduced: " << r.tau_route << ")\n";
    return;
  }
  int running = 0;
  for (const ReductionStep& s : r.residual->steps) {
    running += s.cost;
    Tags shared = r.contracted.tags(s.path.u) & r.contracted.tags(s.path.v);
    std::cout << step_name(s.kind) << " class " << class_letter(s.cls) << " path K"
              << component_id(r, s.path.u, shared) << "-K" << component_id(r, s.path.v, shared) << " cost "
              << s.cost << " (running " << running << ")\n";
  }
  std::cout << "reduction cost " << r.residual->reduction_cost << "\n";
  if (r.solo_leaf) std::cout << "solo leaf K" << *r.solo_leaf << "\n";
  std::cout << "residual " << r.residual->residual.str() << " <" << composition_of(r.residual->residual).key()
            << ">\n";
}

void trace_cover(const DistanceReport& r) {
  std::cout << "== cover\n";
  if (r.residual) {
    std::cout << "case " << r.residual->case_label << "\n";
    for (const RowTrace& row : trace_table(r.residual->residual))
      std::cout << "  " << std::string(2 * row.depth, ' ') << row.label << (row.group ? "" : " cost " + std::to_string(row.cost))
                << (row.holds ? " holds" : "") << (row.realizable ? " fits" : "") << "\n";
  } else {
    std::cout << "route " << r.tau_route << "\n";
  }
  for (const ComponentPath& p : r.component_cover) {
    if (p.u == p.v) std::cout << "  short K" << p.u << " cost " << p.cost << "\n";
    else std::cout << "  K" << p.u << " .. K" << p.v << " cost " << p.cost << "\n";
  }
  std::cout << "total " << r.tau_star << "\n";
}

int oracle_distance(const GenomePair& pair, bool linear) {
  if (!linear) return brute_force_distance(pair);
  auto caps = cap_linear_pair(pair);
  return std::min(brute_force_distance(caps[0]), brute_force_distance(caps[1]));
}

int run_dist(const DistArgs& args) {
  auto [a, b] = read_input(args.file);
  if (args.linear) a.shape = b.shape = Shape::linear;
  if (args.strict_tables) set_table_mode(TableMode::strict);
  DistanceOptions opt;
  opt.anchor = args.anchor;
  DistanceReport r = compute(a, b, opt);
  if (r.distance < r.lower_bound()) throw Error(Errc::PreconditionViolated, "distance below the DCJ-indel bound");

  std::set<std::string> tr(args.traces.begin(), args.traces.end());
  bool all = tr.count("all");
  if (args.as_json) {
    std::cout << to_json(summarize(r)).dump(2) << "\n";
  } else {
    print_text(r);
  }
  if (all || tr.count("diagram")) trace_diagram(r);
  if (all || tr.count("tree")) trace_tree(r);
  if (all || tr.count("topology")) trace_topology(r);
  if (all || tr.count("reduction")) trace_reduction(r);
  if (all || tr.count("cover")) trace_cover(r);

  if (args.oracle) {
    GenomePair pair = partition_markers(a, b);
    try {
      int want = oracle_distance(pair, a.shape == Shape::linear);
      if (want == r.distance) {
        std::cout << "oracle: agree\n";
      } else {
        std::cout << "oracle: disagree (search gives " << want << ")\n";
        return 3;
      }
    } catch (const Error& e) {
      if (e.code() != Errc::BudgetExceeded) throw;
      std::cout << "oracle: skipped (" << e.what() << ")\n";
    }
  }
  return 0;
}

struct Tally {
  std::string name;
  int pass = 0, total = 0;
  std::string first_failure;

  void add(bool ok, const std::function<std::string()>& what) {
    ++total;
    if (ok) ++pass;
    else if (first_failure.empty()) first_failure = what();
  }
};

int run_verify(int trials, uint64_t seed) {
  gen::Rng rng(seed);
  std::vector<Tally> tallies;

  Tally tau{"tau* vs exhaustive cover"};
  for (int i = 0; i < trials; ++i) {
    TaggedTree t = gen::random_tree(rng, gen::uniform(rng, 1, 12), 0.4 + 0.1 * (i % 6), 0.2 + 0.1 * (i % 5));
    int want = brute_force_tau(t);
    TauResult got = tau_star(t);
    tau.add(got.cost == want && cover_violation(t, got.cover).empty(), [&] { return t.str(); });
  }
  tallies.push_back(tau);

  Tally table{"residual tables vs exhaustive cover"};
  const std::vector<Composition> comps = table_compositions();
  for (int i = 0; i < trials; ++i) {
    const Composition& c = comps[i % comps.size()];
    TaggedTree t = i % 2 ? gen::clustered_tree(rng, c, 1 + i % 3, 0.2 + 0.1 * (i % 6), 3, i % 3)
                         : gen::tree_with_composition(rng, c, 1 + i % 5);
    if (t.size() > 20) {
      --i;
      continue;
    }
    LookupResult r = optimal_cover_of_residual(t);
    table.add(r.cost == brute_force_tau(t, {20}) && cover_violation(t, r.cover).empty(),
              [&] { return t.str() + " via " + r.label; });
  }
  tallies.push_back(table);

  Tally dist{"distance vs genome search"};
  for (int i = 0; i < trials; ++i) {
    auto [a, b] = gen::random_pair(rng, gen::uniform(rng, 2, 4), gen::uniform(rng, 0, 1), gen::uniform(rng, 0, 1));
    GenomePair p = classify_markers(a, b);
    dist.add(compute_distance(p).distance == brute_force_distance(p), [&] { return a.str() + " | " + b.str(); });
  }
  tallies.push_back(dist);

  Tally anchor{"anchor invariance"};
  for (int i = 0; i < trials; ++i) {
    auto [a, b] = gen::random_pair(rng, gen::uniform(rng, 2, 6), gen::uniform(rng, 0, 4), gen::uniform(rng, 0, 4));
    anchor.add(anchor_invariance_check(partition_markers(a, b)).consistent(),
               [&] { return a.str() + " | " + b.str(); });
  }
  tallies.push_back(anchor);

  bool ok = true;
  for (const Tally& t : tallies) {
    ok &= t.pass == t.total;
    std::printf("%-40s %d/%d passed\n", t.name.c_str(), t.pass, t.total);
    if (!t.first_failure.empty()) std::printf("  first failure: %s\n", t.first_failure.c_str());
  }
  std::printf("%s (seed %llu)\n", ok ? "all suites passed" : "FAILURES", static_cast<unsigned long long>(seed));
  return ok ? 0 : 1;
}

int run_bench(const std::vector<int>& sizes, int reps, uint64_t seed, const std::string& family) {
  gen::Rng rng(seed);
  double prev = 0;
  std::printf("%8s %12s %8s %10s\n", "n", "median_s", "ratio", "distance");
  for (int n : sizes) {
    std::vector<double> ts;
    int d = 0;
    for (int k = 0; k < reps; ++k) {
      auto [a, b] = family == "shuffled" ? gen::random_pair(rng, n * 8 / 10, n / 10, n / 10)
                                         : gen::evolved_pair(rng, n * 9 / 10, n / 20);
      GenomePair p = classify_markers(a, b);
      auto t0 = std::chrono::steady_clock::now();
      d = compute_distance(p).distance;
      ts.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    std::sort(ts.begin(), ts.end());
    double med = ts[ts.size() / 2];
    if (prev > 0) std::printf("%8d %12.5f %8.2f %10d\n", n, med, med / prev, d);
    else std::printf("%8d %12.5f %8s %10d\n", n, med, "-", d);
    prev = med;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact inversion-indel distance between two circular or linear chromosomes"};
  app.require_subcommand(1);

  DistArgs dist;
  CLI::App* d = app.add_subcommand("dist", "compute the distance of a genome pair");
  d->add_option("file", dist.file, "genome file: two chromosome lines, optional >linear header ('-' reads stdin)")
      ->required();
  d->add_option("--anchor", dist.anchor, "common marker that cuts the circle");
  d->add_flag("--linear", dist.linear, "treat both chromosomes as linear");
  d->add_flag("--json", dist.as_json, "print the report as one JSON object");
  d->add_option("--trace", dist.traces, "diagram, tree, topology, reduction, cover or all")
      ->check(CLI::IsMember({"diagram", "tree", "topology", "reduction", "cover", "all"}));
  d->add_flag("--oracle", dist.oracle, "cross-check with the exhaustive search when small enough");
  d->add_flag("--strict-tables", dist.strict_tables, "take residual table rows as printed, without recipe checks");

  int trials = 1000;
  uint64_t seed = 1;
  CLI::App* v = app.add_subcommand("verify", "randomized oracle-equivalence suites");
  v->add_option("--trials", trials, "instances per suite")->check(CLI::PositiveNumber);
  v->add_option("--seed", seed, "random seed");

  std::vector<int> sizes{1000, 2000, 4000, 8000};
  int reps = 5;
  std::string family = "evolved";
  uint64_t bench_seed = 1;
  CLI::App* b = app.add_subcommand("bench", "running time against the number of markers");
  b->add_option("--sizes", sizes, "marker counts")->delimiter(',');
  b->add_option("--reps", reps, "instances per size")->check(CLI::PositiveNumber);
  b->add_option("--family", family, "evolved or shuffled")->check(CLI::IsMember({"evolved", "shuffled"}));
  b->add_option("--seed", bench_seed, "random seed");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*d) return run_dist(dist);
    if (*v) return run_verify(trials, seed);
    if (*b) return run_bench(sizes, reps, bench_seed, family);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
