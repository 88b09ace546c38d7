#include "invindel/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "invindel/error.hpp"

namespace invindel {

namespace {

struct Line {
  std::vector<Extremity> ext;
  std::vector<std::vector<Marker>> labels;
};

// Reads the chromosome from the anchor, forward, splitting it into common
// markers and the exclusive labels between consecutive ones.
Line make_line(const Chromosome& chrom, const std::set<std::string>& common,
               const std::string& anchor) {
  Chromosome c = chrom;
  auto at = [&] {
    return std::find_if(c.markers.begin(), c.markers.end(),
                        [&](const Marker& m) { return m.name == anchor; });
  };
  if (at()->reverse) c = reversed(c);
  std::rotate(c.markers.begin(), at(), c.markers.end());

  Line line;
  line.ext.push_back({anchor, End::head});
  line.labels.emplace_back();
  for (size_t i = 1; i < c.markers.size(); ++i) {
    const Marker& m = c.markers[i];
    if (!common.count(m.name)) {
      line.labels.back().push_back(m);
      continue;
    }
    line.ext.push_back({m.name, m.reverse ? End::head : End::tail});
    line.ext.push_back({m.name, m.reverse ? End::tail : End::head});
    line.labels.emplace_back();
  }
  line.ext.push_back({anchor, End::tail});
  return line;
}

}  // namespace

int run_count(const std::string& w) {
  std::string s;
  for (char ch : w)
    if (ch != '.') s += ch;
  if (s.empty()) return 0;
  int changes = 0;
  for (size_t i = 0; i < s.size(); ++i) changes += s[i] != s[(i + 1) % s.size()];
  return changes == 0 ? 1 : changes;
}

int run_count(const Cycle& c) { return run_count(c.walk_labels); }

int indel_potential(int runs) {
  if (runs < 0) throw Error(Errc::PreconditionViolated, "negative run count");
  if (runs <= 2) return runs;
  if (runs % 2) throw Error(Errc::OddRunCountAboveOne, std::to_string(runs));
  return runs / 2 + 1;
}

std::string default_anchor(const GenomePair& pair) {
  if (pair.common.empty()) throw Error(Errc::TooFewCommonMarkers, "no common marker");
  return *pair.common.begin();
}

RelationalDiagram build_relational_diagram(const GenomePair& pair, const std::string& anchor) {
  if (!pair.common.count(anchor)) throw Error(Errc::AnchorNotCommon, anchor);
  Line up = make_line(pair.a, pair.common, anchor);
  Line lo = make_line(pair.b, pair.common, anchor);
  const int n = static_cast<int>(up.labels.size());

  RelationalDiagram d;
  d.anchor = anchor;
  d.upper = up.ext;
  d.lower = lo.ext;
  d.a_labels = up.labels;
  d.b_labels = lo.labels;

  std::map<std::pair<std::string, End>, int> lower_pos, upper_pos;
  for (int p = 0; p < 2 * n; ++p) {
    upper_pos[{up.ext[p].marker, up.ext[p].end}] = p;
    lower_pos[{lo.ext[p].marker, lo.ext[p].end}] = p;
  }

  d.cycle_of_a_edge.assign(n, -1);
  for (int start = 0; start < n; ++start) {
    if (d.cycle_of_a_edge[start] >= 0) continue;
    Cycle cyc;
    cyc.id = d.c();
    int p = 2 * start;
    do {
      int e = p / 2;
      bool fwd = (p % 2) == 0;
      int q = fwd ? p + 1 : p - 1;
      cyc.a_edges.push_back(e);
      cyc.a_forward.push_back(fwd);
      cyc.walk_labels += d.a_labels[e].empty() ? '.' : 'A';
      d.cycle_of_a_edge[e] = cyc.id;
      const Extremity& x = up.ext[q];
      int lp = lower_pos.at({x.marker, x.end});
      int lq = lp ^ 1;
      cyc.b_edges.push_back(lp / 2);
      cyc.walk_labels += d.b_labels[lp / 2].empty() ? '.' : 'B';
      const Extremity& y = lo.ext[lq];
      p = upper_pos.at({y.marker, y.end});
    } while (p != 2 * start);
    cyc.a_sorted = cyc.a_edges;
    std::sort(cyc.a_sorted.begin(), cyc.a_sorted.end());
    cyc.runs = run_count(cyc.walk_labels);
    cyc.lambda = indel_potential(cyc.runs);
    bool all_same = std::all_of(cyc.a_forward.begin(), cyc.a_forward.end(),
                                [&](bool f) { return f == cyc.a_forward[0]; });
    cyc.bad = !cyc.trivial() && all_same;
    d.cycles.push_back(std::move(cyc));
  }
  return d;
}

int RelationalDiagram::lambda_sum() const {
  int s = 0;
  for (const Cycle& c : cycles) s += c.lambda;
  return s;
}

std::string RelationalDiagram::str() const {
  std::ostringstream o;
  o << "anchor " << anchor << ", |G| = " << g_count() << ", c = " << c() << "\n";
  for (const Cycle& cyc : cycles) {
    o << "C" << cyc.id << " length " << cyc.edge_count() << " runs " << cyc.runs << " lambda "
      << cyc.lambda << " " << (cyc.trivial() ? "sorted" : cyc.bad ? "bad" : "good") << " a-edges";
    for (size_t i = 0; i < cyc.a_edges.size(); ++i)
      o << ' ' << cyc.a_edges[i] << (cyc.a_forward[i] ? '>' : '<');
    o << " labels " << cyc.walk_labels << "\n";
  }
  return o.str();
}

}  // namespace invindel
