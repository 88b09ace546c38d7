#include "invindel/residual.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>

#include "invindel/error.hpp"

namespace invindel {

extern const char* const kResidualTables;

static std::atomic<TableMode> g_mode{TableMode::checked};
void set_table_mode(TableMode m) { g_mode = m; }
TableMode table_mode() { return g_mode; }

namespace {

// ---- predicates ----

struct Pred {
  enum Op { Atom, Not, And, Or } op = Atom;
  std::string name;
  std::vector<std::string> args;
  std::vector<std::unique_ptr<Pred>> kids;
};

class PredParser {
 public:
  explicit PredParser(std::string s) : s_(std::move(s)) {}

  std::unique_ptr<Pred> parse() {
    auto p = expr();
    skip();
    if (i_ != s_.size()) fail("trailing input");
    return p;
  }

 private:
  std::string s_;
  size_t i_ = 0;

  [[noreturn]] void fail(const std::string& why) {
    throw Error(Errc::ParseError, why + " in predicate '" + s_ + "'");
  }
  void skip() {
    while (i_ < s_.size() && s_[i_] == ' ') ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  std::unique_ptr<Pred> binary(Pred::Op op, std::unique_ptr<Pred> l, std::unique_ptr<Pred> r) {
    auto p = std::make_unique<Pred>();
    p->op = op;
    p->kids.push_back(std::move(l));
    p->kids.push_back(std::move(r));
    return p;
  }
  std::unique_ptr<Pred> expr() {
    auto l = term();
    while (eat('|')) l = binary(Pred::Or, std::move(l), term());
    return l;
  }
  std::unique_ptr<Pred> term() {
    auto l = factor();
    while (eat('&')) l = binary(Pred::And, std::move(l), factor());
    return l;
  }
  std::unique_ptr<Pred> factor() {
    if (eat('!')) {
      auto p = std::make_unique<Pred>();
      p->op = Pred::Not;
      p->kids.push_back(factor());
      return p;
    }
    if (eat('(')) {
      auto p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    skip();
    auto p = std::make_unique<Pred>();
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) p->name += s_[i_++];
    if (p->name.empty()) fail("expected a predicate");
    if (p->name == "pruned") {
      if (!eat('(')) fail("pruned needs an argument");
      p->kids.push_back(expr());
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (eat('(')) {
      std::string arg;
      while (i_ < s_.size() && s_[i_] != ')') {
        if (s_[i_] == ',') {
          p->args.push_back(arg);
          arg.clear();
        } else if (s_[i_] != ' ') {
          arg += s_[i_];
        }
        ++i_;
      }
      if (!eat(')')) fail("missing ')'");
      p->args.push_back(arg);
    }
    return p;
  }
};

// ---- recipes ----

struct Slot {
  enum Kind { Short, Trav, Semi, Cut } kind = Cut;
  int c1 = -1, c2 = -1;
  bool reuse1 = false, reuse2 = false;
  Tags tag = 0;
};

int parse_class(std::string s, bool& reuse) {
  reuse = !s.empty() && s.back() == '*';
  if (reuse) s.pop_back();
  ClassSet set = parse_class_set(s);
  for (int c = 0; c < 4; ++c)
    if (set == (1 << c)) return c;
  throw Error(Errc::ParseError, "expected a single leaf class, got '" + s + "'");
}

std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out(1);
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == sep && depth == 0) out.emplace_back();
    else out.back() += ch;
  }
  return out;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(' '), e = s.find_last_not_of(' ');
  return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
}

std::vector<Slot> parse_recipe(const std::string& text) {
  std::vector<Slot> out;
  for (std::string item : split_top(text, ',')) {
    item = trim(item);
    int times = 1;
    if (size_t star = item.find('*'); star != std::string::npos && star < item.find('(')) {
      times = std::stoi(item.substr(0, star));
      item = item.substr(star + 1);
    }
    Slot s;
    std::vector<std::string> args;
    std::string name = item;
    if (size_t lp = item.find('('); lp != std::string::npos) {
      name = item.substr(0, lp);
      for (const std::string& a : split_top(item.substr(lp + 1, item.size() - lp - 2), ','))
        args.push_back(trim(a));
    }
    if (name == "cut") {
      s.kind = Slot::Cut;
    } else if (name == "s" && args.size() == 1) {
      s.kind = Slot::Short;
      s.c1 = parse_class(args[0], s.reuse1);
    } else if (name == "in" && args.size() == 1) {
      s.kind = Slot::Trav;
      s.c1 = s.c2 = parse_class(args[0], s.reuse1);
    } else if ((name == "out" || name == "t") && args.size() == 2) {
      s.kind = Slot::Trav;
      s.c1 = parse_class(args[0], s.reuse1);
      s.c2 = parse_class(args[1], s.reuse2);
    } else if (name == "semi" && args.size() == 2) {
      s.kind = Slot::Semi;
      s.c1 = parse_class(args[0], s.reuse1);
      s.tag = args[1] == "a" ? kTagA : kTagB;
    } else {
      throw Error(Errc::ParseError, "bad recipe item '" + item + "'");
    }
    for (int k = 0; k < times; ++k) out.push_back(s);
  }
  return out;
}

// ---- table ----

struct Entry {
  std::unique_ptr<Pred> pred;
  std::vector<Entry> kids;  // non-empty for a group
  std::string label;
  std::vector<Slot> recipe;
  int cost = 0;
  int reduce_class = -1;  // reducible row
};

using Table = std::map<std::string, std::vector<Entry>>;

Table parse_tables(const std::string& text) {
  Table table;
  std::vector<Entry>* block = nullptr;
  // (indent, list that rows at this indent go into)
  std::vector<std::pair<int, std::vector<Entry>*>> stack;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::string body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '<') {
      block = &table[body.substr(1, body.size() - 2)];
      stack = {{2, block}};
      continue;
    }
    if (!block) throw Error(Errc::ParseError, "row outside a block: " + body);
    int indent = static_cast<int>(line.find_first_not_of(' '));
    while (!stack.empty() && stack.back().first > indent) stack.pop_back();
    if (stack.empty() || stack.back().first != indent)
      throw Error(Errc::ParseError, "bad indentation: " + body);
    std::vector<std::string> f = split_top(body, '|');
    Entry e;
    if (f.size() >= 4) {
      std::string pred = f[0];
      for (size_t k = 1; k + 3 < f.size(); ++k) pred += "|" + f[k];
      e.pred = PredParser(pred).parse();
      e.label = trim(f[f.size() - 3]);
      std::string recipe = trim(f[f.size() - 2]);
      std::string cost = trim(f.back());
      if (e.label == ">>") {
        bool unused = false;
        e.reduce_class = parse_class(recipe.substr(7, recipe.size() - 8), unused);
        e.cost = std::stoi(cost.substr(1));
      } else {
        e.recipe = parse_recipe(recipe);
        e.cost = std::stoi(cost);
      }
      stack.back().second->push_back(std::move(e));
    } else {
      e.pred = PredParser(body).parse();
      stack.back().second->push_back(std::move(e));
      stack.push_back({indent + 2, &stack.back().second->back().kids});
    }
  }
  return table;
}

const Table& tables() {
  static const Table t = parse_tables(kResidualTables);
  return t;
}

// ---- evaluation ----

bool eval(const Pred& p, const Topology& topo);

bool eval_atom(const Pred& p, const Topology& topo) {
  const std::string& n = p.name;
  auto set = [&](size_t k) { return parse_class_set(p.args.at(k)); };
  if (n == "else") return true;
  if (n == "fullyco") return topo.fully_co_rooted();
  if (n == "fullysep") return topo.fully_separated();
  if (n == "solo") return !topo.solo_candidates().empty();
  if (n == "iso") return topo.isolated(set(0));
  if (n == "noniso") return !topo.isolated(set(0));
  if (n == "co") return topo.co_rooted(set(0), set(1));
  if (n == "sep") return topo.separated(set(0), set(1));
  if (n == "shortlink") return topo.short_bad_link(set(0), set(1));
  if (n == "mate") return topo.mate(set(0), p.args.at(1) == "a" ? kTagA : kTagB, set(2));
  if (n == "pruned") {
    const TaggedTree& t = topo.tree();
    for (int s : topo.solo_candidates()) {
      std::vector<char> keep(t.size(), 1);
      for (int x : leaf_branch(t, s).nodes) keep[x] = 0;
      TaggedTree rest = flower_contract(induced(t, keep));
      if (rest.empty()) continue;
      if (eval(*p.kids[0], Topology(rest))) return true;
    }
    return false;
  }
  throw Error(Errc::ParseError, "unknown predicate '" + n + "'");
}

bool eval(const Pred& p, const Topology& topo) {
  switch (p.op) {
    case Pred::Not: return !eval(*p.kids[0], topo);
    case Pred::And: return eval(*p.kids[0], topo) && eval(*p.kids[1], topo);
    case Pred::Or: return eval(*p.kids[0], topo) || eval(*p.kids[1], topo);
    case Pred::Atom: break;
  }
  try {
    return eval_atom(p, topo);
  } catch (const Error& e) {
    // a relation involving an absent class does not hold
    if (e.code() == Errc::PreconditionViolated) return false;
    throw;
  }
}

// ---- witness ----

class Witness {
 public:
  Witness(const Topology& topo, const std::vector<Slot>& recipe, int budget)
      : topo_(topo), t_(topo.tree()), recipe_(recipe), budget_(budget),
        used_(t_.size(), 0), cover_count_(t_.size(), 0) {
    for (int v = 0; v < t_.size(); ++v)
      if (t_.bad(v)) bad_.push_back(v), ++uncovered_;
  }

  std::optional<Cover> search() {
    if (dfs(0, 0)) return found_;
    return std::nullopt;
  }

 private:
  const Topology& topo_;
  const TaggedTree& t_;
  const std::vector<Slot>& recipe_;
  int budget_;
  std::vector<int> bad_;
  std::vector<int> used_;
  std::vector<int> cover_count_;
  int uncovered_ = 0;
  std::vector<CoverPath> chosen_;
  Cover found_;

  std::vector<int> endpoints(int cls, bool reuse) const {
    std::vector<int> out;
    for (int v : topo_.leaves_of(cls))
      if (reuse || !used_[v]) out.push_back(v);
    return out;
  }

  bool dfs(size_t k, int spent) {
    if (spent + static_cast<int>(recipe_.size() - k) > budget_) return false;
    if (k == recipe_.size()) {
      if (uncovered_ > 0 || spent != budget_) return false;
      found_ = {};
      for (const CoverPath& p : chosen_) found_.add(p);
      return true;
    }
    const Slot& s = recipe_[k];
    std::vector<std::pair<int, int>> options;
    switch (s.kind) {
      case Slot::Short:
        for (int u : endpoints(s.c1, s.reuse1)) options.push_back({u, u});
        break;
      case Slot::Cut:
        for (int u : bad_) options.push_back({u, u});
        break;
      case Slot::Trav:
        for (int u : endpoints(s.c1, s.reuse1))
          for (int v : endpoints(s.c2, s.reuse2))
            if (u != v && (s.c1 != s.c2 || s.reuse1 != s.reuse2 || u < v)) options.push_back({u, v});
        break;
      case Slot::Semi:
        for (int u : endpoints(s.c1, s.reuse1))
          for (int v = 0; v < t_.size(); ++v)
            if (v != u && (t_.tags(v) & s.tag)) options.push_back({u, v});
        break;
    }
    for (auto [u, v] : options) {
      CoverPath p;
      try {
        p = path_cost(t_, u, v);
      } catch (const Error&) {
        continue;
      }
      if (spent + p.cost > budget_) continue;
      std::vector<int> nodes = t_.path(u, v);
      for (int x : nodes)
        if (t_.bad(x) && cover_count_[x]++ == 0) --uncovered_;
      ++used_[u];
      if (v != u) ++used_[v];
      chosen_.push_back(p);
      bool ok = dfs(k + 1, spent + p.cost);
      chosen_.pop_back();
      --used_[u];
      if (v != u) --used_[v];
      for (int x : nodes)
        if (t_.bad(x) && --cover_count_[x] == 0) ++uncovered_;
      if (ok) return true;
    }
    return false;
  }
};

// Valid but not necessarily optimal: circular traversals plus short paths on
// whatever they miss.
Cover fallback_cover(const TaggedTree& t) {
  Cover c;
  std::vector<int> order = circular_leaf_order(t);
  if (order.size() % 2) order.pop_back();
  std::vector<char> covered(t.size(), 0);
  for (auto [u, v] : pair_traversals(order)) {
    std::vector<int> nodes = t.path(u, v);
    if (std::none_of(nodes.begin(), nodes.end(), [&](int x) { return t.bad(x); })) continue;
    c.add(path_cost(t, u, v));
    for (int x : nodes) covered[x] = 1;
  }
  for (int x : t.bad_nodes())
    if (!covered[x]) c.add(path_cost(t, x, x));
  return c;
}

void collect_rows(const std::vector<Entry>& rows, std::vector<const Entry*>& out) {
  for (const Entry& e : rows) {
    if (e.kids.empty()) out.push_back(&e);
    else collect_rows(e.kids, out);
  }
}

LookupResult reduce_and_solve(const Topology& topo, int cls, const std::string& key) {
  const TaggedTree& t = topo.tree();
  const auto& leaves = topo.leaves_of(cls);
  LookupResult r;
  bool first = true;
  for (size_t i = 0; i < leaves.size(); ++i) {
    for (size_t j = i + 1; j < leaves.size(); ++j) {
      CoverPath p = path_cost(t, leaves[i], leaves[j]);
      TaggedTree rest = apply_p_reduction(t, leaves[i], leaves[j]);
      TauResult sub = tau_star(rest);
      int total = p.cost + sub.cost;
      if (first || total < r.cost) {
        first = false;
        r.cost = total;
        r.cover = {};
        r.cover.add(p);
        r.cover.append(map_cover(sub.cover, rest, t));
        r.label = "<" + key + "> >> " + class_letter(cls) + " then " +
                  (sub.residual ? sub.residual->case_label : sub.route);
      }
    }
  }
  if (first) throw Error(Errc::PreconditionViolated, "reducible row without a pair");
  return r;
}

// First row, in table order, whose predicate holds and whose recipe can be
// realized on the tree at the row's cost.
std::optional<LookupResult> resolve(const std::vector<Entry>& rows, const Topology& topo,
                                    const std::string& key, std::vector<std::string>& skipped,
                                    std::optional<LookupResult>& first_fired) {
  for (const Entry& e : rows) {
    if (!eval(*e.pred, topo)) continue;
    if (!e.kids.empty()) {
      if (auto hit = resolve(e.kids, topo, key, skipped, first_fired)) return hit;
      continue;
    }
    if (e.reduce_class >= 0) return reduce_and_solve(topo, e.reduce_class, key);
    LookupResult r;
    r.label = "<" + key + "> " + e.label;
    r.cost = e.cost;
    if (!first_fired) first_fired = r;
    if (std::optional<Cover> w = Witness(topo, e.recipe, e.cost).search()) {
      r.cover = *w;
      return r;
    }
    if (g_mode == TableMode::strict) {
      r.witness_ok = false;
      r.cover = fallback_cover(topo.tree());
      return r;
    }
    skipped.push_back(e.label);
  }
  return std::nullopt;
}

LookupResult run_table(const TaggedTree& t) {
  Composition comp = composition_of(t);
  auto it = tables().find(comp.key());
  if (it == tables().end())
    throw Error(Errc::UnknownComposition, "<" + comp.key() + "> in " + t.str());
  Topology topo(t);
  std::optional<LookupResult> first_fired;
  std::vector<std::string> skipped;
  std::optional<LookupResult> r = resolve(it->second, topo, comp.key(), skipped, first_fired);
  if (!r) {
    if (!first_fired) throw Error(Errc::NoCaseMatched, "<" + comp.key() + "> in " + t.str());
    // no row's recipe is realizable: keep the first row's cost, flag it
    r = std::move(first_fired);
    r->witness_ok = false;
    r->cover = fallback_cover(t);
  }
  r->skipped = std::move(skipped);
  if (g_mode == TableMode::checked) {
    std::vector<const Entry*> all;
    collect_rows(it->second, all);
    for (const Entry* e : all) {
      if (e->reduce_class >= 0 || e->cost >= r->cost) continue;
      if (std::optional<Cover> w = Witness(topo, e->recipe, e->cost).search()) {
        r->cost = e->cost;
        r->cover = *w;
        r->label = "<" + comp.key() + "> " + e->label + " (cheaper than " + r->label + ")";
        r->overridden = true;
        r->witness_ok = true;
      }
    }
  }
  return *r;
}

void trace_rows(const std::vector<Entry>& rows, const Topology& topo, int depth,
                std::vector<RowTrace>& out) {
  for (const Entry& e : rows) {
    RowTrace r;
    r.depth = depth;
    r.group = !e.kids.empty();
    r.label = r.group ? "(group)" : e.label;
    r.holds = eval(*e.pred, topo);
    r.cost = e.cost;
    if (!r.group && e.reduce_class < 0)
      r.realizable = Witness(topo, e.recipe, e.cost).search().has_value();
    out.push_back(r);
    if (r.group) trace_rows(e.kids, topo, depth + 1, out);
  }
}

void collect_labels(const std::vector<Entry>& rows, std::vector<std::string>& out) {
  for (const Entry& e : rows) {
    if (e.kids.empty()) out.push_back(e.label);
    else collect_labels(e.kids, out);
  }
}

}  // namespace

std::pair<TaggedTree, bool> normalize_ab_swap(const TaggedTree& t) {
  Composition c = composition_of(t);
  if (c.lb > c.la) return {swap_ab(t), true};
  return {t, false};
}

LookupResult optimal_cover_of_residual(const TaggedTree& t) {
  auto [norm, swapped] = normalize_ab_swap(t);
  LookupResult r = run_table(norm);
  if (swapped) r.label += " (A/B swapped)";
  return r;
}

LookupResult cover_without_reduction(const TaggedTree& t) {
  LookupResult r;
  if (t.empty()) {
    r.label = "empty";
  } else if (t.size() == 1) {
    r.cover.add(path_cost(t, 0, 0));
    r.label = "single";
  } else if (all_leaves_share_tag(t)) {
    r.cover = tau_shared_tag(t);
    r.label = "shared-tag";
  } else if (all_leaves_clean(t)) {
    r.cover = tau_all_clean(t);
    r.label = "all-clean";
  } else if (!tables().count(composition_of(normalize_ab_swap(t).first).key())) {
    // a reduction exposed new tagged leaves: run the chain again, but only
    // while it keeps removing bad nodes
    thread_local std::vector<int> active;
    if (!active.empty() && t.bad_count() >= active.back())
      throw Error(Errc::UnknownComposition, "<" + composition_of(t).key() + "> in " + t.str());
    active.push_back(t.bad_count());
    ResidualResult again;
    try {
      again = compute_residual(t);
    } catch (...) {
      active.pop_back();
      throw;
    }
    active.pop_back();
    r.cost = again.total();
    r.cover = again.cover;
    r.label = "reduced again, " + again.case_label;
    return r;
  } else {
    return optimal_cover_of_residual(t);
  }
  r.cost = r.cover.total_cost;
  return r;
}

TauResult tau_star(const TaggedTree& t) {
  TauResult r;
  if (t.empty() || t.size() == 1 || all_leaves_share_tag(t) || all_leaves_clean(t)) {
    LookupResult l = cover_without_reduction(t);
    r.cost = l.cost;
    r.cover = std::move(l.cover);
    r.route = l.label;
    return r;
  }
  ResidualResult res = compute_residual(t);
  r.cost = res.total();
  r.cover = res.cover;
  r.route = "residual";
  r.residual = std::move(res);
  return r;
}

std::vector<RowTrace> trace_table(const TaggedTree& t) {
  TaggedTree norm = normalize_ab_swap(t).first;
  auto it = tables().find(composition_of(norm).key());
  std::vector<RowTrace> out;
  if (it != tables().end()) trace_rows(it->second, Topology(norm), 0, out);
  return out;
}

std::vector<Composition> table_compositions() {
  std::vector<Composition> out;
  for (const auto& [key, rows] : tables())
    out.push_back({key[0] - '0', key[1] - '0', key[2] - '0', key[3] - '0'});
  return out;
}

std::vector<std::string> table_case_labels(const Composition& c) {
  std::vector<std::string> out;
  auto it = tables().find(c.key());
  if (it != tables().end()) collect_labels(it->second, out);
  return out;
}

}  // namespace invindel
