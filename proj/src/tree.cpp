#include "invindel/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <sstream>

#include "invindel/error.hpp"

namespace invindel {

std::string tags_str(Tags t) {
  std::string s;
  if (t & kTagA) s += 'A';
  if (t & kTagB) s += 'B';
  return s;
}

int TaggedTree::add_node(bool bad, Tags tags, std::string label, bool square) {
  TreeNode n;
  n.bad = bad;
  n.tags = tags;
  n.square = square;
  n.label = std::move(label);
  n.origin.push_back({size(), tags});
  nodes_.push_back(std::move(n));
  adj_.emplace_back();
  return size() - 1;
}

void TaggedTree::add_edge(int u, int v) {
  adj_[u].push_back(v);
  adj_[v].push_back(u);
}

std::vector<int> TaggedTree::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (is_leaf(v)) out.push_back(v);
  return out;
}

std::vector<int> TaggedTree::bad_nodes() const {
  std::vector<int> out;
  for (int v = 0; v < size(); ++v)
    if (nodes_[v].bad) out.push_back(v);
  return out;
}

int TaggedTree::bad_count() const {
  int k = 0;
  for (const TreeNode& n : nodes_) k += n.bad;
  return k;
}

std::vector<int> TaggedTree::parents_from(int root) const {
  std::vector<int> par(size(), -2);
  std::vector<int> stack{root};
  par[root] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (par[w] == -2) {
        par[w] = v;
        stack.push_back(w);
      }
  }
  return par;
}

std::vector<int> TaggedTree::path(int u, int v) const {
  std::vector<int> par = parents_from(v);
  std::vector<int> out;
  for (int x = u; x != -1; x = par[x]) {
    if (x == -2) throw Error(Errc::PreconditionViolated, "nodes are not connected");
    out.push_back(x);
  }
  return out;
}

void TaggedTree::reset_origins() {
  for (int v = 0; v < size(); ++v) nodes_[v].origin = {{v, nodes_[v].tags}};
}

static std::string kind_str(const TreeNode& n) {
  if (n.square) return "s";
  return std::string(n.bad ? "b" : "g") + tags_str(n.tags);
}

std::string TaggedTree::str() const {
  if (empty()) return "()";
  std::string out;
  std::function<void(int, int)> rec = [&](int v, int p) {
    out += kind_str(nodes_[v]);
    if (!nodes_[v].label.empty()) out += "=" + nodes_[v].label;
    bool first = true;
    for (int w : adj_[v]) {
      if (w == p) continue;
      out += first ? "(" : ",";
      first = false;
      rec(w, v);
    }
    if (!first) out += ")";
  };
  rec(0, -1);
  return out;
}

std::string TaggedTree::dot(const std::string& name) const {
  std::ostringstream o;
  o << "graph " << name << " {\n";
  for (int v = 0; v < size(); ++v) {
    const TreeNode& n = nodes_[v];
    o << "  n" << v << " [label=\"" << v;
    if (!n.label.empty()) o << ":" << n.label;
    if (n.tags) o << " " << tags_str(n.tags);
    o << "\" shape=" << (n.square ? "box" : "circle")
      << (n.bad ? "" : " style=filled fillcolor=gray") << "];\n";
  }
  for (int v = 0; v < size(); ++v)
    for (int w : adj_[v])
      if (v < w) o << "  n" << v << " -- n" << w << ";\n";
  o << "}\n";
  return o.str();
}

TaggedTree TaggedTree::parse(std::string_view text) {
  TaggedTree t;
  size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto fail = [&](const std::string& why) {
    throw Error(Errc::ParseError, why + " at offset " + std::to_string(i) + " in '" +
                                      std::string(text) + "'");
  };
  std::function<int()> node = [&]() -> int {
    skip();
    if (i >= text.size()) fail("unexpected end");
    bool square = false, bad = false;
    if (text[i] == 's') square = true;
    else if (text[i] == 'b') bad = true;
    else if (text[i] != 'g') fail("expected node kind");
    ++i;
    Tags tags = 0;
    if (!square) {
      if (i < text.size() && text[i] == 'A') tags |= kTagA, ++i;
      if (i < text.size() && text[i] == 'B') tags |= kTagB, ++i;
    }
    std::string label;
    if (i < text.size() && text[i] == '=') {
      ++i;
      while (i < text.size() && text[i] != '(' && text[i] != ')' && text[i] != ',' &&
             !std::isspace(static_cast<unsigned char>(text[i])))
        label += text[i++];
    }
    int v = t.add_node(bad, tags, label, square);
    skip();
    if (i < text.size() && text[i] == '(') {
      ++i;
      for (;;) {
        int c = node();
        t.add_edge(v, c);
        skip();
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    return v;
  };
  skip();
  if (text.substr(i) == "()") return t;
  node();
  skip();
  if (i != text.size()) fail("trailing input");
  return t;
}

TaggedTree flower_contract(const TaggedTree& t) {
  const int n = t.size();
  std::vector<int> group(n, -1);
  int groups = 0;
  for (int v = 0; v < n; ++v) {
    if (group[v] != -1) continue;
    group[v] = groups;
    if (!t.bad(v)) {
      std::vector<int> stack{v};
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int w : t.adj(x))
          if (!t.bad(w) && group[w] == -1) {
            group[w] = groups;
            stack.push_back(w);
          }
      }
    }
    ++groups;
  }

  std::vector<TreeNode> g(groups);
  std::vector<char> initialized(groups, 0);
  for (int v = 0; v < n; ++v) {
    TreeNode& s = g[group[v]];
    const TreeNode& src = t.node(v);
    if (!initialized[group[v]]) {
      initialized[group[v]] = 1;
      s.bad = src.bad;
      s.tags = 0;
      s.square = false;
    }
    s.tags |= src.tags;
    if (!src.label.empty()) s.label += (s.label.empty() ? "" : "+") + src.label;
    s.origin.push_back({v, src.tags});
  }
  std::vector<std::vector<int>> adj(groups);
  for (int v = 0; v < n; ++v)
    for (int w : t.adj(v))
      if (v < w && group[v] != group[w]) {
        adj[group[v]].push_back(group[w]);
        adj[group[w]].push_back(group[v]);
      }

  bool any_bad = false;
  for (int v = 0; v < n; ++v) any_bad |= t.bad(v);
  if (!any_bad) return {};

  std::vector<char> alive(groups, 1);
  for (int x = 0; x < groups; ++x) {
    if (g[x].bad) continue;
    if (adj[x].size() == 1) {
      int b = adj[x][0];
      g[b].tags |= g[x].tags;
      for (const Origin& o : g[x].origin) g[b].origin.push_back(o);
      std::erase(adj[b], x);
      adj[x].clear();
      alive[x] = 0;
    } else if (adj[x].size() == 2 && g[x].tags == 0) {
      int p = adj[x][0], q = adj[x][1];
      std::replace(adj[p].begin(), adj[p].end(), x, q);
      std::replace(adj[q].begin(), adj[q].end(), x, p);
      adj[x].clear();
      alive[x] = 0;
    }
  }

  TaggedTree out;
  std::vector<int> index(groups, -1);
  for (int x = 0; x < groups; ++x) {
    if (!alive[x]) continue;
    index[x] = out.add_node(g[x].bad, g[x].tags, g[x].label);
    out.node(index[x]).origin = g[x].origin;
  }
  for (int x = 0; x < groups; ++x)
    for (int y : adj[x])
      if (alive[x] && x < y) out.add_edge(index[x], index[y]);
  return out;
}

TaggedTree induced(const TaggedTree& t, const std::vector<char>& keep) {
  TaggedTree out;
  std::vector<int> index(t.size(), -1);
  for (int v = 0; v < t.size(); ++v) {
    if (!keep[v]) continue;
    const TreeNode& n = t.node(v);
    index[v] = out.add_node(n.bad, n.tags, n.label, n.square);
    out.node(index[v]).origin = {{v, n.tags}};
  }
  for (int v = 0; v < t.size(); ++v)
    for (int w : t.adj(v))
      if (v < w && keep[v] && keep[w]) out.add_edge(index[v], index[w]);
  return out;
}

void compose_origins(TaggedTree& derived, const TaggedTree& parent) {
  for (int v = 0; v < derived.size(); ++v) {
    std::vector<Origin> next;
    for (const Origin& o : derived.node(v).origin)
      for (const Origin& q : parent.node(o.id).origin) next.push_back(q);
    derived.node(v).origin = std::move(next);
  }
}

TaggedTree swap_ab(const TaggedTree& t) {
  TaggedTree out = t;
  auto sw = [](Tags x) -> Tags { return static_cast<Tags>(((x & kTagA) << 1) | ((x & kTagB) >> 1)); };
  for (int v = 0; v < out.size(); ++v) out.node(v).tags = sw(out.node(v).tags);
  return out;
}

std::string contracted_form_violation(const TaggedTree& t) {
  for (int v = 0; v < t.size(); ++v) {
    const TreeNode& n = t.node(v);
    if (n.square) return "square node " + std::to_string(v);
    if (n.bad) continue;
    if (t.is_leaf(v)) return "good leaf " + std::to_string(v);
    if (t.degree(v) == 2 && n.tags == 0) return "clean good node of degree 2: " + std::to_string(v);
    for (int w : t.adj(v))
      if (!t.bad(w)) return "adjacent good nodes " + std::to_string(v) + "," + std::to_string(w);
  }
  return {};
}

}  // namespace invindel
