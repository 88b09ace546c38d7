#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "invindel/tree.hpp"

namespace fixtures {

struct TreeFixture {
  std::string name;
  int tau = 0;
  std::string tree;
};

// Lines "name tau tree"; '#' starts a comment.
inline std::vector<TreeFixture> load(const std::string& path) {
  std::ifstream f(path);
  std::vector<TreeFixture> out;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream in(line);
    TreeFixture x;
    if (in >> x.name >> x.tau >> x.tree) out.push_back(x);
  }
  return out;
}

inline int by_label(const invindel::TaggedTree& t, const std::string& label) {
  for (int v = 0; v < t.size(); ++v)
    if (t.node(v).label == label) return v;
  return -1;
}

inline const char* kRefA = "a t j b d f e g -c h i u k v o n l m";
inline const char* kRefB = "a w b c d e f g h x i j y k l z m n o";

}  // namespace fixtures
