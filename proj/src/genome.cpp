#include "invindel/genome.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "invindel/error.hpp"

namespace invindel {

std::string Chromosome::str() const {
  std::string out;
  for (const Marker& m : markers) {
    if (!out.empty()) out += ' ';
    if (m.reverse) out += '-';
    out += m.name;
  }
  return out;
}

Chromosome parse_chromosome(std::string_view text, Shape shape) {
  Chromosome c;
  c.shape = shape;
  std::set<std::string> seen;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    Marker m;
    if (tok[0] == '-') {
      m.reverse = true;
      tok.erase(0, 1);
    }
    if (tok.empty() || tok[0] == '-') throw Error(Errc::MalformedToken, "bad token '" + tok + "'");
    m.name = tok;
    if (!seen.insert(m.name).second) throw Error(Errc::DuplicateMarker, m.name);
    c.markers.push_back(std::move(m));
  }
  if (c.markers.empty()) throw Error(Errc::EmptyInput, "chromosome has no markers");
  return c;
}

GenomePair partition_markers(Chromosome a, Chromosome b) {
  GenomePair p;
  std::set<std::string> in_b;
  for (const Marker& m : b.markers) in_b.insert(m.name);
  std::set<std::string> in_a;
  for (const Marker& m : a.markers) {
    in_a.insert(m.name);
    (in_b.count(m.name) ? p.common : p.a_only).insert(m.name);
  }
  for (const Marker& m : b.markers)
    if (!in_a.count(m.name)) p.b_only.insert(m.name);
  p.a = std::move(a);
  p.b = std::move(b);
  return p;
}

GenomePair classify_markers(Chromosome a, Chromosome b) {
  GenomePair p = partition_markers(std::move(a), std::move(b));
  if (p.common.size() <= 1)
    throw Error(Errc::TooFewCommonMarkers,
                std::to_string(p.common.size()) + " common marker(s)");
  return p;
}

std::string cap_marker_name(const GenomePair& pair) {
  auto used = [&](const std::string& n) {
    return pair.common.count(n) || pair.a_only.count(n) || pair.b_only.count(n);
  };
  for (int i = 0;; ++i) {
    std::string n = "__cap" + std::to_string(i);
    if (!used(n)) return n;
  }
}

Chromosome reversed(const Chromosome& c) {
  Chromosome r = c;
  r.markers.assign(c.markers.rbegin(), c.markers.rend());
  for (Marker& m : r.markers) m.reverse = !m.reverse;
  return r;
}

std::array<GenomePair, 2> cap_linear_pair(const GenomePair& pair) {
  if (pair.a.shape != Shape::linear || pair.b.shape != Shape::linear)
    throw Error(Errc::NotLinear, "capping needs two linear chromosomes");
  std::string cap = cap_marker_name(pair);
  Chromosome a = pair.a;
  a.shape = Shape::circular;
  a.markers.push_back({cap, false});
  std::array<GenomePair, 2> out;
  for (int k = 0; k < 2; ++k) {
    Chromosome b = k == 0 ? pair.b : reversed(pair.b);
    b.shape = Shape::circular;
    b.markers.push_back({cap, false});
    out[k] = partition_markers(a, std::move(b));
  }
  return out;
}

std::pair<Chromosome, Chromosome> read_genome_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Shape shape = Shape::circular;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    size_t s = line.find_first_not_of(" \t\r");
    if (s == std::string::npos) continue;
    line = line.substr(s);
    if (line[0] == '#') continue;
    if (line[0] == '>') {
      std::string h = line.substr(1);
      while (!h.empty() && std::isspace(static_cast<unsigned char>(h.back()))) h.pop_back();
      if (h == "linear") shape = Shape::linear;
      else if (h == "circular") shape = Shape::circular;
      else throw Error(Errc::ParseError, "unknown header '" + line + "'");
      continue;
    }
    rows.push_back(line);
  }
  if (rows.size() != 2)
    throw Error(Errc::ParseError, "expected two chromosome lines, got " + std::to_string(rows.size()));
  return {parse_chromosome(rows[0], shape), parse_chromosome(rows[1], shape)};
}

std::pair<Chromosome, Chromosome> read_genome_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return read_genome_text(ss.str());
}

}  // namespace invindel
