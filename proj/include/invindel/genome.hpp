#pragma once

#include <array>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace invindel {

struct Marker {
  std::string name;
  bool reverse = false;

  bool operator==(const Marker&) const = default;
};

enum class Shape { circular, linear };

struct Chromosome {
  std::vector<Marker> markers;
  Shape shape = Shape::circular;

  size_t size() const { return markers.size(); }
  std::string str() const;
  bool operator==(const Chromosome&) const = default;
};

Chromosome parse_chromosome(std::string_view text, Shape shape = Shape::circular);

struct GenomePair {
  Chromosome a;
  Chromosome b;
  std::set<std::string> common;
  std::set<std::string> a_only;
  std::set<std::string> b_only;
};

// Throws TooFewCommonMarkers when |G| <= 1.
GenomePair classify_markers(Chromosome a, Chromosome b);
// Same partition without the |G| >= 2 requirement.
GenomePair partition_markers(Chromosome a, Chromosome b);

std::array<GenomePair, 2> cap_linear_pair(const GenomePair& pair);
std::string cap_marker_name(const GenomePair& pair);

// Reads the two-line genome file format; a ">linear" or ">circular" header
// line is optional.
std::pair<Chromosome, Chromosome> read_genome_file(const std::string& path);
std::pair<Chromosome, Chromosome> read_genome_text(std::string_view text);

// The chromosome reversed as a whole (order and orientations flipped).
Chromosome reversed(const Chromosome& c);

}  // namespace invindel
