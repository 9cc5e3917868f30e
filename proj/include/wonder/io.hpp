#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wonder/arrangement.hpp"
#include "wonder/complex.hpp"
#include "wonder/poset.hpp"

namespace wonder {

// Canonical lattice JSON: {"elements":[...],"covers":[[lo,hi],...]} with
// covers sorted lexicographically; optional "codim" map and "building" list.
// 2-space indent, LF, trailing newline. load(save(x)) == x byte-for-byte
// after one round trip.
struct LatticeFile {
  MeetSemilattice l;
  std::optional<std::vector<Int>> codim;          // aligned with elements
  std::optional<std::vector<std::string>> building;
};

std::string save_lattice(const LatticeFile& f);
LatticeFile load_lattice(const std::string& text);

// Canonical arrangement JSON: {"dim":n,"subspaces":[{"equations":[[...]]}]}
// with each equation matrix row-reduced canonical, rationals as "p/q" or "p".
std::string save_arrangement(const QSubspaceArrangement& a);
QSubspaceArrangement load_arrangement(const std::string& text);

// Canonical complex JSON: {"vertices":[...],"facets":[[...],...]} with facet
// vertex lists sorted and facets sorted.
std::string save_complex(const SimplicialComplex& k);
SimplicialComplex load_complex(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace wonder
