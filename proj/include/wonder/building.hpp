#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wonder/complex.hpp"
#include "wonder/poset.hpp"

namespace wonder {

// A verified building set: carrier plus the factor decomposition of every
// element of L_{>0̂} (max carrier elements below it).
struct BuildingSet {
  std::vector<int> carrier;                    // ascending element indices
  std::vector<std::vector<int>> factor_map;    // per element; empty for 0̂
};

struct BuildingCheck {
  bool ok = false;
  std::optional<BuildingSet> building;  // on success
  int witness = -1;                     // failing X on failure
};

// Core criterion: for every X in L_{>0̂}, the map (y_1..y_k) -> join(y) from
// the product of the factor intervals [0̂,G_j] onto [0̂,X] is a bijective
// order-isomorphism. When that check fails for an X, an independent pinned
// isomorphism search is run as a cross-check; a disagreement is a hard error
// (CheckDisagreement) rather than a silent resolution.
BuildingCheck is_building_set(const MeetSemilattice& l,
                              const std::vector<int>& g);

// Irreducible elements, classified bottom-up in a linear extension.
BuildingSet minimal_building_set(const MeetSemilattice& l);

// All building sets = verified supersets of G_min; requires at most 20 free
// elements. Result sorted by carrier (lexicographic index lists).
std::vector<BuildingSet> enumerate_building_sets(const MeetSemilattice& l);

// Max G-elements below X (X in L_{>0̂}).
std::vector<int> factors(const MeetSemilattice& l, const BuildingSet& g, int x);

// Nested test: every antichain T ⊆ S with |T| >= 2 has a join that exists
// and lies outside the carrier.
bool is_nested(const MeetSemilattice& l, const BuildingSet& g,
               const std::vector<int>& s);

// All nested subsets as a simplicial complex on the carrier (vertex order =
// element order); depth-first generation pruning on antichains through the
// newly added vertex.
SimplicialComplex nested_set_complex(const MeetSemilattice& l,
                                     const BuildingSet& g);

}  // namespace wonder
