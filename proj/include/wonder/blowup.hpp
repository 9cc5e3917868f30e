#pragma once

#include <string>
#include <vector>

#include "wonder/building.hpp"
#include "wonder/poset.hpp"

namespace wonder {

// Result of blowing up one element: the new semilattice plus provenance
// (which elements are kept originals and which are primed copies).
struct BlowupResult {
  MeetSemilattice l;
  // For each element of l: source label in the input lattice and whether the
  // element is a new (primed) copy.
  std::vector<std::string> source;
  std::vector<bool> primed;
};

// Bl_X L: keeps {Y : Y ≱ X}; adds Y' for every kept Y whose join with X
// exists. Order: originals keep their order; Y' ≼ Z' iff Y <= Z; Y ≼ Z' iff
// Y <= Z (so Y' covers Y). Revalidated as a meet-semilattice.
// New labels append a prime marker and a step tag: "<label>'<step>".
BlowupResult combinatorial_blowup(const MeetSemilattice& l, int x, int step = 1);

// Iterated blowups along a linear order on a verified building set; the
// order must be non-increasing in L (validated; witness pair on violation).
// An empty `order` selects the automatic one: rank descending, label
// ascending. Each step blows up the surviving original element.
MeetSemilattice resolve(const MeetSemilattice& l, const std::vector<int>& g,
                        std::vector<int> order = {});

// The automatic non-increasing order used by resolve.
std::vector<int> default_blowup_order(const MeetSemilattice& l,
                                      const std::vector<int>& g);

}  // namespace wonder
