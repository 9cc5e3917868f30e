#pragma once

#include <string>
#include <vector>

#include "wonder/building.hpp"
#include "wonder/poset.hpp"

namespace wonder {

// Rays live in Q^#atoms: coordinate i of the ray for G is 1 if G >= atom_i,
// else 0. Cones are spanned by the rays of nested sets; the zero cone is
// implicit. Requires L atomic.
struct NestedFan {
  int ambient_dim = 0;
  std::vector<std::string> ray_labels;          // lattice labels of the rays
  std::vector<std::vector<Rat>> rays;           // ray vectors, 0/1
  std::vector<std::vector<int>> cones;          // each = sorted ray indices
  std::vector<std::string> atom_labels;         // coordinate labels
};

// Builds the fan and eagerly checks simpliciality of every cone
// (rank of L span equals |S|); throws NotSimplicial with a witness otherwise.
NestedFan nested_fan(const MeetSemilattice& l, const BuildingSet& g);

struct FanCheck {
  bool ok = true;
  int pairs_checked = 0;
  bool exhaustive = true;
  // witness on failure: cone indices whose intersection is not their
  // common face
  int cone_a = -1, cone_b = -1;
  std::string detail;
};

// Pairwise intersection check: cone(S) ∩ cone(T) must equal cone(S ∩ T).
// All pairs when the pair count is <= 200, deterministic sample otherwise.
FanCheck verify_fan(const NestedFan& f);

// Text export: AMBIENT line, RAY lines, CONE lines (labels sorted),
// LF endings, trailing newline.
std::string export_fan(const NestedFan& f);

}  // namespace wonder
