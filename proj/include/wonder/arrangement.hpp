#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wonder/building.hpp"
#include "wonder/linalg.hpp"
#include "wonder/poset.hpp"

namespace wonder {

struct QSubspaceArrangement {
  int ambient = 0;
  std::vector<QSubspace> subspaces;  // pairwise distinct, proper
};

// Intersection lattice: all intersections of arrangement members, ordered by
// reversed inclusion; 0̂ is the ambient space. Codimension labels attached.
struct IntersectionLattice {
  MeetSemilattice l;
  std::vector<QSubspace> subspace;  // per element; subspace[bottom] = ambient
  std::vector<int> codim;           // = subspace[i].codim()
};

// Closure of the members under pairwise intersection to a fixpoint.
// Elements are labeled "0" (bottom) and, for flats of a braid arrangement,
// by the partition of coordinates they equate ("12|34"); other arrangements
// use positional labels "S1", "S2", ... in closure-discovery order.
IntersectionLattice intersection_lattice(const QSubspaceArrangement& arr);

// The (n choose 2) hyperplanes x_i = x_j in Q^n, 2 <= n <= 7.
QSubspaceArrangement braid_arrangement(int n);

// Restrict an arrangement to the hyperplane Σx_i = 0 (each member is
// intersected with it and the result treated inside the same ambient Q^n).
// Used for the quotient-by-diagonal model of the braid arrangement.
QSubspaceArrangement restrict_to_sum_zero(const QSubspaceArrangement& arr);

// Inclusion-maximal subspaces among lattice elements with codim >= k.
QSubspaceArrangement truncate(const IntersectionLattice& il, int k);

struct GeometricCheck {
  bool ok = false;
  bool combinatorial = false;  // whether G was a building set at all
  int witness = -1;            // element with cd(X) != sum of factor codims
  int witness_cd = 0, witness_sum = 0;
};

// Building set whose factor codimensions add: cd(X) = Σ cd(F_G(X)).
GeometricCheck is_geometric_building_set(const IntersectionLattice& il,
                                         const std::vector<int>& g);

// Point of the maximal wonderful model in its chain encoding.
struct ModelPoint {
  std::vector<Rat> x;
  std::vector<int> chain;                  // H_1 > H_2 > ... (element indices)
  std::vector<std::vector<Rat>> lines;     // one per chain entry
};

// Greedy encoding: H_1 = max element containing x (intersection of atoms
// through x); H_{i+1} = max element containing span(H_i, l_i); terminal when
// the last span lies in no element except the ambient space.
ModelPoint encode_model_point(const IntersectionLattice& il,
                              const std::vector<Rat>& x,
                              const std::vector<std::vector<Rat>>& lines);

// The open stratum index of a valid model point (its chain).
std::vector<int> classify_stratum(const IntersectionLattice& il,
                                  const ModelPoint& p);

}  // namespace wonder
