#pragma once

#include <map>
#include <string>
#include <vector>

#include "wonder/building.hpp"
#include "wonder/poset.hpp"

namespace wonder {

// Monomials are exponent vectors over the building-set variables. Variable
// order (significance for the term order) is a fixed linear extension of the
// carrier: rank ascending, then label ascending — finer lattice elements are
// more significant. Degree-lexicographic comparison.
using Mono = std::vector<int>;

int mono_degree(const Mono& m);
// true if a < b in the term order (deglex, variable 0 most significant).
bool mono_less(const Mono& a, const Mono& b);
bool mono_divides(const Mono& a, const Mono& b);  // a | b

struct MonoGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    return mono_less(b, a);
  }
};

// Polynomials over Z, terms sorted leading-first.
using Poly = std::map<Mono, Int, MonoGreater>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_sub(Poly a, const Poly& b);
Poly poly_pow(const Poly& a, int e);
std::string poly_to_string(const Poly& p, const std::vector<std::string>& vars);

// Shared context: variable order over the carrier of a building set.
struct AlgebraContext {
  const MeetSemilattice* l = nullptr;
  BuildingSet g;
  std::vector<int> vars;                 // carrier sorted rank asc, label asc
  std::vector<std::string> var_labels;   // lattice labels, same order
  std::vector<int> var_of_element;       // element index -> var index or -1
};

// Requires L atomic (every element the join of the atoms below it).
AlgebraContext make_algebra_context(const MeetSemilattice& l,
                                    const BuildingSet& g);

struct AlgebraPresentation {
  AlgebraContext ctx;
  std::vector<Mono> monomial_relations;      // minimal non-nested supports
  std::vector<Poly> linear_relations;        // one per atom of L
  std::vector<std::string> atom_labels;      // aligned with linear_relations
};

AlgebraPresentation algebra_presentation(const MeetSemilattice& l,
                                         const BuildingSet& g);

// Minimal number of atoms whose join with A gives B (BFS over atom joins);
// A = bottom allowed.
int join_distance(const MeetSemilattice& l, int a, int b);

struct GroebnerBasis {
  AlgebraContext ctx;
  std::vector<Poly> members;  // monic, deduplicated, in term order of LT
  std::string order_descriptor;
};

// The two stated families: (i) products over minimal non-nested sets;
// (ii) for each nested antichain T (including empty) and B in G strictly
// above join(T): prod x_T * (sum_{G >= B} x_G)^d(join(T),B).
GroebnerBasis groebner_basis(const MeetSemilattice& l, const BuildingSet& g);

// Remainder of multivariate division by the basis; deterministic.
Poly normal_form(Poly p, const GroebnerBasis& gb);

// True iff every S-polynomial reduces to zero (full pairwise check).
struct BuchbergerReport {
  bool ok = true;
  int pair_i = -1, pair_j = -1;  // witness pair on failure
  std::string remainder;
};
BuchbergerReport buchberger_check(const GroebnerBasis& gb);

// Monomial basis per the nested-support rule: support S nested and, for each
// A in S, 1 <= m(A) < d(A', A) with A' = join(S ∩ L_{<A}).
struct MonomialBasis {
  AlgebraContext ctx;
  std::vector<std::vector<Mono>> by_degree;  // [d] = monomials of degree d
};
MonomialBasis monomial_basis(const MeetSemilattice& l, const BuildingSet& g);

// Degree-indexed dimension counts; computed from the monomial basis and
// cross-validated against the count of normal-form-irreducible monomials per
// degree (the two routes must agree; mismatch is a hard error).
std::vector<Int> hilbert_series(const MeetSemilattice& l, const BuildingSet& g);

}  // namespace wonder
