#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "wonder/util.hpp"

namespace wonder {

// Finite poset over opaque string labels. Order is stored densely (bit rows),
// covers are recomputed from the closure so serialized output is normalized.
struct Poset {
  std::vector<std::string> labels;
  std::unordered_map<std::string, int> index;
  std::vector<Bits> below;  // below[a] = {x : x <= a}, includes a
  std::vector<Bits> above;  // above[a] = {x : x >= a}, includes a
  std::vector<std::vector<int>> cov_up;    // b in cov_up[a] iff b covers a
  std::vector<std::vector<int>> cov_down;  // inverse cover lists
  std::vector<int> topo;       // indices in one linear extension
  std::vector<int> topo_rank;  // position of each index in `topo`

  int n() const { return (int)labels.size(); }
  bool leq(int a, int b) const { return below[b].test(a); }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  int at(const std::string& label) const;  // ElementOutOfRange on miss
  std::vector<std::pair<std::string, std::string>> cover_pairs() const;
  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;
  // Longest-chain rank from the minimal elements (0 for minimal elements).
  std::vector<int> ranks() const;
};

// Validates transitivity/antisymmetry by construction: builds the
// reflexive-transitive closure of `relations` (arbitrary "lower <= upper"
// pairs, not necessarily covers) and rejects cycles and duplicate labels.
Poset build_poset(const std::vector<std::string>& labels,
                  const std::vector<std::pair<std::string, std::string>>& relations);

// Meet-semilattice: a poset with a unique minimum where every pair has a
// unique greatest lower bound. Meets are verified exhaustively at build time.
struct MeetSemilattice {
  Poset p;
  int bottom = -1;
  std::optional<int> top;
  std::vector<int> atoms;  // minimal elements of L_{>0̂}, in index order

  int n() const { return p.n(); }
  const std::string& label(int i) const { return p.labels[i]; }
  int at(const std::string& l) const { return p.at(l); }
  bool leq(int a, int b) const { return p.leq(a, b); }
  bool lt(int a, int b) const { return p.lt(a, b); }

  int meet(int a, int b) const;
  // Least upper bound of a set (meet of all common upper bounds); empty set
  // gives bottom. Returns -1 when there is no common upper bound.
  int join(const std::vector<int>& xs) const;
  int join2(int a, int b) const { return join(std::vector<int>{a, b}); }

 private:
  friend MeetSemilattice make_semilattice(Poset p);
  std::vector<uint16_t> meet_table_;  // dense when n <= kMeetTableCap
  static constexpr int kMeetTableCap = 4096;
  int meet_scan(int a, int b) const;
};

MeetSemilattice build_semilattice(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& relations);
MeetSemilattice make_semilattice(Poset p);  // validates an existing poset

// Induced subposet on {x : a <= x <= b}; labels preserved.
Poset interval(const Poset& p, int a, int b);
inline Poset interval(const MeetSemilattice& l, int a, int b) {
  return interval(l.p, a, b);
}

// Componentwise order on tuples; labels are "(l1,l2,...)".
Poset direct_product(const std::vector<Poset>& factors);

// Deterministic backtracking search for an order isomorphism extending
// `pinned` (pairs of element indices, P -> Q). Empty result = none exists.
std::optional<std::vector<int>> poset_isomorphic(
    const Poset& p, const Poset& q,
    const std::vector<std::pair<int, int>>& pinned = {});

// mu(0̂, 1̂) by the standard recursion; requires a top element.
Int mobius(const MeetSemilattice& l);

// Poset on a subset of elements (induced order), preserving labels.
Poset induced_subposet(const Poset& p, const std::vector<int>& keep);

// Standard fixtures. partition: Π_n under reversed refinement, labels like
// "12|34" (nontrivial blocks, digits ascending; all-singletons = "0").
// boolean: subsets of {a,b,c,...}; empty set = "0".
MeetSemilattice standard_lattice(const std::string& kind, int n);

// Partition-lattice label helpers shared with the arrangements module.
std::string partition_label(const std::vector<std::vector<int>>& blocks);
int partition_block_count(const std::string& label, int n);

}  // namespace wonder
