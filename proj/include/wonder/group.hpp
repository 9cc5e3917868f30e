#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wonder/arrangement.hpp"
#include "wonder/linalg.hpp"

namespace wonder {

// Permutation of {1..n}, stored as images: img[i] = gamma(i+1)-1 (0-based).
// Action on Q^n: (gamma v)_i = v_{gamma^{-1}(i)}, i.e. coordinates move
// with the points.
struct Perm {
  std::vector<int> img;
  int n() const { return static_cast<int>(img.size()); }
  bool operator==(const Perm& o) const { return img == o.img; }
  bool operator<(const Perm& o) const { return img < o.img; }
};

Perm perm_identity(int n);
Perm perm_compose(const Perm& a, const Perm& b);  // (a*b)(x) = a(b(x))
Perm perm_inverse(const Perm& a);
std::vector<Rat> perm_apply(const Perm& a, const std::vector<Rat>& v);
std::string perm_to_cycles(const Perm& a);

// Parses cycle notation like "(1 2)(3 4)" / "(1,2,3)"; "e", "()" and ""
// denote the identity. Throws BadCycle on malformed input.
Perm parse_cycles(const std::string& text, int n);

struct PermGroup {
  int n = 0;
  std::vector<Perm> elements;  // sorted, closed, contains identity
  std::vector<Perm> generators;
};

// Closure of the generators; throws OrderCapExceeded past 10^4 elements.
PermGroup perm_group(int n, const std::vector<Perm>& generators);
PermGroup symmetric_group(int n);

// All subgroups via cyclic extension, deduplicated, sorted by order then by
// element list.
std::vector<PermGroup> subgroups(const PermGroup& g);

bool is_elementary_abelian_2(const PermGroup& g);

// L(H): span of the eigenspaces { v : h v = chi(h) v for all h in H } over
// all sign characters chi: H -> {±1}.
QSubspace invariant_line_span(const PermGroup& h, int n);

struct ActionSubspace {
  QSubspace space;
  std::vector<std::string> witnesses;  // generator strings of subgroups H
};

struct ActionArrangement {
  int ambient = 0;
  std::vector<ActionSubspace> all;        // deduplicated proper L(H)
  QSubspaceArrangement maximal;           // inclusion-maximal members
};

ActionArrangement action_arrangement(const PermGroup& g);

// Elements of G fixing x and each line setwise (gamma l = ±l).
PermGroup stabilizer(const PermGroup& g, const std::vector<Rat>& x,
                     const std::vector<std::vector<Rat>>& lines);

struct AuditStratum {
  std::vector<std::string> chain;   // lattice labels, largest first
  bool sample_ok = false;
  bool sampling_exhausted = false;
  std::vector<Rat> x;
  std::vector<std::vector<Rat>> lines;
  std::vector<std::string> stabilizer_elements;
  bool elementary_abelian_2 = false;
};

struct AuditReport {
  int strata = 0;
  int sampled = 0;
  int exhausted = 0;
  bool all_elementary_abelian_2 = true;
  std::vector<AuditStratum> rows;
};

// For each chain in the intersection lattice of the inclusion-maximal action
// arrangement restricted to Fix(G)^perp: sample a model point whose encoding
// realises the chain (terminal), compute its stabilizer, test elementary
// abelian 2. Deterministic given seed.
AuditReport abelianization_audit(const PermGroup& g, int samples,
                                 unsigned long long seed);

}  // namespace wonder
