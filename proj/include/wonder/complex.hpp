#pragma once

#include <set>
#include <string>
#include <vector>

#include "wonder/poset.hpp"
#include "wonder/util.hpp"

namespace wonder {

// Abstract simplicial complex on labeled vertices. Faces are stored
// explicitly (sorted index vectors) and always include the empty face.
struct SimplicialComplex {
  std::vector<std::string> vertices;
  std::set<std::vector<int>> faces;  // downward closed; contains {}

  int vertex_count() const { return (int)vertices.size(); }
  bool has_face(const std::vector<int>& f) const { return faces.count(f) > 0; }
  int dim() const;                       // -1 for the void-less empty complex
  std::vector<int> f_vector() const;     // f[k] = number of k-dim faces, k>=0
  std::vector<std::vector<int>> facets() const;  // inclusion-maximal faces
  Int reduced_euler_characteristic() const;      // includes the empty face
};

// Build from an explicit face family (closure taken; indices sorted).
SimplicialComplex make_complex(const std::vector<std::string>& vertices,
                               const std::vector<std::vector<int>>& faces);

// Order complex: faces are the chains of p (all of them; the caller strips
// bottom/top as desired before calling).
SimplicialComplex order_complex(const Poset& p);

// Stellar subdivision at a nonempty face F: faces containing F are removed
// and replaced by {A ∪ {v}} for faces A with F ⊄ A and A ∪ F a face.
SimplicialComplex stellar_subdivision(const SimplicialComplex& k,
                                      const std::vector<int>& f,
                                      const std::string& v_new);

// Faces ordered by inclusion; empty face is 0̂; meets are intersections.
// Face labels are vertex labels joined by ","; the empty face is "0".
MeetSemilattice face_poset(const SimplicialComplex& k);

// Delete one vertex (and every face using it), preserving other labels.
SimplicialComplex delete_vertex(const SimplicialComplex& k, int v);

}  // namespace wonder
