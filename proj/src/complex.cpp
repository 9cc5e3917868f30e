#include "wonder/complex.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <map>

namespace wonder {

int SimplicialComplex::dim() const {
  int d = -1;
  for (auto& f : faces) d = std::max(d, (int)f.size() - 1);
  return d;
}

std::vector<int> SimplicialComplex::f_vector() const {
  int d = dim();
  std::vector<int> f(std::max(0, d + 1), 0);
  for (auto& fc : faces)
    if (!fc.empty()) f[fc.size() - 1] += 1;
  return f;
}

std::vector<std::vector<int>> SimplicialComplex::facets() const {
  std::vector<std::vector<int>> out;
  for (auto& f : faces) {
    bool maximal = true;
    for (auto& g : faces) {
      if (g.size() <= f.size()) continue;
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

Int SimplicialComplex::reduced_euler_characteristic() const {
  // Sum over all faces (empty face included) of (-1)^(dim) = (-1)^(|f|-1).
  Int chi = 0;
  for (auto& f : faces) chi += (f.size() % 2 == 0) ? Int(-1) : Int(1);
  return chi;
}

SimplicialComplex make_complex(const std::vector<std::string>& vertices,
                               const std::vector<std::vector<int>>& faces) {
  SimplicialComplex k;
  k.vertices = vertices;
  {
    auto sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      fail(Err::VertexClash, "duplicate vertex label");
  }
  k.faces.insert(std::vector<int>{});
  for (auto f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (v < 0 || v >= (int)vertices.size())
        fail(Err::ElementOutOfRange, "face vertex out of range");
    // Downward closure via subset masks (faces are small).
    int m = (int)f.size();
    if (m > 25) fail(Err::TooLarge, "face too large");
    for (int s = 0; s < (1 << m); ++s) {
      std::vector<int> sub;
      for (int i = 0; i < m; ++i)
        if (s & (1 << i)) sub.push_back(f[i]);
      k.faces.insert(sub);
    }
  }
  return k;
}

SimplicialComplex order_complex(const Poset& p) {
  // Chains, generated depth-first along the topological order so each chain
  // only ever extends forward.
  std::vector<std::vector<int>> chains;
  std::vector<int> cur;
  std::function<void(size_t)> grow = [&](size_t start) {
    for (size_t k = start; k < p.topo.size(); ++k) {
      int x = p.topo[k];
      if (!cur.empty() && !p.lt(cur.back(), x)) continue;
      cur.push_back(x);
      chains.push_back(cur);
      grow(k + 1);
      cur.pop_back();
    }
  };
  grow(0);
  // Vertices keep p's element order; chain entries sorted by element index.
  for (auto& c : chains) std::sort(c.begin(), c.end());
  return make_complex(p.labels, chains);
}

SimplicialComplex stellar_subdivision(const SimplicialComplex& k,
                                      const std::vector<int>& f,
                                      const std::string& v_new) {
  auto fs = f;
  std::sort(fs.begin(), fs.end());
  if (fs.empty() || !k.has_face(fs))
    fail(Err::NotAFace, "subdivision center is not a nonempty face");
  for (auto& v : k.vertices)
    if (v == v_new)
      fail(Err::VertexClash, "new vertex label '" + v_new + "' already used",
           v_new);
  SimplicialComplex out;
  out.vertices = k.vertices;
  out.vertices.push_back(v_new);
  int nv = (int)out.vertices.size() - 1;
  auto contains = [&](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(a.begin(), a.end(), b.begin(), b.end());
  };
  for (auto& a : k.faces) {
    if (contains(a, fs)) continue;  // faces over F are removed
    out.faces.insert(a);
    // union a ∪ f
    std::vector<int> u;
    std::set_union(a.begin(), a.end(), fs.begin(), fs.end(),
                   std::back_inserter(u));
    if (k.faces.count(u)) {
      auto b = a;
      b.push_back(nv);
      std::sort(b.begin(), b.end());
      out.faces.insert(b);
    }
  }
  return out;
}

MeetSemilattice face_poset(const SimplicialComplex& k) {
  std::vector<std::string> labels;
  std::map<std::vector<int>, std::string> name;
  for (auto& f : k.faces) {
    std::vector<std::string> parts;
    for (int v : f) parts.push_back(k.vertices[v]);
    std::string lab = f.empty() ? "0" : join_labels(parts, ",");
    name[f] = lab;
    labels.push_back(lab);
  }
  std::vector<std::pair<std::string, std::string>> rels;
  for (auto& a : k.faces)
    for (auto& b : k.faces)
      if (a != b && std::includes(b.begin(), b.end(), a.begin(), a.end()))
        rels.emplace_back(name[a], name[b]);
  return build_semilattice(labels, rels);
}

SimplicialComplex delete_vertex(const SimplicialComplex& k, int v) {
  if (v < 0 || v >= k.vertex_count())
    fail(Err::ElementOutOfRange, "vertex out of range");
  SimplicialComplex out;
  for (int i = 0; i < k.vertex_count(); ++i)
    if (i != v) out.vertices.push_back(k.vertices[i]);
  auto renum = [&](int i) { return i < v ? i : i - 1; };
  for (auto& f : k.faces) {
    if (std::binary_search(f.begin(), f.end(), v)) continue;
    std::vector<int> g;
    for (int i : f) g.push_back(renum(i));
    out.faces.insert(g);
  }
  return out;
}

}  // namespace wonder
