#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "wonder/complex.hpp"
#include "wonder/poset.hpp"

using namespace wonder;

namespace {

SimplicialComplex full_triangle() {
  return make_complex({"a", "b", "c"}, {{0, 1, 2}});
}

SimplicialComplex triangle_boundary() {
  return make_complex({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
}

}  // namespace

TEST_CASE("make_complex takes downward closure") {
  auto k = full_triangle();
  CHECK(k.faces.size() == 8);  // empty face included
  CHECK(k.has_face({}));
  CHECK(k.has_face({0, 1}));
  CHECK(k.has_face({0, 1, 2}));
  CHECK(k.dim() == 2);
  CHECK(k.f_vector() == std::vector<int>{3, 3, 1});
  // Unsorted/duplicated input vertices are normalized.
  auto k2 = make_complex({"a", "b", "c"}, {{2, 0, 1, 1}});
  CHECK(k2.faces == k.faces);
}

TEST_CASE("make_complex validations") {
  expect_err(Err::VertexClash, [] { make_complex({"a", "a"}, {}); });
  expect_err(Err::ElementOutOfRange, [] { make_complex({"a"}, {{0, 1}}); });
}

TEST_CASE("empty complex") {
  auto k = make_complex({"a", "b"}, {});
  CHECK(k.faces.size() == 1);
  CHECK(k.dim() == -1);
  CHECK(k.f_vector().empty());
  CHECK(k.reduced_euler_characteristic() == Int(-1));
}

TEST_CASE("facets") {
  auto k = triangle_boundary();
  auto fs = k.facets();
  CHECK(fs.size() == 3);
  for (auto& f : fs) CHECK(f.size() == 2);
  auto k2 = full_triangle();
  CHECK(k2.facets() == std::vector<std::vector<int>>{{0, 1, 2}});
}

TEST_CASE("reduced euler characteristic distinguishes sphere and disk") {
  CHECK(full_triangle().reduced_euler_characteristic() == Int(0));
  CHECK(triangle_boundary().reduced_euler_characteristic() == Int(-1));
  // Boundary of the 3-simplex is a 2-sphere.
  auto s2 = make_complex({"a", "b", "c", "d"},
                         {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  CHECK(s2.f_vector() == std::vector<int>{4, 6, 4});
  CHECK(s2.reduced_euler_characteristic() == Int(1));
}

TEST_CASE("order complex of a chain is a simplex") {
  auto c3 = build_poset({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}});
  auto k = order_complex(c3);
  CHECK(k.faces.size() == 8);
  CHECK(k.has_face({0, 1, 2}));
}

TEST_CASE("order complex of the diamond") {
  auto d = build_poset({"o", "a", "b", "i"},
                       {{"o", "a"}, {"o", "b"}, {"a", "i"}, {"b", "i"}});
  auto k = order_complex(d);
  // Chains: 4 singletons, 5 two-element chains, 2 three-element chains.
  CHECK(k.f_vector() == std::vector<int>{4, 5, 2});
  CHECK(!k.has_face({d.at("a"), d.at("b")}));
  CHECK(k.reduced_euler_characteristic() == Int(0));  // cone over "o"
}

TEST_CASE("stellar subdivision of an edge") {
  auto k = stellar_subdivision(full_triangle(), {0, 1}, "m");
  CHECK(k.vertices == std::vector<std::string>{"a", "b", "c", "m"});
  CHECK(!k.has_face({0, 1}));
  CHECK(k.has_face({0, 3}));
  CHECK(k.has_face({1, 3}));
  auto fs = k.facets();
  std::vector<std::vector<int>> want = {{0, 2, 3}, {1, 2, 3}};
  CHECK(fs == want);
  CHECK(k.f_vector() == std::vector<int>{4, 5, 2});
  CHECK(k.reduced_euler_characteristic() == Int(0));
}

TEST_CASE("stellar subdivision of a vertex replaces it") {
  auto k = stellar_subdivision(full_triangle(), {0}, "m");
  // Every face through the old vertex is gone; its link is coned to "m".
  for (auto& f : k.faces) CHECK(!std::binary_search(f.begin(), f.end(), 0));
  CHECK(k.facets() == std::vector<std::vector<int>>{{1, 2, 3}});
}

TEST_CASE("stellar subdivision validations") {
  expect_err(Err::NotAFace,
             [] { stellar_subdivision(triangle_boundary(), {0, 1, 2}, "m"); });
  expect_err(Err::NotAFace,
             [] { stellar_subdivision(full_triangle(), {}, "m"); });
  expect_err(Err::VertexClash,
             [] { stellar_subdivision(full_triangle(), {0, 1}, "c"); });
}

TEST_CASE("face poset of a simplex is boolean") {
  auto fp = face_poset(full_triangle());
  CHECK(fp.n() == 8);
  auto b3 = standard_lattice("boolean", 3);
  CHECK(poset_isomorphic(fp.p, b3.p).has_value());
  CHECK(fp.label(fp.bottom) == "0");
  CHECK(fp.meet(fp.at("a,b"), fp.at("b,c")) == fp.at("b"));
  CHECK(fp.join2(fp.at("a"), fp.at("c")) == fp.at("a,c"));
  // The boundary complex has no top face.
  auto bd = face_poset(triangle_boundary());
  CHECK(bd.n() == 7);
  CHECK(!bd.top.has_value());
}

TEST_CASE("delete vertex") {
  auto k = delete_vertex(full_triangle(), 1);
  CHECK(k.vertices == std::vector<std::string>{"a", "c"});
  CHECK(k.faces.size() == 4);
  CHECK(k.has_face({0, 1}));
  expect_err(Err::ElementOutOfRange,
             [] { delete_vertex(full_triangle(), 3); });
}
