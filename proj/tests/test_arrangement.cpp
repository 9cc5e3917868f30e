#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "wonder/arrangement.hpp"
#include "wonder/building.hpp"
#include "wonder/linalg.hpp"
#include "wonder/poset.hpp"

using namespace wonder;

namespace {

std::vector<Rat> vec(const std::vector<int>& xs) {
  std::vector<Rat> out;
  for (int x : xs) out.emplace_back(x);
  return out;
}

std::vector<std::vector<Rat>> rows(const std::vector<std::vector<int>>& xs) {
  std::vector<std::vector<Rat>> out;
  for (auto& x : xs) out.push_back(vec(x));
  return out;
}

// Three subspaces of Q^4: a hyperplane and two planes meeting in a line.
QSubspaceArrangement mixed_arrangement() {
  QSubspaceArrangement arr;
  arr.ambient = 4;
  arr.subspaces.push_back(
      subspace_from_equations(4, rows({{0, 0, 0, 1}})));
  arr.subspaces.push_back(
      subspace_from_equations(4, rows({{1, 0, 0, 0}, {0, 1, 0, 0}})));
  arr.subspaces.push_back(
      subspace_from_equations(4, rows({{1, 0, 0, 0}, {0, 0, 1, 0}})));
  return arr;
}

std::multiset<int> codim_multiset(const IntersectionLattice& il) {
  return std::multiset<int>(il.codim.begin(), il.codim.end());
}

}  // namespace

TEST_CASE("braid arrangement lattices are partition lattices") {
  for (int n : {3, 4, 5}) {
    CAPTURE(n);
    auto il = intersection_lattice(braid_arrangement(n));
    auto pn = standard_lattice("partition", n);
    REQUIRE(il.l.n() == pn.n());
    // Same labels, same order, codimension = n minus the block count.
    for (int i = 0; i < pn.n(); ++i) {
      const std::string& lab = pn.label(i);
      int idx = il.l.at(lab);
      CHECK(il.codim[idx] == n - partition_block_count(lab, n));
      for (int j = 0; j < pn.n(); ++j)
        CHECK(pn.leq(i, j) == il.l.leq(idx, il.l.at(pn.label(j))));
    }
    CHECK(il.codim[il.l.bottom] == 0);
    CHECK(il.subspace[il.l.bottom] == ambient_space(n));
  }
  CHECK(mobius(intersection_lattice(braid_arrangement(3)).l) == Int(2));
  CHECK(mobius(intersection_lattice(braid_arrangement(4)).l) == Int(-6));
  CHECK(mobius(intersection_lattice(braid_arrangement(5)).l) == Int(24));
}

TEST_CASE("braid arrangement bounds") {
  expect_err(Err::TooLarge, [] { braid_arrangement(8); });
  expect_err(Err::TooLarge, [] { braid_arrangement(1); });
  auto il2 = intersection_lattice(braid_arrangement(2));
  CHECK(il2.l.n() == 2);
  CHECK(il2.codim == std::vector<int>{0, 1});
}

TEST_CASE("arrangement validation") {
  QSubspaceArrangement arr;
  arr.ambient = 3;
  arr.subspaces.push_back(ambient_space(3));
  expect_err(Err::BadInput, [&] { intersection_lattice(arr); });
  QSubspaceArrangement arr2;
  arr2.ambient = 3;
  arr2.subspaces.push_back(subspace_from_equations(2, rows({{1, -1}})));
  expect_err(Err::DimensionMismatch, [&] { intersection_lattice(arr2); });
  // Duplicate members collapse.
  auto b3 = braid_arrangement(3);
  b3.subspaces.push_back(b3.subspaces[0]);
  CHECK(intersection_lattice(b3).l.n() == 5);
}

TEST_CASE("non-braid flats get positional labels") {
  auto il = intersection_lattice(mixed_arrangement());
  CHECK(il.l.n() == 8);
  // Boolean shape: three independent-ish members, closure adds four flats.
  auto b3 = standard_lattice("boolean", 3);
  CHECK(poset_isomorphic(il.l.p, b3.p).has_value());
  // Codimensions do NOT add everywhere: the two planes share a line.
  CHECK(codim_multiset(il) == std::multiset<int>{0, 1, 2, 2, 3, 3, 3, 4});
  CHECK(il.l.label(il.l.bottom) == "0");
  for (int i = 0; i < il.l.n(); ++i)
    if (i != il.l.bottom) CHECK(il.l.label(i)[0] == 'S');
}

TEST_CASE("combinatorial but not geometric building set") {
  auto il = intersection_lattice(mixed_arrangement());
  auto chk = is_geometric_building_set(il, il.l.atoms);
  CHECK(chk.combinatorial);
  CHECK(!chk.ok);
  // Witness: the join of the two planes has codim 3, the factor sum is 4.
  CHECK(chk.witness_cd == 3);
  CHECK(chk.witness_sum == 4);
  int u = il.l.at("S2"), v = il.l.at("S3");
  CHECK(chk.witness == il.l.join2(u, v));
}

TEST_CASE("geometric building sets on the braid arrangement") {
  auto il = intersection_lattice(braid_arrangement(4));
  // The full carrier is geometric: every factor decomposition is trivial.
  std::vector<int> full;
  for (int x = 0; x < il.l.n(); ++x)
    if (x != il.l.bottom) full.push_back(x);
  auto chk = is_geometric_building_set(il, full);
  CHECK(chk.combinatorial);
  CHECK(chk.ok);
  // The minimal building set of the braid lattice is geometric too:
  // the factors of a 2|2 partition are transversal inside it.
  auto gmin = minimal_building_set(il.l);
  auto chk2 = is_geometric_building_set(il, gmin.carrier);
  CHECK(chk2.combinatorial);
  CHECK(chk2.ok);
  // Atoms alone are not even combinatorial here.
  auto chk3 = is_geometric_building_set(il, il.l.atoms);
  CHECK(!chk3.combinatorial);
  CHECK(!chk3.ok);
}

TEST_CASE("restriction to the zero-sum hyperplane") {
  auto arr = restrict_to_sum_zero(braid_arrangement(3));
  CHECK(arr.subspaces.size() == 3);
  for (auto& s : arr.subspaces) CHECK(s.dim() == 1);
  auto il = intersection_lattice(arr);
  CHECK(il.l.n() == 5);
  auto p3 = standard_lattice("partition", 3);
  CHECK(poset_isomorphic(il.l.p, p3.p).has_value());
  CHECK(codim_multiset(il) == std::multiset<int>{0, 2, 2, 2, 3});
  for (int i = 0; i < il.l.n(); ++i)
    if (i != il.l.bottom) CHECK(il.l.label(i)[0] == 'S');
}

TEST_CASE("truncation keeps maximal deep flats") {
  auto il = intersection_lattice(braid_arrangement(4));
  auto t2 = truncate(il, 2);
  CHECK(t2.subspaces.size() == 7);  // the two-block partitions
  for (auto& s : t2.subspaces) CHECK(s.codim() == 2);
  auto t3 = truncate(il, 3);
  REQUIRE(t3.subspaces.size() == 1);
  CHECK(t3.subspaces[0] ==
        subspace_from_span(4, rows({{1, 1, 1, 1}})));
  auto t9 = truncate(il, 9);
  CHECK(t9.subspaces.empty());
}

TEST_CASE("model point encoding: terminal chains") {
  auto il = intersection_lattice(braid_arrangement(3));
  auto p = encode_model_point(il, vec({0, 0, 0}), rows({{1, -1, 0}}));
  REQUIRE(p.chain.size() == 1);
  CHECK(il.l.label(p.chain[0]) == "123");
  CHECK(p.lines.size() == 1);

  auto p2 = encode_model_point(il, vec({0, 0, 0}),
                               rows({{1, 1, -2}, {1, -1, 0}}));
  REQUIRE(p2.chain.size() == 2);
  CHECK(il.l.label(p2.chain[0]) == "123");
  CHECK(il.l.label(p2.chain[1]) == "12");
  CHECK(classify_stratum(il, p2) == p2.chain);

  // A generic point has an empty chain and needs no directions.
  auto p3 = encode_model_point(il, vec({1, 2, 4}), {});
  CHECK(p3.chain.empty());
  CHECK(p3.lines.empty());
}

TEST_CASE("model point encoding: rejections") {
  auto il3 = intersection_lattice(braid_arrangement(3));
  auto il4 = intersection_lattice(braid_arrangement(4));

  // The last direction must leave every flat.
  auto w = expect_err(Err::NotTerminal, [&] {
    encode_model_point(il4, vec({0, 0, 0, 0}), rows({{1, -1, 0, 0}}));
  });
  CHECK(w == "34");

  // Directions must be orthogonal to the current chain element.
  auto w2 = expect_err(Err::LineNotOrthogonal, [&] {
    encode_model_point(il3, vec({0, 0, 0}), rows({{1, 0, 0}}));
  });
  CHECK(w2 == "1");

  // A special point with no directions is not terminal.
  auto w3 = expect_err(Err::NotTerminal, [&] {
    encode_model_point(il3, vec({1, 1, 0}), {});
  });
  CHECK(w3 == "12");

  // Too many directions: the chain bottomed out early.
  expect_err(Err::TooManyLines, [&] {
    encode_model_point(il3, vec({0, 0, 0}),
                       rows({{1, -1, 0}, {0, 0, 1}}));
  });
  // Generic points take no directions at all.
  expect_err(Err::TooManyLines, [&] {
    encode_model_point(il3, vec({1, 2, 4}), rows({{1, -1, 0}}));
  });

  expect_err(Err::BadInput, [&] {
    encode_model_point(il3, vec({0, 0, 0}), rows({{0, 0, 0}}));
  });
  expect_err(Err::DimensionMismatch, [&] {
    encode_model_point(il3, vec({0, 0, 0, 0}), {});
  });
  expect_err(Err::DimensionMismatch, [&] {
    encode_model_point(il3, vec({0, 0, 0}), rows({{1, -1}}));
  });
}
