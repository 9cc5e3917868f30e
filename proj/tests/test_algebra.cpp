#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "wonder/algebra.hpp"
#include "wonder/building.hpp"
#include "wonder/poset.hpp"

using namespace wonder;

namespace {

BuildingSet full_building(const MeetSemilattice& l) {
  std::vector<int> car;
  for (int x = 0; x < l.n(); ++x)
    if (x != l.bottom) car.push_back(x);
  auto chk = is_building_set(l, car);
  REQUIRE(chk.ok);
  return *chk.building;
}

BuildingSet atoms_building(const MeetSemilattice& l) {
  auto chk = is_building_set(l, l.atoms);
  REQUIRE(chk.ok);
  return *chk.building;
}

Poly var_poly(const AlgebraContext& ctx, const std::string& label, int e = 1) {
  Mono m(ctx.vars.size(), 0);
  auto it = std::find(ctx.var_labels.begin(), ctx.var_labels.end(), label);
  REQUIRE(it != ctx.var_labels.end());
  m[it - ctx.var_labels.begin()] = e;
  Poly p;
  p[m] = 1;
  return p;
}

}  // namespace

TEST_CASE("term order: degree first, then variable 0 most significant") {
  CHECK(mono_less({0, 0}, {1, 0}));
  CHECK(mono_less({1, 1}, {3, 0}));
  CHECK(mono_less({0, 1}, {1, 0}));   // x0 beats x1 at equal degree
  CHECK(mono_less({1, 0, 1}, {1, 1, 0}));
  CHECK(!mono_less({1, 0}, {1, 0}));
  CHECK(mono_degree({2, 0, 3}) == 5);
  CHECK(mono_divides({1, 0}, {2, 1}));
  CHECK(!mono_divides({1, 2}, {2, 1}));
}

TEST_CASE("polynomial arithmetic and printing") {
  std::vector<std::string> vars = {"a", "b"};
  Poly x;  // x_a
  x[{1, 0}] = 1;
  Poly y;  // x_b
  y[{0, 1}] = 1;
  Poly c2;  // constant 2
  c2[{0, 0}] = 2;

  auto xy = poly_mul(x, y);
  CHECK(poly_to_string(xy, vars) == "x[a]*x[b]");
  auto sq = poly_pow(poly_sub(x, y), 2);  // x^2 - 2xy + y^2
  CHECK(poly_to_string(sq, vars) == "x[a]^2 - 2*x[a]*x[b] + x[b]^2");
  CHECK(poly_to_string(poly_sub(Poly(), x), vars) == "-x[a]");
  CHECK(poly_to_string(Poly(), vars) == "0");
  CHECK(poly_to_string(c2, vars) == "2");
  CHECK(poly_to_string(poly_pow(x, 0), vars) == "1");
  // (x - y)(x + y) = x^2 - y^2
  auto sum = poly_sub(x, poly_sub(Poly(), y));
  CHECK(poly_to_string(poly_mul(poly_sub(x, y), sum), vars) ==
        "x[a]^2 - x[b]^2");
  // cancellation inside products
  CHECK(poly_mul(poly_sub(x, x), y).empty());
}

TEST_CASE("algebra context orders variables by rank, then label") {
  auto l4 = standard_lattice("partition", 4);
  auto ctx = make_algebra_context(l4, minimal_building_set(l4));
  CHECK(ctx.var_labels ==
        std::vector<std::string>{"12", "13", "14", "23", "24", "34", "123",
                                 "124", "134", "234", "1234"});
  for (size_t v = 0; v < ctx.vars.size(); ++v)
    CHECK(ctx.var_of_element[ctx.vars[v]] == (int)v);
}

TEST_CASE("atomicity is required") {
  auto chain = build_semilattice({"0", "a", "b"}, {{"0", "a"}, {"a", "b"}});
  auto chk = is_building_set(chain, {chain.at("a"), chain.at("b")});
  REQUIRE(chk.ok);
  auto w = expect_err(Err::NotAtomic,
                      [&] { algebra_presentation(chain, *chk.building); });
  CHECK(w == "b");
}

TEST_CASE("join distance") {
  auto l4 = standard_lattice("partition", 4);
  CHECK(join_distance(l4, l4.bottom, l4.at("12")) == 1);
  CHECK(join_distance(l4, l4.bottom, l4.at("123")) == 2);
  CHECK(join_distance(l4, l4.bottom, l4.at("12|34")) == 2);
  CHECK(join_distance(l4, l4.bottom, l4.at("1234")) == 3);
  CHECK(join_distance(l4, l4.at("12"), l4.at("123")) == 1);
  CHECK(join_distance(l4, l4.at("12"), l4.at("1234")) == 2);
  CHECK(join_distance(l4, l4.at("12"), l4.at("12")) == 0);
  expect_err(Err::NotComparable,
             [&] { join_distance(l4, l4.at("12"), l4.at("34")); });
  // Unreachable targets exist only in non-atomic lattices.
  auto chain = build_semilattice({"0", "a", "b"}, {{"0", "a"}, {"a", "b"}});
  auto w = expect_err(Err::NotReachable, [&] {
    join_distance(chain, chain.bottom, chain.at("b"));
  });
  CHECK(w == "0,b");
}

TEST_CASE("presentation of the small partition lattice") {
  auto l3 = standard_lattice("partition", 3);
  auto pres = algebra_presentation(l3, full_building(l3));
  CHECK(pres.ctx.var_labels ==
        std::vector<std::string>{"12", "13", "23", "123"});
  // Minimal non-nested sets are the three atom pairs, highest lead first.
  std::vector<Mono> want = {{1, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 1, 0}};
  CHECK(pres.monomial_relations == want);
  REQUIRE(pres.linear_relations.size() == 3);
  CHECK(pres.atom_labels == std::vector<std::string>{"12", "13", "23"});
  CHECK(poly_to_string(pres.linear_relations[0], pres.ctx.var_labels) ==
        "x[12] + x[123]");
  CHECK(poly_to_string(pres.linear_relations[1], pres.ctx.var_labels) ==
        "x[13] + x[123]");
}

TEST_CASE("presentation sizes for the partition lattice on four elements") {
  auto l4 = standard_lattice("partition", 4);
  auto gmin = minimal_building_set(l4);
  auto pres = algebra_presentation(l4, gmin);
  // 12 intersecting atom pairs + 12 atom/triple pairs + 6 triple pairs.
  CHECK(pres.monomial_relations.size() == 30);
  for (auto& m : pres.monomial_relations) CHECK(mono_degree(m) == 2);
  CHECK(pres.linear_relations.size() == 6);
  std::set<std::string> atoms(pres.atom_labels.begin(),
                              pres.atom_labels.end());
  CHECK(atoms ==
        std::set<std::string>{"12", "13", "14", "23", "24", "34"});
  // The linear relation of an atom sums the carrier elements above it.
  for (size_t i = 0; i < pres.linear_relations.size(); ++i) {
    int h = l4.at(pres.atom_labels[i]);
    Poly expect;
    for (size_t v = 0; v < pres.ctx.vars.size(); ++v)
      if (l4.leq(h, pres.ctx.vars[v])) {
        Mono m(pres.ctx.vars.size(), 0);
        m[v] = 1;
        expect[m] = 1;
      }
    CHECK(pres.linear_relations[i] == expect);
  }
}

TEST_CASE("groebner bases: frozen sizes and zero S-polynomial reduction") {
  auto l3 = standard_lattice("partition", 3);
  auto l4 = standard_lattice("partition", 4);
  auto b2 = standard_lattice("boolean", 2);
  auto b3 = standard_lattice("boolean", 3);

  auto gb_p3 = groebner_basis(l3, full_building(l3));
  CHECK(gb_p3.members.size() == 10);
  CHECK(buchberger_check(gb_p3).ok);

  auto gb_p4min = groebner_basis(l4, minimal_building_set(l4));
  CHECK(gb_p4min.members.size() == 66);
  CHECK(buchberger_check(gb_p4min).ok);

  auto gb_p4max = groebner_basis(l4, full_building(l4));
  CHECK(gb_p4max.members.size() == 105);
  CHECK(buchberger_check(gb_p4max).ok);

  auto gb_b2 = groebner_basis(b2, atoms_building(b2));
  REQUIRE(gb_b2.members.size() == 2);
  CHECK(poly_to_string(gb_b2.members[0], gb_b2.ctx.var_labels) == "x[a]");
  CHECK(poly_to_string(gb_b2.members[1], gb_b2.ctx.var_labels) == "x[b]");
  CHECK(buchberger_check(gb_b2).ok);

  auto gb_b3 = groebner_basis(b3, atoms_building(b3));
  CHECK(gb_b3.members.size() == 3);  // no non-nested atom antichains
  CHECK(buchberger_check(gb_b3).ok);

  CHECK(gb_p3.order_descriptor ==
        "degree-lexicographic; variables ordered by rank ascending, then label");
  // Members are monic with strictly decreasing leading terms per position.
  for (auto& gb : {gb_p3, gb_p4min, gb_p4max}) {
    for (auto& p : gb.members) CHECK(p.begin()->second == Int(1));
    for (size_t i = 0; i + 1 < gb.members.size(); ++i) {
      const Mono& a = gb.members[i].begin()->first;
      const Mono& b = gb.members[i + 1].begin()->first;
      CHECK(!mono_less(a, b));
    }
  }
}

TEST_CASE("a mutilated basis fails the S-polynomial check") {
  auto l3 = standard_lattice("partition", 3);
  auto gb = groebner_basis(l3, full_building(l3));
  Poly top_square = var_poly(gb.ctx, "123", 2);
  auto before = gb.members.size();
  gb.members.erase(
      std::remove(gb.members.begin(), gb.members.end(), top_square),
      gb.members.end());
  REQUIRE(gb.members.size() == before - 1);
  auto rep = buchberger_check(gb);
  CHECK(!rep.ok);
  CHECK(rep.pair_i >= 0);
  CHECK(rep.pair_j > rep.pair_i);
  CHECK(!rep.remainder.empty());
}

TEST_CASE("normal forms") {
  auto l3 = standard_lattice("partition", 3);
  auto gb = groebner_basis(l3, full_building(l3));
  auto nf = [&](const Poly& p) {
    return poly_to_string(normal_form(p, gb), gb.ctx.var_labels);
  };
  // x12 = -x123 modulo the linear relation x12 + x123.
  CHECK(nf(var_poly(gb.ctx, "12")) == "-x[123]");
  CHECK(nf(var_poly(gb.ctx, "13")) == "-x[123]");
  CHECK(nf(var_poly(gb.ctx, "123")) == "x[123]");
  CHECK(nf(var_poly(gb.ctx, "123", 2)) == "0");
  Poly one;
  one[Mono(gb.ctx.vars.size(), 0)] = 1;
  CHECK(nf(one) == "1");
  // Ideal members vanish.
  for (auto& g : gb.members) CHECK(normal_form(g, gb).empty());
  for (auto& g : gb.members)
    CHECK(normal_form(poly_mul(g, var_poly(gb.ctx, "123")), gb).empty());
  // Normal form is stable: reducing a remainder changes nothing.
  auto r = normal_form(var_poly(gb.ctx, "12"), gb);
  CHECK(normal_form(r, gb) == r);
}

TEST_CASE("monomial bases and dimension counts") {
  auto l3 = standard_lattice("partition", 3);
  auto mb3 = monomial_basis(l3, full_building(l3));
  REQUIRE(mb3.by_degree.size() == 2);
  CHECK(mb3.by_degree[0].size() == 1);
  REQUIRE(mb3.by_degree[1].size() == 1);
  CHECK(poly_to_string(Poly{{mb3.by_degree[1][0], Int(1)}},
                       mb3.ctx.var_labels) == "x[123]");
  CHECK(hilbert_series(l3, full_building(l3)) ==
        std::vector<Int>{Int(1), Int(1)});

  auto l4 = standard_lattice("partition", 4);
  auto gmin = minimal_building_set(l4);
  auto mb4 = monomial_basis(l4, gmin);
  REQUIRE(mb4.by_degree.size() == 3);
  std::set<std::string> deg1;
  for (auto& m : mb4.by_degree[1])
    deg1.insert(poly_to_string(Poly{{m, Int(1)}}, mb4.ctx.var_labels));
  CHECK(deg1 == std::set<std::string>{"x[123]", "x[124]", "x[134]", "x[234]",
                                      "x[1234]"});
  REQUIRE(mb4.by_degree[2].size() == 1);
  CHECK(poly_to_string(Poly{{mb4.by_degree[2][0], Int(1)}},
                       mb4.ctx.var_labels) == "x[1234]^2");
  CHECK(hilbert_series(l4, gmin) ==
        std::vector<Int>{Int(1), Int(5), Int(1)});

  CHECK(hilbert_series(l4, full_building(l4)) ==
        std::vector<Int>{Int(1), Int(8), Int(1)});

  // Boolean lattices over their atoms collapse to the ground ring.
  auto b3 = standard_lattice("boolean", 3);
  CHECK(hilbert_series(b3, atoms_building(b3)) == std::vector<Int>{Int(1)});
}

TEST_CASE("normal-form count agrees with the monomial basis") {
  // Independent route to the degree-1 dimension: count distinct normal forms
  // of the variables... each variable reduces to a signed combination of
  // basis monomials, and the basis monomials themselves are irreducible.
  auto l4 = standard_lattice("partition", 4);
  auto gmin = minimal_building_set(l4);
  auto gb = groebner_basis(l4, gmin);
  auto mb = monomial_basis(l4, gmin);
  for (auto& level : mb.by_degree)
    for (auto& m : level) {
      Poly p;
      p[m] = 1;
      CHECK(normal_form(p, gb) == p);  // basis monomials are standard
    }
  // Degree-1 irreducible monomials are exactly the degree-1 basis.
  int irreducible = 0;
  for (size_t v = 0; v < gb.ctx.vars.size(); ++v) {
    Mono m(gb.ctx.vars.size(), 0);
    m[v] = 1;
    Poly p;
    p[m] = 1;
    if (normal_form(p, gb) == p) ++irreducible;
  }
  CHECK(irreducible == (int)mb.by_degree[1].size());
}
