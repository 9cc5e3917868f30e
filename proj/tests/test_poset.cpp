#include <doctest.h>

#include <algorithm>
#include <set>

#include "helpers.hpp"
#include "wonder/poset.hpp"

using namespace wonder;

namespace {

MeetSemilattice diamond() {
  return build_semilattice({"0", "a", "b", "1"},
                           {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
}

Int factorial(int n) {
  Int f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST_CASE("poset construction, order, covers") {
  auto p = build_poset({"0", "a", "b", "1"},
                       {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}});
  CHECK(p.n() == 4);
  CHECK(p.leq(p.at("0"), p.at("1")));
  CHECK(p.leq(p.at("a"), p.at("a")));
  CHECK(!p.leq(p.at("a"), p.at("b")));
  CHECK(p.lt(p.at("0"), p.at("a")));
  CHECK(!p.lt(p.at("a"), p.at("a")));
  CHECK(p.cover_pairs().size() == 4);

  // A transitive edge is not a cover.
  auto q = build_poset({"x", "y", "z"}, {{"x", "y"}, {"y", "z"}, {"x", "z"}});
  CHECK(q.cover_pairs().size() == 2);
  CHECK(q.leq(q.at("x"), q.at("z")));

  // Topological order respects the relation and is index-deterministic.
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (p.lt(i, j)) CHECK(p.topo_rank[i] < p.topo_rank[j]);
}

TEST_CASE("poset rejects cycles and duplicate labels") {
  expect_err(Err::NotAPoset, [] {
    build_poset({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  });
  expect_err(Err::NotAPoset, [] { build_poset({"a", "a"}, {}); });
  expect_err(Err::NotAPoset, [] {
    build_poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
  });
}

TEST_CASE("meet semilattice operations on the diamond") {
  auto l = diamond();
  CHECK(l.bottom == l.at("0"));
  REQUIRE(l.top.has_value());
  CHECK(*l.top == l.at("1"));
  CHECK(l.atoms.size() == 2);
  CHECK(l.meet(l.at("a"), l.at("b")) == l.at("0"));
  CHECK(l.meet(l.at("a"), l.at("1")) == l.at("a"));
  CHECK(l.join2(l.at("a"), l.at("b")) == l.at("1"));
  CHECK(l.join({}) == l.bottom);
  CHECK(l.join({l.at("a")}) == l.at("a"));
}

TEST_CASE("meet failure is detected with a witness") {
  // x and y share two maximal lower bounds a, b: no meet.
  auto w = expect_err(Err::NotASemilattice, [] {
    build_semilattice({"0", "a", "b", "x", "y"},
                      {{"0", "a"},
                       {"0", "b"},
                       {"a", "x"},
                       {"a", "y"},
                       {"b", "x"},
                       {"b", "y"}});
  });
  CHECK(!w.empty());
}

TEST_CASE("two minimal elements are rejected") {
  expect_err(Err::NotASemilattice,
             [] { build_semilattice({"a", "b"}, {}); });
}

TEST_CASE("join may be absent") {
  auto l = build_semilattice({"0", "a", "b"}, {{"0", "a"}, {"0", "b"}});
  CHECK(l.join2(l.at("a"), l.at("b")) == -1);
  CHECK(!l.top.has_value());
  expect_err(Err::NoTop, [&] { mobius(l); });
}

TEST_CASE("partition lattices: sizes, atoms, mobius") {
  const int bell[] = {0, 0, 2, 5, 15, 52, 203, 877};
  for (int n = 2; n <= 7; ++n) {
    auto l = standard_lattice("partition", n);
    CHECK(l.n() == bell[n]);
    CHECK((int)l.atoms.size() == n * (n - 1) / 2);
    REQUIRE(l.top.has_value());
    Int mu = mobius(l);
    Int expected = factorial(n - 1);
    if (n % 2 == 0) expected = -expected;
    CHECK(mu == expected);
  }
}

TEST_CASE("partition lattice order is reversed refinement") {
  auto l = standard_lattice("partition", 4);
  CHECK(l.leq(l.at("12"), l.at("123")));
  CHECK(l.leq(l.at("12"), l.at("12|34")));
  CHECK(l.leq(l.at("12|34"), l.at("1234")));
  CHECK(!l.leq(l.at("123"), l.at("12|34")));
  CHECK(!l.leq(l.at("12"), l.at("34")));
  CHECK(l.meet(l.at("123"), l.at("124")) == l.at("12"));
  CHECK(l.meet(l.at("12|34"), l.at("123")) == l.at("12"));
  CHECK(l.join2(l.at("12"), l.at("34")) == l.at("12|34"));
  CHECK(l.join2(l.at("12"), l.at("13")) == l.at("123"));
  CHECK(l.join({l.at("12"), l.at("13"), l.at("34")}) == l.at("1234"));
}

TEST_CASE("boolean lattices") {
  auto l = standard_lattice("boolean", 3);
  CHECK(l.n() == 8);
  CHECK(l.atoms.size() == 3);
  CHECK(mobius(l) == Int(-1));
  auto b5 = standard_lattice("boolean", 5);
  CHECK(b5.n() == 32);
  CHECK(mobius(b5) == Int(-1));
  auto b4 = standard_lattice("boolean", 4);
  CHECK(mobius(b4) == Int(1));
  // meet = intersection, join = union
  CHECK(l.meet(l.at("ab"), l.at("bc")) == l.at("b"));
  CHECK(l.join2(l.at("a"), l.at("c")) == l.at("ac"));
}

TEST_CASE("standard lattice bounds") {
  expect_err(Err::TooLarge, [] { standard_lattice("partition", 8); });
  expect_err(Err::TooLarge, [] { standard_lattice("partition", 1); });
  expect_err(Err::TooLarge, [] { standard_lattice("boolean", 14); });
  expect_err(Err::BadInput, [] { standard_lattice("boolean", 0); });
  expect_err(Err::BadInput, [] { standard_lattice("mystery", 3); });
}

TEST_CASE("meet/join algebraic properties on the partition lattice") {
  auto l = standard_lattice("partition", 4);
  int n = l.n();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int m = l.meet(a, b);
      CHECK(l.leq(m, a));
      CHECK(l.leq(m, b));
      CHECK(m == l.meet(b, a));
      int j = l.join2(a, b);
      REQUIRE(j >= 0);  // a lattice: joins always exist
      CHECK(l.leq(a, j));
      CHECK(l.leq(b, j));
      // m is the greatest lower bound, j the least upper bound.
      for (int c = 0; c < n; ++c) {
        if (l.leq(c, a) && l.leq(c, b)) CHECK(l.leq(c, m));
        if (l.leq(a, c) && l.leq(b, c)) CHECK(l.leq(j, c));
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        CHECK(l.meet(a, l.meet(b, c)) == l.meet(l.meet(a, b), c));
}

TEST_CASE("intervals") {
  auto l4 = standard_lattice("partition", 4);
  auto l3 = standard_lattice("partition", 3);
  auto iv = interval(l4, l4.bottom, l4.at("123"));
  CHECK(iv.n() == 5);
  CHECK(poset_isomorphic(iv, l3.p).has_value());
  expect_err(Err::NotComparable,
             [&] { interval(l4, l4.at("12"), l4.at("34")); });
}

TEST_CASE("direct products") {
  auto c2 = build_poset({"0", "1"}, {{"0", "1"}});
  auto prod = direct_product({c2, c2});
  CHECK(prod.n() == 4);
  CHECK(poset_isomorphic(prod, diamond().p).has_value());
  CHECK(prod.at("(0,0)") >= 0);
  CHECK(prod.leq(prod.at("(0,0)"), prod.at("(0,1)")));
  CHECK(!prod.leq(prod.at("(0,1)"), prod.at("(1,0)")));

  auto c5 = build_poset({"0", "1", "2", "3", "4"},
                        {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "4"}});
  expect_err(Err::TooLarge, [&] {
    direct_product({c5, c5, c5, c5, c5, c5, c5, c5});
  });
}

TEST_CASE("poset isomorphism") {
  auto d = diamond().p;
  auto chain4 = build_poset({"a", "b", "c", "d"},
                            {{"a", "b"}, {"b", "c"}, {"c", "d"}});
  CHECK(poset_isomorphic(d, d).has_value());
  CHECK(!poset_isomorphic(d, chain4).has_value());
  // A returned map is an actual isomorphism.
  auto l4 = standard_lattice("partition", 4);
  auto m = poset_isomorphic(l4.p, l4.p);
  REQUIRE(m.has_value());
  for (int a = 0; a < l4.n(); ++a)
    for (int b = 0; b < l4.n(); ++b)
      CHECK(l4.p.leq(a, b) == l4.p.leq((*m)[a], (*m)[b]));
  // Pinning forces the identity on the pinned vertex.
  auto pinned = poset_isomorphic(d, d, {{d.at("a"), d.at("b")}});
  REQUIRE(pinned.has_value());
  CHECK((*pinned)[d.at("a")] == d.at("b"));
}

TEST_CASE("mobius values") {
  CHECK(mobius(standard_lattice("partition", 2)) == Int(-1));
  CHECK(mobius(standard_lattice("partition", 3)) == Int(2));
  CHECK(mobius(standard_lattice("partition", 4)) == Int(-6));
  CHECK(mobius(standard_lattice("partition", 5)) == Int(24));
}

TEST_CASE("partition labels") {
  CHECK(partition_label({{2, 1}, {4, 3}}) == "12|34");
  CHECK(partition_label({{1}, {2}, {3}}) == "0");
  CHECK(partition_block_count("12|34", 4) == 2);
  CHECK(partition_block_count("123", 4) == 2);
  CHECK(partition_block_count("0", 4) == 4);
  CHECK(partition_block_count("1234", 4) == 1);
}

TEST_CASE("induced subposet keeps order") {
  auto l = standard_lattice("partition", 3);
  std::vector<int> keep = {l.at("12"), l.at("13"), l.at("123")};
  auto sub = induced_subposet(l.p, keep);
  CHECK(sub.n() == 3);
  CHECK(sub.leq(sub.at("12"), sub.at("123")));
  CHECK(!sub.leq(sub.at("12"), sub.at("13")));
}
