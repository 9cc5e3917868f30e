#include "wonder/building.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace wonder {

// Maximal elements of {c in pool : c <= x}.
static std::vector<int> max_below(const MeetSemilattice& l,
                                  const std::vector<int>& pool, int x) {
  std::vector<int> below;
  for (int c : pool)
    if (l.leq(c, x)) below.push_back(c);
  std::vector<int> out;
  for (int c : below) {
    bool maximal = true;
    for (int d : below)
      if (d != c && l.lt(c, d)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Does the join map from the product of the intervals [0̂, f] (f in fs) to
// [0̂, x] define an order isomorphism? Checked by full enumeration: joins
// exist, the map is a bijection, and comparability agrees in both
// directions. On failure, an independent pinned isomorphism search is run;
// if that search finds an isomorphism after the direct check failed, the
// two methods disagree and we abort loudly instead of picking a winner.
static bool join_map_is_iso(const MeetSemilattice& l,
                            const std::vector<int>& fs, int x) {
  if (fs.size() == 1) return fs[0] == x;
  std::vector<std::vector<int>> iv;
  long long total = 1;
  for (int g : fs) {
    iv.push_back(l.p.below[g].indices());
    total *= (long long)iv.back().size();
    if (total > (1 << 20))
      fail(Err::TooLarge, "factor interval product too large");
  }
  long long target = l.p.below[x].count();

  bool ok = (total == target);
  std::vector<std::vector<int>> tuples;
  std::vector<int> image;
  if (ok) {
    std::vector<int> tup(fs.size());
    for (long long t = 0; t < total; ++t) {
      long long r = t;
      for (int k = (int)fs.size() - 1; k >= 0; --k) {
        tup[k] = iv[k][r % (long long)iv[k].size()];
        r /= (long long)iv[k].size();
      }
      int j = l.join(tup);
      if (j < 0) {
        ok = false;
        break;
      }
      tuples.push_back(tup);
      image.push_back(j);
    }
  }
  if (ok) {
    std::set<int> seen(image.begin(), image.end());
    ok = ((long long)seen.size() == total);  // injective; size => onto [0̂,x]
  }
  if (ok) {
    for (size_t s = 0; s < tuples.size() && ok; ++s)
      for (size_t t = 0; t < tuples.size() && ok; ++t) {
        bool comp = true;
        for (size_t k = 0; k < fs.size() && comp; ++k)
          comp = l.leq(tuples[s][k], tuples[t][k]);
        if (comp != l.leq(image[s], image[t])) ok = false;
      }
  }
  if (ok) return true;

  // Cross-check: pinned isomorphism search on the abstract posets. Any such
  // isomorphism maps the product bottom to 0̂ and preserves meets, so the
  // pinned factor tops would need pairwise meets equal to 0̂; when they do
  // not, no pinned isomorphism can exist and the search is skipped.
  for (size_t i = 0; i < fs.size(); ++i)
    for (size_t j = i + 1; j < fs.size(); ++j)
      if (l.meet(fs[i], fs[j]) != l.bottom) return false;
  std::vector<Poset> factor_posets;
  for (int g : fs) factor_posets.push_back(interval(l.p, l.bottom, g));
  Poset prod = direct_product(factor_posets);
  Poset range = interval(l.p, l.bottom, x);
  std::vector<std::pair<int, int>> pins;
  for (size_t j = 0; j < fs.size(); ++j) {
    std::vector<std::string> parts;
    for (size_t k = 0; k < fs.size(); ++k)
      parts.push_back(k == j ? l.label(fs[j]) : l.label(l.bottom));
    pins.emplace_back(prod.at("(" + join_labels(parts, ",") + ")"),
                      range.at(l.label(fs[j])));
  }
  if (poset_isomorphic(prod, range, pins))
    fail(Err::CheckDisagreement,
         "join-map check and isomorphism search disagree at '" + l.label(x) +
             "'",
         l.label(x));
  return false;
}

// Validates and normalizes a candidate carrier.
static std::vector<int> normalize_carrier(const MeetSemilattice& l,
                                          const std::vector<int>& g) {
  std::vector<int> car = g;
  std::sort(car.begin(), car.end());
  if (std::adjacent_find(car.begin(), car.end()) != car.end())
    fail(Err::BadInput, "carrier has duplicate elements");
  for (int c : car) {
    if (c < 0 || c >= l.n())
      fail(Err::ElementOutOfRange, "carrier element out of range");
    if (c == l.bottom)
      fail(Err::BadInput, "carrier must not contain the bottom element");
  }
  return car;
}

BuildingCheck is_building_set(const MeetSemilattice& l,
                              const std::vector<int>& g) {
  auto car = normalize_carrier(l, g);
  BuildingCheck out;
  BuildingSet bs;
  bs.carrier = car;
  bs.factor_map.assign(l.n(), {});
  for (int x = 0; x < l.n(); ++x) {
    if (x == l.bottom) continue;
    auto fs = max_below(l, car, x);
    if (fs.empty() || !join_map_is_iso(l, fs, x)) {
      out.ok = false;
      out.witness = x;
      return out;
    }
    bs.factor_map[x] = fs;
  }
  out.ok = true;
  out.building = std::move(bs);
  return out;
}

BuildingSet minimal_building_set(const MeetSemilattice& l) {
  std::vector<int> irr;  // irreducibles so far, in classification order
  for (int t : l.p.topo) {
    if (t == l.bottom) continue;
    std::vector<int> strictly_below;
    for (int c : irr)
      if (l.lt(c, t)) strictly_below.push_back(c);
    auto cands = max_below(l, strictly_below, t);
    bool reducible = cands.size() >= 2 && join_map_is_iso(l, cands, t);
    if (!reducible) irr.push_back(t);
  }
  auto chk = is_building_set(l, irr);
  if (!chk.ok)
    fail(Err::CheckDisagreement,
         "irreducible classification produced a non-building carrier at '" +
             l.label(chk.witness) + "'",
         l.label(chk.witness));
  return *chk.building;
}

std::vector<BuildingSet> enumerate_building_sets(const MeetSemilattice& l) {
  BuildingSet gmin = minimal_building_set(l);
  std::vector<int> free;
  for (int x = 0; x < l.n(); ++x)
    if (x != l.bottom &&
        !std::binary_search(gmin.carrier.begin(), gmin.carrier.end(), x))
      free.push_back(x);
  if (free.size() > 20)
    fail(Err::TooLarge, "too many candidate elements to enumerate");
  std::vector<BuildingSet> out;
  for (long long mask = 0; mask < (1LL << free.size()); ++mask) {
    std::vector<int> car = gmin.carrier;
    for (size_t i = 0; i < free.size(); ++i)
      if (mask & (1LL << i)) car.push_back(free[i]);
    std::sort(car.begin(), car.end());
    auto chk = is_building_set(l, car);
    if (chk.ok) out.push_back(*chk.building);
  }
  std::sort(out.begin(), out.end(),
            [](const BuildingSet& a, const BuildingSet& b) {
              return a.carrier < b.carrier;
            });
  return out;
}

std::vector<int> factors(const MeetSemilattice& l, const BuildingSet& g,
                         int x) {
  if (x < 0 || x >= l.n())
    fail(Err::ElementOutOfRange, "element out of range");
  if (x == l.bottom) return {};
  return g.factor_map[x];
}

// Antichain DFS shared by the nested test and the complex builder. Visits
// every antichain T (|T| >= 2) of `ground` that contains `anchor` (or every
// one at all when anchor < 0) and reports the first violation.
static bool antichains_ok(const MeetSemilattice& l, const Bits& carrier_set,
                          const std::vector<int>& ground, int anchor) {
  auto incomp = [&](int a, int b) { return !l.leq(a, b) && !l.leq(b, a); };
  std::vector<int> cand;
  for (int u : ground)
    if (anchor < 0 || incomp(u, anchor)) cand.push_back(u);
  bool ok = true;
  std::vector<int> pick;
  std::function<void(size_t)> go = [&](size_t k) {
    for (size_t t = k; t < cand.size() && ok; ++t) {
      int u = cand[t];
      bool anti = true;
      for (int w : pick)
        if (!incomp(w, u)) {
          anti = false;
          break;
        }
      if (!anti) continue;
      pick.push_back(u);
      std::vector<int> chain = pick;
      if (anchor >= 0) chain.push_back(anchor);
      if (chain.size() >= 2) {
        int j = l.join(chain);
        if (j < 0 || carrier_set.test(j))
          ok = false;
        else
          go(t + 1);
      } else {
        go(t + 1);
      }
      pick.pop_back();
    }
  };
  go(0);
  return ok;
}

bool is_nested(const MeetSemilattice& l, const BuildingSet& g,
               const std::vector<int>& s) {
  Bits carrier_set(l.n());
  for (int c : g.carrier) carrier_set.set(c);
  auto sorted = s;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    fail(Err::BadInput, "nested-set candidate has duplicate elements");
  for (int x : sorted)
    if (!carrier_set.test(x))
      fail(Err::BadInput,
           "nested-set candidate element outside the carrier: '" +
               (x >= 0 && x < l.n() ? l.label(x) : std::to_string(x)) + "'");
  return antichains_ok(l, carrier_set, sorted, -1);
}

SimplicialComplex nested_set_complex(const MeetSemilattice& l,
                                     const BuildingSet& g) {
  const auto& car = g.carrier;
  Bits carrier_set(l.n());
  for (int c : car) carrier_set.set(c);
  std::vector<std::string> vlabels;
  for (int c : car) vlabels.push_back(l.label(c));
  std::vector<std::vector<int>> faces;  // local vertex indices
  std::vector<int> cur_local;
  std::vector<int> cur_elems;
  std::function<void(int)> grow = [&](int start) {
    for (int v = start; v < (int)car.size(); ++v) {
      // Only antichains through the new vertex need checking; the rest were
      // validated when the prefix was accepted.
      if (!antichains_ok(l, carrier_set, cur_elems, car[v])) continue;
      cur_local.push_back(v);
      cur_elems.push_back(car[v]);
      faces.push_back(cur_local);
      grow(v + 1);
      cur_local.pop_back();
      cur_elems.pop_back();
    }
  };
  grow(0);
  return make_complex(vlabels, faces);
}

}  // namespace wonder
