#include "wonder/blowup.hpp"

#include <algorithm>

namespace wonder {

BlowupResult combinatorial_blowup(const MeetSemilattice& l, int x, int step) {
  if (x < 0 || x >= l.n()) fail(Err::ElementOutOfRange, "element out of range");
  if (x == l.bottom)
    fail(Err::BadInput, "cannot blow up the bottom element");

  std::vector<int> kept;  // Y with Y not >= x
  for (int y = 0; y < l.n(); ++y)
    if (!l.leq(x, y)) kept.push_back(y);
  std::vector<int> primed_src;  // kept Y whose join with x exists
  for (int y : kept)
    if (l.join2(y, x) >= 0) primed_src.push_back(y);

  std::vector<std::string> labels;
  std::vector<std::string> source;
  std::vector<bool> primed;
  std::vector<int> kept_pos(l.n(), -1), primed_pos(l.n(), -1);
  for (int y : kept) {
    kept_pos[y] = (int)labels.size();
    labels.push_back(l.label(y));
    source.push_back(l.label(y));
    primed.push_back(false);
  }
  for (int y : primed_src) {
    primed_pos[y] = (int)labels.size();
    labels.push_back(l.label(y) + "'" + std::to_string(step));
    source.push_back(l.label(y));
    primed.push_back(true);
  }

  std::vector<std::pair<std::string, std::string>> rels;
  for (int y : kept)
    for (int z : kept)
      if (y != z && l.lt(y, z)) rels.emplace_back(labels[kept_pos[y]],
                                                  labels[kept_pos[z]]);
  for (int y : primed_src)
    for (int z : primed_src)
      if (y != z && l.lt(y, z))
        rels.emplace_back(labels[primed_pos[y]], labels[primed_pos[z]]);
  // An original sits below a primed copy iff it is below the source
  // (non-strictly, so each copy covers its source).
  for (int y : kept)
    for (int z : primed_src)
      if (l.leq(y, z)) rels.emplace_back(labels[kept_pos[y]],
                                         labels[primed_pos[z]]);

  BlowupResult out;
  try {
    out.l = build_semilattice(labels, rels);
  } catch (const WonderError& e) {
    // The blowup of a meet-semilattice is one again; reaching this means the
    // construction itself is broken, not the input.
    fail(Err::InternalNotSemilattice,
         std::string("blowup result failed validation: ") + e.what(),
         e.witness);
  }
  // build_semilattice may reindex only via label order of our input; align
  // source/primed with the produced label order.
  std::vector<std::string> src2(out.l.n());
  std::vector<bool> pr2(out.l.n());
  for (size_t i = 0; i < labels.size(); ++i) {
    int idx = out.l.at(labels[i]);
    src2[idx] = source[i];
    pr2[idx] = primed[i];
  }
  out.source = std::move(src2);
  out.primed = std::move(pr2);
  return out;
}

std::vector<int> default_blowup_order(const MeetSemilattice& l,
                                      const std::vector<int>& g) {
  auto ranks = l.p.ranks();
  std::vector<int> order = g;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ranks[a] != ranks[b]) return ranks[a] > ranks[b];
    return l.label(a) < l.label(b);
  });
  return order;
}

MeetSemilattice resolve(const MeetSemilattice& l, const std::vector<int>& g,
                        std::vector<int> order) {
  auto chk = is_building_set(l, g);
  if (!chk.ok)
    fail(Err::NotABuildingSet,
         "carrier is not a building set; fails at '" +
             l.label(chk.witness) + "'",
         l.label(chk.witness));
  const auto& car = chk.building->carrier;
  if (order.empty()) {
    order = default_blowup_order(l, car);
  } else {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != car)
      fail(Err::BadInput, "order must list each carrier element exactly once");
    for (size_t i = 0; i < order.size(); ++i)
      for (size_t j = i + 1; j < order.size(); ++j)
        if (l.lt(order[i], order[j]))
          fail(Err::OrderNotNonIncreasing,
               "'" + l.label(order[i]) + "' precedes the larger '" +
                   l.label(order[j]) + "'",
               l.label(order[i]) + "," + l.label(order[j]));
  }
  MeetSemilattice cur = l;
  int step = 1;
  for (int x : order) {
    int idx = cur.at(l.label(x));  // originals keep their labels
    cur = combinatorial_blowup(cur, idx, step).l;
    ++step;
  }
  return cur;
}

}  // namespace wonder
