#include "wonder/poset.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace wonder {

const char* err_name(Err e) {
  switch (e) {
    case Err::NotAPoset: return "NotAPoset";
    case Err::NotASemilattice: return "NotASemilattice";
    case Err::NotComparable: return "NotComparable";
    case Err::EmptyInput: return "EmptyInput";
    case Err::NoTop: return "NoTop";
    case Err::TooLarge: return "TooLarge";
    case Err::ElementOutOfRange: return "ElementOutOfRange";
    case Err::NotAFace: return "NotAFace";
    case Err::VertexClash: return "VertexClash";
    case Err::InternalNotSemilattice: return "InternalNotSemilattice";
    case Err::OrderNotNonIncreasing: return "OrderNotNonIncreasing";
    case Err::NotABuildingSet: return "NotABuildingSet";
    case Err::CheckDisagreement: return "CheckDisagreement";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::MissingCodim: return "MissingCodim";
    case Err::LineNotOrthogonal: return "LineNotOrthogonal";
    case Err::NotTerminal: return "NotTerminal";
    case Err::TooManyLines: return "TooManyLines";
    case Err::NotAtomic: return "NotAtomic";
    case Err::NotReachable: return "NotReachable";
    case Err::NotSimplicial: return "NotSimplicial";
    case Err::BadCycle: return "BadCycle";
    case Err::OrderCapExceeded: return "OrderCapExceeded";
    case Err::SamplingExhausted: return "SamplingExhausted";
    case Err::BadInput: return "BadInput";
  }
  return "Unknown";
}

std::string join_labels(const std::vector<std::string>& parts,
                        const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string rat_to_string(const Rat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Rat rat_from_string(const std::string& s) {
  auto bad = [&]() { fail(Err::BadInput, "bad rational: " + s, s); };
  if (s.empty()) bad();
  size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    if (den == 0) bad();
    return Rat(num, den);
  } catch (const std::exception&) {
    bad();
  }
  return Rat(0);  // unreachable
}

int Poset::at(const std::string& label) const {
  auto it = index.find(label);
  if (it == index.end())
    fail(Err::ElementOutOfRange, "no element labeled '" + label + "'", label);
  return it->second;
}

std::vector<std::pair<std::string, std::string>> Poset::cover_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int a = 0; a < n(); ++a)
    for (int b : cov_up[a]) out.emplace_back(labels[a], labels[b]);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < n(); ++a)
    if (cov_down[a].empty()) out.push_back(a);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int a = 0; a < n(); ++a)
    if (cov_up[a].empty()) out.push_back(a);
  return out;
}

std::vector<int> Poset::ranks() const {
  std::vector<int> r(n(), 0);
  for (int t : topo) {
    for (int d : cov_down[t]) r[t] = std::max(r[t], r[d] + 1);
  }
  return r;
}

// Finishes a Poset whose `below` closure rows are already filled: derives
// `above`, covers, and a topological order.
static void finish_poset(Poset& p) {
  int n = p.n();
  p.above.assign(n, Bits(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (p.below[b].test(a)) p.above[a].set(b);

  p.cov_up.assign(n, {});
  p.cov_down.assign(n, {});
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b || !p.below[b].test(a)) continue;
      // b covers a iff nothing sits strictly between.
      bool cover = true;
      Bits mid = p.above[a] & p.below[b];
      for (int c = mid.next(0); c >= 0 && cover; c = mid.next(c + 1))
        if (c != a && c != b) cover = false;
      if (cover) {
        p.cov_up[a].push_back(b);
        p.cov_down[b].push_back(a);
      }
    }
  }

  // Linear extension by Kahn's algorithm over cover edges, smallest index
  // first for determinism.
  std::vector<int> indeg(n);
  for (int a = 0; a < n; ++a) indeg[a] = (int)p.cov_down[a].size();
  std::set<int> ready;
  for (int a = 0; a < n; ++a)
    if (indeg[a] == 0) ready.insert(a);
  p.topo.clear();
  while (!ready.empty()) {
    int a = *ready.begin();
    ready.erase(ready.begin());
    p.topo.push_back(a);
    for (int b : p.cov_up[a])
      if (--indeg[b] == 0) ready.insert(b);
  }
  if ((int)p.topo.size() != n)
    fail(Err::NotAPoset, "order relation contains a cycle");
  p.topo_rank.assign(n, 0);
  for (int i = 0; i < n; ++i) p.topo_rank[p.topo[i]] = i;
}

Poset build_poset(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  if (labels.empty()) fail(Err::EmptyInput, "poset needs at least one element");
  Poset p;
  p.labels = labels;
  for (int i = 0; i < (int)labels.size(); ++i) {
    if (!p.index.emplace(labels[i], i).second)
      fail(Err::NotAPoset, "duplicate label '" + labels[i] + "'", labels[i]);
  }
  int n = p.n();
  // Adjacency of the raw relation, then reflexive-transitive closure by
  // repeated squaring of bit rows (n is small; cubic closure is fine).
  std::vector<Bits> up(n, Bits(n));
  for (int a = 0; a < n; ++a) up[a].set(a);
  for (auto& [lo, hi] : relations) up[p.at(lo)].set(p.at(hi));
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      Bits next = up[a];
      for (int b = up[a].next(0); b >= 0; b = up[a].next(b + 1)) next |= up[b];
      if (!(next == up[a])) {
        up[a] = next;
        changed = true;
      }
    }
  }
  // Antisymmetry: a <= b <= a forces a == b.
  for (int a = 0; a < n; ++a)
    for (int b = up[a].next(0); b >= 0; b = up[a].next(b + 1))
      if (b != a && up[b].test(a))
        fail(Err::NotAPoset,
             "cycle through '" + labels[a] + "' and '" + labels[b] + "'",
             labels[a] + "," + labels[b]);
  p.below.assign(n, Bits(n));
  for (int a = 0; a < n; ++a)
    for (int b = up[a].next(0); b >= 0; b = up[a].next(b + 1))
      p.below[b].set(a);
  finish_poset(p);
  return p;
}

int MeetSemilattice::meet_scan(int a, int b) const {
  Bits common = p.below[a] & p.below[b];
  // Greatest lower bound candidate: the topologically latest common lower
  // bound; verified to dominate all others.
  int m = -1;
  for (int c = common.next(0); c >= 0; c = common.next(c + 1))
    if (m < 0 || p.topo_rank[c] > p.topo_rank[m]) m = c;
  if (m < 0 || !(common == p.below[m])) {
    // Two maximal lower bounds witness the failure.
    std::string w = p.labels[a] + "," + p.labels[b];
    fail(Err::NotASemilattice,
         "elements '" + p.labels[a] + "' and '" + p.labels[b] +
             "' have no unique greatest lower bound",
         w);
  }
  return m;
}

int MeetSemilattice::meet(int a, int b) const {
  if (a < 0 || b < 0 || a >= n() || b >= n())
    fail(Err::ElementOutOfRange, "meet argument out of range");
  if (!meet_table_.empty()) return meet_table_[(size_t)a * n() + b];
  return meet_scan(a, b);
}

int MeetSemilattice::join(const std::vector<int>& xs) const {
  if (xs.empty()) return bottom;
  Bits ub = p.above[xs[0]];
  for (size_t i = 1; i < xs.size(); ++i) ub &= p.above[xs[i]];
  if (ub.none()) return -1;
  // Least common upper bound = meet of all of them; in a meet-semilattice
  // the up-set has a unique minimum iff the meet of U lies in U.
  int m = -1;
  for (int c = ub.next(0); c >= 0; c = ub.next(c + 1))
    if (m < 0 || p.topo_rank[c] < p.topo_rank[m]) m = c;
  // m is the topologically first (lowest) common upper bound; it is the join
  // iff it is below all others.
  for (int c = ub.next(0); c >= 0; c = ub.next(c + 1))
    if (!p.leq(m, c)) return -1;
  return m;
}

MeetSemilattice make_semilattice(Poset p) {
  MeetSemilattice l;
  // Unique minimum.
  auto mins = p.minimal_elements();
  if (mins.size() != 1)
    fail(Err::NotASemilattice, "no unique minimal element",
         mins.empty() ? "" : p.labels[mins[0]] + "," + p.labels[mins[1]]);
  l.bottom = mins[0];
  auto maxs = p.maximal_elements();
  if (maxs.size() == 1) l.top = maxs[0];
  l.atoms = p.cov_up[l.bottom];
  std::sort(l.atoms.begin(), l.atoms.end());
  l.p = std::move(p);
  // Verify every pair has a meet; cache when small enough.
  int n = l.n();
  bool cache = n <= MeetSemilattice::kMeetTableCap;
  if (cache) l.meet_table_.assign((size_t)n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      int m = l.meet_scan(a, b);
      if (cache) {
        l.meet_table_[(size_t)a * n + b] = (uint16_t)m;
        l.meet_table_[(size_t)b * n + a] = (uint16_t)m;
      }
    }
  return l;
}

MeetSemilattice build_semilattice(
    const std::vector<std::string>& labels,
    const std::vector<std::pair<std::string, std::string>>& relations) {
  return make_semilattice(build_poset(labels, relations));
}

Poset induced_subposet(const Poset& p, const std::vector<int>& keep) {
  std::vector<std::string> labels;
  labels.reserve(keep.size());
  for (int i : keep) {
    if (i < 0 || i >= p.n())
      fail(Err::ElementOutOfRange, "subposet index out of range");
    labels.push_back(p.labels[i]);
  }
  std::vector<std::pair<std::string, std::string>> rels;
  for (size_t i = 0; i < keep.size(); ++i)
    for (size_t j = 0; j < keep.size(); ++j)
      if (i != j && p.lt(keep[i], keep[j]))
        rels.emplace_back(labels[i], labels[j]);
  return build_poset(labels, rels);
}

Poset interval(const Poset& p, int a, int b) {
  if (!p.leq(a, b))
    fail(Err::NotComparable,
         "'" + p.labels[a] + "' is not below '" + p.labels[b] + "'",
         p.labels[a] + "," + p.labels[b]);
  Bits in = p.above[a] & p.below[b];
  return induced_subposet(p, in.indices());
}

Poset direct_product(const std::vector<Poset>& factors) {
  if (factors.empty()) fail(Err::EmptyInput, "product of no posets");
  // Mixed-radix enumeration of tuples.
  std::vector<int> radix;
  long long total = 1;
  for (auto& f : factors) {
    radix.push_back(f.n());
    total *= f.n();
    if (total > 200000) fail(Err::TooLarge, "product poset too large");
  }
  auto tuple_of = [&](long long t) {
    std::vector<int> tup(factors.size());
    for (int k = (int)factors.size() - 1; k >= 0; --k) {
      tup[k] = (int)(t % radix[k]);
      t /= radix[k];
    }
    return tup;
  };
  std::vector<std::string> labels((size_t)total);
  for (long long t = 0; t < total; ++t) {
    auto tup = tuple_of(t);
    std::vector<std::string> parts;
    for (size_t k = 0; k < factors.size(); ++k)
      parts.push_back(factors[k].labels[tup[k]]);
    labels[(size_t)t] = "(" + join_labels(parts, ",") + ")";
  }
  std::vector<std::pair<std::string, std::string>> rels;
  for (long long s = 0; s < total; ++s) {
    auto a = tuple_of(s);
    for (long long t = 0; t < total; ++t) {
      if (s == t) continue;
      auto b = tuple_of(t);
      bool le = true;
      for (size_t k = 0; k < factors.size() && le; ++k)
        le = factors[k].leq(a[k], b[k]);
      if (le) rels.emplace_back(labels[(size_t)s], labels[(size_t)t]);
    }
  }
  return build_poset(labels, rels);
}

// Backtracking isomorphism search. Candidate maps must preserve the full
// order relation; vertices are processed in a fixed order (descending degree
// refinement is unnecessary at these sizes).
std::optional<std::vector<int>> poset_isomorphic(
    const Poset& p, const Poset& q,
    const std::vector<std::pair<int, int>>& pinned) {
  int n = p.n();
  if (q.n() != n) return std::nullopt;

  // Cheap invariants per element: (|below|, |above|, #cov_up, #cov_down).
  auto sig = [](const Poset& x, int a) {
    return std::array<int, 4>{x.below[a].count(), x.above[a].count(),
                              (int)x.cov_up[a].size(),
                              (int)x.cov_down[a].size()};
  };
  std::vector<std::array<int, 4>> sp(n), sq(n);
  for (int a = 0; a < n; ++a) sp[a] = sig(p, a), sq[a] = sig(q, a);
  {
    auto cp = sp, cq = sq;
    std::sort(cp.begin(), cp.end());
    std::sort(cq.begin(), cq.end());
    if (cp != cq) return std::nullopt;
  }

  std::vector<int> map_pq(n, -1), used(n, 0);
  for (auto& [a, b] : pinned) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      fail(Err::ElementOutOfRange, "pinned pair out of range");
    if (sp[a] != sq[b]) return std::nullopt;
    if (map_pq[a] != -1 || used[b]) return std::nullopt;
    map_pq[a] = b;
    used[b] = 1;
  }
  // Order unpinned vertices topologically so prefix maps are order-checkable
  // against already-mapped vertices only.
  std::vector<int> order;
  for (int t : p.topo)
    if (map_pq[t] == -1) order.push_back(t);

  // Consistency of the pinned part itself.
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (map_pq[a] != -1 && map_pq[b] != -1)
        if (p.leq(a, b) != q.leq(map_pq[a], map_pq[b])) return std::nullopt;

  std::vector<int> mapped;  // p-vertices currently assigned
  for (int a = 0; a < n; ++a)
    if (map_pq[a] != -1) mapped.push_back(a);

  std::function<bool(size_t)> go = [&](size_t k) -> bool {
    if (k == order.size()) return true;
    int a = order[k];
    for (int b = 0; b < n; ++b) {
      if (used[b] || sp[a] != sq[b]) continue;
      bool ok = true;
      for (int c : mapped) {
        if (p.leq(a, c) != q.leq(b, map_pq[c]) ||
            p.leq(c, a) != q.leq(map_pq[c], b)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map_pq[a] = b;
      used[b] = 1;
      mapped.push_back(a);
      if (go(k + 1)) return true;
      mapped.pop_back();
      used[b] = 0;
      map_pq[a] = -1;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return map_pq;
}

Int mobius(const MeetSemilattice& l) {
  if (!l.top) fail(Err::NoTop, "Mobius value needs a maximum element");
  int t = *l.top;
  // mu(x, 1̂) bottom-up over the dual: mu(1̂,1̂)=1; mu(x,1̂) = -sum over
  // x < y <= 1̂ of mu(y,1̂). Process in reverse topological order.
  std::vector<Int> mu(l.n(), 0);
  mu[t] = 1;
  for (int i = l.n() - 1; i >= 0; --i) {
    int x = l.p.topo[i];
    if (x == t) continue;
    if (!l.leq(x, t)) continue;
    Int s = 0;
    Bits up = l.p.above[x];
    for (int y = up.next(0); y >= 0; y = up.next(y + 1))
      if (y != x) s += mu[y];
    mu[x] = -s;
  }
  return mu[l.bottom];
}

std::string partition_label(const std::vector<std::vector<int>>& blocks) {
  std::vector<std::string> parts;
  for (auto b : blocks) {
    if (b.size() < 2) continue;
    std::sort(b.begin(), b.end());
    std::string s;
    for (int v : b) s += std::to_string(v);
    parts.push_back(s);
  }
  if (parts.empty()) return "0";
  std::sort(parts.begin(), parts.end());
  return join_labels(parts, "|");
}

int partition_block_count(const std::string& label, int n) {
  if (label == "0") return n;
  int covered = 0, nontrivial = 0;
  for (size_t i = 0; i < label.size();) {
    size_t j = i;
    while (j < label.size() && label[j] != '|') ++j;
    nontrivial += 1;
    covered += (int)(j - i);
    i = j + 1;
  }
  return nontrivial + (n - covered);
}

// Set partitions of {1..n} in restricted-growth-string order.
static std::vector<std::vector<std::vector<int>>> all_partitions(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<int> rgs(n, 0);
  while (true) {
    int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<std::vector<int>> part(blocks);
    for (int i = 0; i < n; ++i) part[rgs[i]].push_back(i + 1);
    out.push_back(part);
    // next restricted growth string
    int i = n - 1;
    while (i > 0) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) break;
      --i;
    }
    if (i == 0) break;
    rgs[i] += 1;
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
  return out;
}

// block map: element -> block id, for refinement comparison
static std::vector<int> block_ids(const std::vector<std::vector<int>>& part,
                                  int n) {
  std::vector<int> id(n + 1, -1);
  for (int b = 0; b < (int)part.size(); ++b)
    for (int v : part[b]) id[v] = b;
  return id;
}

MeetSemilattice standard_lattice(const std::string& kind, int n) {
  if (kind == "partition") {
    if (n < 2 || n > 7)
      fail(Err::TooLarge, "partition lattice supported for 2 <= n <= 7");
    auto parts = all_partitions(n);
    std::vector<std::string> labels;
    std::vector<std::vector<int>> ids;
    for (auto& pt : parts) {
      labels.push_back(partition_label(pt));
      ids.push_back(block_ids(pt, n));
    }
    // Reversed refinement: P <= Q iff every block of P lies inside a block
    // of Q; bottom is the all-singletons partition.
    std::vector<std::pair<std::string, std::string>> rels;
    for (size_t a = 0; a < parts.size(); ++a)
      for (size_t b = 0; b < parts.size(); ++b) {
        if (a == b) continue;
        bool refines = true;
        for (int v = 1; v <= n && refines; ++v)
          for (int w = v + 1; w <= n && refines; ++w)
            if (ids[a][v] == ids[a][w] && ids[b][v] != ids[b][w])
              refines = false;
        if (refines) rels.emplace_back(labels[a], labels[b]);
      }
    return build_semilattice(labels, rels);
  }
  if (kind == "boolean") {
    if (n < 1) fail(Err::BadInput, "boolean lattice needs n >= 1");
    if (n > 13) fail(Err::TooLarge, "boolean lattice supported for n <= 13");
    if ((1 << n) > 10000) fail(Err::TooLarge, "lattice exceeds 10^4 elements");
    std::vector<std::string> labels(size_t(1) << n);
    for (int s = 0; s < (1 << n); ++s) {
      std::string lab;
      for (int i = 0; i < n; ++i)
        if (s & (1 << i)) lab += char('a' + i);
      labels[s] = lab.empty() ? "0" : lab;
    }
    std::vector<std::pair<std::string, std::string>> rels;
    for (int s = 0; s < (1 << n); ++s)
      for (int i = 0; i < n; ++i)
        if (!(s & (1 << i)))
          rels.emplace_back(labels[s], labels[s | (1 << i)]);
    return build_semilattice(labels, rels);
  }
  fail(Err::BadInput, "unknown standard lattice kind '" + kind + "'", kind);
}

}  // namespace wonder
