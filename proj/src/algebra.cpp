#include "wonder/algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace wonder {

int mono_degree(const Mono& m) {
  int d = 0;
  for (int e : m) d += e;
  return d;
}

bool mono_less(const Mono& a, const Mono& b) {
  int da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

static Mono mono_mul(const Mono& a, const Mono& b) {
  Mono out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

static Mono mono_div(const Mono& a, const Mono& b) {  // a / b, must divide
  Mono out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly out;
  for (auto& [ma, ca] : a)
    for (auto& [mb, cb] : b) {
      Mono m = mono_mul(ma, mb);
      Int& slot = out[m];
      slot += ca * cb;
      if (slot == 0) out.erase(m);
    }
  return out;
}

Poly poly_sub(Poly a, const Poly& b) {
  for (auto& [m, c] : b) {
    auto it = a.find(m);
    Int nc = (it == a.end() ? Int(0) : it->second) - c;
    if (nc == 0) {
      if (it != a.end()) a.erase(it);
    } else {
      a[m] = nc;
    }
  }
  return a;
}

Poly poly_pow(const Poly& a, int e) {
  if (a.empty()) return e == 0 ? Poly() : Poly();
  Poly out;
  out[Mono(a.begin()->first.size(), 0)] = 1;
  for (int i = 0; i < e; ++i) out = poly_mul(out, a);
  return out;
}

std::string poly_to_string(const Poly& p,
                           const std::vector<std::string>& vars) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : p) {
    if (!first) os << (c > 0 ? " + " : " - ");
    if (first && c < 0) os << "-";
    first = false;
    Int ab = c < 0 ? -c : c;
    bool constant = mono_degree(m) == 0;
    if (ab != 1 || constant) os << ab.str();
    bool star = (ab != 1);
    for (size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      if (star) os << "*";
      os << "x[" << vars[v] << "]";
      if (m[v] > 1) os << "^" << m[v];
      star = true;
    }
  }
  return os.str();
}

AlgebraContext make_algebra_context(const MeetSemilattice& l,
                                    const BuildingSet& g) {
  // Atomicity: every element is the join of the atoms below it.
  for (int x = 0; x < l.n(); ++x) {
    std::vector<int> at;
    for (int a : l.atoms)
      if (l.leq(a, x)) at.push_back(a);
    if (l.join(at) != x)
      fail(Err::NotAtomic,
           "'" + l.label(x) + "' is not the join of the atoms below it",
           l.label(x));
  }
  AlgebraContext ctx;
  ctx.l = &l;
  ctx.g = g;
  ctx.vars = g.carrier;
  auto ranks = l.p.ranks();
  std::sort(ctx.vars.begin(), ctx.vars.end(), [&](int a, int b) {
    if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
    return l.label(a) < l.label(b);
  });
  ctx.var_labels.clear();
  for (int v : ctx.vars) ctx.var_labels.push_back(l.label(v));
  ctx.var_of_element.assign(l.n(), -1);
  for (size_t i = 0; i < ctx.vars.size(); ++i)
    ctx.var_of_element[ctx.vars[i]] = (int)i;
  return ctx;
}

// All antichains of the carrier that are minimal non-nested: the antichain
// itself has no join or a join inside the carrier, while every proper subset
// is nested. DFS extends only nested antichains, so each reported set has
// nested prefixes; the remaining proper subsets are checked explicitly.
static std::vector<std::vector<int>> minimal_non_nested(
    const MeetSemilattice& l, const BuildingSet& g) {
  Bits carrier_set(l.n());
  for (int c : g.carrier) carrier_set.set(c);
  auto incomp = [&](int a, int b) { return !l.leq(a, b) && !l.leq(b, a); };
  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  std::function<void(size_t)> go = [&](size_t k) {
    for (size_t t = k; t < g.carrier.size(); ++t) {
      int u = g.carrier[t];
      bool anti = true;
      for (int w : pick)
        if (!incomp(w, u)) {
          anti = false;
          break;
        }
      if (!anti) continue;
      pick.push_back(u);
      bool bad = false;
      if (pick.size() >= 2) {
        int j = l.join(pick);
        bad = (j < 0 || carrier_set.test(j));
      }
      if (bad) {
        // Minimal iff every maximal proper subset is still nested.
        bool minimal = true;
        for (size_t drop = 0; drop + 1 < pick.size() && minimal; ++drop) {
          std::vector<int> sub;
          for (size_t i = 0; i < pick.size(); ++i)
            if (i != drop) sub.push_back(pick[i]);
          minimal = is_nested(l, g, sub);
        }
        if (minimal) out.push_back(pick);
      } else {
        go(t + 1);
      }
      pick.pop_back();
    }
  };
  go(0);
  return out;
}

AlgebraPresentation algebra_presentation(const MeetSemilattice& l,
                                         const BuildingSet& g) {
  AlgebraPresentation out;
  out.ctx = make_algebra_context(l, g);
  int nv = (int)out.ctx.vars.size();
  for (auto& t : minimal_non_nested(l, g)) {
    Mono m(nv, 0);
    for (int e : t) m[out.ctx.var_of_element[e]] = 1;
    out.monomial_relations.push_back(m);
  }
  std::sort(out.monomial_relations.begin(), out.monomial_relations.end(),
            [](const Mono& a, const Mono& b) { return mono_less(b, a); });
  for (int h : l.atoms) {
    Poly p;
    for (size_t v = 0; v < out.ctx.vars.size(); ++v)
      if (l.leq(h, out.ctx.vars[v])) {
        Mono m(nv, 0);
        m[v] = 1;
        p[m] = 1;
      }
    out.linear_relations.push_back(std::move(p));
    out.atom_labels.push_back(l.label(h));
  }
  return out;
}

int join_distance(const MeetSemilattice& l, int a, int b) {
  if (!l.leq(a, b))
    fail(Err::NotComparable,
         "'" + l.label(a) + "' is not below '" + l.label(b) + "'");
  if (a == b) return 0;
  std::vector<int> atoms_below;
  for (int t : l.atoms)
    if (l.leq(t, b)) atoms_below.push_back(t);
  std::vector<int> dist(l.n(), -1);
  std::queue<int> q;
  dist[a] = 0;
  q.push(a);
  while (!q.empty()) {
    int z = q.front();
    q.pop();
    if (z == b) return dist[z];
    for (int t : atoms_below) {
      int j = l.join2(z, t);
      if (j >= 0 && dist[j] < 0) {
        dist[j] = dist[z] + 1;
        q.push(j);
      }
    }
  }
  fail(Err::NotReachable,
       "'" + l.label(b) + "' is not a join of '" + l.label(a) + "' with atoms",
       l.label(a) + "," + l.label(b));
}

// Nested antichains of the carrier, the empty one included.
static std::vector<std::vector<int>> nested_antichains(
    const MeetSemilattice& l, const BuildingSet& g) {
  Bits carrier_set(l.n());
  for (int c : g.carrier) carrier_set.set(c);
  auto incomp = [&](int a, int b) { return !l.leq(a, b) && !l.leq(b, a); };
  std::vector<std::vector<int>> out = {{}};
  std::vector<int> pick;
  std::function<void(size_t)> go = [&](size_t k) {
    for (size_t t = k; t < g.carrier.size(); ++t) {
      int u = g.carrier[t];
      bool anti = true;
      for (int w : pick)
        if (!incomp(w, u)) {
          anti = false;
          break;
        }
      if (!anti) continue;
      pick.push_back(u);
      bool nested = true;
      if (pick.size() >= 2) {
        int j = l.join(pick);
        // Subsets were nested when their prefix was accepted; only the full
        // pick's own join needs checking, plus its sub-antichains through u.
        nested = (j >= 0 && !carrier_set.test(j)) && is_nested(l, g, pick);
      }
      if (nested) {
        out.push_back(pick);
        go(t + 1);
      }
      pick.pop_back();
    }
  };
  go(0);
  return out;
}

GroebnerBasis groebner_basis(const MeetSemilattice& l, const BuildingSet& g) {
  GroebnerBasis gb;
  gb.ctx = make_algebra_context(l, g);
  gb.order_descriptor =
      "degree-lexicographic; variables ordered by rank ascending, then label";
  int nv = (int)gb.ctx.vars.size();
  std::set<Poly> seen;
  auto add = [&](const Poly& p) {
    if (!p.empty() && seen.insert(p).second) gb.members.push_back(p);
  };

  // Family one: squarefree monomials of minimal non-nested antichains.
  for (auto& t : minimal_non_nested(l, g)) {
    Mono m(nv, 0);
    for (int e : t) m[gb.ctx.var_of_element[e]] = 1;
    Poly p;
    p[m] = 1;
    add(p);
  }

  // Family two: for each nested antichain T and carrier element B strictly
  // above join(T): prod_{A in T} x_A * (sum_{C in carrier, C >= B} x_C)^d
  // with d the atom-join distance from join(T) to B.
  for (auto& t : nested_antichains(l, g)) {
    int jt = l.join(t);
    if (jt < 0) continue;  // cannot happen for nested t
    for (int b : g.carrier) {
      if (!l.lt(jt, b)) continue;
      int d = join_distance(l, jt, b);
      Poly sum;
      for (size_t v = 0; v < gb.ctx.vars.size(); ++v)
        if (l.leq(b, gb.ctx.vars[v])) {
          Mono m(nv, 0);
          m[v] = 1;
          sum[m] = 1;
        }
      Poly p = poly_pow(sum, d);
      Mono pre(nv, 0);
      for (int e : t) pre[gb.ctx.var_of_element[e]] = 1;
      Poly prefix;
      prefix[pre] = 1;
      add(poly_mul(prefix, p));
    }
  }

  std::sort(gb.members.begin(), gb.members.end(),
            [](const Poly& a, const Poly& b) {
              const Mono& la = a.begin()->first;
              const Mono& lb = b.begin()->first;
              if (!(la == lb)) return mono_less(lb, la);
              return a < b;
            });
  return gb;
}

Poly normal_form(Poly p, const GroebnerBasis& gb) {
  Poly rem;
  while (!p.empty()) {
    auto lead = *p.begin();
    bool reduced = false;
    for (auto& g : gb.members) {
      const Mono& glt = g.begin()->first;
      if (!mono_divides(glt, lead.first)) continue;
      // Subtract (coeff * quotient) * g; divisors are monic so coefficients
      // stay integral.
      Mono q = mono_div(lead.first, glt);
      Poly shifted;
      Poly qp;
      qp[q] = lead.second;
      shifted = poly_mul(qp, g);
      p = poly_sub(std::move(p), shifted);
      reduced = true;
      break;
    }
    if (!reduced) {
      rem[lead.first] = lead.second;
      p.erase(lead.first);
    }
  }
  return rem;
}

BuchbergerReport buchberger_check(const GroebnerBasis& gb) {
  BuchbergerReport rep;
  int m = (int)gb.members.size();
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Mono& a = gb.members[i].begin()->first;
      const Mono& b = gb.members[j].begin()->first;
      Mono lcm(a.size());
      for (size_t k = 0; k < a.size(); ++k) lcm[k] = std::max(a[k], b[k]);
      Poly qa, qb;
      qa[mono_div(lcm, a)] = 1;
      qb[mono_div(lcm, b)] = 1;
      Poly s = poly_sub(poly_mul(qa, gb.members[i]),
                        poly_mul(qb, gb.members[j]));
      Poly r = normal_form(std::move(s), gb);
      if (!r.empty()) {
        rep.ok = false;
        rep.pair_i = i;
        rep.pair_j = j;
        rep.remainder = poly_to_string(r, gb.ctx.var_labels);
        return rep;
      }
    }
  return rep;
}

MonomialBasis monomial_basis(const MeetSemilattice& l, const BuildingSet& g) {
  MonomialBasis out;
  out.ctx = make_algebra_context(l, g);
  int nv = (int)out.ctx.vars.size();
  SimplicialComplex nested = nested_set_complex(l, g);
  // nested's vertices are carrier labels in carrier order.
  std::vector<int> vert_elem;
  for (auto& lab : nested.vertices) vert_elem.push_back(l.at(lab));

  std::vector<std::vector<Mono>> monos;
  auto place = [&](const Mono& m) {
    int d = mono_degree(m);
    if ((int)monos.size() <= d) monos.resize(d + 1);
    monos[d].push_back(m);
  };
  for (auto& face : nested.faces) {
    std::vector<int> elems;
    for (int v : face) elems.push_back(vert_elem[v]);
    // Exponent bound per element: strictly less than the distance from the
    // join of the strictly smaller members of the set.
    std::vector<int> bound;
    bool dead = false;
    for (int a : elems) {
      std::vector<int> lower;
      for (int b : elems)
        if (b != a && l.lt(b, a)) lower.push_back(b);
      int ap = l.join(lower);
      int d = join_distance(l, ap, a);
      if (d <= 1) {
        dead = true;
        break;
      }
      bound.push_back(d);
    }
    if (dead) continue;
    // Enumerate exponents 1 <= m(a) <= bound(a)-1, mixed radix.
    std::vector<int> exp(elems.size(), 1);
    while (true) {
      Mono m(nv, 0);
      for (size_t k = 0; k < elems.size(); ++k)
        m[out.ctx.var_of_element[elems[k]]] = exp[k];
      place(m);
      int k = (int)elems.size() - 1;
      while (k >= 0 && exp[k] == bound[k] - 1) exp[k--] = 1;
      if (k < 0) break;
      exp[k] += 1;
    }
  }
  for (auto& level : monos)
    std::sort(level.begin(), level.end(),
              [](const Mono& a, const Mono& b) { return mono_less(a, b); });
  out.by_degree = std::move(monos);
  return out;
}

std::vector<Int> hilbert_series(const MeetSemilattice& l,
                                const BuildingSet& g) {
  MonomialBasis mb = monomial_basis(l, g);
  GroebnerBasis gb = groebner_basis(l, g);
  int nv = (int)gb.ctx.vars.size();

  // Standard monomials enumerated inside the box cut out by the pure-power
  // leading terms x_B^d(0̂,B), then filtered by divisibility against every
  // leading term.
  std::vector<int> box(nv);
  long long cells = 1;
  for (int v = 0; v < nv; ++v) {
    box[v] = join_distance(l, l.bottom, gb.ctx.vars[v]);
    cells *= box[v];
    if (cells > 2000000) fail(Err::TooLarge, "standard monomial box too large");
  }
  std::vector<Mono> lts;
  for (auto& p : gb.members) lts.push_back(p.begin()->first);

  std::set<Mono> standard;
  Mono m(nv, 0);
  std::function<void(int)> walk = [&](int v) {
    if (v == nv) {
      for (auto& lt : lts)
        if (mono_divides(lt, m)) return;
      standard.insert(m);
      return;
    }
    for (int e = 0; e < box[v]; ++e) {
      m[v] = e;
      walk(v + 1);
    }
    m[v] = 0;
  };
  walk(0);

  std::set<Mono> from_basis;
  for (auto& level : mb.by_degree)
    for (auto& mm : level) from_basis.insert(mm);
  if (standard != from_basis)
    fail(Err::CheckDisagreement,
         "monomial basis and standard monomials disagree");

  std::vector<Int> h(mb.by_degree.size(), 0);
  for (size_t d = 0; d < mb.by_degree.size(); ++d)
    h[d] = (Int)mb.by_degree[d].size();
  while (!h.empty() && h.back() == 0) h.pop_back();
  return h;
}

}  // namespace wonder
