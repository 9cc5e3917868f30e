#include "wonder/group.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace wonder {

Perm perm_identity(int n) {
  Perm p;
  p.img.resize(n);
  for (int i = 0; i < n; ++i) p.img[i] = i;
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c;
  c.img.resize(a.n());
  for (int i = 0; i < a.n(); ++i) c.img[i] = a.img[b.img[i]];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm inv;
  inv.img.resize(a.n());
  for (int i = 0; i < a.n(); ++i) inv.img[a.img[i]] = i;
  return inv;
}

std::vector<Rat> perm_apply(const Perm& a, const std::vector<Rat>& v) {
  if ((int)v.size() != a.n())
    fail(Err::DimensionMismatch, "permutation and vector size mismatch");
  // Coordinates travel with the points: (a v)_{a(i)} = v_i.
  std::vector<Rat> out(v.size());
  for (int i = 0; i < a.n(); ++i) out[a.img[i]] = v[i];
  return out;
}

std::string perm_to_cycles(const Perm& a) {
  std::string out;
  std::vector<bool> seen(a.n(), false);
  for (int i = 0; i < a.n(); ++i) {
    if (seen[i] || a.img[i] == i) continue;
    out += "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) out += " ";
      out += std::to_string(j + 1);
      first = false;
      j = a.img[j];
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

Perm parse_cycles(const std::string& text, int n) {
  if (n <= 0) fail(Err::BadInput, "group degree must be positive");
  Perm p = perm_identity(n);
  const std::string& s = text;
  size_t i = 0;
  auto skip_ws = [&]() {
    while (i < s.size() && (isspace((unsigned char)s[i]) || s[i] == ','))
      ++i;
  };
  skip_ws();
  if (i >= s.size() || s.compare(i, 1, "e") == 0) {
    if (i < s.size()) {
      ++i;
      skip_ws();
      if (i != s.size()) fail(Err::BadCycle, "trailing input after 'e'", text);
    }
    return p;
  }
  std::vector<bool> used(n, false);
  while (i < s.size()) {
    if (s[i] != '(') fail(Err::BadCycle, "expected '(' in cycle string", text);
    ++i;
    std::vector<int> cyc;
    while (true) {
      skip_ws();
      if (i < s.size() && s[i] == ')') {
        ++i;
        break;
      }
      if (i >= s.size() || !isdigit((unsigned char)s[i]))
        fail(Err::BadCycle, "expected a point or ')' in cycle", text);
      int v = 0;
      while (i < s.size() && isdigit((unsigned char)s[i]))
        v = v * 10 + (s[i++] - '0');
      if (v < 1 || v > n)
        fail(Err::BadCycle,
             "point " + std::to_string(v) + " outside 1.." + std::to_string(n),
             text);
      if (used[v - 1])
        fail(Err::BadCycle, "point " + std::to_string(v) + " used twice",
             text);
      used[v - 1] = true;
      cyc.push_back(v - 1);
    }
    if (cyc.empty()) {
      skip_ws();
      continue;  // "()" denotes the identity cycle
    }
    for (size_t k = 0; k < cyc.size(); ++k)
      p.img[cyc[k]] = cyc[(k + 1) % cyc.size()];
    skip_ws();
  }
  return p;
}

PermGroup perm_group(int n, const std::vector<Perm>& generators) {
  for (auto& g : generators)
    if (g.n() != n) fail(Err::DimensionMismatch, "generator degree mismatch");
  PermGroup out;
  out.n = n;
  out.generators = generators;
  std::set<std::vector<int>> seen;
  std::queue<Perm> q;
  Perm e = perm_identity(n);
  seen.insert(e.img);
  q.push(e);
  while (!q.empty()) {
    Perm x = q.front();
    q.pop();
    for (auto& g : generators) {
      Perm y = perm_compose(g, x);
      if (seen.insert(y.img).second) {
        if (seen.size() > 10000)
          fail(Err::OrderCapExceeded, "group order exceeds 10^4");
        q.push(y);
      }
    }
  }
  for (auto& img : seen) {
    Perm p;
    p.img = img;
    out.elements.push_back(std::move(p));
  }
  return out;
}

PermGroup symmetric_group(int n) {
  if (n < 1) fail(Err::BadInput, "degree must be at least 1");
  std::vector<Perm> gens;
  if (n >= 2) {
    Perm t = perm_identity(n);
    std::swap(t.img[0], t.img[1]);
    gens.push_back(t);
    Perm c = perm_identity(n);
    for (int i = 0; i < n; ++i) c.img[i] = (i + 1) % n;
    gens.push_back(c);
  }
  return perm_group(n, gens);
}

std::vector<PermGroup> subgroups(const PermGroup& g) {
  // Cyclic extension: grow each known subgroup by one outside element until
  // nothing new appears. Every subgroup arises through a chain of one-element
  // extensions from the trivial group.
  std::map<std::vector<std::vector<int>>, PermGroup> found;
  auto key_of = [](const PermGroup& h) {
    std::vector<std::vector<int>> k;
    for (auto& e : h.elements) k.push_back(e.img);
    return k;
  };
  PermGroup triv = perm_group(g.n, {});
  std::queue<std::vector<std::vector<int>>> q;
  found[key_of(triv)] = triv;
  q.push(key_of(triv));
  while (!q.empty()) {
    auto hk = q.front();
    q.pop();
    PermGroup h = found[hk];
    std::set<std::vector<int>> in_h(hk.begin(), hk.end());
    for (auto& x : g.elements) {
      if (in_h.count(x.img)) continue;
      auto gens = h.generators;
      gens.push_back(x);
      PermGroup k = perm_group(g.n, gens);
      auto kk = key_of(k);
      if (!found.count(kk)) {
        found[kk] = k;
        q.push(kk);
      }
    }
  }
  std::vector<PermGroup> out;
  for (auto& [k, h] : found) out.push_back(h);
  std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
    if (a.elements.size() != b.elements.size())
      return a.elements.size() < b.elements.size();
    return a.elements < b.elements;
  });
  return out;
}

bool is_elementary_abelian_2(const PermGroup& g) {
  Perm e = perm_identity(g.n);
  for (auto& x : g.elements)
    if (!(perm_compose(x, x) == e)) return false;
  return true;
}

QSubspace invariant_line_span(const PermGroup& h, int n) {
  if (h.n != n) fail(Err::DimensionMismatch, "group degree mismatch");
  // Sign characters: ±1 per generator, kept when the assignment extends
  // consistently to the whole group by multiplicativity.
  int ng = (int)h.generators.size();
  if (ng > 20) fail(Err::TooLarge, "too many generators for character scan");
  std::set<std::map<std::vector<int>, int>> chars;
  for (int mask = 0; mask < (1 << ng); ++mask) {
    std::map<std::vector<int>, int> chi;
    chi[perm_identity(n).img] = 1;
    std::queue<Perm> q;
    q.push(perm_identity(n));
    bool consistent = true;
    while (!q.empty() && consistent) {
      Perm x = q.front();
      q.pop();
      int cx = chi[x.img];
      for (int i = 0; i < ng; ++i) {
        Perm y = perm_compose(h.generators[i], x);
        int want = ((mask >> i) & 1) ? -cx : cx;
        auto it = chi.find(y.img);
        if (it == chi.end()) {
          chi[y.img] = want;
          q.push(y);
        } else if (it->second != want) {
          consistent = false;
          break;
        }
      }
    }
    if (consistent) chars.insert(chi);
  }
  std::vector<std::vector<Rat>> span;
  for (auto& chi : chars) {
    // {v : x v = chi(x) v for all x}: rows v_{x^{-1}(i)} - chi(x) v_i = 0.
    std::vector<std::vector<Rat>> rows;
    for (auto& [img, value] : chi) {
      Perm x;
      x.img = img;
      Perm xi = perm_inverse(x);
      for (int i = 0; i < n; ++i) {
        std::vector<Rat> row(n, Rat(0));
        row[xi.img[i]] += 1;
        row[i] -= value;
        rows.push_back(std::move(row));
      }
    }
    for (auto& v : subspace_from_equations(n, rows).basis()) span.push_back(v);
  }
  return subspace_from_span(n, span);
}

static std::string group_witness(const PermGroup& h) {
  std::vector<std::string> parts;
  for (auto& g : h.generators) parts.push_back(perm_to_cycles(g));
  if (parts.empty()) parts.push_back("e");
  return "<" + join_labels(parts, ",") + ">";
}

ActionArrangement action_arrangement(const PermGroup& g) {
  ActionArrangement out;
  out.ambient = g.n;
  std::map<QSubspace, std::vector<std::string>> dedup;
  for (auto& h : subgroups(g)) {
    QSubspace sp = invariant_line_span(h, g.n);
    if (sp.codim() < 1) continue;  // the whole space carries no information
    dedup[sp].push_back(group_witness(h));
  }
  out.maximal.ambient = g.n;
  for (auto& [sp, ws] : dedup) {
    ActionSubspace as;
    as.space = sp;
    as.witnesses = ws;
    out.all.push_back(std::move(as));
  }
  for (auto& a : out.all) {
    bool maximal = true;
    for (auto& b : out.all)
      if (!(b.space == a.space) && b.space.contains(a.space)) {
        maximal = false;
        break;
      }
    if (maximal) out.maximal.subspaces.push_back(a.space);
  }
  return out;
}

PermGroup stabilizer(const PermGroup& g, const std::vector<Rat>& x,
                     const std::vector<std::vector<Rat>>& lines) {
  auto neg = [](const std::vector<Rat>& v) {
    std::vector<Rat> out = v;
    for (auto& c : out) c = -c;
    return out;
  };
  PermGroup out;
  out.n = g.n;
  for (auto& p : g.elements) {
    if (!(perm_apply(p, x) == x)) continue;
    bool ok = true;
    for (auto& l : lines) {
      auto pl = perm_apply(p, l);
      if (!(pl == l) && !(pl == neg(l))) {
        ok = false;
        break;
      }
    }
    if (ok) out.elements.push_back(p);
  }
  out.generators = out.elements;
  return out;
}

// All chains of nonbottom elements, listed lattice-largest first; the empty
// chain comes first, then chains in lexicographic element order.
static std::vector<std::vector<int>> all_chains(const MeetSemilattice& l) {
  std::vector<std::vector<int>> out = {{}};
  std::vector<int> cur;
  std::function<void(int)> grow = [&](int last) {
    for (int x = 0; x < l.n(); ++x) {
      if (x == l.bottom) continue;
      if (last >= 0 && !l.lt(x, last)) continue;
      cur.push_back(x);
      out.push_back(cur);
      grow(x);
      cur.pop_back();
    }
  };
  grow(-1);
  return out;
}

// Random integer combination of basis vectors, coefficients in [-box, box].
static std::vector<Rat> sample_in(const QSubspace& s, std::mt19937_64& rng,
                                  long long box) {
  std::vector<Rat> x(s.ambient, Rat(0));
  for (auto& b : s.basis()) {
    long long c = (long long)(rng() % (uint64_t)(2 * box + 1)) - box;
    for (int i = 0; i < s.ambient; ++i) x[i] += Rat(c) * b[i];
  }
  return x;
}

AuditReport abelianization_audit(const PermGroup& g, int samples,
                                 unsigned long long seed) {
  if (samples < 1) fail(Err::BadInput, "need at least one sample per stratum");
  int n = g.n;
  // Fixed space of the whole group, and its complement as working ambient.
  std::vector<std::vector<Rat>> fix_rows;
  for (auto& x : g.generators) {
    Perm xi = perm_inverse(x);
    for (int i = 0; i < n; ++i) {
      if (xi.img[i] == i) continue;
      std::vector<Rat> row(n, Rat(0));
      row[xi.img[i]] += 1;
      row[i] -= 1;
      fix_rows.push_back(std::move(row));
    }
  }
  QSubspace fix = subspace_from_equations(n, fix_rows);
  QSubspace e_space = orthogonal_complement(fix);

  QSubspaceArrangement restricted;
  restricted.ambient = n;
  {
    std::set<QSubspace> seen;
    for (auto& m : action_arrangement(g).maximal.subspaces) {
      QSubspace c = intersect(m, e_space);
      if (c == e_space) continue;  // no slicing information
      if (seen.insert(c).second) restricted.subspaces.push_back(c);
    }
  }

  AuditReport rep;
  IntersectionLattice il = intersection_lattice(restricted);

  std::mt19937_64 rng(seed);
  auto chains = all_chains(il.l);
  rep.strata = (int)chains.size();
  for (auto& chain : chains) {
    AuditStratum row;
    for (int c : chain) row.chain.push_back(il.l.label(c));
    row.elementary_abelian_2 = true;
    int got = 0;
    bool have_rep = false;
    for (int s = 0; s < samples; ++s) {
      bool found = false;
      long long box = 10;
      for (int tries = 0; tries < 96 && !found; ++tries) {
        if (tries > 0 && tries % 32 == 0) box *= 10;
        std::vector<Rat> x;
        std::vector<std::vector<Rat>> lines;
        if (chain.empty()) {
          x = sample_in(e_space, rng, box);
        } else {
          x = sample_in(il.subspace[chain[0]], rng, box);
          for (size_t i = 0; i < chain.size(); ++i) {
            QSubspace target = (i + 1 < chain.size())
                                   ? il.subspace[chain[i + 1]]
                                   : e_space;
            QSubspace window =
                intersect(target, orthogonal_complement(il.subspace[chain[i]]));
            auto line = sample_in(window, rng, box);
            lines.push_back(std::move(line));
          }
        }
        try {
          ModelPoint p = encode_model_point(il, x, lines);
          if (p.chain == chain) found = true;
        } catch (const WonderError&) {
          // invalid draw; try again
        }
        if (found) {
          got += 1;
          PermGroup st = stabilizer(g, x, lines);
          if (!is_elementary_abelian_2(st)) row.elementary_abelian_2 = false;
          if (!have_rep) {
            row.x = x;
            row.lines = lines;
            for (auto& e : st.elements)
              row.stabilizer_elements.push_back(perm_to_cycles(e));
            have_rep = true;
          }
        }
      }
      if (!found) {
        row.sampling_exhausted = true;
        break;
      }
    }
    row.sample_ok = (got == samples);
    if (row.sampling_exhausted) rep.exhausted += 1;
    rep.sampled += got;
    if (!row.elementary_abelian_2) rep.all_elementary_abelian_2 = false;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

}  // namespace wonder
