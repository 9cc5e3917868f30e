#include "wonder/fan.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "wonder/linalg.hpp"

namespace wonder {

static void require_atomic(const MeetSemilattice& l) {
  for (int x = 0; x < l.n(); ++x) {
    std::vector<int> at;
    for (int a : l.atoms)
      if (l.leq(a, x)) at.push_back(a);
    if (l.join(at) != x)
      fail(Err::NotAtomic,
           "'" + l.label(x) + "' is not the join of the atoms below it",
           l.label(x));
  }
}

static int matrix_rank(const std::vector<std::vector<Rat>>& rows, int cols) {
  QMatrix m((int)rows.size(), cols);
  for (int r = 0; r < (int)rows.size(); ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  return rref(m);
}

NestedFan nested_fan(const MeetSemilattice& l, const BuildingSet& g) {
  require_atomic(l);
  NestedFan f;
  f.ambient_dim = (int)l.atoms.size();
  for (int a : l.atoms) f.atom_labels.push_back(l.label(a));

  auto ranks = l.p.ranks();
  std::vector<int> order = g.carrier;
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ranks[a] != ranks[b]) return ranks[a] < ranks[b];
    return l.label(a) < l.label(b);
  });
  std::vector<int> ray_of_element(l.n(), -1);
  for (int gi : order) {
    std::vector<Rat> v(f.ambient_dim, Rat(0));
    for (int i = 0; i < f.ambient_dim; ++i)
      if (l.leq(l.atoms[i], gi)) v[i] = 1;
    ray_of_element[gi] = (int)f.rays.size();
    f.rays.push_back(std::move(v));
    f.ray_labels.push_back(l.label(gi));
  }

  SimplicialComplex nested = nested_set_complex(l, g);
  for (auto& face : nested.faces) {
    if (face.empty()) continue;
    std::vector<int> cone;
    for (int v : face) cone.push_back(ray_of_element[l.at(nested.vertices[v])]);
    std::sort(cone.begin(), cone.end());
    std::vector<std::vector<Rat>> rows;
    for (int r : cone) rows.push_back(f.rays[r]);
    if (matrix_rank(rows, f.ambient_dim) != (int)cone.size()) {
      std::vector<std::string> labs;
      for (int r : cone) labs.push_back(f.ray_labels[r]);
      fail(Err::NotSimplicial,
           "cone {" + join_labels(labs, ",") + "} is not simplicial",
           join_labels(labs, ","));
    }
    f.cones.push_back(std::move(cone));
  }
  std::sort(f.cones.begin(), f.cones.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return f;
}

// Membership of x in the simplicial cone spanned by the given rays: the
// coordinates in the (independent) ray basis must exist and be nonnegative.
static bool in_simplicial_cone(const NestedFan& f, const std::vector<int>& cone,
                               const std::vector<Rat>& x) {
  int n = f.ambient_dim, k = (int)cone.size();
  QMatrix m(n, k + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < k; ++j) m.at(i, j) = f.rays[cone[j]][i];
    m.at(i, k) = x[i];
  }
  rref(m);
  // Consistency: no pivot in the last column; coefficients from the
  // augmented column must be >= 0.
  std::vector<Rat> coef(k, Rat(0));
  for (int r = 0; r < m.rows; ++r) {
    int pc = -1;
    for (int c = 0; c <= k; ++c)
      if (m.at(r, c) != 0) {
        pc = c;
        break;
      }
    if (pc == k) return false;  // inconsistent
    if (pc >= 0) coef[pc] = m.at(r, k);
  }
  for (auto& c : coef)
    if (c < 0) return false;
  return true;
}

// Generators of cone(S) ∩ cone(T): solve V λ = W μ with λ, μ >= 0 by
// enumerating candidate supports; every minimal-support nonnegative solution
// is kept, which is enough to span the intersection.
static std::vector<std::vector<Rat>> cone_intersection_generators(
    const NestedFan& f, const std::vector<int>& s, const std::vector<int>& t) {
  int n = f.ambient_dim;
  int ks = (int)s.size(), kt = (int)t.size(), k = ks + kt;
  // System rows: sum_i lambda_i v_i - sum_j mu_j w_j = 0.
  std::vector<std::vector<Rat>> out;
  for (int mask = 1; mask < (1 << k); ++mask) {
    int cnt = __builtin_popcount((unsigned)mask);
    QMatrix m(n, cnt);
    std::vector<int> cols;
    for (int c = 0; c < k; ++c)
      if (mask & (1 << c)) cols.push_back(c);
    for (int i = 0; i < n; ++i)
      for (int cc = 0; cc < cnt; ++cc) {
        int c = cols[cc];
        m.at(i, cc) =
            c < ks ? f.rays[s[c]][i] : -f.rays[t[c - ks]][i];
      }
    auto kern = kernel_basis(m);
    if (kern.size() != 1) continue;  // extreme rays live on rank-deficit-1
    auto& z = kern[0];
    bool pos = true, neg = true, full = true;
    for (auto& v : z) {
      if (v < 0) pos = false;
      if (v > 0) neg = false;
      if (v == 0) full = false;
    }
    if (!full) continue;  // support must be exactly the chosen set
    if (!pos && !neg) continue;
    std::vector<Rat> zz = z;
    if (neg)
      for (auto& v : zz) v = -v;
    // Project onto the ambient space through the S-side.
    std::vector<Rat> x(n, Rat(0));
    for (int cc = 0; cc < cnt; ++cc) {
      int c = cols[cc];
      if (c < ks)
        for (int i = 0; i < n; ++i) x[i] += zz[cc] * f.rays[s[c]][i];
    }
    if (!is_zero_vector(x)) out.push_back(normalize_line(x));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FanCheck verify_fan(const NestedFan& f) {
  FanCheck rep;
  int m = (int)f.cones.size();
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) pairs.emplace_back(i, j);
  rep.exhaustive = (int)pairs.size() <= 200;
  if (!rep.exhaustive) {
    // Fisher-Yates prefix with a fixed seed; mt19937_64 output is
    // standardized, so the sample is identical across platforms.
    std::mt19937_64 rng(0x5eedf00dULL);
    for (size_t i = 0; i < 200; ++i) {
      size_t j = i + (size_t)(rng() % (uint64_t)(pairs.size() - i));
      std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(200);
    std::sort(pairs.begin(), pairs.end());
  }
  for (auto& [i, j] : pairs) {
    rep.pairs_checked += 1;
    std::vector<int> common;
    std::set_intersection(f.cones[i].begin(), f.cones[i].end(),
                          f.cones[j].begin(), f.cones[j].end(),
                          std::back_inserter(common));
    auto gens = cone_intersection_generators(f, f.cones[i], f.cones[j]);
    for (auto& x : gens) {
      if (!in_simplicial_cone(f, common, x)) {
        rep.ok = false;
        rep.cone_a = i;
        rep.cone_b = j;
        std::vector<std::string> parts;
        for (auto& c : x) parts.push_back(rat_to_string(c));
        rep.detail = "point (" + join_labels(parts, ",") +
                     ") lies in both cones but not in their common face";
        return rep;
      }
    }
  }
  return rep;
}

std::string export_fan(const NestedFan& f) {
  std::ostringstream os;
  os << "AMBIENT " << f.ambient_dim << "\n";
  for (size_t r = 0; r < f.rays.size(); ++r) {
    os << "RAY " << f.ray_labels[r];
    for (auto& c : f.rays[r]) os << " " << rat_to_string(c);
    os << "\n";
  }
  std::vector<std::string> cone_lines;
  for (auto& cone : f.cones) {
    std::vector<std::string> labs;
    for (int r : cone) labs.push_back(f.ray_labels[r]);
    std::sort(labs.begin(), labs.end());
    cone_lines.push_back("CONE " + join_labels(labs, " "));
  }
  std::sort(cone_lines.begin(), cone_lines.end());
  for (auto& line : cone_lines) os << line << "\n";
  return os.str();
}

}  // namespace wonder
