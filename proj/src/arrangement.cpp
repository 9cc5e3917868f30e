#include "wonder/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace wonder {

// Partition of coordinates equated on s: i ~ j iff x_i = x_j holds on s.
static std::vector<std::vector<int>> equality_partition(const QSubspace& s) {
  int n = s.ambient;
  std::vector<int> head(n + 1, 0);
  for (int i = 1; i <= n; ++i) head[i] = i;
  auto equated = [&](int i, int j) {
    std::vector<Rat> row(n, Rat(0));
    row[i - 1] = 1;
    row[j - 1] = -1;
    QSubspace h = subspace_from_equations(n, {row});
    return h.contains(s);
  };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (head[j] == j && equated(i, j)) head[j] = head[i];
  std::map<int, std::vector<int>> blocks;
  for (int i = 1; i <= n; ++i) blocks[head[i]].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [h, b] : blocks) out.push_back(b);
  return out;
}

// The subspace {x : x_i = x_j within each block}.
static QSubspace partition_subspace(int n,
                                    const std::vector<std::vector<int>>& blocks) {
  std::vector<std::vector<Rat>> rows;
  for (auto& b : blocks)
    for (size_t k = 1; k < b.size(); ++k) {
      std::vector<Rat> row(n, Rat(0));
      row[b[0] - 1] = 1;
      row[b[k] - 1] = -1;
      rows.push_back(std::move(row));
    }
  return subspace_from_equations(n, rows);
}

IntersectionLattice intersection_lattice(const QSubspaceArrangement& arr) {
  for (auto& s : arr.subspaces) {
    if (s.ambient != arr.ambient)
      fail(Err::DimensionMismatch, "arrangement member ambient mismatch");
    if (s.codim() == 0)
      fail(Err::BadInput, "arrangement member equals the ambient space");
  }
  // Closure under pairwise intersections, breadth-first from the members.
  std::vector<QSubspace> flats;
  std::set<QSubspace> seen;
  for (auto& s : arr.subspaces)
    if (seen.insert(s).second) flats.push_back(s);
  for (size_t i = 0; i < flats.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      QSubspace c = intersect(flats[i], flats[j]);
      if (seen.insert(c).second) flats.push_back(c);
    }

  // Labels: coordinate-equality partitions when every flat is exactly the
  // subspace its partition describes; positional names otherwise.
  int n = arr.ambient;
  bool braid_like = true;
  std::vector<std::string> labels(flats.size());
  for (size_t i = 0; i < flats.size() && braid_like; ++i) {
    auto blocks = equality_partition(flats[i]);
    if (partition_subspace(n, blocks) == flats[i])
      labels[i] = partition_label(blocks);
    else
      braid_like = false;
  }
  if (!braid_like)
    for (size_t i = 0; i < flats.size(); ++i)
      labels[i] = "S" + std::to_string(i + 1);

  std::vector<std::string> all_labels = {"0"};
  for (auto& lab : labels) all_labels.push_back(lab);
  std::vector<std::pair<std::string, std::string>> rels;
  for (size_t i = 0; i < flats.size(); ++i) {
    rels.emplace_back("0", labels[i]);
    for (size_t j = 0; j < flats.size(); ++j)
      if (i != j && flats[i].contains(flats[j]) && !(flats[i] == flats[j]))
        rels.emplace_back(labels[i], labels[j]);
  }

  IntersectionLattice out;
  out.l = build_semilattice(all_labels, rels);
  out.subspace.assign(out.l.n(), ambient_space(n));
  out.codim.assign(out.l.n(), 0);
  for (size_t i = 0; i < flats.size(); ++i) {
    int idx = out.l.at(labels[i]);
    out.subspace[idx] = flats[i];
    out.codim[idx] = flats[i].codim();
  }
  return out;
}

QSubspaceArrangement braid_arrangement(int n) {
  if (n < 2 || n > 7)
    fail(Err::TooLarge, "braid arrangement supported for 2 <= n <= 7");
  QSubspaceArrangement arr;
  arr.ambient = n;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      std::vector<Rat> row(n, Rat(0));
      row[i - 1] = 1;
      row[j - 1] = -1;
      arr.subspaces.push_back(subspace_from_equations(n, {row}));
    }
  return arr;
}

QSubspaceArrangement restrict_to_sum_zero(const QSubspaceArrangement& arr) {
  std::vector<Rat> ones(arr.ambient, Rat(1));
  QSubspace h = subspace_from_equations(arr.ambient, {ones});
  QSubspaceArrangement out;
  out.ambient = arr.ambient;
  std::set<QSubspace> seen;
  for (auto& s : arr.subspaces) {
    QSubspace c = intersect(s, h);
    if (seen.insert(c).second) out.subspaces.push_back(c);
  }
  return out;
}

QSubspaceArrangement truncate(const IntersectionLattice& il, int k) {
  std::vector<int> keep;
  for (int i = 0; i < il.l.n(); ++i)
    if (il.codim[i] >= k) keep.push_back(i);
  QSubspaceArrangement out;
  out.ambient = il.subspace.empty() ? 0 : il.subspace[0].ambient;
  for (int i : keep) {
    bool maximal = true;
    for (int j : keep)
      if (j != i && il.subspace[j].contains(il.subspace[i]) &&
          !(il.subspace[j] == il.subspace[i])) {
        maximal = false;
        break;
      }
    if (maximal) out.subspaces.push_back(il.subspace[i]);
  }
  return out;
}

GeometricCheck is_geometric_building_set(const IntersectionLattice& il,
                                         const std::vector<int>& g) {
  GeometricCheck out;
  auto chk = is_building_set(il.l, g);
  if (!chk.ok) {
    out.ok = false;
    out.combinatorial = false;
    out.witness = chk.witness;
    return out;
  }
  out.combinatorial = true;
  for (int x = 0; x < il.l.n(); ++x) {
    if (x == il.l.bottom) continue;
    int sum = 0;
    for (int f : chk.building->factor_map[x]) sum += il.codim[f];
    if (sum != il.codim[x]) {
      out.ok = false;
      out.witness = x;
      out.witness_cd = il.codim[x];
      out.witness_sum = sum;
      return out;
    }
  }
  out.ok = true;
  return out;
}

// Largest lattice element (smallest flat) whose subspace contains s;
// -1 when only the ambient space does.
static int max_element_containing(const IntersectionLattice& il,
                                  const QSubspace& s) {
  int best = -1;
  for (int i = 0; i < il.l.n(); ++i) {
    if (i == il.l.bottom) continue;
    if (!il.subspace[i].contains(s)) continue;
    if (best < 0 || il.codim[i] > il.codim[best]) best = i;
  }
  if (best >= 0) {
    // The flats containing s are intersection-closed, so the smallest is
    // unique and lies inside every other candidate.
    for (int i = 0; i < il.l.n(); ++i)
      if (i != il.l.bottom && il.subspace[i].contains(s) &&
          !il.subspace[i].contains(il.subspace[best]))
        fail(Err::InternalNotSemilattice,
             "flats containing a subspace have no unique smallest member");
  }
  return best;
}

ModelPoint encode_model_point(const IntersectionLattice& il,
                              const std::vector<Rat>& x,
                              const std::vector<std::vector<Rat>>& lines) {
  int n = il.subspace.empty() ? 0 : il.subspace[0].ambient;
  if ((int)x.size() != n) fail(Err::DimensionMismatch, "point dimension mismatch");
  ModelPoint p;
  p.x = x;
  // H_1: smallest flat through x.
  QSubspace cur = subspace_from_span(n, {x});
  if (is_zero_vector(x)) cur = subspace_from_span(n, {});
  int h = max_element_containing(il, cur);
  if (h < 0) {
    if (!lines.empty())
      fail(Err::TooManyLines, "point lies in no member; no lines expected");
    return p;  // empty chain, generic point
  }
  p.chain.push_back(h);
  QSubspace hs = il.subspace[h];
  for (size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if ((int)line.size() != n)
      fail(Err::DimensionMismatch, "line dimension mismatch");
    if (is_zero_vector(line)) fail(Err::BadInput, "zero vector is not a line");
    for (auto& b : hs.basis())
      if (dot(line, b) != 0)
        fail(Err::LineNotOrthogonal,
             "line " + std::to_string(i + 1) +
                 " is not orthogonal to its chain element",
             std::to_string(i + 1));
    QSubspace span = subspace_sum(hs, subspace_from_span(n, {line}));
    int z = max_element_containing(il, span);
    if (z >= 0) {
      if (i + 1 == lines.size())
        fail(Err::NotTerminal,
             "last direction still lies inside '" + il.l.label(z) + "'",
             il.l.label(z));
      p.chain.push_back(z);
      p.lines.push_back(line);
      hs = il.subspace[z];
    } else {
      if (i + 1 < lines.size())
        fail(Err::TooManyLines, "chain terminated before line " +
                                    std::to_string(i + 2));
      p.lines.push_back(line);
    }
  }
  if (lines.empty())
    fail(Err::NotTerminal,
         "point lies in '" + il.l.label(h) + "' but no lines were given",
         il.l.label(h));
  return p;
}

std::vector<int> classify_stratum(const IntersectionLattice& il,
                                  const ModelPoint& p) {
  return encode_model_point(il, p.x, p.lines).chain;
}

}  // namespace wonder
