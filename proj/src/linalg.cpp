#include "wonder/linalg.hpp"

#include <algorithm>

namespace wonder {

int rref(QMatrix& m) {
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int piv = -1;
    for (int r = rank; r < m.rows; ++r)
      if (m.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != rank)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(rank, c));
    Rat s = m.at(rank, col);
    for (int c = 0; c < m.cols; ++c) m.at(rank, c) /= s;
    for (int r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      Rat f = m.at(r, col);
      if (f == 0) continue;
      for (int c = 0; c < m.cols; ++c) m.at(r, c) -= f * m.at(rank, c);
    }
    ++rank;
  }
  QMatrix out(rank, m.cols);
  for (int r = 0; r < rank; ++r)
    for (int c = 0; c < m.cols; ++c) out.at(r, c) = m.at(r, c);
  m = std::move(out);
  return rank;
}

std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m) {
  QMatrix r = m;
  rref(r);
  std::vector<int> pivot_col(r.rows, -1);
  std::vector<bool> is_pivot(m.cols, false);
  for (int row = 0; row < r.rows; ++row)
    for (int c = 0; c < r.cols; ++c)
      if (r.at(row, c) != 0) {
        pivot_col[row] = c;
        is_pivot[c] = true;
        break;
      }
  std::vector<std::vector<Rat>> out;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> x(m.cols, Rat(0));
    x[f] = 1;
    for (int row = 0; row < r.rows; ++row) x[pivot_col[row]] = -r.at(row, f);
    out.push_back(std::move(x));
  }
  return out;
}

bool QSubspace::contains_point(const std::vector<Rat>& x) const {
  if ((int)x.size() != ambient)
    fail(Err::DimensionMismatch, "point dimension mismatch");
  for (int r = 0; r < eq.rows; ++r) {
    Rat s = 0;
    for (int c = 0; c < eq.cols; ++c) s += eq.at(r, c) * x[c];
    if (s != 0) return false;
  }
  return true;
}

bool QSubspace::contains(const QSubspace& other) const {
  if (ambient != other.ambient)
    fail(Err::DimensionMismatch, "ambient dimension mismatch");
  // other ⊆ this iff this's equations are implied by other's.
  QMatrix stack(other.eq.rows + eq.rows, ambient);
  for (int r = 0; r < other.eq.rows; ++r)
    for (int c = 0; c < ambient; ++c) stack.at(r, c) = other.eq.at(r, c);
  for (int r = 0; r < eq.rows; ++r)
    for (int c = 0; c < ambient; ++c)
      stack.at(other.eq.rows + r, c) = eq.at(r, c);
  return rref(stack) == other.eq.rows;
}

bool QSubspace::operator<(const QSubspace& o) const {
  if (ambient != o.ambient) return ambient < o.ambient;
  if (eq.rows != o.eq.rows) return eq.rows < o.eq.rows;
  return std::lexicographical_compare(eq.a.begin(), eq.a.end(), o.eq.a.begin(),
                                      o.eq.a.end());
}

std::vector<std::vector<Rat>> QSubspace::basis() const {
  QMatrix m = eq;
  if (m.cols != ambient) m = QMatrix(0, ambient);  // zero equations
  return kernel_basis(m);
}

QSubspace subspace_from_equations(int ambient,
                                  const std::vector<std::vector<Rat>>& rows) {
  if (ambient < 0) fail(Err::BadInput, "negative ambient dimension");
  QMatrix m((int)rows.size(), ambient);
  for (int r = 0; r < (int)rows.size(); ++r) {
    if ((int)rows[r].size() != ambient)
      fail(Err::DimensionMismatch, "equation row dimension mismatch");
    for (int c = 0; c < ambient; ++c) m.at(r, c) = rows[r][c];
  }
  rref(m);
  QSubspace s;
  s.ambient = ambient;
  s.eq = std::move(m);
  s.eq.cols = ambient;
  return s;
}

QSubspace subspace_from_span(int ambient,
                             const std::vector<std::vector<Rat>>& vectors) {
  QMatrix v((int)vectors.size(), ambient);
  for (int r = 0; r < (int)vectors.size(); ++r) {
    if ((int)vectors[r].size() != ambient)
      fail(Err::DimensionMismatch, "span vector dimension mismatch");
    for (int c = 0; c < ambient; ++c) v.at(r, c) = vectors[r][c];
  }
  // Equations for the span: a basis of its orthogonal complement.
  return subspace_from_equations(ambient, kernel_basis(v));
}

QSubspace ambient_space(int n) { return subspace_from_equations(n, {}); }

QSubspace intersect(const QSubspace& a, const QSubspace& b) {
  if (a.ambient != b.ambient)
    fail(Err::DimensionMismatch, "ambient dimension mismatch");
  std::vector<std::vector<Rat>> rows;
  for (int r = 0; r < a.eq.rows; ++r) {
    std::vector<Rat> row(a.ambient);
    for (int c = 0; c < a.ambient; ++c) row[c] = a.eq.at(r, c);
    rows.push_back(std::move(row));
  }
  for (int r = 0; r < b.eq.rows; ++r) {
    std::vector<Rat> row(b.ambient);
    for (int c = 0; c < b.ambient; ++c) row[c] = b.eq.at(r, c);
    rows.push_back(std::move(row));
  }
  return subspace_from_equations(a.ambient, rows);
}

QSubspace subspace_sum(const QSubspace& a, const QSubspace& b) {
  if (a.ambient != b.ambient)
    fail(Err::DimensionMismatch, "ambient dimension mismatch");
  auto vs = a.basis();
  for (auto& v : b.basis()) vs.push_back(v);
  return subspace_from_span(a.ambient, vs);
}

QSubspace orthogonal_complement(const QSubspace& a) {
  return subspace_from_equations(a.ambient, a.basis());
}

Rat dot(const std::vector<Rat>& x, const std::vector<Rat>& y) {
  if (x.size() != y.size())
    fail(Err::DimensionMismatch, "dot product dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

bool is_zero_vector(const std::vector<Rat>& x) {
  for (auto& v : x)
    if (v != 0) return false;
  return true;
}

std::vector<Rat> normalize_line(const std::vector<Rat>& v) {
  if (is_zero_vector(v)) fail(Err::BadInput, "zero vector does not span a line");
  std::vector<Rat> out = v;
  Rat lead = 0;
  for (auto& c : out)
    if (c != 0) {
      lead = c;
      break;
    }
  for (auto& c : out) c /= lead;
  return out;
}

}  // namespace wonder
