#pragma once

#include <string>
#include <vector>

#include "wonder/util.hpp"

namespace wonder {

// Dense exact-rational matrix with reduced row echelon form as the canonical
// shape for subspace identity tests.
struct QMatrix {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  QMatrix() = default;
  QMatrix(int r, int c) : rows(r), cols(c), a((size_t)r * c) {}
  Rat& at(int r, int c) { return a[(size_t)r * cols + c]; }
  const Rat& at(int r, int c) const { return a[(size_t)r * cols + c]; }
  bool operator==(const QMatrix& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
};

// In-place reduced row echelon form; returns rank. Zero rows are dropped.
int rref(QMatrix& m);

// Basis of the right kernel {x : m x = 0}, deterministic (free columns in
// ascending order, pivot entries back-substituted).
std::vector<std::vector<Rat>> kernel_basis(const QMatrix& m);

// Linear subspace of Q^n stored as its canonical equation matrix (the
// subspace is the kernel of `eq`). Equality of subspaces = equality of forms.
struct QSubspace {
  int ambient = 0;
  QMatrix eq;  // RREF, full row rank

  int codim() const { return eq.rows; }
  int dim() const { return ambient - eq.rows; }
  bool contains_point(const std::vector<Rat>& x) const;
  bool contains(const QSubspace& other) const;  // other ⊆ this
  bool operator==(const QSubspace& o) const {
    return ambient == o.ambient && eq == o.eq;
  }
  bool operator<(const QSubspace& o) const;  // arbitrary total order
  std::vector<std::vector<Rat>> basis() const;  // spanning basis (kernel)
};

QSubspace subspace_from_equations(int ambient,
                                  const std::vector<std::vector<Rat>>& rows);
QSubspace subspace_from_span(int ambient,
                             const std::vector<std::vector<Rat>>& vectors);
QSubspace ambient_space(int n);
QSubspace intersect(const QSubspace& a, const QSubspace& b);
// span(a ∪ b) computed via bases.
QSubspace subspace_sum(const QSubspace& a, const QSubspace& b);
// Orthogonal complement under the standard dot product.
QSubspace orthogonal_complement(const QSubspace& a);

Rat dot(const std::vector<Rat>& x, const std::vector<Rat>& y);
bool is_zero_vector(const std::vector<Rat>& x);
// Lines are nonzero vectors up to scale; canonical form scales the first
// nonzero coordinate to 1.
std::vector<Rat> normalize_line(const std::vector<Rat>& v);

}  // namespace wonder
