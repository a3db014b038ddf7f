// Smith and Hermite normal forms over Z, integer kernels and saturation.

#ifndef OCCULT_NORMAL_FORMS_HPP_
#define OCCULT_NORMAL_FORMS_HPP_

#include <cstddef>
#include <vector>

#include "matrix.hpp"

namespace occult {

// left * M * right = diag(diag), with d_1 | d_2 | ... and zeros last.
struct SNFDecomposition {
  IntMatrix left;
  std::vector<Integer> diag;
  IntMatrix right;

  std::size_t rank() const {
    std::size_t r = 0;
    for (const auto& d : diag)
      if (d != 0) ++r;
    return r;
  }
};

// Pivot: smallest nonzero |entry| of the active block, ties broken by lowest
// row then lowest column. The pivot is made to divide the whole active block
// before moving on, which produces the divisibility chain directly.
inline SNFDecomposition smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix a = m;
  IntMatrix left = IntMatrix::identity(rows);
  IntMatrix right = IntMatrix::identity(cols);
  const std::size_t steps = std::min(rows, cols);
  std::size_t t = 0;
  for (; t < steps; ++t) {
    for (;;) {
      std::size_t pi = rows, pj = cols;
      Integer best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Integer v = abs_value(a(i, j));
          if (pi == rows || v < best) { best = v; pi = i; pj = j; }
        }
      if (pi == rows) goto finished;
      a.swap_rows(t, pi);
      left.swap_rows(t, pi);
      a.swap_cols(t, pj);
      right.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        Integer q = trunc_div(a(i, t), a(t, t));
        a.add_row(i, t, Integer(-q));
        left.add_row(i, t, Integer(-q));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        Integer q = trunc_div(a(t, j), a(t, t));
        a.add_col(j, t, Integer(-q));
        right.add_col(j, t, Integer(-q));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) { bad = i; break; }
      if (bad == rows) break;
      a.add_row(t, bad, Integer(1));
      left.add_row(t, bad, Integer(1));
    }
    if (a(t, t) < 0) {
      a.negate_row(t);
      left.negate_row(t);
    }
  }
finished:
  SNFDecomposition out;
  out.diag.assign(steps, Integer(0));
  for (std::size_t i = 0; i < steps; ++i) out.diag[i] = a(i, i);
  out.left = std::move(left);
  out.right = std::move(right);
  return out;
}

// Saturated integer kernel {x : A x = 0}; columns of the result form a basis.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  auto snf = smith_normal_form(a);
  const std::size_t r = snf.rank();
  return snf.right.columns(r, a.cols() - r);
}

// Columns span a primitive sublattice of Z^n (torsion-free cokernel).
inline bool is_primitive_matrix(const IntMatrix& m) {
  auto snf = smith_normal_form(m);
  if (snf.rank() != m.cols()) return false;
  for (std::size_t i = 0; i < snf.rank(); ++i)
    if (snf.diag[i] != 1) return false;
  return true;
}

// (Q-span of the columns) intersected with Z^n.
inline IntMatrix saturate(const IntMatrix& basis) {
  IntMatrix k = integer_kernel(basis.transpose());
  if (k.cols() == 0) return IntMatrix::identity(basis.rows());
  return integer_kernel(k.transpose());
}

// Row-style Hermite normal form: transform * M = H, H in row echelon form
// with positive pivots and entries above each pivot reduced into [0, pivot).
// Zero rows are dropped from `h`.
struct HNFDecomposition {
  IntMatrix h;
  IntMatrix transform;
};

inline HNFDecomposition hermite_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    // Euclid on column c among rows r..end.
    for (;;) {
      std::size_t p = a.rows();
      for (std::size_t i = r; i < a.rows(); ++i)
        if (a(i, c) != 0 && (p == a.rows() || abs_value(a(i, c)) < abs_value(a(p, c)))) p = i;
      if (p == a.rows()) break;
      a.swap_rows(r, p);
      u.swap_rows(r, p);
      bool done = true;
      for (std::size_t i = r + 1; i < a.rows(); ++i) {
        if (a(i, c) == 0) continue;
        Integer q = floor_div(a(i, c), a(r, c));
        a.add_row(i, r, Integer(-q));
        u.add_row(i, r, Integer(-q));
        if (a(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) {
      a.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(a(i, c), a(r, c));
      if (q == 0) continue;
      a.add_row(i, r, Integer(-q));
      u.add_row(i, r, Integer(-q));
    }
    ++r;
  }
  HNFDecomposition out;
  out.h = IntMatrix(r, a.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.h(i, j) = a(i, j);
  out.transform = std::move(u);
  return out;
}

// Canonical form of the sublattice spanned by the columns of `basis`.
inline IntMatrix sublattice_canonical(const IntMatrix& basis) {
  return hermite_normal_form(basis.transpose()).h;
}

}  // namespace occult

#endif  // OCCULT_NORMAL_FORMS_HPP_
