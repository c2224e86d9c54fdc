#pragma once

#include <Eigen/Core>
#include <vector>

#include "qshuffle/errors.hpp"

namespace qsh {

template <class S>
using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

template <class S>
using Vec = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
bool is_zero_matrix(const Mat<S>& m) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <class S>
Mat<S> zero_matrix(Eigen::Index rows, Eigen::Index cols) {
  Mat<S> m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = S(0);
  return m;
}

template <class S>
Mat<S> identity_matrix(Eigen::Index n) {
  Mat<S> m = zero_matrix<S>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

template <class Ring>
struct BareissResult {
  int rank = 0;
  typename Ring::Scalar det;  // meaningful for square input only
};

// Fraction-free (Bareiss) elimination. Works over any integral domain with
// exact division: every intermediate entry is a minor of the input, so the
// division by the previous pivot is exact. Column skips are allowed, which
// makes the routine rank-revealing; the determinant of a square matrix is
// the last pivot up to the row-swap sign (zero if the rank is deficient).
template <class Ring>
BareissResult<Ring> bareiss(const Ring& ring, Mat<typename Ring::Scalar> m) {
  using S = typename Ring::Scalar;
  BareissResult<Ring> res;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  S prev = ring.one();
  S last_pivot = ring.one();
  int sign = 1;
  Eigen::Index row = 0;
  bool skipped_column = false;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = row; i < rows; ++i) {
      if (!is_zero(m(i, col))) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) {
      skipped_column = true;
      continue;
    }
    if (pivot_row != row) {
      m.row(pivot_row).swap(m.row(row));
      sign = -sign;
    }
    const S pivot = m(row, col);
    for (Eigen::Index i = row + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j)
        m(i, j) = ring.exact_div(S(m(i, j) * pivot - m(i, col) * m(row, j)), prev);
      m(i, col) = ring.zero();
    }
    prev = pivot;
    last_pivot = pivot;
    ++row;
    ++res.rank;
  }
  if (rows == cols && res.rank == rows && !skipped_column) {
    res.det = (sign > 0) ? last_pivot : S(-last_pivot);
  } else {
    res.det = ring.zero();
  }
  return res;
}

template <class Ring>
int rank(const Ring& ring, const Mat<typename Ring::Scalar>& m) {
  return bareiss(ring, m).rank;
}

template <class Ring>
typename Ring::Scalar determinant(const Ring& ring, const Mat<typename Ring::Scalar>& m) {
  if (m.rows() != m.cols()) throw SizeMismatch("determinant of non-square matrix");
  return bareiss(ring, m).det;
}

template <class Ring>
struct RrefResult {
  Mat<typename Ring::Scalar> r;
  std::vector<int> pivot_cols;
  int rank = 0;
};

// Reduced row echelon form; field scalars only. Pivot columns are chosen
// greedily left to right, which is what makes quotient representatives
// deterministic (bases are stored in lexicographic order).
template <class Ring>
RrefResult<Ring> rref(const Ring& ring, Mat<typename Ring::Scalar> m) {
  static_assert(Ring::is_field, "rref needs a field");
  using S = typename Ring::Scalar;
  RrefResult<Ring> res;
  const Eigen::Index rows = m.rows(), cols = m.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = row; i < rows; ++i) {
      if (!is_zero(m(i, col))) {
        pivot_row = i;
        break;
      }
    }
    if (pivot_row < 0) continue;
    if (pivot_row != row) m.row(pivot_row).swap(m.row(row));
    const S inv = ring.inv(m(row, col));
    for (Eigen::Index j = col; j < cols; ++j) m(row, j) = m(row, j) * inv;
    for (Eigen::Index i = 0; i < rows; ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const S f = m(i, col);
      for (Eigen::Index j = col; j < cols; ++j) m(i, j) = m(i, j) - f * m(row, j);
    }
    res.pivot_cols.push_back(static_cast<int>(col));
    ++row;
  }
  res.rank = static_cast<int>(res.pivot_cols.size());
  res.r = std::move(m);
  return res;
}

// Columns span the kernel of m.
template <class Ring>
Mat<typename Ring::Scalar> kernel_basis(const Ring& ring, const Mat<typename Ring::Scalar>& m) {
  using S = typename Ring::Scalar;
  auto e = rref(ring, m);
  const Eigen::Index cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  Mat<S> k = zero_matrix<S>(cols, cols - e.rank);
  Eigen::Index out = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    k(free_col, out) = S(1);
    for (int pr = 0; pr < e.rank; ++pr)
      k(e.pivot_cols[static_cast<std::size_t>(pr)], out) = S(-e.r(pr, free_col));
    ++out;
  }
  return k;
}

// Solves B x = y for each column y of rhs; B must have full column rank and
// the system must be consistent.
template <class Ring>
Mat<typename Ring::Scalar> solve_in_basis(const Ring& ring, const Mat<typename Ring::Scalar>& b,
                                          const Mat<typename Ring::Scalar>& rhs) {
  using S = typename Ring::Scalar;
  Mat<S> aug(b.rows(), b.cols() + rhs.cols());
  aug << b, rhs;
  auto e = rref(ring, aug);
  for (int c : e.pivot_cols)
    if (c >= b.cols()) throw Error("solve_in_basis: inconsistent system");
  if (e.rank != b.cols()) throw Error("solve_in_basis: basis is rank-deficient");
  Mat<S> x = zero_matrix<S>(b.cols(), rhs.cols());
  for (int r = 0; r < e.rank; ++r)
    for (Eigen::Index j = 0; j < rhs.cols(); ++j) x(e.pivot_cols[r], j) = e.r(r, b.cols() + j);
  return x;
}

}  // namespace qsh
