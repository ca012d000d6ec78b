/// @file matrix.cpp
#include "moducert/matrix.hpp"

#include <algorithm>

#include "moducert/errors.hpp"

namespace moducert {

ReducedForm matrix_reduce(const QMatrix& m) {
  ReducedForm out;
  out.rref = m;
  QMatrix& a = out.rref;
  const Index rows = a.rows();
  const Index cols = a.cols();

  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    // Deterministic pivot: first row at or below r with a nonzero entry.
    Index piv = -1;
    for (Index i = r; i < rows; ++i) {
      if (!a(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const Rational inv = Rational(1) / a(r, c);
    for (Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || a(i, c).is_zero()) continue;
      const Rational f = a(i, c);
      for (Index j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.rank = r;

  // Canonical kernel basis: one column per free column, ascending.
  std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
  for (Index c : out.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  const Index nfree = cols - out.rank;
  out.kernel = QMatrix::Zero(cols, nfree);
  Index k = 0;
  for (Index c = 0; c < cols; ++c) {
    if (is_pivot[static_cast<size_t>(c)]) continue;
    out.kernel(c, k) = Rational(1);
    for (Index p = 0; p < out.rank; ++p) {
      out.kernel(out.pivot_cols[static_cast<size_t>(p)], k) = -a(p, c);
    }
    ++k;
  }
  return out;
}

bool is_rref(const QMatrix& m) {
  const ReducedForm rf = matrix_reduce(m);
  return rf.rref == m;
}

QMatrix stack_rows(const QMatrix& a, const QMatrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) {
    throw ContextMismatch("stack_rows: column counts differ");
  }
  QMatrix out(a.rows() + b.rows(), a.cols());
  out.topRows(a.rows()) = a;
  out.bottomRows(b.rows()) = b;
  return out;
}

QMatrix row_space_basis(const QMatrix& m) {
  const ReducedForm rf = matrix_reduce(m);
  return rf.rref.topRows(rf.rank);
}

bool in_row_space(const QMatrix& basis, const QRowVector& v) {
  if (basis.rows() == 0) {
    for (Index j = 0; j < v.cols(); ++j) {
      if (!v(j).is_zero()) return false;
    }
    return true;
  }
  QMatrix stacked(basis.rows() + 1, basis.cols());
  stacked.topRows(basis.rows()) = basis;
  stacked.bottomRows(1) = v;
  return matrix_reduce(stacked).rank == matrix_reduce(basis).rank;
}

QMatrix solve_square(const QMatrix& s, const QMatrix& rhs) {
  if (s.rows() != s.cols()) throw DomainError("solve_square: non-square");
  if (s.rows() != rhs.rows()) {
    throw ContextMismatch("solve_square: row counts differ");
  }
  QMatrix aug(s.rows(), s.cols() + rhs.cols());
  aug.leftCols(s.cols()) = s;
  aug.rightCols(rhs.cols()) = rhs;
  const ReducedForm rf = matrix_reduce(aug);
  // Invertibility: every column of s is a pivot column of the augmentation.
  if (rf.rank < s.cols() ||
      rf.pivot_cols[static_cast<size_t>(s.cols() - 1)] != s.cols() - 1) {
    throw DomainError("solve_square: singular system");
  }
  return rf.rref.topRows(s.cols()).rightCols(rhs.cols());
}

}  // namespace moducert
