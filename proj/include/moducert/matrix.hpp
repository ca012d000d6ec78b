/// @file matrix.hpp
/// Exact linear algebra over the rationals on top of Eigen dense types.
///
/// Eigen supplies storage and expressions; the reductions themselves are
/// written here because Eigen's decompositions pivot by magnitude, which is
/// meaningless over an exact field.  Pivoting is deterministic: the first row
/// with a nonzero entry in the current column wins.
#pragma once

#include <Eigen/Core>

#include <vector>

#include "moducert/rational.hpp"

namespace moducert {

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using QRowVector = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;
using Index = Eigen::Index;

/// Output of Gauss-Jordan reduction over the rationals.
struct ReducedForm {
  QMatrix rref;                   ///< reduced row echelon form of the input
  std::vector<Index> pivot_cols;  ///< pivot column per nonzero row, ascending
  Index rank = 0;
  QMatrix kernel;  ///< columns form the canonical right-kernel basis
};

/// Reduced row echelon form with pivot data and a right-kernel basis.
/// The kernel basis is canonical: one column per free column (ascending),
/// carrying 1 in that free coordinate.  rank + kernel.cols() == m.cols().
ReducedForm matrix_reduce(const QMatrix& m);

/// True when m is already in reduced row echelon form.
bool is_rref(const QMatrix& m);

/// Stacks rows of a and b (must agree on column count).
QMatrix stack_rows(const QMatrix& a, const QMatrix& b);

/// Canonical basis of the row space: the nonzero rows of the rref.
/// Two row sets span the same space iff their canonical bases are identical.
QMatrix row_space_basis(const QMatrix& m);

/// Membership of a row vector in the row space of basis (any row set).
bool in_row_space(const QMatrix& basis, const QRowVector& v);

/// Solves s * x = rhs for the square invertible s; throws DomainError when s
/// is singular.  Used for expressing a subspace in a chart frame.
QMatrix solve_square(const QMatrix& s, const QMatrix& rhs);

}  // namespace moducert
