/// @file polyops.hpp
/// Operations on polynomials and polynomial systems: substitution, exact
/// differentiation, Jacobian rank at a point, exact division, reduction by a
/// generator set, and solution-set-preserving linear elimination.
#pragma once

#include <map>
#include <optional>
#include <vector>

#include "moducert/matrix.hpp"
#include "moducert/poly.hpp"

namespace moducert {

/// Substitutes values[i] for variable i wherever the map has an entry;
/// other variables stay.  Values must share p's context.
Poly substitute(const Poly& p, const std::map<int, Poly>& values);

/// Evaluates p at a full rational point (size == context size).
Rational eval_point(const Poly& p, const QVector& point);

/// Exact partial derivative with respect to variable `var`.
Poly derivative(const Poly& p, int var);

/// Jacobian matrix of the system at a rational point: one row per
/// generator, one column per context variable, every entry exact.
QMatrix jacobian_at(const std::vector<Poly>& gens, const QVector& point);

struct JacobianRank {
  QMatrix jacobian;
  Index rank = 0;
};

/// Jacobian together with its exact rank at the point.
JacobianRank jacobian_rank_at(const std::vector<Poly>& gens, const QVector& point);

/// Quotient p / q when the division is exact; throws NotDivisible otherwise.
/// Leading-term cancellation under graded-lex: sound and complete for
/// exact divisibility since the order is multiplicative.
Poly exact_divide(const Poly& p, const Poly& q);

/// Like exact_divide but returns nullopt instead of throwing.
std::optional<Poly> try_exact_divide(const Poly& p, const Poly& q);

/// Remainder of multivariate division of p by the ordered generator list.
/// Deterministic: at each step the first generator whose leading term
/// divides the current leading term fires; a remainder of zero certifies
/// ideal membership.
Poly reduce_by_set(const Poly& p, const std::vector<Poly>& gens);

/// Result of linear elimination: the reduced system plus the fully composed
/// substitution expressing each eliminated variable in surviving ones.
struct Elimination {
  PolySystem reduced;
  std::map<int, Poly> substitution;  ///< eliminated var -> value
};

/// Applies three solution-set-preserving rules to a fixpoint:
///  1. solve v = q from a generator where v occurs in a single degree-one
///     term and nowhere else (latest admissible variable first), then
///     substitute everywhere;
///  2. replace a single-term pure power c*v^k (k >= 2) by v;
///  3. drop a generator that is a polynomial multiple of another kept one.
/// The variety is preserved exactly; substitutions compose so that applying
/// the recorded map extends any solution of the reduced system to one of the
/// original.
Elimination eliminate_linear(const PolySystem& sys);

}  // namespace moducert
