/// @file grassmann.hpp
/// Charts on the Grassmannian of half-dimensional subspaces of R^2,
/// invariance conditions cutting out the locus of R-submodules, exact
/// component splitting with smoothness certificates, and set-theoretic
/// union-cover verification.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "moducert/artinian.hpp"
#include "moducert/polyops.hpp"

namespace moducert {

/// Affine chart on the Grassmannian centred at a subspace: rows carry the
/// identity on the base's pivot columns and one fresh variable (offset by
/// the base entry) on every other column.  Variables are named row-major
/// with single letters a..z skipping 'o', then doubled letters.
struct ChartFrame {
  ArtinAlgebra alg{0};
  Submodule base;
  std::vector<Index> pivots;     ///< ascending pivot columns of the base
  std::vector<Index> free_cols;  ///< ascending non-pivot columns
  Ctx ctx;                        ///< chart variables, row-major
  std::vector<std::vector<Poly>> rows;  ///< k x ambient polynomial matrix

  /// Context index of the variable at (row, position-within-free-columns).
  int var_index(Index row, Index free_pos) const {
    return static_cast<int>(row * static_cast<Index>(free_cols.size()) + free_pos);
  }
};

/// Chart name for the k-th fresh variable (0-based): a, b, c, ... (no 'o'),
/// then aa, ab, ... (no name containing 'o').
std::string chart_var_name(int k);

ChartFrame chart_at(const Submodule& base);

/// One polynomial per (action, row, non-pivot column): the obstruction for
/// the chart rows to span an R-submodule.  The action image of each row
/// must equal the row combination forced by the pivot coordinates; these
/// are the residual entries on the non-pivot columns.  Canonically
/// normalised and deduplicated.
PolySystem invariance_system(const ChartFrame& frame);

/// Coordinates of a submodule in the chart, when it lies there (its pivot
/// minor must be invertible); nullopt otherwise.
std::optional<QVector> chart_coords(const ChartFrame& frame, const Submodule& m);

/// One branch of a component split: a triangular substitution (solved
/// variable -> value in the surviving variables), the free variables, and
/// any constraints the split could not resolve.
struct Branch {
  std::map<int, Poly> triangular;
  std::vector<int> free_vars;
  PolySystem residual;
  std::vector<Poly> split_trail;  ///< linear factors added during splitting

  /// Full constraint list: (v - value) for every triangular entry, then the
  /// residual generators.
  std::vector<Poly> constraints(const Ctx& ctx) const;

  bool parametrized() const { return residual.gens.empty(); }
};

/// Splits the vanishing set into branches through the origin by exact
/// division against linear factors, recursively, after linear elimination.
/// Branches are deduplicated by their canonical constraint form, and a
/// branch contained in another kept branch is discarded.
std::vector<Branch> branch_components(const PolySystem& sys);

struct ComponentCertificate {
  bool certified = false;  ///< triangularisation complete, Jacobian agrees
  bool smooth = false;
  Index dimension = 0;      ///< tangent dimension at the base point
  Index jacobian_rank = 0;
  Index ambient_vars = 0;
};

/// Smoothness certificate at the origin of the chart: when the branch is a
/// graph of polynomial maps (no residual), it is smooth of dimension
/// #free-vars, and the Jacobian rank of the constraints must confirm this.
ComponentCertificate certify_component(const Branch& b, const Ctx& ctx);

enum class CoverVerdict { Covered, Inconclusive, NotCovered };

struct CoverResult {
  CoverVerdict verdict = CoverVerdict::Inconclusive;
  std::string detail;
  std::optional<QVector> witness;  ///< point on the variety missing all parts
};

/// Set-theoretic check that the given branches cover the vanishing set:
/// (i) every branch parametrization satisfies the system, and (ii) every
/// product of one constraint per branch reduces to zero against the system
/// generators.  When (ii) fails, a randomized hunt over the system's own
/// branch decomposition looks for an uncovered rational point; finding one
/// yields NotCovered with the witness, otherwise the result is inconclusive
/// (the division certificate alone cannot decide).
CoverResult verify_union_cover(const PolySystem& sys, const std::vector<Branch>& comps,
                               std::uint64_t seed);

struct LocatedBranch {
  std::size_t index = 0;            ///< position in the branch list
  std::vector<QVector> samples;     ///< chart points of the probing family
  std::string detail;
};

/// Identifies which branch carries the degenerating kernel family attached
/// to a distinguished-locus point (direction a, slope (u : v)): the pair
/// family on the invertible side is sampled at small parameter values, its
/// kernels are expressed in the chart, and the unique branch vanishing on
/// all samples wins (ties resolve to the largest tangent dimension).
LocatedBranch locate_branch_through_family(const ChartFrame& frame,
                                           const std::vector<Branch>& branches,
                                           const QVector& a, const Rational& u,
                                           const Rational& v);

}  // namespace moducert
