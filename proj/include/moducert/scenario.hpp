/// @file scenario.hpp
/// Named verification scenarios: each runs one battery of exact checks and
/// returns a deterministic Report.  The command-line driver and the test
/// suites are thin wrappers over these.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moducert/report.hpp"
#include "moducert/transform.hpp"

namespace moducert {

/// Built-in resolution graphs:
///   "2c"      — one strict component of self-intersection -d, multiplicity 2;
///   "picard1" — one strict component of positive self-intersection d,
///               multiplicity 2;
///   "chain"   — an exceptional (-2)-component of multiplicity 3 meeting a
///               strict component of multiplicity 6 in one point;
///   "zero"    — one component of multiplicity 0.
ResolutionGraph builtin_graph(const std::string& name, int d = 1);

/// Deterministic pseudo-random graph on which the pullback identity holds
/// by construction: a strict carrier of multiplicity s plus exceptional
/// components E_i with multiplicity s*k_i and edge count k_i*b_i.
ResolutionGraph random_admissible_graph(std::uint64_t seed);

/// Degeneration-kernel battery: dimensions, action closure, and the exact
/// equality of the t->0 kernel-family limit with the direct construction.
Report run_gamma_scenario(int d_max, int trials, std::uint64_t seed);

/// Chart battery at the base kernel for one d: invariance equations,
/// linear elimination, component branching, identification of the
/// distinguished component by the degenerating pair family, smoothness and
/// dimension certificates, and the union-cover verdict.
Report run_chart_scenario(int d, std::uint64_t seed);

/// Chart-transition battery for d = 1..d_max: involution, fixed locus,
/// fibrewise linearity, the quadric-cone identification, and numeric
/// cross-checks through module arithmetic.
Report run_transition_scenario(int d_max);

/// Chern-character battery: pushforward values, short-exact-sequence
/// additivity, and the strict-transform defect identity on random blowup
/// chains.
Report run_chern_scenario(int chains, std::uint64_t seed);

/// Exhaustive rank-inequality battery over m <= m_max, r_i <= r_max,
/// including the tightness correspondence of the filtration bound.
Report run_ineq_scenario(int m_max, int r_max);

Report run_forward_scenario(const ResolutionGraph& g, Strategy s);
Report run_backward_scenario(const ResolutionGraph& g, Strategy s);
Report run_choice_scenario(const ResolutionGraph& g, Strategy s);

/// Elementary-transform battery: built-in scenarios plus `graphs` random
/// admissible graphs (forward step counts, backward restoration, choice
/// totals, strategy independence, negative controls).
Report run_transform_scenario(int graphs, std::uint64_t seed);

/// Full battery: per-d gamma/chart/transition plus the d-independent
/// inequality, Chern, and transform scenarios.  ds must be non-empty with
/// every entry >= 1.
Report run_suite(const std::vector<int>& ds, std::uint64_t seed);

}  // namespace moducert
