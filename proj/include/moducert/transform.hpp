/// @file transform.hpp
/// Resolution graphs of degenerate fibres, the forward drain of elementary
/// transforms, the backward reconstruction with ruled-surface invariant
/// certificates, and the dimension ledger of the choices made on the way.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "moducert/rational.hpp"

namespace moducert {

struct CurveNode {
  std::string label;
  long self_int = 0;
  long mult = 0;
  bool exceptional = false;
};

struct GraphEdge {
  std::string a;
  std::string b;
  long count = 1;
};

/// Weighted dual graph of a degenerate fibre: components with self-
/// intersections and multiplicities, edges with intersection counts.
struct ResolutionGraph {
  std::vector<CurveNode> nodes;
  std::vector<GraphEdge> edges;

  int index_of(const std::string& label) const;  ///< -1 when absent
  const CurveNode& node(const std::string& label) const;
  /// Total intersection count between two distinct components.
  long intersection(const std::string& a, const std::string& b) const;
  long total_multiplicity() const;

  /// Parses the JSON shape {"nodes":[{label,self_int,mult,kind}],
  /// "edges":[{a,b,count}]}; kind is "strict" or "exceptional".
  /// Throws UsageError on malformed input.
  static ResolutionGraph from_json_text(const std::string& text);
  std::string to_json_text() const;
};

struct PullbackCheck {
  bool ok = false;
  std::vector<std::string> violations;
};

/// The resolved fibre class must meet every exceptional component
/// trivially: sum_D m_D (D . E) + m_E E^2 = 0 for each exceptional E.
PullbackCheck validate_pullback(const ResolutionGraph& g);

enum class Strategy { Lex, MaxMult };

Strategy strategy_from_string(const std::string& s);
std::string strategy_name(Strategy s);

struct ForwardStep {
  std::string label;
  long remaining = 0;  ///< total multiplicity left after this transform
};

/// Drains the fibre one elementary transform at a time: the active
/// component loses one unit of multiplicity per step and is drained to
/// zero before the strategy picks the next; exactly total_multiplicity()
/// steps happen.
struct ForwardTrace {
  std::vector<ForwardStep> steps;
  bool trivialized = false;
};

ForwardTrace forward_run(const ResolutionGraph& g, Strategy s);

struct OwnTransform {
  int j = 0;             ///< 1-based index of the transform on this component
  long trace_self_int = 0;  ///< self-intersection -|beta| j of the running trace
};

struct ComponentPhase {
  std::string label;
  bool exceptional = false;
  std::vector<OwnTransform> own;
  /// Ruled-surface invariant along the phase: 0, |b|, 2|b|, ..., |b| m for
  /// the component's own transforms; for exceptional components the
  /// neighbour restorations then step it back down to 0 one unit at a time.
  std::vector<long> invariant_history;
  long final_invariant = 0;
  bool restored_trivial = false;  ///< final invariant zero (product surface)
};

/// Reconstructs the blowup chain component by component.  Every exceptional
/// component must end with invariant zero (its restored surface is a
/// product); the neighbour identity guarantees exactly |b| m unit
/// decrements when the pullback check passes, and a graph violating it
/// underflows (InvariantUnderflow).
struct BackwardTrace {
  std::vector<ComponentPhase> phases;
  bool ok = false;
  std::vector<std::string> notes;
};

BackwardTrace backward_run(const ResolutionGraph& g, Strategy s);

/// |a - b|: the ruled-surface type distance of the two section squares.
long ruled_invariant(long a, long b);

/// Self-intersection of the induced section after blowing up a threefold
/// along a curve with normal bundle of degrees (a, b), evaluated through
/// the triple-product axioms on the exceptional divisor; equals b - a.
long blowup_section_selfint(long a, long b);

/// Dimension of the space of sections of the n-ruled surface in the
/// distinguished class: n+1 in total, n through a fixed point; n >= 1.
long section_space_dim(long n, bool through_point);

struct ChoiceEntry {
  std::string label;  ///< component label or "fibre point"
  int j = 0;          ///< own-transform index the choice belongs to (0: none)
  long dim = 0;
  std::string reason;
};

struct ChoiceLedger {
  std::vector<ChoiceEntry> entries;
  long total = 0;
};

/// Moduli ledger of the reconstruction: one dimension for the fibre point
/// when any transform happens; for every own transform j >= 2 of a strict
/// component with negative self-intersection -n/(j-1)... precisely: the
/// section choice on the ruled surface F_n with n = |beta| (j-1)
/// contributes max(n+1-c, 0), where c counts intersection points with
/// components not yet restored; exceptional components and components with
/// nonnegative self-intersection contribute nothing.  Components are
/// processed exceptional-first, then by the strategy order.
ChoiceLedger choice_dimension(const ResolutionGraph& g, Strategy s);

}  // namespace moducert
