/// @file transform.cpp
#include "moducert/transform.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include <json.hpp>

#include "moducert/errors.hpp"

namespace moducert {

int ResolutionGraph::index_of(const std::string& label) const {
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].label == label) return static_cast<int>(i);
  }
  return -1;
}

const CurveNode& ResolutionGraph::node(const std::string& label) const {
  const int i = index_of(label);
  if (i < 0) throw UsageError("ResolutionGraph: unknown label '" + label + "'");
  return nodes[static_cast<size_t>(i)];
}

long ResolutionGraph::intersection(const std::string& a, const std::string& b) const {
  if (a == b) throw UsageError("ResolutionGraph: self-intersection via edges");
  long total = 0;
  for (const GraphEdge& e : edges) {
    if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) total += e.count;
  }
  return total;
}

long ResolutionGraph::total_multiplicity() const {
  long total = 0;
  for (const CurveNode& n : nodes) total += n.mult;
  return total;
}

ResolutionGraph ResolutionGraph::from_json_text(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("graph JSON: ") + e.what());
  }
  ResolutionGraph g;
  try {
    if (!j.is_object() || !j.contains("nodes")) {
      throw UsageError("graph JSON: missing 'nodes'");
    }
    std::set<std::string> labels;
    for (const auto& n : j.at("nodes")) {
      CurveNode node;
      node.label = n.at("label").get<std::string>();
      node.self_int = n.at("self_int").get<long>();
      node.mult = n.at("mult").get<long>();
      const std::string kind = n.at("kind").get<std::string>();
      if (kind == "exceptional") {
        node.exceptional = true;
      } else if (kind == "strict") {
        node.exceptional = false;
      } else {
        throw UsageError("graph JSON: kind must be 'strict' or 'exceptional'");
      }
      if (node.mult < 0) throw UsageError("graph JSON: negative multiplicity");
      if (!labels.insert(node.label).second) {
        throw UsageError("graph JSON: duplicate label '" + node.label + "'");
      }
      g.nodes.push_back(std::move(node));
    }
    if (j.contains("edges")) {
      for (const auto& e : j.at("edges")) {
        GraphEdge edge;
        edge.a = e.at("a").get<std::string>();
        edge.b = e.at("b").get<std::string>();
        edge.count = e.value("count", 1L);
        if (edge.a == edge.b) throw UsageError("graph JSON: self-loop edge");
        if (edge.count < 1) throw UsageError("graph JSON: edge count < 1");
        if (g.index_of(edge.a) < 0 || g.index_of(edge.b) < 0) {
          throw UsageError("graph JSON: edge references unknown label");
        }
        g.edges.push_back(std::move(edge));
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("graph JSON: ") + e.what());
  }
  if (g.nodes.empty()) throw UsageError("graph JSON: no nodes");
  return g;
}

std::string ResolutionGraph::to_json_text() const {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const CurveNode& n : nodes) {
    j["nodes"].push_back({{"label", n.label},
                          {"self_int", n.self_int},
                          {"mult", n.mult},
                          {"kind", n.exceptional ? "exceptional" : "strict"}});
  }
  j["edges"] = nlohmann::ordered_json::array();
  for (const GraphEdge& e : edges) {
    j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"count", e.count}});
  }
  return j.dump(2);
}

PullbackCheck validate_pullback(const ResolutionGraph& g) {
  PullbackCheck out;
  out.ok = true;
  for (const CurveNode& e : g.nodes) {
    if (!e.exceptional) continue;
    long sum = e.mult * e.self_int;
    for (const CurveNode& d : g.nodes) {
      if (d.label == e.label) continue;
      sum += d.mult * g.intersection(d.label, e.label);
    }
    if (sum != 0) {
      out.ok = false;
      out.violations.push_back("component '" + e.label +
                               "': fibre pairing is " + std::to_string(sum) +
                               ", expected 0");
    }
  }
  return out;
}

Strategy strategy_from_string(const std::string& s) {
  if (s == "lex") return Strategy::Lex;
  if (s == "max-mult") return Strategy::MaxMult;
  throw UsageError("strategy must be 'lex' or 'max-mult', got '" + s + "'");
}

std::string strategy_name(Strategy s) {
  return s == Strategy::Lex ? "lex" : "max-mult";
}

namespace {

/// Deterministic processing order: the strategy compares among candidates.
std::vector<size_t> strategy_order(const ResolutionGraph& g, Strategy s,
                                   bool exceptional_first) {
  std::vector<size_t> idx;
  for (size_t i = 0; i < g.nodes.size(); ++i) idx.push_back(i);
  std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    const CurveNode& na = g.nodes[a];
    const CurveNode& nb = g.nodes[b];
    if (exceptional_first && na.exceptional != nb.exceptional) {
      return na.exceptional;
    }
    if (s == Strategy::MaxMult && na.mult != nb.mult) return na.mult > nb.mult;
    return na.label < nb.label;
  });
  return idx;
}

}  // namespace

ForwardTrace forward_run(const ResolutionGraph& g, Strategy s) {
  ForwardTrace out;
  std::vector<long> left;
  for (const CurveNode& n : g.nodes) left.push_back(n.mult);
  long remaining = g.total_multiplicity();

  int active = -1;
  while (remaining > 0) {
    if (active < 0 || left[static_cast<size_t>(active)] == 0) {
      // Pick the next component to drain.
      active = -1;
      for (size_t i : strategy_order(g, s, /*exceptional_first=*/false)) {
        if (left[i] > 0) {
          active = static_cast<int>(i);
          break;
        }
      }
    }
    --left[static_cast<size_t>(active)];
    --remaining;
    out.steps.push_back({g.nodes[static_cast<size_t>(active)].label, remaining});
  }
  out.trivialized = remaining == 0;
  return out;
}

BackwardTrace backward_run(const ResolutionGraph& g, Strategy s) {
  BackwardTrace out;
  out.ok = true;
  for (size_t i : strategy_order(g, s, /*exceptional_first=*/true)) {
    const CurveNode& c = g.nodes[i];
    if (c.mult == 0) continue;
    ComponentPhase ph;
    ph.label = c.label;
    ph.exceptional = c.exceptional;
    const long b = std::labs(c.self_int);

    // Own transforms: the j-th happens on the ruled surface F_{b (j-1)}
    // and pushes the invariant up by b; the running trace has
    // self-intersection -b j.
    ph.invariant_history.push_back(0);
    for (int j = 1; j <= c.mult; ++j) {
      ph.own.push_back({j, -b * static_cast<long>(j)});
      ph.invariant_history.push_back(b * static_cast<long>(j));
    }

    if (c.exceptional) {
      // Restorations of the other components pass through the intersection
      // points and step the invariant back down one unit at a time; the
      // fibre pairing identity makes the count exactly b * mult for a
      // valid graph.
      long inv = ph.invariant_history.back();
      for (const CurveNode& d : g.nodes) {
        if (d.label == c.label) continue;
        const long units = d.mult * g.intersection(d.label, c.label);
        for (long u = 0; u < units; ++u) {
          if (inv == 0) {
            throw InvariantUnderflow(
                "backward_run: invariant of '" + c.label +
                "' would drop below zero (pullback identity violated)");
          }
          --inv;
          ph.invariant_history.push_back(inv);
        }
      }
      ph.final_invariant = inv;
      ph.restored_trivial = inv == 0;
      if (!ph.restored_trivial) {
        out.ok = false;
        out.notes.push_back("component '" + c.label +
                            "' is not restored to a product surface (final invariant " +
                            std::to_string(inv) + ")");
      }
    } else {
      ph.final_invariant = ph.invariant_history.back();
      ph.restored_trivial = ph.final_invariant == 0;
    }
    out.phases.push_back(std::move(ph));
  }
  return out;
}

long ruled_invariant(long a, long b) { return std::labs(a - b); }

long blowup_section_selfint(long a, long b) {
  // Triple products on the blowup of a threefold along a curve C with
  // normal bundle O(a) + O(b), exceptional divisor E, and a divisor D
  // meeting C in b points:
  //   (pull D)^2 . E = 0,  (pull D) . E^2 = -(D . C),  E^3 = -(a + b).
  // The induced section is (pull D - E) restricted to E, so its square is
  // the alternating binomial sum of the axioms.
  const long d_dot_c = b;
  const long pull2_e = 0;
  const long pull_e2 = -d_dot_c;
  const long e3 = -(a + b);
  return pull2_e - 2 * pull_e2 + e3;
}

long section_space_dim(long n, bool through_point) {
  if (n < 1) throw UsageError("section_space_dim: n must be >= 1");
  return through_point ? n : n + 1;
}

ChoiceLedger choice_dimension(const ResolutionGraph& g, Strategy s) {
  ChoiceLedger out;
  out.total = 0;
  if (g.total_multiplicity() == 0) return out;

  out.entries.push_back(
      {"fibre point", 0, 1, "choice of the degeneration centre on the fibre"});
  out.total += 1;

  const std::vector<size_t> order = strategy_order(g, s, /*exceptional_first=*/true);
  std::vector<bool> restored(g.nodes.size(), false);

  for (size_t i : order) {
    const CurveNode& c = g.nodes[i];
    if (c.mult == 0) {
      restored[i] = true;
      continue;
    }
    if (c.exceptional) {
      out.entries.push_back({c.label, 0, 0,
                             "exceptional component: choices do not move the "
                             "associated model"});
    } else if (c.self_int >= 0) {
      out.entries.push_back({c.label, 0, 0,
                             "nonnegative self-intersection: the negative "
                             "section is unique"});
    } else {
      const long b = -c.self_int;
      // Intersection points with components not yet restored pin the
      // section at those points, once per unit of multiplicity.
      long constraints = 0;
      for (size_t k = 0; k < g.nodes.size(); ++k) {
        if (k == i || restored[k]) continue;
        constraints += g.nodes[k].mult * g.intersection(g.nodes[k].label, c.label);
      }
      for (int j = 2; j <= c.mult; ++j) {
        const long n = b * static_cast<long>(j - 1);
        const long dim = std::max(n + 1 - constraints, 0L);
        out.entries.push_back(
            {c.label, j, dim,
             "section of the " + std::to_string(n) +
                 "-ruled surface through " + std::to_string(constraints) +
                 " pinned point(s)"});
        out.total += dim;
      }
    }
    restored[i] = true;
  }
  return out;
}

}  // namespace moducert
