/// @file grassmann.cpp
#include "moducert/grassmann.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace moducert {

std::string chart_var_name(int k) {
  static const std::string alphabet = "abcdefghijklmnpqrstuvwxyz";  // no 'o'
  const int n = static_cast<int>(alphabet.size());
  if (k < 0) throw UsageError("chart_var_name: negative index");
  if (k < n) return std::string(1, alphabet[static_cast<size_t>(k)]);
  const int two = k - n;
  if (two >= n * n) throw UsageError("chart_var_name: too many variables");
  std::string s;
  s += alphabet[static_cast<size_t>(two / n)];
  s += alphabet[static_cast<size_t>(two % n)];
  return s;
}

ChartFrame chart_at(const Submodule& base) {
  ChartFrame f;
  f.alg = base.algebra();
  f.base = base;
  const QMatrix& b = base.basis();
  const Index k = b.rows();
  const Index n = b.cols();

  const ReducedForm rf = matrix_reduce(b);
  f.pivots = rf.pivot_cols;
  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (Index c : f.pivots) is_pivot[static_cast<size_t>(c)] = true;
  for (Index c = 0; c < n; ++c) {
    if (!is_pivot[static_cast<size_t>(c)]) f.free_cols.push_back(c);
  }

  std::vector<std::string> names;
  const int nvars = static_cast<int>(k * static_cast<Index>(f.free_cols.size()));
  names.reserve(static_cast<size_t>(nvars));
  for (int i = 0; i < nvars; ++i) names.push_back(chart_var_name(i));
  f.ctx = make_context(std::move(names));

  f.rows.assign(static_cast<size_t>(k), std::vector<Poly>());
  for (Index r = 0; r < k; ++r) {
    auto& row = f.rows[static_cast<size_t>(r)];
    row.reserve(static_cast<size_t>(n));
    Index free_pos = 0;
    for (Index c = 0; c < n; ++c) {
      Poly entry = Poly::constant(f.ctx, b(r, c));
      if (!is_pivot[static_cast<size_t>(c)]) {
        entry += Poly::var(f.ctx, f.var_index(r, free_pos));
        ++free_pos;
      }
      row.push_back(std::move(entry));
    }
  }
  return f;
}

PolySystem invariance_system(const ChartFrame& frame) {
  const Index k = static_cast<Index>(frame.rows.size());
  const Index n = frame.alg.ambient_dim();
  std::vector<Poly> residuals;

  for (int m = 0; m <= frame.alg.d; ++m) {
    const QMatrix x = frame.alg.action_matrix(m);
    for (Index r = 0; r < k; ++r) {
      // Image of row r under the action: img[c] = sum_c' row[c'] X(c, c').
      std::vector<Poly> img(static_cast<size_t>(n), Poly::zero(frame.ctx));
      for (Index c = 0; c < n; ++c) {
        Poly acc = Poly::zero(frame.ctx);
        for (Index cp = 0; cp < n; ++cp) {
          if (x(c, cp).is_zero()) continue;
          acc += x(c, cp) * frame.rows[static_cast<size_t>(r)][static_cast<size_t>(cp)];
        }
        img[static_cast<size_t>(c)] = std::move(acc);
      }
      // The pivot coordinates force the row combination; membership of the
      // image in the row span is the vanishing of the leftovers on the
      // non-pivot columns.
      for (Index fp = 0; fp < static_cast<Index>(frame.free_cols.size()); ++fp) {
        const Index c = frame.free_cols[static_cast<size_t>(fp)];
        Poly combo = Poly::zero(frame.ctx);
        for (Index j = 0; j < k; ++j) {
          combo += img[static_cast<size_t>(frame.pivots[static_cast<size_t>(j)])] *
                   frame.rows[static_cast<size_t>(j)][static_cast<size_t>(c)];
        }
        Poly res = img[static_cast<size_t>(c)] - combo;
        if (!res.is_zero()) residuals.push_back(std::move(res));
      }
    }
  }
  return PolySystem(frame.ctx, std::move(residuals)).normalized();
}

std::optional<QVector> chart_coords(const ChartFrame& frame, const Submodule& m) {
  const QMatrix& b = m.basis();
  const Index k = static_cast<Index>(frame.pivots.size());
  if (b.rows() != k) return std::nullopt;

  QMatrix s(k, k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      s(i, j) = b(i, frame.pivots[static_cast<size_t>(j)]);
    }
  }
  QMatrix normalized;
  try {
    // Basis with the identity on the pivot columns; exists iff the pivot
    // minor is invertible, i.e. iff m lies in this chart.
    normalized = solve_square(s, b);
  } catch (const DomainError&) {
    return std::nullopt;
  }

  const Index nfree = static_cast<Index>(frame.free_cols.size());
  QVector coords(k * nfree);
  for (Index r = 0; r < k; ++r) {
    for (Index fp = 0; fp < nfree; ++fp) {
      const Index c = frame.free_cols[static_cast<size_t>(fp)];
      coords(r * nfree + fp) =
          normalized(r, c) - frame.base.basis()(r, c);
    }
  }
  return coords;
}

std::vector<Poly> Branch::constraints(const Ctx& ctx) const {
  std::vector<Poly> out;
  for (const auto& [v, val] : triangular) {
    out.push_back(Poly::var(ctx, v) - val);
  }
  for (const Poly& g : residual.gens) out.push_back(g);
  return out;
}

namespace {

/// Distinct linear-factor candidates for splitting p, deterministically
/// ordered: bare variables first, then (for small supports) integer-
/// coefficient combinations drawn from the generator's own coefficients.
std::vector<Poly> split_candidates(const Poly& p) {
  const Ctx& ctx = p.ctx();
  std::vector<Poly> out;
  std::set<std::string> seen;
  const auto push = [&](const Poly& cand) {
    if (cand.is_zero() || cand.degree() != 1) return;
    const Poly n = primitive_normal(cand);
    if (seen.insert(n.str()).second) out.push_back(n);
  };

  const std::set<int> vars = p.vars_present();
  for (int v : vars) push(Poly::var(ctx, v));

  if (vars.size() >= 2 && vars.size() <= 4) {
    std::set<Rational> coeff_set{Rational(1)};
    for (const auto& [e, c] : p.terms()) coeff_set.insert(abs(c));
    std::vector<Rational> coeffs;
    for (const Rational& c : coeff_set) {
      coeffs.push_back(c);
      coeffs.push_back(-c);
      if (coeffs.size() >= 8) break;
    }
    const std::vector<int> vlist(vars.begin(), vars.end());
    // Odometer over {0} + signed coefficients per variable.
    std::vector<size_t> idx(vlist.size(), 0);
    const size_t radix = coeffs.size() + 1;
    while (true) {
      size_t pos = 0;
      while (pos < idx.size()) {
        if (++idx[pos] < radix) break;
        idx[pos] = 0;
        ++pos;
      }
      if (pos == idx.size()) break;
      Poly cand = Poly::zero(ctx);
      int support = 0;
      for (size_t i = 0; i < vlist.size(); ++i) {
        if (idx[i] == 0) continue;
        ++support;
        cand += coeffs[idx[i] - 1] * Poly::var(ctx, vlist[i]);
      }
      if (support >= 2) push(cand);
    }
  }
  return out;
}

struct WorkItem {
  PolySystem sys;
  std::map<int, Poly> subs;
  std::vector<Poly> trail;
};

/// Composes previously recorded substitutions with a later elimination:
/// earlier values are rewritten through the new map, then the maps merge.
std::map<int, Poly> compose_subs(const std::map<int, Poly>& earlier,
                                 const std::map<int, Poly>& later) {
  std::map<int, Poly> out;
  for (const auto& [v, val] : earlier) out.emplace(v, substitute(val, later));
  for (const auto& [v, val] : later) out[v] = val;
  return out;
}

std::string branch_key(const Branch& b, const Ctx& ctx) {
  std::ostringstream os;
  for (const auto& [v, val] : b.triangular) {
    os << ctx->name(v) << "=" << val.str() << ";";
  }
  os << "|";
  for (const Poly& g : b.residual.gens) os << g.str() << ";";
  return os.str();
}

bool through_origin(const Branch& b, const Ctx& ctx) {
  const QVector origin = QVector::Zero(ctx->size());
  for (const Poly& c : b.constraints(ctx)) {
    if (!eval_point(c, origin).is_zero()) return false;
  }
  return true;
}

/// V(x) inside V(y): substituting x's parametrization into y's constraints
/// kills them identically.  Only meaningful when x is fully parametrized.
bool branch_contained_in(const Branch& x, const Branch& y, const Ctx& ctx) {
  if (!x.parametrized()) return false;
  for (const Poly& c : y.constraints(ctx)) {
    if (!substitute(c, x.triangular).is_zero()) return false;
  }
  return true;
}

}  // namespace

std::vector<Branch> branch_components(const PolySystem& sys) {
  constexpr int kMaxDepth = 32;
  constexpr size_t kMaxItems = 4096;

  const Ctx ctx = sys.ctx;
  std::vector<Branch> found;
  std::set<std::string> seen_keys;
  size_t processed = 0;

  struct Frame {
    WorkItem item;
    int depth;
  };
  std::vector<Frame> stack;

  {
    const Elimination e = eliminate_linear(sys);
    stack.push_back({WorkItem{e.reduced, e.substitution, {}}, 0});
  }

  while (!stack.empty()) {
    if (++processed > kMaxItems) {
      throw BranchLimit("branch_components: too many branches");
    }
    Frame fr = std::move(stack.back());
    stack.pop_back();
    if (fr.depth > kMaxDepth) {
      throw BranchLimit("branch_components: split depth exceeded");
    }

    // Find the first splittable generator with its first usable factor.
    bool split_done = false;
    for (const Poly& g : fr.item.sys.gens) {
      if (g.degree() < 2) continue;
      for (const Poly& cand : split_candidates(g)) {
        const auto quot = try_exact_divide(g, cand);
        if (!quot || quot->is_constant()) continue;
        for (const Poly& factor : {cand, *quot}) {
          WorkItem next;
          next.sys = fr.item.sys;
          next.sys.gens.push_back(factor);
          const Elimination e = eliminate_linear(next.sys);
          next.sys = e.reduced;
          next.subs = compose_subs(fr.item.subs, e.substitution);
          next.trail = fr.item.trail;
          next.trail.push_back(primitive_normal(factor));
          stack.push_back({std::move(next), fr.depth + 1});
        }
        split_done = true;
        break;
      }
      if (split_done) break;
    }
    if (split_done) continue;

    // Terminal: build the branch record.
    Branch b;
    b.triangular = fr.item.subs;
    b.residual = fr.item.sys.normalized();
    b.split_trail = fr.item.trail;
    for (int v = 0; v < ctx->size(); ++v) {
      if (b.triangular.find(v) == b.triangular.end()) b.free_vars.push_back(v);
    }
    if (!through_origin(b, ctx)) continue;
    const std::string key = branch_key(b, ctx);
    if (seen_keys.insert(key).second) found.push_back(std::move(b));
  }

  // Discard any branch whose vanishing set lies inside another kept one.
  std::vector<bool> keep(found.size(), true);
  for (size_t i = 0; i < found.size(); ++i) {
    for (size_t j = 0; j < found.size() && keep[i]; ++j) {
      if (i == j || !keep[j]) continue;
      if (branch_contained_in(found[i], found[j], ctx)) {
        // Mutual containment means equal sets: keep the earlier one.
        if (branch_contained_in(found[j], found[i], ctx) && i < j) continue;
        keep[i] = false;
      }
    }
  }
  std::vector<Branch> out;
  for (size_t i = 0; i < found.size(); ++i) {
    if (keep[i]) out.push_back(std::move(found[i]));
  }
  // Deterministic order: by canonical key.
  std::sort(out.begin(), out.end(), [&](const Branch& a, const Branch& b) {
    return branch_key(a, ctx) < branch_key(b, ctx);
  });
  return out;
}

ComponentCertificate certify_component(const Branch& b, const Ctx& ctx) {
  ComponentCertificate cert;
  cert.ambient_vars = ctx->size();
  const std::vector<Poly> constraints = b.constraints(ctx);
  const QVector origin = QVector::Zero(ctx->size());
  const JacobianRank jr = jacobian_rank_at(constraints, origin);
  cert.jacobian_rank = jr.rank;
  cert.dimension = static_cast<Index>(ctx->size()) - jr.rank;
  cert.certified = b.parametrized();
  // A graph of polynomial maps is smooth; the Jacobian must corroborate:
  // rank equals the number of solved variables and the tangent dimension
  // equals the number of free variables.
  cert.smooth = cert.certified &&
                jr.rank == static_cast<Index>(b.triangular.size()) &&
                cert.dimension == static_cast<Index>(b.free_vars.size());
  return cert;
}

CoverResult verify_union_cover(const PolySystem& sys, const std::vector<Branch>& comps,
                               std::uint64_t seed) {
  CoverResult out;
  const Ctx ctx = sys.ctx;
  const PolySystem norm = sys.normalized();

  if (comps.empty()) {
    out.verdict = norm.gens.empty() ? CoverVerdict::Covered : CoverVerdict::Inconclusive;
    out.detail = "no components given";
    return out;
  }

  // (i) every component parametrization must satisfy the system.
  for (size_t i = 0; i < comps.size(); ++i) {
    if (!comps[i].parametrized()) {
      out.verdict = CoverVerdict::Inconclusive;
      out.detail = "component " + std::to_string(i) + " has no parametrization";
      return out;
    }
    for (const Poly& g : norm.gens) {
      if (!substitute(g, comps[i].triangular).is_zero()) {
        out.verdict = CoverVerdict::Inconclusive;
        out.detail = "component " + std::to_string(i) + " is not inside the variety";
        return out;
      }
    }
  }

  // (ii) all cross products of one constraint per component must vanish on
  // the variety: then V(sys) is inside the union.  The certificate divides
  // each product by the system generators after applying the system's own
  // linear elimination (a solution-set-preserving rewrite; dividing the raw
  // products directly is equivalent but fails spuriously on the eliminated
  // variables).
  std::vector<std::vector<Poly>> lists;
  for (const Branch& c : comps) {
    lists.push_back(c.constraints(ctx));
    if (lists.back().empty()) {
      out.verdict = CoverVerdict::Covered;
      out.detail = "a component with no constraints covers the whole chart";
      return out;
    }
  }
  const Elimination elim = eliminate_linear(norm);
  std::vector<std::vector<Poly>> images;  // nonzero eliminated constraints
  for (const auto& list : lists) {
    std::vector<Poly> img;
    std::set<std::string> seen;
    for (const Poly& c : list) {
      Poly im = substitute(c, elim.substitution);
      if (im.is_zero()) continue;  // its products all vanish identically
      im = primitive_normal(im);
      if (seen.insert(im.str()).second) img.push_back(std::move(im));
    }
    images.push_back(std::move(img));
  }
  bool products_ok = true;
  std::string failing;
  bool some_empty = false;
  for (const auto& img : images) some_empty = some_empty || img.empty();
  std::vector<size_t> pick(images.size(), 0);
  while (products_ok && !some_empty) {
    Poly prod = Poly::constant(ctx, Rational(1));
    for (size_t i = 0; i < images.size(); ++i) prod = prod * images[i][pick[i]];
    const Poly rem = reduce_by_set(prod, elim.reduced.gens);
    if (!rem.is_zero()) {
      products_ok = false;
      failing = prod.str();
      break;
    }
    size_t pos = 0;
    while (pos < pick.size()) {
      if (++pick[pos] < images[pos].size()) break;
      pick[pos] = 0;
      ++pos;
    }
    if (pos == pick.size()) break;
  }
  if (products_ok) {
    out.verdict = CoverVerdict::Covered;
    out.detail = "all constraint products reduce to zero";
    return out;
  }

  // Division failed: hunt for an actual uncovered rational point among the
  // system's own branches.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> num_dist(-9, 9);
  std::uniform_int_distribution<int> den_dist(1, 9);
  const auto rand_q = [&] { return Rational(num_dist(rng), den_dist(rng)); };

  const std::vector<Branch> own = branch_components(norm);
  for (const Branch& br : own) {
    if (!br.parametrized()) continue;
    for (int trial = 0; trial < 40; ++trial) {
      std::map<int, Poly> assign;
      QVector point = QVector::Zero(ctx->size());
      for (int v : br.free_vars) {
        const Rational q = rand_q();
        assign.emplace(v, Poly::constant(ctx, q));
        point(v) = q;
      }
      for (const auto& [v, val] : br.triangular) {
        point(v) = substitute(val, assign).constant_term();
      }
      bool in_some = false;
      for (const Branch& c : comps) {
        bool sat = true;
        for (const Poly& cc : lists[static_cast<size_t>(&c - comps.data())]) {
          if (!eval_point(cc, point).is_zero()) {
            sat = false;
            break;
          }
        }
        if (sat) {
          in_some = true;
          break;
        }
      }
      if (!in_some) {
        out.verdict = CoverVerdict::NotCovered;
        out.detail = "rational point on the variety misses every component";
        out.witness = point;
        return out;
      }
    }
  }

  out.verdict = CoverVerdict::Inconclusive;
  out.detail = "product '" + failing +
               "' does not reduce to zero and no uncovered point was found";
  return out;
}

LocatedBranch locate_branch_through_family(const ChartFrame& frame,
                                           const std::vector<Branch>& branches,
                                           const QVector& a, const Rational& u,
                                           const Rational& v) {
  if (branches.empty()) {
    throw UsageError("locate_branch_through_family: no branches");
  }
  const ArtinAlgebra& alg = frame.alg;
  LocatedBranch out;

  // Probe the degenerating family at a few small parameter values on the
  // side whose constant term is invertible.
  const std::vector<Rational> ts = {Rational(1, 5), Rational(1, 7), Rational(1, 11),
                                    Rational(1, 13)};
  for (const Rational& t : ts) {
    std::vector<Rational> scaled;
    for (Index i = 0; i < a.size(); ++i) scaled.push_back(a(i) / t);
    ArtinQ e, h;
    if (!v.is_zero()) {
      e = ArtinQ(u / v, scaled);
      h = ArtinQ(Rational(1), std::vector<Rational>(scaled.size(), Rational(0)));
    } else {
      e = ArtinQ(Rational(1), std::vector<Rational>(scaled.size(), Rational(0)));
      h = ArtinQ(v / u, scaled);
    }
    const PairKernel pk = kernel_of_pair(alg, e, h);
    if (const auto coords = chart_coords(frame, pk.kernel)) {
      out.samples.push_back(*coords);
    }
  }
  if (out.samples.size() < 2) {
    throw DomainError("locate_branch_through_family: family misses the chart");
  }

  std::vector<size_t> matches;
  for (size_t i = 0; i < branches.size(); ++i) {
    bool all_zero = true;
    for (const QVector& p : out.samples) {
      for (const Poly& c : branches[i].constraints(frame.ctx)) {
        if (!eval_point(c, p).is_zero()) {
          all_zero = false;
          break;
        }
      }
      if (!all_zero) break;
    }
    if (all_zero) matches.push_back(i);
  }
  if (matches.empty()) {
    throw DomainError("locate_branch_through_family: no branch contains the family");
  }
  // Ties resolve to the branch with the most free variables.
  out.index = matches.front();
  for (size_t m : matches) {
    if (branches[m].free_vars.size() > branches[out.index].free_vars.size()) {
      out.index = m;
    }
  }
  out.detail = "matched " + std::to_string(matches.size()) + " branch(es) on " +
               std::to_string(out.samples.size()) + " family samples";
  return out;
}

}  // namespace moducert
