/// @file scenario.cpp
#include "moducert/scenario.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "moducert/artinian.hpp"
#include "moducert/errors.hpp"
#include "moducert/grassmann.hpp"
#include "moducert/polyops.hpp"
#include "moducert/surface.hpp"

namespace moducert {
namespace {

std::string itos(long v) { return std::to_string(v); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string vec_str(const QVector& v) {
  std::vector<std::string> parts;
  for (Index i = 0; i < v.size(); ++i) parts.push_back(v(i).str());
  return "(" + join(parts, ", ") + ")";
}

std::string history_str(const std::vector<long>& h) {
  std::vector<std::string> parts;
  parts.reserve(h.size());
  for (long x : h) parts.push_back(itos(x));
  return "[" + join(parts, ", ") + "]";
}

std::string subs_str(const Ctx& ctx, const std::map<int, Poly>& m) {
  std::vector<std::string> parts;
  for (const auto& [var, val] : m) {
    parts.push_back(ctx->name(var) + " -> " + val.str());
  }
  return "{" + join(parts, ", ") + "}";
}

std::string graph_summary(const ResolutionGraph& g) {
  std::vector<std::string> parts;
  for (const CurveNode& n : g.nodes) {
    parts.push_back(n.label + "(" + itos(n.self_int) + ",m" + itos(n.mult) +
                    (n.exceptional ? ",exc)" : ")"));
  }
  return join(parts, " ");
}

Rational rand_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

Rational rand_nonzero(std::mt19937_64& rng) {
  for (;;) {
    Rational q = rand_rational(rng);
    if (!q.is_zero()) return q;
  }
}

QVector rand_direction(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coord(-5, 5);
  QVector v(n);
  bool nonzero = false;
  for (int i = 0; i < n; ++i) {
    const int c = coord(rng);
    v(i) = Rational(c);
    nonzero = nonzero || c != 0;
  }
  if (!nonzero) v(static_cast<Index>(rng() % static_cast<std::uint64_t>(n))) = 1;
  return v;
}

}  // namespace

ResolutionGraph builtin_graph(const std::string& name, int d) {
  if (d < 1) throw UsageError("builtin_graph: d must be >= 1");
  ResolutionGraph g;
  if (name == "2c") {
    g.nodes.push_back({"C", -d, 2, false});
  } else if (name == "picard1") {
    g.nodes.push_back({"C", d, 2, false});
  } else if (name == "chain") {
    g.nodes.push_back({"C", -2, 3, true});
    g.nodes.push_back({"D", -1, 6, false});
    g.edges.push_back({"C", "D", 1});
  } else if (name == "zero") {
    g.nodes.push_back({"C", -1, 0, false});
  } else {
    throw UsageError("builtin_graph: unknown name '" + name +
                     "' (expected 2c, picard1, chain, or zero)");
  }
  return g;
}

ResolutionGraph random_admissible_graph(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  ResolutionGraph g;
  const long s = 1 + static_cast<long>(rng() % 2);
  g.nodes.push_back({"D", -static_cast<long>(rng() % 4), s, false});
  const int k = 1 + static_cast<int>(rng() % 3);
  for (int i = 0; i < k; ++i) {
    const long b = 1 + static_cast<long>(rng() % 3);
    const long ki = static_cast<long>(rng() % 3);
    const std::string lab = "E" + itos(i + 1);
    g.nodes.push_back({lab, -b, s * ki, true});
    if (ki > 0) g.edges.push_back({"D", lab, ki * b});
  }
  if (rng() % 2 == 0) {
    g.nodes.push_back({"S2", 1 + static_cast<long>(rng() % 3), 0, false});
    g.edges.push_back({"S2", "D", 1 + static_cast<long>(rng() % 2)});
  }
  return g;
}

Report run_gamma_scenario(int d_max, int trials, std::uint64_t seed) {
  if (d_max < 1) throw UsageError("gamma scenario: d_max must be >= 1");
  if (trials < 1) throw UsageError("gamma scenario: trials must be >= 1");
  Report r;
  r.scenario = "gamma";
  r.param("d_max", itos(d_max));
  r.param("trials", itos(trials));
  r.param("seed", std::to_string(seed));

  {
    ArtinAlgebra alg(1);
    QVector a(2);
    a(0) = 0;
    a(1) = 1;
    const Submodule got = gamma_kernel(alg, a, Rational(0), Rational(1));
    QMatrix want = QMatrix::Zero(3, 6);
    want(0, 1) = 1;
    want(1, 2) = 1;
    want(2, 5) = 1;
    r.add("frozen.d1",
          "at d=1, direction (0:1) and slope (0:1), the kernel is the span of "
          "(x0,0), (x1,0), (0,x1)",
          got.dim() == 3 && got.basis() == want,
          "computed dimension " + itos(got.dim()));
  }

  for (int d = 1; d <= d_max; ++d) {
    ArtinAlgebra alg(d);
    std::mt19937_64 rng(seed + 1000ull * static_cast<std::uint64_t>(d));
    bool dims_ok = true;
    bool closure_ok = true;
    std::string bad;
    for (int t = 0; t < trials && dims_ok && closure_ok; ++t) {
      const QVector a = rand_direction(rng, d + 1);
      Rational u = rand_rational(rng);
      Rational v = rand_rational(rng);
      if (u.is_zero() && v.is_zero()) v = 1;
      const GammaPoint gp = make_gamma_point(a, u, v);
      const Submodule m = gamma_kernel(alg, gp);
      if (m.dim() != d + 2) {
        dims_ok = false;
        bad = "direction " + vec_str(gp.a) + ", slope (" + gp.u.str() + " : " +
              gp.v.str() + ") gives dimension " + itos(m.dim());
      } else if (rmodule_closure(alg, m.basis()) != m) {
        closure_ok = false;
        bad = "direction " + vec_str(gp.a) + ", slope (" + gp.u.str() + " : " +
              gp.v.str() + ") is not action-closed";
      }
    }
    r.add("dim.d" + itos(d),
          "every degeneration kernel in the rank-two module over the d=" +
              itos(d) + " algebra has k-dimension d+2 = " + itos(d + 2),
          dims_ok, dims_ok ? itos(trials) + " random direction/slope samples" : bad);
    r.add("closure.d" + itos(d),
          "every degeneration kernel is closed under all nilpotent actions",
          closure_ok, closure_ok ? itos(trials) + " samples" : bad);
  }

  for (int d = 1; d <= std::min(d_max, 4); ++d) {
    ArtinAlgebra alg(d);
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(d + 1)));
    bool ok = true;
    std::string bad;
    for (int t = 0; t < 50 && ok; ++t) {
      const QVector u = rand_direction(rng, d + 1);
      const Rational a1 = rand_rational(rng);
      const Submodule lim = gamma_limit(alg, u, a1);
      const Submodule direct = gamma_kernel(alg, u, Rational(1), a1);
      if (lim != direct) {
        ok = false;
        bad = "u = " + vec_str(u) + ", a1 = " + a1.str();
      }
    }
    r.add("limit.d" + itos(d),
          "the t->0 limit of the kernel family h = a1 + sum(u_i/t) x_i equals "
          "the kernel at direction u and slope (1 : a1)",
          ok, ok ? "50 random (u, a1) samples" : bad);
  }
  return r;
}

Report run_chart_scenario(int d, std::uint64_t seed) {
  if (d < 1) throw UsageError("chart scenario: d must be >= 1");
  Report r;
  r.scenario = "chart";
  r.param("d", itos(d));
  r.param("seed", std::to_string(seed));
  const std::string D = ".d" + itos(d);

  ArtinAlgebra alg(d);
  QVector dir = QVector::Zero(d + 1);
  dir(d) = 1;
  const Submodule m0 = gamma_kernel(alg, dir, Rational(0), Rational(1));
  const ChartFrame frame = chart_at(m0);
  const int nv = frame.ctx->size();
  r.add("vars" + D, "the chart at the base kernel has (d+2)^2 coordinates",
        nv == (d + 2) * (d + 2), itos(nv) + " variables");

  {
    const QVector origin = QVector::Zero(nv);
    bool base_ok = true;
    for (Index i = 0; i < m0.basis().rows() && base_ok; ++i) {
      for (Index j = 0; j < m0.basis().cols() && base_ok; ++j) {
        base_ok = eval_point(frame.rows[static_cast<size_t>(i)][static_cast<size_t>(j)],
                             origin) == m0.basis()(i, j);
      }
    }
    r.add("base" + D, "the chart rows at parameter zero equal the base kernel basis",
          base_ok);
  }

  const PolySystem sys = invariance_system(frame);
  {
    const QVector origin = QVector::Zero(nv);
    bool org = true;
    for (const Poly& gen : sys.gens) org = org && eval_point(gen, origin).is_zero();
    r.add("origin" + D,
          "the invariance equations vanish at the chart origin (the base kernel "
          "is a module)",
          org, itos(static_cast<long>(sys.gens.size())) + " generators");
  }

  const Elimination elim = eliminate_linear(sys);

  if (d == 1) {
    const Ctx& cx = frame.ctx;
    const Poly C = Poly::var(cx, "c");
    const Poly Dv = Poly::var(cx, "d");
    const Poly F = Poly::var(cx, "f");
    const Poly G = Poly::var(cx, "g");
    const Poly I = Poly::var(cx, "i");
    const PolySystem want(cx, {Dv * (Dv + C * G), Dv * (F + C * I),
                               G * (Dv + C * G), G * (F + C * I)});
    std::map<int, Poly> wsub;
    wsub[cx->index("a")] = Poly::zero(cx);
    wsub[cx->index("b")] = Poly::zero(cx);
    wsub[cx->index("e")] = C * Dv;
    wsub[cx->index("h")] = C * G;
    const bool ok = elim.reduced.normalized() == want.normalized() &&
                    elim.substitution == wsub;
    r.add("elim.d1",
          "linear elimination reduces the d=1 invariance system to "
          "{(d+cg)d, (f+ci)d, (d+cg)g, (f+ci)g} with a = b = 0, e = cd, h = cg",
          ok, "reduced to " + itos(static_cast<long>(elim.reduced.gens.size())) +
                  " generators; substitution " + subs_str(cx, elim.substitution));
  }

  if (d == 2) {
    const Ctx& cx = frame.ctx;
    auto V = [&](const char* n) { return Poly::var(cx, n); };
    const std::vector<Poly> raw = {
        V("i") * V("i") + V("j") * V("m"), V("i") * V("m") + V("m") * V("n"),
        V("k") * V("m") + V("n") * V("p"), V("l") * V("m") + V("n") * V("q")};
    bool raw_ok = true;
    bool red_ok = true;
    for (const Poly& p : raw) {
      raw_ok = raw_ok && sys.contains(p);
      const Poly img = substitute(p, elim.substitution);
      red_ok = red_ok && reduce_by_set(img, elim.reduced.gens).is_zero();
    }
    r.add("gens.d2",
          "the d=2 invariance system contains i^2+jm, im+mn, km+np, lm+nq, and "
          "each lies in the ideal of the eliminated system",
          raw_ok && red_ok,
          raw_ok ? "all four present and reduced to zero" : "a generator is missing");
  }

  const std::vector<Branch> branches = branch_components(sys);
  if (d == 1) {
    r.add("count.d1", "the d=1 invariance locus splits into exactly two components",
          branches.size() == 2, itos(static_cast<long>(branches.size())) + " components");
  }

  std::size_t mf_index = branches.size();
  {
    std::string detail;
    bool located = false;
    try {
      const LocatedBranch loc =
          locate_branch_through_family(frame, branches, dir, Rational(0), Rational(1));
      mf_index = loc.index;
      located = true;
      detail = loc.detail;
    } catch (const Error& e) {
      detail = e.what();
    }
    r.add("family" + D,
          "the degenerating pair family lands on a unique component through the "
          "chart origin",
          located, detail);
  }

  if (mf_index < branches.size()) {
    const Branch& mf = branches[mf_index];
    const ComponentCertificate cert = certify_component(mf, frame.ctx);
    std::string detail = "dimension " + itos(cert.dimension) + ", Jacobian rank " +
                         itos(cert.jacobian_rank) + " in " + itos(nv) + " variables";
    if (d >= 3) {
      detail += "; extrapolation: the chart battery is exhaustively frozen only "
                "for d <= 2";
    }
    r.add("mf-smooth" + D,
          "the component carrying the degenerating family is smooth of dimension "
          "d+2 = " + itos(d + 2) + " at the base point",
          cert.certified && cert.smooth && cert.dimension == d + 2, detail);

    if (d == 1) {
      const Ctx& cx = frame.ctx;
      const Poly C = Poly::var(cx, "c");
      const Poly G = Poly::var(cx, "g");
      const Poly I = Poly::var(cx, "i");
      std::map<int, Poly> want;
      want[cx->index("a")] = Poly::zero(cx);
      want[cx->index("b")] = Poly::zero(cx);
      want[cx->index("d")] = -(C * G);
      want[cx->index("e")] = -(C * C * G);
      want[cx->index("f")] = -(C * I);
      want[cx->index("h")] = C * G;
      const std::vector<int> wfree = {cx->index("c"), cx->index("g"), cx->index("i")};
      r.add("mf-map.d1",
            "the distinguished d=1 component is the graph d=-cg, e=-c^2g, f=-ci, "
            "h=cg, a=b=0 over the free coordinates (c, g, i)",
            mf.triangular == want && mf.free_vars == wfree,
            subs_str(cx, mf.triangular));
    }
    if (d == 2) {
      const Ctx& cx = frame.ctx;
      const Poly C = Poly::var(cx, "c");
      const Poly M = Poly::var(cx, "m");
      const Poly P = Poly::var(cx, "p");
      const Poly Q = Poly::var(cx, "q");
      std::map<int, Poly> want;
      for (const char* z : {"a", "b", "d", "e", "f", "g"}) {
        want[cx->index(z)] = Poly::zero(cx);
      }
      want[cx->index("h")] = C;
      want[cx->index("i")] = -(C * M);
      want[cx->index("j")] = -(C * C * M);
      want[cx->index("k")] = -(C * P);
      want[cx->index("l")] = -(C * Q);
      want[cx->index("n")] = C * M;
      const std::vector<int> wfree = {cx->index("c"), cx->index("m"),
                                      cx->index("p"), cx->index("q")};
      r.add("mf-map.d2",
            "the distinguished d=2 component is the graph h=c, i=-cm, j=-c^2m, "
            "k=-cp, l=-cq, n=cm, a=b=d=e=f=g=0 over (c, m, p, q)",
            mf.triangular == want && mf.free_vars == wfree,
            subs_str(cx, mf.triangular));
    }

    if (d == 1 && branches.size() == 2) {
      const Branch& other = branches[1 - mf_index];
      const ComponentCertificate oc = certify_component(other, frame.ctx);
      r.add("other-smooth.d1",
            "the remaining invariance-locus component is smooth of dimension 3 "
            "in the chart",
            oc.certified && oc.smooth && oc.dimension == 3,
            "dimension " + itos(oc.dimension) + ", Jacobian rank " +
                itos(oc.jacobian_rank));
    }
  }

  {
    const CoverResult cover = verify_union_cover(sys, branches, seed);
    Verdict v = Verdict::Inconclusive;
    if (cover.verdict == CoverVerdict::Covered) v = Verdict::Pass;
    if (cover.verdict == CoverVerdict::NotCovered) v = Verdict::Fail;
    std::string detail = cover.detail;
    if (cover.witness) detail += "; witness " + vec_str(*cover.witness);
    r.add("cover" + D,
          "the listed components cover the invariance locus set-theoretically",
          v, detail);
  }
  return r;
}

Report run_transition_scenario(int d_max) {
  if (d_max < 1) throw UsageError("transition scenario: d_max must be >= 1");
  Report r;
  r.scenario = "transition";
  r.param("d_max", itos(d_max));
  for (int d = 1; d <= d_max; ++d) {
    const std::string D = ".d" + itos(d);
    const TransitionCertificate tc = transition_check(d);
    const std::string det = join(tc.details, "; ");
    r.add("involution" + D,
          "applying (a1, b) -> (1/a1, -b/a1^2) twice is the identity where a1 != 0",
          tc.involutive, det);
    r.add("fixed" + D, "at a1 = 1 the transition maps (1, b) to (1, -b)",
          tc.fixed_locus_ok);
    r.add("quadric" + D,
          "the transition equals the chart change on the smooth locus of the "
          "quadric cone V(xz + y^2)",
          tc.quadric_match);
    r.add("fibre" + D,
          "the transition is linear on fibres over the base with scaling -1/a1^2",
          tc.fiberwise_linear);

    ArtinAlgebra alg(d);
    std::mt19937_64 rng(0xabcdef12ull + static_cast<std::uint64_t>(d));
    bool num_ok = true;
    std::string bad;
    const ArtinQ one(Rational(1), std::vector<Rational>(static_cast<size_t>(d + 1)));
    const ArtinQ minus_one(Rational(-1), std::vector<Rational>(static_cast<size_t>(d + 1)));
    for (int t = 0; t < 10 && num_ok; ++t) {
      const Rational a1 = rand_nonzero(rng);
      std::vector<Rational> b(static_cast<size_t>(d + 1));
      for (auto& x : b) x = rand_rational(rng);
      const ArtinQ h(a1, b);
      const ArtinQ hin = h.inverse();
      num_ok = num_ok && hin.a == Rational(1) / a1;
      for (size_t i = 0; i < b.size() && num_ok; ++i) {
        num_ok = hin.v[i] == -b[i] / (a1 * a1);
      }
      const ArtinQ back = hin.inverse();
      num_ok = num_ok && back.a == h.a && back.v == h.v;
      if (num_ok) {
        const PairKernel k1 = kernel_of_pair(alg, one, h);
        num_ok = num_ok && k1.chart.side == 'e' && k1.chart.a1 == a1;
        const Submodule m2 = rmodule_closure(alg, pair_coords(minus_one, hin));
        num_ok = num_ok && m2 == k1.kernel;
      }
      if (!num_ok) bad = "a1 = " + a1.str();
    }
    r.add("module" + D,
          "the kernel of (f, g) -> f + g h is generated equivalently by (-h, 1) "
          "and (-1, h^{-1}), and h^{-1} has coordinates (1/a1, -b/a1^2)",
          num_ok, num_ok ? "10 random samples" : bad);
  }
  return r;
}

Report run_chern_scenario(int chains, std::uint64_t seed) {
  if (chains < 1) throw UsageError("chern scenario: chains must be >= 1");
  Report r;
  r.scenario = "chern";
  r.param("chains", itos(chains));
  r.param("seed", std::to_string(seed));

  bool p2c = true;
  bool psum = true;
  bool pses = true;
  ChernChar last_mid{Rational(0), Divisor{}, Rational(0)};
  ChernChar last_left = last_mid;
  ChernChar last_right = last_mid;
  for (int d = 1; d <= 10; ++d) {
    QMatrix gram(1, 1);
    gram(0, 0) = Rational(-d);
    const Lat lat = make_lattice({"C"}, gram);
    const Divisor c = basis_divisor(lat, "C");
    const Divisor two_c = Rational(2) * c;
    const ChernChar mid = ch_pushforward(two_c, Rational(0));
    p2c = p2c && mid.ch0 == Rational(0) && mid.ch1 == two_c && mid.ch2 == Rational(2 * d);
    const ChernChar right = ch_pushforward(c, Rational(0));
    psum = psum && (right + right) == ChernChar{Rational(0), two_c, Rational(d)};
    const ChernChar left = ch_pushforward(c, Rational(d));
    pses = pses && ch_additivity_check(left, mid, right) && mid == left + right;
    last_mid = mid;
    last_left = left;
    last_right = right;
  }
  r.add("push-2c",
        "on a curve C with C^2 = -d, the double-curve structure sheaf pushes "
        "forward to (0, 2C, 2d)",
        p2c, "d = 1..10");
  r.add("push-sum", "two copies of the structure sheaf of C add up to (0, 2C, d)",
        psum, "d = 1..10");
  r.add("ses",
        "(0, 2C, 2d) splits additively as the pushforward of a degree-d line "
        "bundle on C plus the structure sheaf of C",
        pses, "d = 1..10");

  {
    bool pic = true;
    for (int h = 1; h <= 3 && pic; ++h) {
      const Lat lat = picard_rank_one(Rational(h));
      for (int k = 1; k <= 10 && pic; ++k) {
        const Divisor dk = Rational(k) * basis_divisor(lat, "H");
        const ChernChar got = ch_pushforward(dk, Rational(0));
        pic = got.ch0 == Rational(0) && got.ch1 == dk &&
              got.ch2 == Rational(-(static_cast<long long>(k) * k * h), 2);
      }
    }
    r.add("push-picard",
          "on a rank-one lattice with H^2 = h, the structure sheaf of dH pushes "
          "forward to (0, dH, -d^2 h / 2)",
          pic, "h = 1..3, d = 1..10");
  }

  {
    ChernChar bad = last_mid;
    bad.ch2 = bad.ch2 + Rational(1);
    r.add("additivity-negative",
          "perturbing ch2 of the middle term by 1 breaks short-exact-sequence "
          "additivity",
          !ch_additivity_check(last_left, bad, last_right));
  }

  {
    const Lat lat = picard_rank_one(Rational(1));
    const Divisor c = Rational(3) * basis_divisor(lat, "H");
    const DefectCheck one = strict_transform_defect_check(c, {1});
    const DefectCheck three = strict_transform_defect_check(c, {2, 1, 3});
    const bool frozen = one.equal && one.lhs == Rational(1) && three.equal &&
                        three.lhs == Rational(14);
    r.add("defect-frozen",
          "blowing up with multiplicities (1) and (2,1,3) drops the self-"
          "intersection by 1 and 14, matched by the exceptional pairing",
          frozen, "lhs " + one.lhs.str() + " and " + three.lhs.str());
  }

  {
    std::mt19937_64 rng(seed ^ 0x5eedull);
    bool ok = true;
    std::string bad;
    for (int t = 0; t < chains && ok; ++t) {
      const int h = 1 + static_cast<int>(rng() % 4);
      const int k = 1 + static_cast<int>(rng() % 3);
      const Lat lat = picard_rank_one(Rational(h));
      const Divisor c = Rational(k) * basis_divisor(lat, "H");
      std::vector<long> mults(1 + rng() % 4);
      for (auto& m : mults) m = static_cast<long>(rng() % 4);
      const DefectCheck dc = strict_transform_defect_check(c, mults);
      if (!dc.equal) {
        ok = false;
        bad = "h = " + itos(h) + ", k = " + itos(k) + ", mults " +
              history_str(mults) + ": lhs " + dc.lhs.str() + " vs rhs " + dc.rhs.str();
      }
    }
    r.add("defect-random",
          "C^2 - Ct^2 equals Ct . (sum of n_j E_j) on every random blowup chain",
          ok, ok ? itos(chains) + " random chains" : bad);
  }

  {
    const Lat lat = picard_rank_one(Rational(2));
    const Divisor c = Rational(2) * basis_divisor(lat, "H");
    const Lat up = blowup(lat, "E1");
    const Divisor e = basis_divisor(up, "E1");
    const Divisor pull = pullback(c, up);
    const Divisor st = strict_transform(c, up, Rational(3));
    const bool basics = intersect(e, e) == Rational(-1) &&
                        intersect(pull, e).is_zero() &&
                        self_intersection(st) == self_intersection(c) - Rational(9) &&
                        strict_transform(c, up, Rational(0)) == pull;
    r.add("blowup-basics",
          "an exceptional class has square -1 and is orthogonal to pullbacks; a "
          "strict transform of multiplicity m drops the square by m^2",
          basics);
  }

  {
    std::mt19937_64 rng(seed + 17);
    QMatrix gram = QMatrix::Zero(3, 3);
    for (Index i = 0; i < 3; ++i) {
      for (Index j = i; j < 3; ++j) {
        const Rational v = rand_rational(rng);
        gram(i, j) = v;
        gram(j, i) = v;
      }
    }
    const Lat lat = make_lattice({"A", "B", "C"}, gram);
    bool ok = true;
    for (int t = 0; t < 20 && ok; ++t) {
      QVector x(3), y(3), z(3);
      for (Index i = 0; i < 3; ++i) {
        x(i) = rand_rational(rng);
        y(i) = rand_rational(rng);
        z(i) = rand_rational(rng);
      }
      const Divisor a = make_divisor(lat, x);
      const Divisor b = make_divisor(lat, y);
      const Divisor c = make_divisor(lat, z);
      const Rational s = rand_rational(rng);
      ok = intersect(a + b, c) == intersect(a, c) + intersect(b, c) &&
           intersect(a, b) == intersect(b, a) &&
           intersect(s * a, b) == s * intersect(a, b);
    }
    r.add("bilinear", "the intersection pairing is symmetric and bilinear", ok,
          "20 random triples");
  }
  return r;
}

Report run_ineq_scenario(int m_max, int r_max) {
  if (m_max < 1 || r_max < 1) {
    throw UsageError("ineq scenario: m_max and r_max must be >= 1");
  }
  Report r;
  r.scenario = "ineq";
  r.param("m_max", itos(m_max));
  r.param("r_max", itos(r_max));

  long total = 0;
  bool holds = true;
  bool eqiff = true;
  bool tightiff = true;
  std::string bad;
  for (int m = 1; m <= m_max; ++m) {
    std::vector<long> ranks(static_cast<size_t>(m), 1);
    for (;;) {
      ++total;
      const IneqResult iq = check_main_ineq(ranks);
      const bool allones =
          std::all_of(ranks.begin(), ranks.end(), [](long x) { return x == 1; });
      if (!iq.holds) {
        holds = false;
        bad = "ranks " + history_str(ranks);
      }
      if (iq.equality != allones) {
        eqiff = false;
        bad = "ranks " + history_str(ranks);
      }
      const FiltrationBound fb = filtration_ch2_bound(Rational(-1), ranks);
      if (fb.tight != iq.equality) {
        tightiff = false;
        bad = "ranks " + history_str(ranks);
      }
      int i = m - 1;
      while (i >= 0 && ranks[static_cast<size_t>(i)] == r_max) {
        ranks[static_cast<size_t>(i)] = 1;
        --i;
      }
      if (i < 0) break;
      ++ranks[static_cast<size_t>(i)];
    }
  }
  const std::string count = itos(total) + " rank vectors";
  r.add("holds",
        "(sum r_i)^2 >= sum (2m+1-2i) r_i for every rank vector with m <= " +
            itos(m_max) + " and r_i <= " + itos(r_max),
        holds, holds ? count : bad);
  r.add("equality-iff", "equality holds exactly when every r_i equals 1", eqiff,
        eqiff ? count : bad);
  r.add("tight-iff",
        "the filtration bound on ch2 meets the fibre value exactly at the "
        "all-ones rank vector",
        tightiff, tightiff ? count : bad);

  {
    const IneqResult e1 = check_main_ineq({1, 1, 1});
    const IneqResult e2 = check_main_ineq({2, 1});
    const FiltrationBound f1 = filtration_ch2_bound(Rational(1), {1, 1});
    const FiltrationBound f2 = filtration_ch2_bound(Rational(1), {2});
    const bool frozen = e1.lhs == 9 && e1.rhs == 9 && e1.equality && e2.lhs == 9 &&
                        e2.rhs == 7 && !e2.equality && f1.bound == Rational(-2) &&
                        f1.fibre_value == Rational(-2) && f1.tight &&
                        f2.bound == Rational(-1) && f2.fibre_value == Rational(-2) &&
                        !f2.tight;
    r.add("frozen",
          "ranks (1,1,1) give 9 = 9; ranks (2,1) give 9 > 7; on c2 = 1 the bound "
          "for (1,1) is -2 (tight) and for (2) is -1 against fibre value -2",
          frozen);
  }
  return r;
}

Report run_forward_scenario(const ResolutionGraph& g, Strategy s) {
  Report r;
  r.scenario = "forward";
  r.param("strategy", strategy_name(s));
  r.param("graph", graph_summary(g));
  const PullbackCheck pc = validate_pullback(g);
  r.add("validate", "every exceptional component meets the resolved fibre class trivially",
        pc.ok, pc.ok ? "" : join(pc.violations, "; "));

  const ForwardTrace tr = forward_run(g, s);
  const long n0 = g.total_multiplicity();
  std::vector<std::string> shown;
  for (size_t i = 0; i < tr.steps.size() && i < 20; ++i) {
    shown.push_back(tr.steps[i].label + ":" + itos(tr.steps[i].remaining));
  }
  if (tr.steps.size() > 20) shown.push_back("...");
  r.add("steps",
        "the forward drain performs exactly total-multiplicity elementary "
        "transforms and trivialises the fibre",
        static_cast<long>(tr.steps.size()) == n0 && tr.trivialized,
        itos(static_cast<long>(tr.steps.size())) + " steps: " + join(shown, " "));

  bool contig = true;
  std::set<std::string> seen;
  std::string active;
  long prev = n0;
  for (const ForwardStep& st : tr.steps) {
    if (st.label != active) {
      if (seen.count(st.label)) contig = false;
      seen.insert(st.label);
      active = st.label;
    }
    if (st.remaining != prev - 1) contig = false;
    prev = st.remaining;
  }
  if (!tr.steps.empty() && tr.steps.back().remaining != 0) contig = false;
  r.add("drain",
        "each component is drained to zero before the next starts and the "
        "remaining count steps down by one",
        contig);
  return r;
}

Report run_backward_scenario(const ResolutionGraph& g, Strategy s) {
  Report r;
  r.scenario = "backward";
  r.param("strategy", strategy_name(s));
  r.param("graph", graph_summary(g));
  const PullbackCheck pc = validate_pullback(g);
  r.add("validate", "every exceptional component meets the resolved fibre class trivially",
        pc.ok, pc.ok ? "" : join(pc.violations, "; "));
  if (!pc.ok) {
    r.add("run", "the backward reconstruction runs on a valid graph", false,
          "skipped: the pullback identity fails");
    return r;
  }

  const BackwardTrace bt = backward_run(g, s);
  bool own_ok = true;
  bool hist_ok = true;
  bool restored = true;
  std::vector<std::string> hists;
  for (const ComponentPhase& ph : bt.phases) {
    const CurveNode& n = g.node(ph.label);
    const long b = std::labs(n.self_int);
    for (const OwnTransform& ot : ph.own) {
      if (ot.trace_self_int != -b * ot.j) own_ok = false;
    }
    const auto& h = ph.invariant_history;
    if (h.empty() || h.front() != 0) hist_ok = false;
    for (size_t i = 1; i < h.size(); ++i) {
      const long step = h[i] - h[i - 1];
      const bool climb = i <= static_cast<size_t>(n.mult);
      if (climb ? step != b : step != -1) hist_ok = false;
    }
    if (!h.empty() && h.back() != ph.final_invariant) hist_ok = false;
    if (ph.exceptional && (!ph.restored_trivial || ph.final_invariant != 0)) {
      restored = false;
    }
    hists.push_back(ph.label + " " + history_str(h));
  }
  r.add("ok", "the backward reconstruction completes", bt.ok, join(bt.notes, "; "));
  r.add("own-trace",
        "the running trace of the j-th transform on a component of self-"
        "intersection -b has self-intersection -bj",
        own_ok);
  r.add("history",
        "the ruled invariant climbs 0, b, 2b, ..., bm on its own transforms and "
        "unit decrements at the intersection points bring it back down",
        hist_ok, join(hists, "; "));
  r.add("restored",
        "every exceptional component ends with invariant zero (its surface is "
        "restored to a product)",
        restored);
  return r;
}

Report run_choice_scenario(const ResolutionGraph& g, Strategy s) {
  Report r;
  r.scenario = "choice";
  r.param("strategy", strategy_name(s));
  r.param("graph", graph_summary(g));
  const PullbackCheck pc = validate_pullback(g);
  r.add("validate", "every exceptional component meets the resolved fibre class trivially",
        pc.ok, pc.ok ? "" : join(pc.violations, "; "));

  const ChoiceLedger lex = choice_dimension(g, Strategy::Lex);
  const ChoiceLedger mm = choice_dimension(g, Strategy::MaxMult);
  const ChoiceLedger& led = (s == Strategy::Lex) ? lex : mm;
  std::vector<std::string> entries;
  for (const ChoiceEntry& e : led.entries) {
    entries.push_back(e.label + (e.j > 0 ? "[" + itos(e.j) + "]" : "") + ": " +
                      itos(e.dim) + " (" + e.reason + ")");
  }
  r.add("total", "dimension ledger of the choices made by the reconstruction",
        Verdict::Pass, "total " + itos(led.total) + "; " + join(entries, "; "));
  r.add("strategy-independent",
        "the choice total does not depend on the processing strategy",
        lex.total == mm.total,
        "lex " + itos(lex.total) + ", max-mult " + itos(mm.total));
  return r;
}

Report run_transform_scenario(int graphs, std::uint64_t seed) {
  if (graphs < 1) throw UsageError("transform scenario: graphs must be >= 1");
  Report r;
  r.scenario = "transform";
  r.param("graphs", itos(graphs));
  r.param("seed", std::to_string(seed));

  {
    bool fwd = true;
    bool choice = true;
    std::string detail;
    for (int d = 1; d <= 5; ++d) {
      const ResolutionGraph g = builtin_graph("2c", d);
      const ForwardTrace tr = forward_run(g, Strategy::Lex);
      fwd = fwd && tr.steps.size() == 2 && tr.steps[0].remaining == 1 &&
            tr.steps[1].remaining == 0 && tr.trivialized;
      const ChoiceLedger cl = choice_dimension(g, Strategy::Lex);
      choice = choice && cl.total == d + 2;
      detail += (d > 1 ? ", " : "") + std::string("d=") + itos(d) + ": " + itos(cl.total);
    }
    r.add("2c-forward",
          "on the double curve the drain takes exactly two steps with remaining "
          "trace 2 -> 1 -> 0",
          fwd, "d = 1..5");
    r.add("2c-choice",
          "on the double curve with C^2 = -d the choice ledger totals d+2", choice,
          detail);
  }

  {
    const ChoiceLedger pl = choice_dimension(builtin_graph("picard1", 1), Strategy::Lex);
    r.add("picard1-choice",
          "on a multiplicity-two component of positive self-intersection the "
          "only choice is the fibre point",
          pl.total == 1, "total " + itos(pl.total));
    const ResolutionGraph zg = builtin_graph("zero", 1);
    const ChoiceLedger zl = choice_dimension(zg, Strategy::Lex);
    const ForwardTrace zf = forward_run(zg, Strategy::Lex);
    r.add("zero-choice",
          "a multiplicity-zero fibre performs no transform and makes no choice",
          zl.total == 0 && zl.entries.empty() && zf.steps.empty() && zf.trivialized);
  }

  {
    const ResolutionGraph ch = builtin_graph("chain", 1);
    const BackwardTrace bt = backward_run(ch, Strategy::Lex);
    bool ok = bt.ok && bt.phases.size() == 2;
    std::string detail;
    if (ok) {
      const ComponentPhase& c = bt.phases[0];
      const ComponentPhase& d = bt.phases[1];
      const std::vector<long> want_c = {0, 2, 4, 6, 5, 4, 3, 2, 1, 0};
      const std::vector<long> want_d = {0, 1, 2, 3, 4, 5, 6};
      ok = c.label == "C" && c.exceptional && c.invariant_history == want_c &&
           c.restored_trivial && d.label == "D" && !d.exceptional &&
           d.invariant_history == want_d && d.final_invariant == 6;
      detail = "C " + history_str(c.invariant_history) + "; D " +
               history_str(d.invariant_history);
    }
    r.add("chain-backward",
          "on the chain graph the exceptional invariant climbs 0,2,4,6 and six "
          "unit decrements restore it to zero; the strict component climbs to 6 "
          "with no requirement",
          ok, detail);
  }

  {
    bool rv = true;
    bool rf = true;
    bool rb = true;
    bool rc = true;
    bool rn = true;
    std::string bad;
    for (int t = 0; t < graphs; ++t) {
      const ResolutionGraph g =
          random_admissible_graph(seed + 7919ull * static_cast<std::uint64_t>(t));
      if (!validate_pullback(g).ok) {
        rv = false;
        bad = "graph " + itos(t) + ": " + graph_summary(g);
        break;
      }
      const ForwardTrace tr = forward_run(g, Strategy::MaxMult);
      if (static_cast<long>(tr.steps.size()) != g.total_multiplicity() ||
          !tr.trivialized) {
        rf = false;
        bad = "graph " + itos(t);
      }
      const BackwardTrace bt = backward_run(g, Strategy::Lex);
      if (!bt.ok) rb = false;
      for (const ComponentPhase& ph : bt.phases) {
        const long b = std::labs(g.node(ph.label).self_int);
        for (const OwnTransform& ot : ph.own) {
          if (ot.trace_self_int != -b * ot.j) rb = false;
        }
        if (ph.exceptional && !ph.restored_trivial) rb = false;
      }
      const ChoiceLedger l1 = choice_dimension(g, Strategy::Lex);
      const ChoiceLedger l2 = choice_dimension(g, Strategy::MaxMult);
      if (l1.total != l2.total) {
        rc = false;
        bad = "graph " + itos(t) + ": lex " + itos(l1.total) + " vs max-mult " +
              itos(l2.total);
      }
      ResolutionGraph broken = g;
      for (CurveNode& n : broken.nodes) {
        if (n.exceptional) {
          n.mult += 1;
          break;
        }
      }
      if (validate_pullback(broken).ok) {
        rn = false;
        bad = "graph " + itos(t) + " still validates after the bump";
      }
    }
    const std::string count = itos(graphs) + " random admissible graphs";
    r.add("random-validate", "every constructed graph satisfies the pullback identity",
          rv, rv ? count : bad);
    r.add("random-forward",
          "the forward drain always takes exactly total-multiplicity steps", rf,
          rf ? count : bad);
    r.add("random-backward",
          "the backward reconstruction always restores every exceptional "
          "component with running traces a_j = -bj",
          rb, rb ? count : bad);
    r.add("random-choice", "choice totals agree between the lex and max-mult strategies",
          rc, rc ? count : bad);
    r.add("negative-pullback",
          "increasing one exceptional multiplicity always breaks the pullback "
          "identity",
          rn, rn ? count : bad);
  }

  {
    std::mt19937_64 rng(seed ^ 0xabcdull);
    bool so = true;
    bool ri = true;
    for (int t = 0; t < 100 && so && ri; ++t) {
      const long a = static_cast<long>(rng() % 21) - 10;
      const long b = static_cast<long>(rng() % 21) - 10;
      const long got = blowup_section_selfint(a, b);
      // Independent expansion of (pull D - E)^2 . E against the triple-
      // product table T(pull, pull, E) = 0, T(pull, E, E) = -b, T(E,E,E) = -(a+b).
      const long oracle = 0 - 2 * (-b) + (-(a + b));
      so = so && got == oracle && got == b - a;
      ri = ri && ruled_invariant(a, b) == std::labs(a - b) &&
           ruled_invariant(a, b) == ruled_invariant(b, a);
    }
    r.add("section-selfint",
          "the induced section square on the exceptional divisor over a curve "
          "with normal degrees (a, b) is b - a",
          so, "100 samples");
    r.add("ruled-invariant", "the ruled invariant is the symmetric distance |a - b|",
          ri, "100 samples");

    bool ss = section_space_dim(5, false) == 6 && section_space_dim(5, true) == 5 &&
              section_space_dim(1, false) == 2 && section_space_dim(1, true) == 1;
    bool threw = false;
    try {
      section_space_dim(0, false);
    } catch (const UsageError&) {
      threw = true;
    }
    r.add("section-space",
          "sections of the n-ruled surface in the distinguished class form an "
          "(n+1)-dimensional family, n-dimensional through a fixed point; n < 1 "
          "is rejected",
          ss && threw);
  }
  return r;
}

Report run_suite(const std::vector<int>& ds, std::uint64_t seed) {
  if (ds.empty()) throw UsageError("suite: at least one d is required");
  for (int d : ds) {
    if (d < 1) throw UsageError("suite: every d must be >= 1");
  }
  Report r;
  r.scenario = "suite";
  std::vector<std::string> dstr;
  for (int d : ds) dstr.push_back(itos(d));
  r.param("d", join(dstr, ","));
  r.param("seed", std::to_string(seed));

  const int dmax = *std::max_element(ds.begin(), ds.end());
  r.absorb(run_gamma_scenario(dmax, 20, seed));
  for (int d : ds) r.absorb(run_chart_scenario(d, seed));
  r.absorb(run_transition_scenario(dmax));
  r.absorb(run_ineq_scenario(5, 5));
  r.absorb(run_chern_scenario(200, seed));
  r.absorb(run_transform_scenario(100, seed));
  return r;
}

}  // namespace moducert
