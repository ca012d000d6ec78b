/// Grassmannian charts, invariance equations, exact component splitting
/// with smoothness certificates, union-cover verification, and locating
/// the branch through a degenerating kernel family.
#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "moducert/artinian.hpp"
#include "moducert/errors.hpp"
#include "moducert/grassmann.hpp"
#include "moducert/polyops.hpp"

using namespace moducert;

namespace {

Rational rq(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

/// Base kernel used by the chart battery: direction (0,...,0,1), slope (0:1).
Submodule battery_base(const ArtinAlgebra& alg) {
  QVector dir = QVector::Zero(alg.d + 1);
  dir(alg.d) = Rational(1);
  return gamma_kernel(alg, dir, Rational(0), Rational(1));
}

const Branch* branch_with_free_vars(const std::vector<Branch>& bs,
                                    const std::vector<int>& free_vars) {
  for (const Branch& b : bs) {
    if (b.free_vars == free_vars) return &b;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("chart variable names skip 'o' and roll to doubled letters") {
  CHECK(chart_var_name(0) == "a");
  CHECK(chart_var_name(13) == "n");
  CHECK(chart_var_name(14) == "p");  // 'o' never appears
  CHECK(chart_var_name(24) == "z");
  CHECK(chart_var_name(25) == "aa");
  CHECK(chart_var_name(26) == "ab");
  for (int k = 0; k < 200; ++k) {
    CHECK(chart_var_name(k).find('o') == std::string::npos);
  }
}

TEST_CASE("chart at the base kernel exposes the expected frame") {
  const ArtinAlgebra alg(1);
  const Submodule base = battery_base(alg);
  REQUIRE(base.dim() == 3);
  const ChartFrame frame = chart_at(base);
  CHECK(frame.pivots == std::vector<Index>{1, 2, 5});
  CHECK(frame.free_cols == std::vector<Index>{0, 3, 4});
  REQUIRE(frame.ctx->size() == 9);  // (d+2)^2
  CHECK(frame.ctx->name(0) == "a");
  CHECK(frame.ctx->name(8) == "i");
  // At parameter zero the chart rows reproduce the base basis.
  const QVector origin = QVector::Zero(9);
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 6; ++j) {
      CHECK(eval_point(frame.rows[static_cast<size_t>(i)][static_cast<size_t>(j)],
                       origin) == base.basis()(i, j));
    }
  }
  // Identity block on the pivot columns, independent of the parameters.
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) {
      const Poly& entry =
          frame.rows[static_cast<size_t>(i)][static_cast<size_t>(frame.pivots[
              static_cast<size_t>(j)])];
      CHECK(entry.is_constant());
      CHECK(entry.constant_term() == (i == j ? Rational(1) : Rational(0)));
    }
  }
}

TEST_CASE("chart coordinates round-trip through submodule construction") {
  // Property: evaluating the chart rows at any parameter point and reducing
  // the resulting span recovers exactly that point.
  std::mt19937_64 rng(5180);
  for (int d = 1; d <= 2; ++d) {
    const ArtinAlgebra alg(d);
    const ChartFrame frame = chart_at(battery_base(alg));
    const int nv = frame.ctx->size();
    const Index k = static_cast<Index>(frame.rows.size());
    const int ntrials = 10;
    for (int t = 0; t < ntrials; ++t) {
      QVector pt(nv);
      for (int i = 0; i < nv; ++i) pt(i) = rq(rng);
      QMatrix span(k, alg.ambient_dim());
      for (Index i = 0; i < k; ++i) {
        for (Index j = 0; j < alg.ambient_dim(); ++j) {
          span(i, j) = eval_point(
              frame.rows[static_cast<size_t>(i)][static_cast<size_t>(j)], pt);
        }
      }
      const Submodule sub(alg, span);
      const auto coords = chart_coords(frame, sub);
      REQUIRE(coords.has_value());
      CHECK(*coords == pt);
    }
  }
}

TEST_CASE("subspaces with a singular pivot minor lie outside the chart") {
  const ArtinAlgebra alg(1);
  const ChartFrame frame = chart_at(battery_base(alg));
  QMatrix span = QMatrix::Zero(3, 6);
  span(0, 0) = Rational(1);  // spans the free columns only
  span(1, 3) = Rational(1);
  span(2, 4) = Rational(1);
  CHECK_FALSE(chart_coords(frame, Submodule(alg, span)).has_value());
}

TEST_CASE("invariance system at d=1 is frozen after linear elimination") {
  const ArtinAlgebra alg(1);
  const ChartFrame frame = chart_at(battery_base(alg));
  const PolySystem sys = invariance_system(frame);
  CHECK(sys.gens.size() == 18);
  const QVector origin = QVector::Zero(9);
  for (const Poly& g : sys.gens) CHECK(eval_point(g, origin).is_zero());

  const Elimination elim = eliminate_linear(sys);
  const Ctx& cx = frame.ctx;
  const Poly C = Poly::var(cx, "c");
  const Poly D = Poly::var(cx, "d");
  const Poly F = Poly::var(cx, "f");
  const Poly G = Poly::var(cx, "g");
  const Poly I = Poly::var(cx, "i");
  // Four quadric generators survive; a, b vanish and e, h become cd, cg.
  const PolySystem want(cx, {D * (D + C * G), D * (F + C * I), G * (D + C * G),
                             G * (F + C * I)});
  CHECK(elim.reduced.normalized() == want.normalized());
  std::map<int, Poly> wsub;
  wsub[cx->index("a")] = Poly::zero(cx);
  wsub[cx->index("b")] = Poly::zero(cx);
  wsub[cx->index("e")] = C * D;
  wsub[cx->index("h")] = C * G;
  CHECK(elim.substitution == wsub);
}

TEST_CASE("d=1 locus splits into two smooth frozen components") {
  const ArtinAlgebra alg(1);
  const ChartFrame frame = chart_at(battery_base(alg));
  const PolySystem sys = invariance_system(frame);
  const std::vector<Branch> branches = branch_components(sys);
  REQUIRE(branches.size() == 2);
  const Ctx& cx = frame.ctx;
  const Poly C = Poly::var(cx, "c");
  const Poly G = Poly::var(cx, "g");
  const Poly I = Poly::var(cx, "i");

  // The component carrying the family: a graph over (c, g, i).
  const Branch* mf = branch_with_free_vars(
      branches, {cx->index("c"), cx->index("g"), cx->index("i")});
  REQUIRE(mf != nullptr);
  CHECK(mf->parametrized());
  std::map<int, Poly> want;
  want[cx->index("a")] = Poly::zero(cx);
  want[cx->index("b")] = Poly::zero(cx);
  want[cx->index("d")] = -(C * G);
  want[cx->index("e")] = -(C * C * G);
  want[cx->index("f")] = -(C * I);
  want[cx->index("h")] = C * G;
  CHECK(mf->triangular == want);

  // The second component: the coordinate plane over (c, f, i).
  const Branch* other = branch_with_free_vars(
      branches, {cx->index("c"), cx->index("f"), cx->index("i")});
  REQUIRE(other != nullptr);
  CHECK(other->parametrized());
  for (const char* n : {"a", "b", "d", "e", "g", "h"}) {
    CHECK(other->triangular.at(cx->index(n)) == Poly::zero(cx));
  }

  for (const Branch* b : {mf, other}) {
    const ComponentCertificate cert = certify_component(*b, cx);
    CHECK(cert.certified);
    CHECK(cert.smooth);
    CHECK(cert.dimension == 3);
    CHECK(cert.jacobian_rank == 6);
    CHECK(cert.ambient_vars == 9);
  }
}

TEST_CASE("d=2 distinguished component is the frozen graph over (c, m, p, q)") {
  const ArtinAlgebra alg(2);
  const ChartFrame frame = chart_at(battery_base(alg));
  const PolySystem sys = invariance_system(frame);
  const std::vector<Branch> branches = branch_components(sys);
  REQUIRE(branches.size() == 2);
  const Ctx& cx = frame.ctx;
  const Poly C = Poly::var(cx, "c");
  const Poly M = Poly::var(cx, "m");
  const Poly P = Poly::var(cx, "p");
  const Poly Q = Poly::var(cx, "q");
  const Branch* mf = branch_with_free_vars(
      branches,
      {cx->index("c"), cx->index("m"), cx->index("p"), cx->index("q")});
  REQUIRE(mf != nullptr);
  std::map<int, Poly> want;
  for (const char* n : {"a", "b", "d", "e", "f", "g"}) {
    want[cx->index(n)] = Poly::zero(cx);
  }
  want[cx->index("h")] = C;
  want[cx->index("i")] = -(C * M);
  want[cx->index("j")] = -(C * C * M);
  want[cx->index("k")] = -(C * P);
  want[cx->index("l")] = -(C * Q);
  want[cx->index("n")] = C * M;
  CHECK(mf->triangular == want);
  const ComponentCertificate cert = certify_component(*mf, cx);
  CHECK(cert.certified);
  CHECK(cert.smooth);
  CHECK(cert.dimension == 4);
}

TEST_CASE("certificates reject branches with unresolved constraints") {
  const Ctx ctx = make_context({"x", "y"});
  const Poly x = Poly::var(ctx, "x");
  const Poly y = Poly::var(ctx, "y");
  Branch stuck;
  stuck.free_vars = {0, 1};
  stuck.residual = PolySystem(ctx, {x * y + Poly::constant(ctx, 1)});
  const ComponentCertificate c1 = certify_component(stuck, ctx);
  CHECK_FALSE(c1.certified);
  CHECK_FALSE(c1.smooth);

  Branch graph;  // y = x^2 over the free variable x
  graph.triangular[1] = x * x;
  graph.free_vars = {0};
  const ComponentCertificate c2 = certify_component(graph, ctx);
  CHECK(c2.certified);
  CHECK(c2.smooth);
  CHECK(c2.dimension == 1);
  CHECK(c2.jacobian_rank == 1);
  CHECK(c2.ambient_vars == 2);
}

TEST_CASE("union cover certifies the d=1 decomposition") {
  const ArtinAlgebra alg(1);
  const ChartFrame frame = chart_at(battery_base(alg));
  const PolySystem sys = invariance_system(frame);
  const std::vector<Branch> branches = branch_components(sys);
  const CoverResult res = verify_union_cover(sys, branches, 20240816u);
  CHECK(res.verdict == CoverVerdict::Covered);
  CHECK_FALSE(res.detail.empty());
}

TEST_CASE("union cover finds a witness when a component is missing") {
  const Ctx ctx = make_context({"x", "y"});
  const Poly x = Poly::var(ctx, "x");
  const Poly y = Poly::var(ctx, "y");
  const PolySystem sys(ctx, {x * y});
  Branch only_x;  // the x = 0 plane alone misses the y = 0 plane
  only_x.triangular[0] = Poly::zero(ctx);
  only_x.free_vars = {1};
  const CoverResult res = verify_union_cover(sys, {only_x}, 7u);
  CHECK(res.verdict == CoverVerdict::NotCovered);
  REQUIRE(res.witness.has_value());
  // The witness lies on the variety but on no listed branch.
  CHECK(eval_point(x * y, *res.witness).is_zero());
  CHECK_FALSE(res.witness->coeff(0).is_zero());
}

TEST_CASE("union cover is inconclusive when division cannot decide") {
  const Ctx ctx = make_context({"x", "y"});
  const Poly x = Poly::var(ctx, "x");
  const Poly y = Poly::var(ctx, "y");
  // Over the rationals the origin is the whole vanishing set, but the
  // division certificate cannot see it and no rational witness exists.
  const PolySystem sys(ctx, {x * x + y * y});
  Branch origin;
  origin.triangular[0] = Poly::zero(ctx);
  origin.triangular[1] = Poly::zero(ctx);
  const CoverResult res = verify_union_cover(sys, {origin}, 11u);
  CHECK(res.verdict == CoverVerdict::Inconclusive);
}

TEST_CASE("union cover rejects branches that leave the variety") {
  const Ctx ctx = make_context({"x", "y"});
  const Poly x = Poly::var(ctx, "x");
  const Poly y = Poly::var(ctx, "y");
  const PolySystem sys(ctx, {x});
  Branch wrong;  // claims y = 0 parametrizes V(x); substitution leaves x alive
  wrong.triangular[1] = Poly::zero(ctx);
  wrong.free_vars = {0};
  const CoverResult res = verify_union_cover(sys, {wrong}, 3u);
  CHECK(res.verdict != CoverVerdict::Covered);
}

TEST_CASE("the degenerating family locates the distinguished branch") {
  const ArtinAlgebra alg(1);
  const ChartFrame frame = chart_at(battery_base(alg));
  const PolySystem sys = invariance_system(frame);
  const std::vector<Branch> branches = branch_components(sys);
  QVector dir = QVector::Zero(2);
  dir(1) = Rational(1);
  const LocatedBranch loc =
      locate_branch_through_family(frame, branches, dir, Rational(0), Rational(1));
  REQUIRE(loc.index < branches.size());
  const Ctx& cx = frame.ctx;
  const std::vector<int> mf_free = {cx->index("c"), cx->index("g"), cx->index("i")};
  CHECK(branches[loc.index].free_vars == mf_free);
  CHECK(loc.samples.size() == 4);
  CHECK(loc.detail == "matched 1 branch(es) on 4 family samples");
  CHECK_THROWS_AS(
      locate_branch_through_family(frame, {}, dir, Rational(0), Rational(1)),
      UsageError);
}
