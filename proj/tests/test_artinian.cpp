/// Square-zero Artinian algebra: element arithmetic, module actions,
/// pair-map kernels with chart coordinates, degeneration-locus kernels,
/// and the symbolic chart-transition certificate.
#include <doctest.h>

#include <random>
#include <vector>

#include "moducert/artinian.hpp"
#include "moducert/errors.hpp"
#include "moducert/matrix.hpp"

using namespace moducert;

namespace {

Rational rq(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

ArtinQ random_elt(std::mt19937_64& rng, int d) {
  std::vector<Rational> v(static_cast<size_t>(d + 1));
  for (auto& x : v) x = rq(rng);
  return ArtinQ(rq(rng), std::move(v));
}

bool elt_is_zero(const ArtinQ& x) {
  if (!x.a.is_zero()) return false;
  for (const auto& c : x.v) {
    if (!c.is_zero()) return false;
  }
  return true;
}

/// c * x via multiplication by the constant element (c; 0, ..., 0).
ArtinQ scale(const Rational& c, const ArtinQ& x) {
  return ArtinQ(c, std::vector<Rational>(x.v.size())) * x;
}

/// Basis element j of R^2: j < d+2 indexes (e_j, 0), the rest (0, e_j).
std::pair<ArtinQ, ArtinQ> basis_pair(int d, Index j) {
  const auto unit = [d](Index k) {
    ArtinQ x(Rational(0), std::vector<Rational>(static_cast<size_t>(d + 1)));
    if (k == 0) {
      x.a = Rational(1);
    } else {
      x.v[static_cast<size_t>(k - 1)] = Rational(1);
    }
    return x;
  };
  ArtinQ zero(Rational(0), std::vector<Rational>(static_cast<size_t>(d + 1)));
  if (j < d + 2) return {unit(j), zero};
  return {zero, unit(j - (d + 2))};
}

}  // namespace

TEST_CASE("element product follows the square-zero rule") {
  const ArtinQ x(Rational(2), {Rational(1), Rational(1)});
  const ArtinQ y(Rational(3), {Rational(0), Rational(1)});
  const ArtinQ p = x * y;
  CHECK(p.a == Rational(6));
  CHECK(p.v == std::vector<Rational>{Rational(3), Rational(5)});
  CHECK(elt_is_zero(x + scale(Rational(-1), x)));
  // Nilpotents multiply to zero: no cross terms survive.
  const ArtinQ nil1(Rational(0), {Rational(1), Rational(2)});
  const ArtinQ nil2(Rational(0), {Rational(-3), Rational(4)});
  CHECK(elt_is_zero(nil1 * nil2));
}

TEST_CASE("inverse is exact and two-sided") {
  // Property: x * x^{-1} == 1 for invertible x; non-invertible throws.
  std::mt19937_64 rng(60601);
  const int ntrials = 40;
  for (int t = 0; t < ntrials; ++t) {
    const int d = static_cast<int>(rng() % 4);
    ArtinQ x = random_elt(rng, d);
    if (x.a.is_zero()) x.a = Rational(1);
    const ArtinQ xi = x.inverse();
    const ArtinQ minus_one(Rational(-1), std::vector<Rational>(static_cast<size_t>(d + 1)));
    CHECK(elt_is_zero(x * xi + minus_one));
    CHECK(elt_is_zero(xi * x + minus_one));
  }
  ArtinQ nil(Rational(0), {Rational(1)});
  CHECK_THROWS_AS(nil.inverse(), DomainError);
  CHECK_FALSE(nil.is_invertible());
}

TEST_CASE("inverse formula is frozen") {
  const ArtinQ x(Rational(2), {Rational(5), Rational(-1)});
  const ArtinQ xi = x.inverse();
  CHECK(xi.a == Rational(1, 2));
  CHECK(xi.v == std::vector<Rational>{Rational(-5, 4), Rational(1, 4)});
}

TEST_CASE("action matrices match column-by-column element multiplication") {
  // Property: column j of action_matrix(i) holds the coordinates of
  // x_i * (basis vector j); products of two action matrices vanish.
  for (int d = 0; d <= 3; ++d) {
    const ArtinAlgebra alg(d);
    ArtinQ xi(Rational(0), std::vector<Rational>(static_cast<size_t>(d + 1)));
    for (int i = 0; i <= d; ++i) {
      ArtinQ gen = xi;
      gen.v[static_cast<size_t>(i)] = Rational(1);
      const QMatrix act = alg.action_matrix(i);
      REQUIRE(act.rows() == alg.ambient_dim());
      REQUIRE(act.cols() == alg.ambient_dim());
      for (Index j = 0; j < alg.ambient_dim(); ++j) {
        const auto [f, g] = basis_pair(d, j);
        const QRowVector want = pair_coords(gen * f, gen * g);
        CHECK(act.col(j).transpose() == want);
      }
      for (int k = 0; k <= d; ++k) {
        const QMatrix prod = act * alg.action_matrix(k);
        CHECK(prod == QMatrix::Zero(alg.ambient_dim(), alg.ambient_dim()));
      }
    }
  }
}

TEST_CASE("basis labels and coordinate rows agree") {
  const ArtinAlgebra alg(1);
  CHECK(alg.basis_label(0) == "(1,0)");
  CHECK(alg.basis_label(1) == "(x0,0)");
  CHECK(alg.basis_label(2) == "(x1,0)");
  CHECK(alg.basis_label(3) == "(0,1)");
  CHECK(alg.basis_label(5) == "(0,x1)");
  const ArtinQ f(Rational(2), {Rational(3), Rational(4)});
  const ArtinQ g(Rational(5), {Rational(6), Rational(7)});
  QRowVector row(6);
  row << 2, 3, 4, 5, 6, 7;
  CHECK(pair_coords(f, g) == row);
  QRowVector erow(3);
  erow << 2, 3, 4;
  CHECK(element_coords(f) == erow);
}

TEST_CASE("module closure of an invertible cyclic generator has full rank") {
  const ArtinAlgebra alg(1);
  const ArtinQ f(Rational(2), {Rational(1), Rational(1)});
  const ArtinQ g(Rational(0), {Rational(0), Rational(3)});
  QMatrix span(1, 6);
  span.row(0) = pair_coords(f, g);
  const Submodule mod = rmodule_closure(alg, span);
  CHECK(mod.dim() == 3);  // generator plus its two x_i translates
  CHECK(mod.contains(pair_coords(f, g)));
  // x_0 * (f, g) = ((0; 2, 0), 0) lies in the closure by construction.
  const ArtinQ x0(Rational(0), {Rational(1), Rational(0)});
  CHECK(mod.contains(pair_coords(x0 * f, x0 * g)));
  CHECK_FALSE(mod.contains(pair_coords(g, f)));
}

TEST_CASE("pair kernel has half dimension and annihilates the map") {
  // Property: kernel rows (f, g) satisfy f*e + g*h == 0; dimension d+2.
  std::mt19937_64 rng(424243);
  const int ntrials = 30;
  for (int t = 0; t < ntrials; ++t) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const ArtinAlgebra alg(d);
    ArtinQ e = random_elt(rng, d);
    ArtinQ h = random_elt(rng, d);
    if (e.a.is_zero() && h.a.is_zero()) e.a = Rational(1);
    const PairKernel pk = kernel_of_pair(alg, e, h);
    CHECK(pk.kernel.dim() == d + 2);
    for (Index r = 0; r < pk.kernel.dim(); ++r) {
      ArtinQ f(pk.kernel.basis()(r, 0), {});
      ArtinQ g(pk.kernel.basis()(r, d + 2), {});
      f.v.resize(static_cast<size_t>(d + 1));
      g.v.resize(static_cast<size_t>(d + 1));
      for (int i = 0; i <= d; ++i) {
        f.v[static_cast<size_t>(i)] = pk.kernel.basis()(r, 1 + i);
        g.v[static_cast<size_t>(i)] = pk.kernel.basis()(r, d + 3 + i);
      }
      CHECK(elt_is_zero(f * e + g * h));
    }
    // The kernel is generated by (-h, e) as a cyclic module.
    const ArtinQ mh = scale(Rational(-1), h);
    QMatrix gen(1, alg.ambient_dim());
    gen.row(0) = pair_coords(mh, e);
    CHECK(rmodule_closure(alg, gen) == pk.kernel);
  }
}

TEST_CASE("pair chart coordinates are frozen for an invertible first leg") {
  const ArtinAlgebra alg(2);
  const ArtinQ e(Rational(2), {Rational(0), Rational(0), Rational(0)});
  const ArtinQ h(Rational(1), {Rational(1), Rational(0), Rational(0)});
  const PairKernel pk = kernel_of_pair(alg, e, h);
  CHECK(pk.chart.side == 'e');
  CHECK(pk.chart.a1 == Rational(1, 2));
  QVector b(3);
  b << Rational(1, 2), Rational(0), Rational(0);
  CHECK(pk.chart.b == b);
  CHECK(pk.kernel.dim() == 4);
}

TEST_CASE("pair map with both legs nilpotent is not surjective") {
  const ArtinAlgebra alg(1);
  const ArtinQ e(Rational(0), {Rational(1), Rational(0)});
  const ArtinQ h(Rational(0), {Rational(0), Rational(1)});
  CHECK_THROWS_AS(kernel_of_pair(alg, e, h), NotSurjective);
}

TEST_CASE("pair kernel is invariant under common invertible rescaling") {
  // Property: (e, h) and (u*e, u*h) define the same kernel and chart.
  std::mt19937_64 rng(11312);
  const int ntrials = 25;
  for (int t = 0; t < ntrials; ++t) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const ArtinAlgebra alg(d);
    ArtinQ e = random_elt(rng, d);
    if (e.a.is_zero()) e.a = Rational(2);
    const ArtinQ h = random_elt(rng, d);
    ArtinQ u = random_elt(rng, d);
    if (u.a.is_zero()) u.a = Rational(3);
    const PairKernel p1 = kernel_of_pair(alg, e, h);
    const PairKernel p2 = kernel_of_pair(alg, u * e, u * h);
    CHECK(p1.kernel == p2.kernel);
    CHECK(p1.chart.side == p2.chart.side);
    CHECK(p1.chart.a1 == p2.chart.a1);
    CHECK(p1.chart.b == p2.chart.b);
  }
}

TEST_CASE("gamma points normalize projectively and reject degenerate data") {
  QVector a(3);
  a << Rational(0), Rational(2), Rational(4);
  const GammaPoint g = make_gamma_point(a, Rational(3), Rational(6));
  QVector want(3);
  want << Rational(0), Rational(1), Rational(2);
  CHECK(g.a == want);
  CHECK(g.u == Rational(1));
  CHECK(g.v == Rational(2));
  const GammaPoint flip = make_gamma_point(a, Rational(0), Rational(-5));
  CHECK(flip.u == Rational(0));
  CHECK(flip.v == Rational(1));
  QVector zero = QVector::Zero(3);
  CHECK_THROWS_AS(make_gamma_point(zero, Rational(1), Rational(0)), UsageError);
  CHECK_THROWS_AS(make_gamma_point(a, Rational(0), Rational(0)), UsageError);
}

TEST_CASE("distinguished-locus kernel has dimension d+2 and is scale-invariant") {
  std::mt19937_64 rng(777002);
  for (int d = 1; d <= 6; ++d) {
    const ArtinAlgebra alg(d);
    const int ntrials = 10;
    for (int t = 0; t < ntrials; ++t) {
      QVector a(d + 1);
      bool nonzero = false;
      for (int i = 0; i <= d; ++i) {
        a(i) = rq(rng);
        nonzero = nonzero || !a(i).is_zero();
      }
      if (!nonzero) a(0) = Rational(1);
      Rational u = rq(rng);
      Rational v = rq(rng);
      if (u.is_zero() && v.is_zero()) u = Rational(1);
      const Submodule k = gamma_kernel(alg, a, u, v);
      CHECK(k.dim() == d + 2);
      // Property: projective data — rescaling direction or slope changes nothing.
      CHECK(gamma_kernel(alg, Rational(3) * a, u, v) == k);
      CHECK(gamma_kernel(alg, a, Rational(-2) * u, Rational(-2) * v) == k);
      CHECK(gamma_kernel(alg, make_gamma_point(a, u, v)) == k);
    }
  }
}

TEST_CASE("limit of the kernel family lands on the distinguished locus") {
  // Property: the t -> 0 limit of ker(f, g) -> f + g(a1 + sum u_i x_i / t)
  // equals the distinguished-locus kernel at direction u, slope (1 : a1).
  std::mt19937_64 rng(90210);
  for (int d = 1; d <= 4; ++d) {
    const ArtinAlgebra alg(d);
    const int ntrials = 10;
    for (int t = 0; t < ntrials; ++t) {
      QVector u(d + 1);
      bool nonzero = false;
      for (int i = 0; i <= d; ++i) {
        u(i) = rq(rng);
        nonzero = nonzero || !u(i).is_zero();
      }
      if (!nonzero) u(d) = Rational(1);
      const Rational a1 = rq(rng);
      CHECK(gamma_limit(alg, u, a1) == gamma_kernel(alg, u, Rational(1), a1));
    }
  }
}

TEST_CASE("chart transition certificate holds symbolically") {
  for (int d = 0; d <= 3; ++d) {
    const TransitionCertificate cert = transition_check(d);
    CHECK(cert.involutive);
    CHECK(cert.fixed_locus_ok);
    CHECK(cert.quadric_match);
    CHECK(cert.fiberwise_linear);
    CHECK(cert.all());
    CHECK_FALSE(cert.details.empty());
  }
}
