/// Intersection lattices, blowups and strict transforms, pushforward Chern
/// characters, the degenerate-fibre rank inequality, and the filtration
/// bound on the second Chern number.
#include <doctest.h>

#include <random>
#include <vector>

#include "moducert/errors.hpp"
#include "moducert/surface.hpp"

using namespace moducert;

namespace {

Rational rq(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("lattice construction validates its input") {
  QMatrix gram(2, 2);
  gram << 0, 1, 1, 0;
  const Lat lat = make_lattice({"A", "B"}, gram);
  CHECK(intersect(basis_divisor(lat, "A"), basis_divisor(lat, "B")) == Rational(1));
  CHECK(self_intersection(basis_divisor(lat, "A")).is_zero());
  CHECK_THROWS_AS(make_lattice({"A"}, gram), UsageError);
  QMatrix skew(2, 2);
  skew << 0, 1, -1, 0;
  CHECK_THROWS_AS(make_lattice({"A", "B"}, skew), UsageError);
  CHECK_THROWS_AS(basis_divisor(lat, "C"), UsageError);
}

TEST_CASE("intersection pairing is symmetric and bilinear") {
  // Property: (a + s*b) . c == a . c + s * (b . c) and a . b == b . a.
  std::mt19937_64 rng(314159);
  QMatrix gram(3, 3);
  gram << 2, 1, 0, 1, -2, 3, 0, 3, 1;
  const Lat lat = make_lattice({"A", "B", "C"}, gram);
  const int ntrials = 30;
  for (int t = 0; t < ntrials; ++t) {
    QVector x(3), y(3), z(3);
    for (Index i = 0; i < 3; ++i) {
      x(i) = rq(rng);
      y(i) = rq(rng);
      z(i) = rq(rng);
    }
    const Divisor a = make_divisor(lat, x);
    const Divisor b = make_divisor(lat, y);
    const Divisor c = make_divisor(lat, z);
    const Rational s = rq(rng);
    CHECK(intersect(a + s * b, c) == intersect(a, c) + s * intersect(b, c));
    CHECK(intersect(a, b) == intersect(b, a));
    CHECK(self_intersection(a - b) ==
          self_intersection(a) - Rational(2) * intersect(a, b) + self_intersection(b));
  }
}

TEST_CASE("blowup adds an orthogonal minus-one class") {
  const Lat lat = picard_rank_one(Rational(2));
  const Divisor h = basis_divisor(lat, "H");
  const Lat up = blowup(lat, "E1");
  const Divisor e1 = basis_divisor(up, "E1");
  CHECK(self_intersection(e1) == Rational(-1));
  CHECK(intersect(pullback(h, up), e1).is_zero());
  // Pullback preserves the pairing.
  CHECK(intersect(pullback(h, up), pullback(h, up)) == self_intersection(h));
  // Strict transform with multiplicity m drops the square by m^2.
  const Divisor c = Rational(2) * h;
  const Divisor st = strict_transform(c, up, Rational(3));
  CHECK(self_intersection(st) == self_intersection(c) - Rational(9));
  CHECK(strict_transform(c, up, Rational(0)) == pullback(c, up));
  CHECK(intersect(st, e1) == Rational(3));
  CHECK_THROWS_AS(blowup(up, "E1"), UsageError);
  // A second blowup stays orthogonal to the first exceptional class.
  const Lat up2 = blowup(up, "E2");
  CHECK(intersect(basis_divisor(up2, "E2"), pullback(e1, up2)).is_zero());
}

TEST_CASE("pushforward characters are frozen on small examples") {
  QMatrix gram(1, 1);
  gram(0, 0) = Rational(-3);
  const Lat lat = make_lattice({"C"}, gram);
  const Divisor c = basis_divisor(lat, "C");
  const Divisor two_c = Rational(2) * c;
  // Structure sheaf of the double curve: (0, 2C, -(2C)^2/2) = (0, 2C, 6).
  const ChernChar mid = ch_pushforward(two_c, Rational(0));
  CHECK(mid.ch0 == Rational(0));
  CHECK(mid.ch1 == two_c);
  CHECK(mid.ch2 == Rational(6));
  // Structure sheaf of C: (0, C, 3/2); twisting by degree d adds d to ch2.
  const ChernChar right = ch_pushforward(c, Rational(0));
  CHECK(right.ch2 == Rational(3, 2));
  const ChernChar left = ch_pushforward(c, Rational(3));
  CHECK(left.ch2 == Rational(9, 2));
  // The double curve splits as degree-d bundle plus structure sheaf.
  CHECK(mid == left + right);
  CHECK(ch_additivity_check(left, mid, right));
  ChernChar bad = mid;
  bad.ch2 = bad.ch2 + Rational(1);
  CHECK_FALSE(ch_additivity_check(left, bad, right));
  // Rank-one lattice: dH pushes to (0, dH, -d^2 H^2 / 2).
  const Lat pic = picard_rank_one(Rational(2));
  const Divisor d4 = Rational(4) * basis_divisor(pic, "H");
  const ChernChar got = ch_pushforward(d4, Rational(0));
  CHECK(got.ch1 == d4);
  CHECK(got.ch2 == Rational(-16));
}

TEST_CASE("strict transform defect equals the sum of squared multiplicities") {
  // Property: with disjoint centres, C^2 - Ct^2 = sum n_j^2 = Ct . sum n_j E_j.
  const Lat lat = picard_rank_one(Rational(1));
  const Divisor c = Rational(3) * basis_divisor(lat, "H");
  const DefectCheck one = strict_transform_defect_check(c, {1});
  CHECK(one.equal);
  CHECK(one.lhs == Rational(1));
  const DefectCheck three = strict_transform_defect_check(c, {2, 1, 3});
  CHECK(three.equal);
  CHECK(three.lhs == Rational(14));
  CHECK(three.rhs == Rational(14));
  std::mt19937_64 rng(271);
  const int ntrials = 60;
  for (int t = 0; t < ntrials; ++t) {
    std::vector<long> mults(1 + rng() % 5);
    long sumsq = 0;
    for (auto& m : mults) {
      m = static_cast<long>(rng() % 5);
      sumsq += m * m;
    }
    const DefectCheck dc = strict_transform_defect_check(c, mults);
    CHECK(dc.equal);
    CHECK(dc.lhs == Rational(sumsq));
  }
  CHECK_THROWS_AS(strict_transform_defect_check(c, {1, -2}), UsageError);
}

TEST_CASE("rank inequality matches a direct evaluation on all small tuples") {
  // Property: lhs = (sum r_i)^2, rhs = sum (2m+1-2i) r_i, equality iff all
  // ranks are 1 — checked against an independent in-test evaluation.
  for (int m = 1; m <= 4; ++m) {
    std::vector<long> ranks(static_cast<size_t>(m), 1);
    while (true) {
      long sum = 0;
      long rhs = 0;
      bool all_ones = true;
      for (int i = 1; i <= m; ++i) {
        const long r = ranks[static_cast<size_t>(i - 1)];
        sum += r;
        rhs += (2 * m + 1 - 2 * i) * r;
        all_ones = all_ones && r == 1;
      }
      const IneqResult res = check_main_ineq(ranks);
      CHECK(res.lhs == Int(sum * sum));
      CHECK(res.rhs == Int(rhs));
      CHECK(res.holds == (sum * sum >= rhs));
      CHECK(res.holds);  // the inequality itself always holds
      CHECK(res.equality == (sum * sum == rhs));
      CHECK(res.equality == all_ones);

      int pos = m - 1;
      while (pos >= 0 && ranks[static_cast<size_t>(pos)] == 4) {
        ranks[static_cast<size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++ranks[static_cast<size_t>(pos)];
    }
  }
  CHECK_THROWS_AS(check_main_ineq({}), UsageError);
  CHECK_THROWS_AS(check_main_ineq({2, 0}), UsageError);
}

TEST_CASE("filtration bound is tight exactly at the all-ones ranks") {
  const Rational c2(1);
  const FiltrationBound flat = filtration_ch2_bound(c2, {1, 1});
  CHECK(flat.bound == Rational(-2));
  CHECK(flat.fibre_value == Rational(-2));
  CHECK(flat.tight);
  const FiltrationBound jump = filtration_ch2_bound(c2, {2});
  CHECK(jump.bound == Rational(-1));
  CHECK(jump.fibre_value == Rational(-2));
  CHECK_FALSE(jump.tight);
  // Property: tight <=> the rank inequality is an equality, for every small
  // tuple and for negative curve squares too.
  const Rational neg(-5, 2);
  for (int m = 1; m <= 3; ++m) {
    std::vector<long> ranks(static_cast<size_t>(m), 1);
    while (true) {
      const IneqResult ineq = check_main_ineq(ranks);
      CHECK(filtration_ch2_bound(c2, ranks).tight == ineq.equality);
      CHECK(filtration_ch2_bound(neg, ranks).tight == ineq.equality);

      int pos = m - 1;
      while (pos >= 0 && ranks[static_cast<size_t>(pos)] == 3) {
        ranks[static_cast<size_t>(pos)] = 1;
        --pos;
      }
      if (pos < 0) break;
      ++ranks[static_cast<size_t>(pos)];
    }
  }
  CHECK_THROWS_AS(filtration_ch2_bound(c2, {}), UsageError);
}

TEST_CASE("divisors reject mixed lattices") {
  const Lat a = picard_rank_one(Rational(1));
  const Lat b = picard_rank_one(Rational(2));
  CHECK_THROWS_AS(intersect(basis_divisor(a, "H"), basis_divisor(b, "H")),
                  ContextMismatch);
  QVector wrong(2);
  wrong << Rational(1), Rational(0);
  CHECK_THROWS_AS(make_divisor(a, wrong), ContextMismatch);
}
