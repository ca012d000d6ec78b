/// @file surface.hpp
/// Exact intersection lattices of surfaces, blowups with strict transforms,
/// compactly supported Chern characters of pushforward sheaves, and the
/// rank inequalities controlling degenerate fibres.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "moducert/matrix.hpp"

namespace moducert {

/// Free abelian group with a symmetric intersection pairing.
struct SurfaceLattice {
  std::vector<std::string> labels;
  QMatrix gram;  ///< symmetric, labels.size() square
};

using Lat = std::shared_ptr<const SurfaceLattice>;

Lat make_lattice(std::vector<std::string> labels, const QMatrix& gram);

/// Rank-one lattice <H> with H^2 = h (ample generator square).
Lat picard_rank_one(const Rational& h);

struct Divisor {
  Lat lat;
  QVector coords;

  friend Divisor operator+(const Divisor& a, const Divisor& b);
  friend Divisor operator-(const Divisor& a, const Divisor& b);
  friend Divisor operator*(const Rational& c, const Divisor& d);
  friend bool operator==(const Divisor& a, const Divisor& b);
};

Divisor make_divisor(Lat lat, QVector coords);
/// The basis divisor with the given label.
Divisor basis_divisor(Lat lat, const std::string& label);

/// Exact intersection number via the Gram matrix.
Rational intersect(const Divisor& a, const Divisor& b);
Rational self_intersection(const Divisor& d);

/// Blowup of a point: extends the lattice by an exceptional class E with
/// E^2 = -1 orthogonal to everything existing.
Lat blowup(const Lat& lat, const std::string& exceptional_label);

/// Total transform: same coordinates, zero on all new exceptional classes.
Divisor pullback(const Divisor& d, const Lat& bigger);

/// Strict transform of a curve of multiplicity m at the blown-up point:
/// pullback minus m times the newest exceptional class.
Divisor strict_transform(const Divisor& d, const Lat& bigger, const Rational& mult);

/// Compactly supported Chern character (ch0, ch1, ch2) of a sheaf pushed
/// forward from a divisor.
struct ChernChar {
  Rational ch0;
  Divisor ch1;
  Rational ch2;

  friend ChernChar operator+(const ChernChar& a, const ChernChar& b);
  friend bool operator==(const ChernChar& a, const ChernChar& b);
};

/// A line bundle of degree degL on the divisor D pushes forward with
/// character (0, D, -D^2/2 + degL).
ChernChar ch_pushforward(const Divisor& d, const Rational& deg_line);

/// Short-exact-sequence additivity: middle = left + right componentwise.
bool ch_additivity_check(const ChernChar& left, const ChernChar& middle,
                         const ChernChar& right);

/// Both sides of the strict-transform identity C^2 - Ct^2 = Ct . sum n_j E_j
/// for a chain of blowups with centre multiplicities n_j (each centre away
/// from the earlier exceptional curves, so the classes stay orthogonal).
struct DefectCheck {
  Rational lhs;  ///< C^2 - Ct^2
  Rational rhs;  ///< Ct . sum n_j E_j
  bool equal = false;
};

DefectCheck strict_transform_defect_check(const Divisor& c,
                                          const std::vector<long>& mults);

/// The rank inequality for a degenerate fibre with successive ranks r_1..r_m:
/// (sum r_i)^2 >= sum (2m+1-2i) r_i, with equality iff every r_i = 1.
struct IneqResult {
  Int lhs;
  Int rhs;
  bool holds = false;
  bool equality = false;
};

IneqResult check_main_ineq(const std::vector<long>& ranks);

/// Lower bound on the second Chern number forced by a filtration with the
/// given ranks on a curve of self-intersection c2: the bound is
/// sum_i (-r_i/2 - (m-i) r_i) c2, and it meets the fibre value -n^2 c2 / 2
/// (n = sum r_i) exactly when the rank inequality is an equality.
struct FiltrationBound {
  Rational bound;
  Rational fibre_value;
  bool tight = false;
};

FiltrationBound filtration_ch2_bound(const Rational& c2, const std::vector<long>& ranks);

}  // namespace moducert
