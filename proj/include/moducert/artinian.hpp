/// @file artinian.hpp
/// The square-zero Artinian algebra R = k[x_0..x_d]/(x_0..x_d)^2, elements
/// of its free rank-two module, R-submodules of that module, and the
/// degeneration kernels attached to direction/slope data.
///
/// Conventions.  An element is written a + sum v_i x_i; products obey
/// (a1; b)(a2; c) = (a1 a2; a1 c + a2 b) since all x_i x_j vanish.  The
/// rank-two module R^2 uses the ordered basis
///   (1,0), (x_0,0), ..., (x_d,0), (0,1), (0,x_0), ..., (0,x_d),
/// so a pair (f, g) has coordinate row [f | g].
#pragma once

#include <string>
#include <vector>

#include "moducert/errors.hpp"
#include "moducert/matrix.hpp"
#include "moducert/ratfunc.hpp"

namespace moducert {

struct ArtinAlgebra {
  int d = 0;

  explicit ArtinAlgebra(int d_) : d(d_) {
    if (d_ < 0) throw UsageError("ArtinAlgebra: d must be nonnegative");
  }

  int dim() const { return d + 2; }              ///< 1, x_0, ..., x_d
  int ambient_dim() const { return 2 * (d + 2); }  ///< dim of R^2 over k

  /// Label of the i-th basis vector of R^2 ("(1,0)", "(x0,0)", "(0,1)", ...).
  std::string basis_label(Index i) const;

  /// Matrix of multiplication by x_i on R^2 in column-coordinate convention
  /// (image of basis vector j is column j).  Products of two such matrices
  /// vanish, mirroring x_i x_j = 0.
  QMatrix action_matrix(int i) const;

  friend bool operator==(const ArtinAlgebra& a, const ArtinAlgebra& b) {
    return a.d == b.d;
  }
};

namespace detail {
inline Rational recip(const Rational& a) { return Rational(1) / a; }
inline RatFunc recip(const RatFunc& a) { return a.reciprocal(); }
inline bool value_is_zero(const Rational& a) { return a.is_zero(); }
inline bool value_is_zero(const RatFunc& a) { return a.is_zero(); }
}  // namespace detail

/// Element a + sum v_i x_i with scalar entries in K (exact rationals for
/// numeric work, rational functions for symbolic charts).
template <class K>
struct ArtinElt {
  K a{};
  std::vector<K> v;  ///< size d+1

  ArtinElt() = default;
  ArtinElt(K a_, std::vector<K> v_) : a(std::move(a_)), v(std::move(v_)) {}

  int d() const { return static_cast<int>(v.size()) - 1; }

  bool is_invertible() const { return !detail::value_is_zero(a); }

  friend ArtinElt operator+(const ArtinElt& x, const ArtinElt& y) {
    check_dims(x, y);
    ArtinElt out = x;
    out.a = out.a + y.a;
    for (size_t i = 0; i < out.v.size(); ++i) out.v[i] = out.v[i] + y.v[i];
    return out;
  }

  /// (a1; b)(a2; c) = (a1 a2; a1 c + a2 b): the square of the maximal
  /// ideal vanishes, so no b*c cross terms survive.
  friend ArtinElt operator*(const ArtinElt& x, const ArtinElt& y) {
    check_dims(x, y);
    ArtinElt out;
    out.a = x.a * y.a;
    out.v.resize(x.v.size());
    for (size_t i = 0; i < x.v.size(); ++i) {
      out.v[i] = x.a * y.v[i] + y.a * x.v[i];
    }
    return out;
  }

  /// (a; v)^{-1} = (1/a; -v/a^2); requires an invertible constant term.
  ArtinElt inverse() const {
    if (!is_invertible()) {
      throw DomainError("ArtinElt: constant term not invertible");
    }
    const K ia = detail::recip(a);
    ArtinElt out;
    out.a = ia;
    out.v.resize(v.size());
    for (size_t i = 0; i < v.size(); ++i) {
      out.v[i] = -(v[i] * ia * ia);
    }
    return out;
  }

 private:
  static void check_dims(const ArtinElt& x, const ArtinElt& y) {
    if (x.v.size() != y.v.size()) {
      throw ContextMismatch("ArtinElt: mixed algebra dimensions");
    }
  }
};

using ArtinQ = ArtinElt<Rational>;

/// Coordinates of one element in the R-basis [a, v_0..v_d].
QRowVector element_coords(const ArtinQ& x);

/// Coordinate row of the pair (f, g) in the ambient basis of R^2.
QRowVector pair_coords(const ArtinQ& f, const ArtinQ& g);

/// An R-submodule of R^2, stored as the canonical reduced-echelon basis of
/// its underlying k-subspace.  Equality of submodules is equality of bases.
class Submodule {
 public:
  /// Zero module over the d = 0 algebra; placeholder for later assignment.
  Submodule() : alg_(0), basis_(0, 0) {}
  Submodule(ArtinAlgebra alg, const QMatrix& span_rows);

  const ArtinAlgebra& algebra() const { return alg_; }
  const QMatrix& basis() const { return basis_; }
  Index dim() const { return basis_.rows(); }
  bool contains(const QRowVector& v) const;

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.alg_ == b.alg_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Submodule& a, const Submodule& b) {
    return !(a == b);
  }

 private:
  ArtinAlgebra alg_;
  QMatrix basis_;
};

/// Smallest R-submodule containing the given k-span: closes the span under
/// every x_i action and re-reduces until the dimension stabilises.
Submodule rmodule_closure(const ArtinAlgebra& alg, const QMatrix& span_rows);

/// Chart coordinates attached to the kernel of a surjective pair map.
struct PairChart {
  char side = 'e';  ///< 'e': coords of e^{-1}h; 'h': coords of h^{-1}e
  Rational a1;
  QVector b;  ///< size d+1
};

struct PairKernel {
  Submodule kernel;
  PairChart chart;
};

/// Kernel of (f, g) -> f e + g h together with chart coordinates.  The map
/// is surjective iff e or h is invertible; otherwise NotSurjective.  The
/// kernel is the cyclic R-module generated by (-h, e) and has k-dimension
/// d+2 (half the ambient dimension).
PairKernel kernel_of_pair(const ArtinAlgebra& alg, const ArtinQ& e, const ArtinQ& h);

/// Point of the distinguished degeneration locus: a projective direction
/// (a_0 : ... : a_d) and a projective slope (u : v), both stored with the
/// first nonzero coordinate scaled to 1.
struct GammaPoint {
  QVector a;
  Rational u;
  Rational v;
};

/// Normalizes and validates (direction not all zero, slope not (0,0)).
GammaPoint make_gamma_point(QVector a, Rational u, Rational v);

/// Distinguished-locus kernel at direction a (projective, nonzero) and
/// slope (u : v): the span of (abar, 0), (0, abar) and all (v x_i, -u x_i),
/// where abar = sum a_i x_i.  Always has k-dimension d+2.
Submodule gamma_kernel(const ArtinAlgebra& alg, const QVector& a, const Rational& u,
                       const Rational& v);
Submodule gamma_kernel(const ArtinAlgebra& alg, const GammaPoint& g);

/// Limit of the kernel family e = 1, h = a1 + sum (u_i / t) x_i as t -> 0:
/// kernel generators are Laurent rows in t; each is scaled by the minimal
/// power of t and evaluated at t = 0.  Equals the distinguished-locus
/// kernel at direction u and slope (1 : a1).
Submodule gamma_limit(const ArtinAlgebra& alg, const QVector& u, const Rational& a1);

/// Symbolic certificate for the chart transition of the pair family.
struct TransitionCertificate {
  bool involutive = false;       ///< applying the transition twice is the identity
  bool fixed_locus_ok = false;   ///< at a1 = 1 the map is (1, b) -> (1, -b)
  bool quadric_match = false;    ///< equals the chart change on V(xz + y^2)
  bool fiberwise_linear = false; ///< b -> -b/a1^2 is linear over the base
  std::vector<std::string> details;

  bool all() const {
    return involutive && fixed_locus_ok && quadric_match && fiberwise_linear;
  }
};

/// Derives the transition (a1, b) -> (1/a1, -b/a1^2) from the module side
/// (inverting 1 + nilpotents symbolically) and checks it against the chart
/// change of the quadric V(xz + y^2); everything is exact rational-function
/// arithmetic, valid for any d >= 0.
TransitionCertificate transition_check(int d);

}  // namespace moducert
