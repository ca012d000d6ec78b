/// @file poly.hpp
/// Sparse multivariate polynomials over the rationals.
///
/// Terms are kept in a map keyed by exponent vectors under the graded
/// lexicographic order (total degree first, then earlier variables weigh
/// more).  Every polynomial carries a shared variable context; operations
/// mixing contexts throw ContextMismatch.
#pragma once

#include <initializer_list>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "moducert/matrix.hpp"
#include "moducert/rational.hpp"

namespace moducert {

/// Ordered list of variable names; polynomials share one by pointer.
class VarContext {
 public:
  explicit VarContext(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int i) const { return names_.at(static_cast<size_t>(i)); }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of a name; throws UsageError when absent.
  int index(const std::string& name) const;
  bool has(const std::string& name) const;

  friend bool operator==(const VarContext& a, const VarContext& b) {
    return a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> index_;
};

using Ctx = std::shared_ptr<const VarContext>;

Ctx make_context(std::vector<std::string> names);

/// Exponent vector; size always equals the context size.
using Exponents = std::vector<int>;

int total_degree(const Exponents& e);

/// Graded lexicographic order: higher total degree wins; ties break
/// lexicographically with earlier variables more significant.
bool graded_lex_less(const Exponents& a, const Exponents& b);

struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const {
    return graded_lex_less(a, b);
  }
};

class Poly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  Poly() = default;
  explicit Poly(Ctx ctx) : ctx_(std::move(ctx)) {}

  static Poly zero(Ctx ctx) { return Poly(std::move(ctx)); }
  static Poly constant(Ctx ctx, const Rational& c);
  static Poly var(Ctx ctx, int index);
  static Poly var(Ctx ctx, const std::string& name);
  /// Single term c * prod(var_i ^ e_i) from (index, exponent) pairs.
  static Poly term(Ctx ctx, const Rational& c,
                   std::initializer_list<std::pair<int, int>> exps);
  static Poly from_terms(Ctx ctx, TermMap terms);

  const Ctx& ctx() const { return ctx_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(int var) const;
  bool is_constant() const;
  Rational constant_term() const;
  /// Exponents of the graded-lex leading term; throws DomainError on zero.
  const Exponents& leading_exponents() const;
  Rational leading_coeff() const;
  Rational coeff(const Exponents& e) const;
  int term_count() const { return static_cast<int>(terms_.size()); }
  /// Indices of variables that occur with positive exponent.
  std::set<int> vars_present() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
  friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, const Poly& p);
  Poly pow(int e) const;

  friend bool operator==(const Poly& a, const Poly& b);
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Total order for canonical sorting: graded-lex on leading exponents,
  /// then term-by-term comparison.  Zero sorts first.
  friend bool poly_less(const Poly& a, const Poly& b);

  /// Canonical text form: terms in descending graded-lex order, exact
  /// rational coefficients always printed, " + "/" - " joining, e.g.
  /// "1*c*d*g + 1*d^2" and "1*x^2 - 5/3*y".  Zero prints "0".
  std::string str() const;

 private:
  void prune();
  static void require_same_ctx(const Poly& a, const Poly& b);

  Ctx ctx_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

/// A finite generator list over one context, with a canonical normal form:
/// each generator scaled primitive-integral with positive leading
/// coefficient, zeros dropped, duplicates merged, sorted ascending.
struct PolySystem {
  Ctx ctx;
  std::vector<Poly> gens;

  PolySystem() = default;
  PolySystem(Ctx c, std::vector<Poly> g) : ctx(std::move(c)), gens(std::move(g)) {}

  /// Canonical normal form (see above); idempotent.
  PolySystem normalized() const;
  bool contains(const Poly& p) const;  ///< membership after normalizing p

  friend bool operator==(const PolySystem& a, const PolySystem& b);
};

/// Scales p by the unique positive rational making its coefficients coprime
/// integers with a positive leading coefficient.  Zero stays zero.
Poly primitive_normal(const Poly& p);

}  // namespace moducert
