/// @file artinian.cpp
#include "moducert/artinian.hpp"

#include <map>
#include <sstream>

namespace moducert {

std::string ArtinAlgebra::basis_label(Index i) const {
  const int n = dim();
  std::ostringstream os;
  const bool left = i < n;
  const Index k = left ? i : i - n;
  if (k == 0) {
    os << (left ? "(1,0)" : "(0,1)");
  } else {
    os << (left ? "(x" : "(0,x") << (k - 1) << (left ? ",0)" : ")");
  }
  return os.str();
}

QMatrix ArtinAlgebra::action_matrix(int i) const {
  if (i < 0 || i > d) throw UsageError("action_matrix: index out of range");
  const int n = dim();
  QMatrix a = QMatrix::Zero(ambient_dim(), ambient_dim());
  // x_i sends (1,0) to (x_i,0) and (0,1) to (0,x_i); everything else dies.
  a(1 + i, 0) = Rational(1);
  a(n + 1 + i, n) = Rational(1);
  return a;
}

QRowVector element_coords(const ArtinQ& x) {
  QRowVector out(static_cast<Index>(x.v.size()) + 1);
  out(0) = x.a;
  for (size_t i = 0; i < x.v.size(); ++i) {
    out(static_cast<Index>(i) + 1) = x.v[i];
  }
  return out;
}

QRowVector pair_coords(const ArtinQ& f, const ArtinQ& g) {
  if (f.v.size() != g.v.size()) {
    throw ContextMismatch("pair_coords: mixed algebra dimensions");
  }
  const Index n = static_cast<Index>(f.v.size()) + 1;
  QRowVector out(2 * n);
  out.leftCols(n) = element_coords(f);
  out.rightCols(n) = element_coords(g);
  return out;
}

Submodule::Submodule(ArtinAlgebra alg, const QMatrix& span_rows) : alg_(alg) {
  if (span_rows.rows() > 0 && span_rows.cols() != alg_.ambient_dim()) {
    throw ContextMismatch("Submodule: row width != ambient dimension");
  }
  basis_ = row_space_basis(span_rows);
}

bool Submodule::contains(const QRowVector& v) const {
  if (v.cols() != alg_.ambient_dim()) {
    throw ContextMismatch("Submodule::contains: wrong coordinate length");
  }
  return in_row_space(basis_, v);
}

Submodule rmodule_closure(const ArtinAlgebra& alg, const QMatrix& span_rows) {
  QMatrix current = row_space_basis(span_rows);
  while (true) {
    QMatrix stacked = current;
    for (int i = 0; i <= alg.d; ++i) {
      const QMatrix acted = current * alg.action_matrix(i).transpose();
      stacked = stack_rows(stacked, acted);
    }
    QMatrix next = row_space_basis(stacked);
    if (next.rows() == current.rows()) {
      return Submodule(alg, next);
    }
    current = std::move(next);
  }
}

PairKernel kernel_of_pair(const ArtinAlgebra& alg, const ArtinQ& e, const ArtinQ& h) {
  if (e.d() != alg.d || h.d() != alg.d) {
    throw ContextMismatch("kernel_of_pair: element dimension != algebra");
  }
  if (!e.is_invertible() && !h.is_invertible()) {
    throw NotSurjective("kernel_of_pair: neither component is invertible");
  }
  // The kernel of (f,g) -> fe + gh is the cyclic module on (-h, e): the
  // generator maps to -he + eh = 0, and counting dimensions over k gives
  // d+2 on each side.
  ArtinQ minus_h = h;
  minus_h.a = -minus_h.a;
  for (auto& c : minus_h.v) c = -c;
  QMatrix gen(1, alg.ambient_dim());
  gen.row(0) = pair_coords(minus_h, e);

  PairKernel out{rmodule_closure(alg, gen), PairChart{}};
  if (e.is_invertible()) {
    const ArtinQ k = e.inverse() * h;
    out.chart.side = 'e';
    out.chart.a1 = k.a;
    out.chart.b = element_coords(k).rightCols(alg.d + 1).transpose();
  } else {
    const ArtinQ k = h.inverse() * e;
    out.chart.side = 'h';
    out.chart.a1 = k.a;
    out.chart.b = element_coords(k).rightCols(alg.d + 1).transpose();
  }
  return out;
}

Submodule gamma_kernel(const ArtinAlgebra& alg, const QVector& a, const Rational& u,
                       const Rational& v) {
  if (a.size() != alg.d + 1) {
    throw ContextMismatch("gamma_kernel: direction length != d+1");
  }
  bool a_zero = true;
  for (Index i = 0; i < a.size(); ++i) a_zero = a_zero && a(i).is_zero();
  if (a_zero) throw UsageError("gamma_kernel: zero direction");
  if (u.is_zero() && v.is_zero()) throw UsageError("gamma_kernel: zero slope");

  const int n = alg.dim();
  QMatrix rows = QMatrix::Zero(2 + (alg.d + 1), alg.ambient_dim());
  for (int i = 0; i <= alg.d; ++i) {
    rows(0, 1 + i) = a(i);      // (abar, 0)
    rows(1, n + 1 + i) = a(i);  // (0, abar)
  }
  for (int i = 0; i <= alg.d; ++i) {  // (v x_i, -u x_i)
    rows(2 + i, 1 + i) = v;
    rows(2 + i, n + 1 + i) = -u;
  }
  return Submodule(alg, rows);
}

GammaPoint make_gamma_point(QVector a, Rational u, Rational v) {
  Index first = -1;
  for (Index i = 0; i < a.size(); ++i) {
    if (!a(i).is_zero()) {
      first = i;
      break;
    }
  }
  if (first < 0) throw UsageError("make_gamma_point: zero direction");
  const Rational scale = a(first);
  for (Index i = 0; i < a.size(); ++i) a(i) = a(i) / scale;
  GammaPoint g{std::move(a), std::move(u), std::move(v)};
  if (!g.u.is_zero()) {
    g.v = g.v / g.u;
    g.u = Rational(1);
  } else if (!g.v.is_zero()) {
    g.v = Rational(1);
  } else {
    throw UsageError("make_gamma_point: zero slope");
  }
  return g;
}

Submodule gamma_kernel(const ArtinAlgebra& alg, const GammaPoint& g) {
  return gamma_kernel(alg, g.a, g.u, g.v);
}

namespace {

/// Row vector with entries that are finite Laurent series in one parameter:
/// power -> coordinate row.
struct LaurentRow {
  std::map<int, QRowVector> parts;

  void add(int power, const QRowVector& row) {
    auto [it, inserted] = parts.emplace(power, row);
    if (!inserted) it->second += row;
    prune();
  }

  void prune() {
    for (auto it = parts.begin(); it != parts.end();) {
      bool zero = true;
      for (Index j = 0; j < it->second.cols(); ++j) {
        zero = zero && it->second(j).is_zero();
      }
      it = zero ? parts.erase(it) : std::next(it);
    }
  }

  /// Scales by the minimal power of the parameter and evaluates at zero:
  /// the surviving coordinates are the lowest-order part.
  QRowVector limit(Index width) const {
    if (parts.empty()) return QRowVector::Zero(width);
    return parts.begin()->second;
  }
};

}  // namespace

Submodule gamma_limit(const ArtinAlgebra& alg, const QVector& u, const Rational& a1) {
  if (u.size() != alg.d + 1) {
    throw ContextMismatch("gamma_limit: direction length != d+1");
  }
  bool u_zero = true;
  for (Index i = 0; i < u.size(); ++i) u_zero = u_zero && u(i).is_zero();
  if (u_zero) throw UsageError("gamma_limit: zero direction");

  const int n = alg.dim();
  const Index width = alg.ambient_dim();

  // Kernel generator of the family pair e = 1, h = a1 + sum (u_i/t) x_i,
  // written as the Laurent row (-h, e).
  LaurentRow g0;
  {
    QRowVector order0 = QRowVector::Zero(width);
    order0(0) = -a1;          // -(a1) on (1,0)
    order0(n) = Rational(1);  // e = 1 on (0,1)
    g0.add(0, order0);
    QRowVector pole = QRowVector::Zero(width);
    for (int i = 0; i <= alg.d; ++i) pole(1 + i) = -u(i);
    g0.add(-1, pole);
  }

  QMatrix rows = QMatrix::Zero(n, width);
  rows.row(0) = g0.limit(width);
  // Module closure products x_j (-h, e) = (-a1 x_j, x_j): already t-free.
  for (int j = 0; j <= alg.d; ++j) {
    LaurentRow prod;
    QRowVector r = QRowVector::Zero(width);
    r(1 + j) = -a1;
    r(n + 1 + j) = Rational(1);
    prod.add(0, r);
    rows.row(1 + j) = prod.limit(width);
  }

  Submodule out(alg, rows);
  if (out.dim() != n) {
    throw DomainError("gamma_limit: degenerate limit (dimension drop)");
  }
  return out;
}

TransitionCertificate transition_check(int d) {
  TransitionCertificate cert;
  if (d < 0) throw UsageError("transition_check: d must be nonnegative");

  // Symbol table: base coordinate a1, fibre coordinates b_i, a second fibre
  // vector c_i and weights lam, mu for the linearity check.
  std::vector<std::string> names{"a1"};
  for (int i = 0; i <= d; ++i) names.push_back("b" + std::to_string(i));
  for (int i = 0; i <= d; ++i) names.push_back("c" + std::to_string(i));
  names.push_back("lam");
  names.push_back("mu");
  const Ctx ctx = make_context(names);
  const auto sym = [&](const std::string& s) { return RatFunc::var(ctx, ctx->index(s)); };
  const RatFunc one = RatFunc::constant(ctx, Rational(1));

  // The pair family (e, h) = (1, a1 + sum b_i x_i); the mirrored chart reads
  // off the coordinates of h^{-1} e = h^{-1}.
  ArtinElt<RatFunc> h;
  h.a = sym("a1");
  for (int i = 0; i <= d; ++i) h.v.push_back(sym("b" + std::to_string(i)));
  const ArtinElt<RatFunc> tau = h.inverse();

  // Involution: running the same construction from the mirrored chart lands
  // back at (a1, b).  Compose tau with itself by substitution.
  {
    std::map<int, RatFunc> back;
    back.emplace(ctx->index("a1"), tau.a);
    for (int i = 0; i <= d; ++i) {
      back.emplace(ctx->index("b" + std::to_string(i)), tau.v[static_cast<size_t>(i)]);
    }
    bool ok = substitute_ratfunc(tau.a, back) == sym("a1");
    for (int i = 0; i <= d && ok; ++i) {
      ok = substitute_ratfunc(tau.v[static_cast<size_t>(i)], back) ==
           sym("b" + std::to_string(i));
    }
    cert.involutive = ok;
    cert.details.push_back("tau o tau = id: " + std::string(ok ? "yes" : "no"));
  }

  // Fixed base point a1 = 1: the transition restricts to b -> -b.
  {
    std::map<int, RatFunc> at_one;
    at_one.emplace(ctx->index("a1"), one);
    bool ok = substitute_ratfunc(tau.a, at_one) == one;
    for (int i = 0; i <= d && ok; ++i) {
      ok = substitute_ratfunc(tau.v[static_cast<size_t>(i)], at_one) ==
           -sym("b" + std::to_string(i));
    }
    cert.fixed_locus_ok = ok;
    cert.details.push_back("a1 = 1 restricts to b -> -b: " +
                           std::string(ok ? "yes" : "no"));
  }

  // Quadric picture: embed the chart as (x:y:z:u) = (1 : a1 : -a1^2 : b) on
  // V(xz + y^2); the z-chart coordinates are (-y, u)/z after normalising.
  {
    const RatFunc x = one;
    const RatFunc y = sym("a1");
    const RatFunc z = -(sym("a1") * sym("a1"));
    const bool on_quadric = (x * z + y * y).is_zero();

    const RatFunc scale = one / z;
    bool ok = on_quadric && (-(y * scale)) == tau.a;
    for (int i = 0; i <= d && ok; ++i) {
      ok = (sym("b" + std::to_string(i)) * scale) == tau.v[static_cast<size_t>(i)];
    }
    cert.quadric_match = ok;
    cert.details.push_back("matches z-chart change on V(xz + y^2): " +
                           std::string(ok ? "yes" : "no"));
  }

  // Fiberwise linearity over the base: tau(a1, lam b + mu c) has fibre part
  // lam tau(a1, b) + mu tau(a1, c) and unchanged base part.
  {
    std::map<int, RatFunc> mix;
    for (int i = 0; i <= d; ++i) {
      mix.emplace(ctx->index("b" + std::to_string(i)),
                  sym("lam") * sym("b" + std::to_string(i)) +
                      sym("mu") * sym("c" + std::to_string(i)));
    }
    std::map<int, RatFunc> swap_bc;
    for (int i = 0; i <= d; ++i) {
      swap_bc.emplace(ctx->index("b" + std::to_string(i)),
                      sym("c" + std::to_string(i)));
    }
    bool ok = substitute_ratfunc(tau.a, mix) == tau.a;
    for (int i = 0; i <= d && ok; ++i) {
      const RatFunc mixed = substitute_ratfunc(tau.v[static_cast<size_t>(i)], mix);
      const RatFunc split =
          sym("lam") * tau.v[static_cast<size_t>(i)] +
          sym("mu") * substitute_ratfunc(tau.v[static_cast<size_t>(i)], swap_bc);
      ok = mixed == split;
    }
    cert.fiberwise_linear = ok;
    cert.details.push_back("fibre map linear over the base: " +
                           std::string(ok ? "yes" : "no"));
  }

  return cert;
}

}  // namespace moducert
