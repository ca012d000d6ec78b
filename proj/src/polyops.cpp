/// @file polyops.cpp
#include "moducert/polyops.hpp"

#include <algorithm>

#include "moducert/errors.hpp"

namespace moducert {

Poly substitute(const Poly& p, const std::map<int, Poly>& values) {
  const Ctx& ctx = p.ctx();
  Poly out = Poly::zero(ctx);
  for (const auto& [e, c] : p.terms()) {
    Poly term = Poly::constant(ctx, c);
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      const auto it = values.find(static_cast<int>(i));
      if (it == values.end()) {
        term = term * Poly::var(ctx, static_cast<int>(i)).pow(e[i]);
      } else {
        term = term * it->second.pow(e[i]);
      }
    }
    out += term;
  }
  return out;
}

Rational eval_point(const Poly& p, const QVector& point) {
  if (point.size() != p.ctx()->size()) {
    throw ContextMismatch("eval_point: point size != context size");
  }
  Rational acc(0);
  for (const auto& [e, c] : p.terms()) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i) {
      for (int k = 0; k < e[i]; ++k) t *= point(static_cast<Index>(i));
    }
    acc += t;
  }
  return acc;
}

Poly derivative(const Poly& p, int var) {
  const Ctx& ctx = p.ctx();
  if (var < 0 || var >= ctx->size()) {
    throw UsageError("derivative: variable index out of range");
  }
  Poly::TermMap terms;
  for (const auto& [e, c] : p.terms()) {
    const int k = e[static_cast<size_t>(var)];
    if (k == 0) continue;
    Exponents d = e;
    d[static_cast<size_t>(var)] = k - 1;
    terms[std::move(d)] = Rational(k) * c;
  }
  return Poly::from_terms(ctx, std::move(terms));
}

QMatrix jacobian_at(const std::vector<Poly>& gens, const QVector& point) {
  const Index rows = static_cast<Index>(gens.size());
  const Index cols = point.size();
  QMatrix j = QMatrix::Zero(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (Index c = 0; c < cols; ++c) {
      j(r, c) = eval_point(derivative(gens[static_cast<size_t>(r)],
                                      static_cast<int>(c)),
                           point);
    }
  }
  return j;
}

JacobianRank jacobian_rank_at(const std::vector<Poly>& gens, const QVector& point) {
  JacobianRank out;
  out.jacobian = jacobian_at(gens, point);
  out.rank = matrix_reduce(out.jacobian).rank;
  return out;
}

namespace {

/// True when exponent vector a divides b componentwise.
bool exp_divides(const Exponents& a, const Exponents& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Exponents exp_sub(const Exponents& a, const Exponents& b) {
  Exponents out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

std::optional<Poly> try_exact_divide(const Poly& p, const Poly& q) {
  if (q.is_zero()) throw DomainError("exact_divide: zero divisor");
  const Ctx& ctx = p.ctx();
  Poly rem = p;
  Poly quot = Poly::zero(ctx);
  const Exponents& lq = q.leading_exponents();
  const Rational cq = q.leading_coeff();
  while (!rem.is_zero()) {
    const Exponents& lr = rem.leading_exponents();
    if (!exp_divides(lq, lr)) return std::nullopt;
    Poly::TermMap one;
    one.emplace(exp_sub(lr, lq), rem.leading_coeff() / cq);
    const Poly t = Poly::from_terms(ctx, std::move(one));
    quot += t;
    rem -= t * q;
  }
  return quot;
}

Poly exact_divide(const Poly& p, const Poly& q) {
  auto quot = try_exact_divide(p, q);
  if (!quot) {
    throw NotDivisible("exact_divide: '" + q.str() + "' does not divide '" +
                       p.str() + "'");
  }
  return *quot;
}

Poly reduce_by_set(const Poly& p, const std::vector<Poly>& gens) {
  Poly rem = Poly::zero(p.ctx());
  Poly work = p;
  while (!work.is_zero()) {
    const Exponents& lw = work.leading_exponents();
    bool fired = false;
    for (const Poly& g : gens) {
      if (g.is_zero()) continue;
      if (!exp_divides(g.leading_exponents(), lw)) continue;
      Poly::TermMap one;
      one.emplace(exp_sub(lw, g.leading_exponents()),
                  work.leading_coeff() / g.leading_coeff());
      work -= Poly::from_terms(p.ctx(), std::move(one)) * g;
      fired = true;
      break;
    }
    if (!fired) {
      // Move the irreducible leading term into the remainder.
      Poly::TermMap one;
      one.emplace(lw, work.leading_coeff());
      const Poly t = Poly::from_terms(p.ctx(), std::move(one));
      rem += t;
      work -= t;
    }
  }
  return rem;
}

namespace {

/// A variable is admissible in a generator when it sits in a single term,
/// that term is degree one (coefficient times the bare variable), and the
/// variable appears nowhere else in the generator.
bool admissible_solve(const Poly& g, int var, Rational* coeff_out, Poly* rest_out) {
  const Ctx& ctx = g.ctx();
  int hits = 0;
  Rational coeff(0);
  Poly rest = Poly::zero(ctx);
  for (const auto& [e, c] : g.terms()) {
    const int k = e[static_cast<size_t>(var)];
    if (k == 0) {
      Poly::TermMap one;
      one.emplace(e, c);
      rest += Poly::from_terms(ctx, std::move(one));
      continue;
    }
    if (k > 1 || total_degree(e) != 1) return false;
    ++hits;
    if (hits > 1) return false;
    coeff = c;
  }
  if (hits != 1) return false;
  *coeff_out = coeff;
  *rest_out = rest;
  return true;
}

/// Single-term pure power c*v^k with k >= 2.
std::optional<int> pure_power_var(const Poly& g) {
  if (g.term_count() != 1) return std::nullopt;
  const auto& [e, c] = *g.terms().begin();
  int var = -1;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (var >= 0) return std::nullopt;  // more than one variable
    var = static_cast<int>(i);
  }
  if (var < 0) return std::nullopt;                       // constant
  if (e[static_cast<size_t>(var)] < 2) return std::nullopt;  // already linear
  return var;
}

}  // namespace

Elimination eliminate_linear(const PolySystem& sys) {
  Elimination out;
  const Ctx& ctx = sys.ctx;
  PolySystem work = sys.normalized();
  std::map<int, Poly>& subs = out.substitution;

  const auto resubstitute = [&](const std::map<int, Poly>& step) {
    // Apply the new step everywhere: generators and recorded values.
    for (Poly& g : work.gens) g = substitute(g, step);
    for (auto& [v, val] : subs) val = substitute(val, step);
    for (const auto& [v, val] : step) subs[v] = val;
    work = work.normalized();
  };

  bool changed = true;
  while (changed) {
    changed = false;

    // Rule 2: pure powers define the same locus as the bare variable.
    for (Poly& g : work.gens) {
      if (const auto var = pure_power_var(g)) {
        g = Poly::var(ctx, *var);
        changed = true;
      }
    }
    if (changed) {
      work = work.normalized();
      continue;
    }

    // Rule 3: a polynomial multiple of another generator is redundant as a
    // set-theoretic condition.  Keep the divisor, drop the multiple.
    for (size_t i = 0; i < work.gens.size() && !changed; ++i) {
      for (size_t j = 0; j < work.gens.size(); ++j) {
        if (i == j) continue;
        const auto q = try_exact_divide(work.gens[i], work.gens[j]);
        if (q && !q->is_constant()) {
          work.gens.erase(work.gens.begin() + static_cast<long>(i));
          changed = true;
          break;
        }
      }
    }
    if (changed) {
      work = work.normalized();
      continue;
    }

    // Rule 1: solve for the latest admissible variable, earliest generator.
    for (int v = ctx->size() - 1; v >= 0 && !changed; --v) {
      for (size_t gi = 0; gi < work.gens.size(); ++gi) {
        Rational coeff(0);
        Poly rest = Poly::zero(ctx);
        if (!admissible_solve(work.gens[gi], v, &coeff, &rest)) continue;
        std::map<int, Poly> step;
        step.emplace(v, (Rational(-1) / coeff) * rest);
        resubstitute(step);
        changed = true;
        break;
      }
    }
  }

  out.reduced = work;
  return out;
}

}  // namespace moducert
