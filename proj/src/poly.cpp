/// @file poly.cpp
#include "moducert/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "moducert/errors.hpp"

namespace moducert {

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  for (int i = 0; i < static_cast<int>(names_.size()); ++i) {
    const auto& n = names_[static_cast<size_t>(i)];
    if (n.empty()) throw UsageError("VarContext: empty variable name");
    if (!index_.emplace(n, i).second) {
      throw UsageError("VarContext: duplicate variable '" + n + "'");
    }
  }
}

int VarContext::index(const std::string& name) const {
  const auto it = index_.find(name);
  if (it == index_.end()) {
    throw UsageError("VarContext: unknown variable '" + name + "'");
  }
  return it->second;
}

bool VarContext::has(const std::string& name) const {
  return index_.count(name) != 0;
}

Ctx make_context(std::vector<std::string> names) {
  return std::make_shared<const VarContext>(std::move(names));
}

int total_degree(const Exponents& e) {
  int d = 0;
  for (int k : e) d += k;
  return d;
}

bool graded_lex_less(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  // Same degree: the monomial with the larger exponent on the earliest
  // differing variable is the larger one.
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

static void check_ctx_ptr(const Ctx& c) {
  if (!c) throw UsageError("Poly: null variable context");
}

void Poly::require_same_ctx(const Poly& a, const Poly& b) {
  check_ctx_ptr(a.ctx_);
  check_ctx_ptr(b.ctx_);
  if (a.ctx_ == b.ctx_) return;
  if (!(*a.ctx_ == *b.ctx_)) {
    throw ContextMismatch("Poly: operands use different variable contexts");
  }
}

Poly Poly::constant(Ctx ctx, const Rational& c) {
  check_ctx_ptr(ctx);
  Poly p(std::move(ctx));
  if (!c.is_zero()) {
    p.terms_.emplace(Exponents(static_cast<size_t>(p.ctx_->size()), 0), c);
  }
  return p;
}

Poly Poly::var(Ctx ctx, int index) {
  check_ctx_ptr(ctx);
  if (index < 0 || index >= ctx->size()) {
    throw UsageError("Poly::var: index out of range");
  }
  Poly p(std::move(ctx));
  Exponents e(static_cast<size_t>(p.ctx_->size()), 0);
  e[static_cast<size_t>(index)] = 1;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

Poly Poly::var(Ctx ctx, const std::string& name) {
  check_ctx_ptr(ctx);
  const int i = ctx->index(name);
  return var(std::move(ctx), i);
}

Poly Poly::term(Ctx ctx, const Rational& c,
                std::initializer_list<std::pair<int, int>> exps) {
  check_ctx_ptr(ctx);
  Poly p(std::move(ctx));
  if (c.is_zero()) return p;
  Exponents e(static_cast<size_t>(p.ctx_->size()), 0);
  for (const auto& [idx, k] : exps) {
    if (idx < 0 || idx >= p.ctx_->size() || k < 0) {
      throw UsageError("Poly::term: bad exponent entry");
    }
    e[static_cast<size_t>(idx)] += k;
  }
  p.terms_.emplace(std::move(e), c);
  return p;
}

Poly Poly::from_terms(Ctx ctx, TermMap terms) {
  check_ctx_ptr(ctx);
  Poly p(std::move(ctx));
  p.terms_ = std::move(terms);
  for (const auto& [e, c] : p.terms_) {
    if (static_cast<int>(e.size()) != p.ctx_->size()) {
      throw UsageError("Poly::from_terms: exponent size mismatch");
    }
  }
  p.prune();
  return p;
}

void Poly::prune() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero()) {
      it = terms_.erase(it);
    } else {
      ++it;
    }
  }
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return total_degree(terms_.rbegin()->first);
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) {
    d = std::max(d, e[static_cast<size_t>(var)]);
  }
  return d;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && total_degree(terms_.begin()->first) == 0;
}

Rational Poly::constant_term() const {
  check_ctx_ptr(ctx_);
  const Exponents zero(static_cast<size_t>(ctx_->size()), 0);
  const auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

const Exponents& Poly::leading_exponents() const {
  if (terms_.empty()) throw DomainError("Poly: zero has no leading term");
  return terms_.rbegin()->first;
}

Rational Poly::leading_coeff() const {
  if (terms_.empty()) throw DomainError("Poly: zero has no leading term");
  return terms_.rbegin()->second;
}

Rational Poly::coeff(const Exponents& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::set<int> Poly::vars_present() const {
  std::set<int> out;
  for (const auto& [e, c] : terms_) {
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] > 0) out.insert(static_cast<int>(i));
    }
  }
  return out;
}

Poly Poly::operator-() const {
  Poly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_ctx(*this, o);
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  *this += -o;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly::require_same_ctx(a, b);
  Poly out(a.ctx_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      const Rational c = ca * cb;
      auto [it, inserted] = out.terms_.emplace(std::move(e), c);
      if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) out.terms_.erase(it);
      }
    }
  }
  return out;
}

Poly operator*(const Rational& c, const Poly& p) {
  Poly out(p.ctx_);
  if (c.is_zero()) return out;
  out.terms_ = p.terms_;
  for (auto& [e, k] : out.terms_) k *= c;
  return out;
}

Poly Poly::pow(int e) const {
  check_ctx_ptr(ctx_);
  if (e < 0) throw DomainError("Poly::pow: negative exponent");
  Poly acc = Poly::constant(ctx_, Rational(1));
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

bool operator==(const Poly& a, const Poly& b) {
  Poly::require_same_ctx(a, b);
  return a.terms_ == b.terms_;
}

bool poly_less(const Poly& a, const Poly& b) {
  Poly::require_same_ctx(a, b);
  if (a.is_zero() || b.is_zero()) return a.is_zero() && !b.is_zero();
  // Compare term sequences from the leading end downward.
  auto ia = a.terms_.rbegin();
  auto ib = b.terms_.rbegin();
  for (; ia != a.terms_.rend() && ib != b.terms_.rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return graded_lex_less(ia->first, ib->first);
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms_.rend() && ib != b.terms_.rend();
}

std::string Poly::str() const {
  check_ctx_ptr(ctx_);
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->second;
    const Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
      first = false;
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    os << mag.str();
    for (size_t i = 0; i < it->first.size(); ++i) {
      const int k = it->first[i];
      if (k == 0) continue;
      os << "*" << ctx_->name(static_cast<int>(i));
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
  return os << p.str();
}

Poly primitive_normal(const Poly& p) {
  if (p.is_zero()) return p;
  // scale = lcm(denominators) / gcd(numerators), then fix the leading sign.
  Int num_gcd = 0;
  Int den_lcm = 1;
  for (const auto& [e, c] : p.terms()) {
    num_gcd = boost::multiprecision::gcd(num_gcd, boost::multiprecision::abs(c.num()));
    den_lcm = boost::multiprecision::lcm(den_lcm, c.den());
  }
  Rational scale{Int(den_lcm), Int(num_gcd)};
  if (p.leading_coeff().sign() < 0) scale = -scale;
  return scale * p;
}

PolySystem PolySystem::normalized() const {
  PolySystem out;
  out.ctx = ctx;
  for (const Poly& g : gens) {
    if (g.is_zero()) continue;
    out.gens.push_back(primitive_normal(g));
  }
  std::sort(out.gens.begin(), out.gens.end(),
            [](const Poly& a, const Poly& b) { return poly_less(a, b); });
  out.gens.erase(std::unique(out.gens.begin(), out.gens.end(),
                             [](const Poly& a, const Poly& b) { return a == b; }),
                 out.gens.end());
  return out;
}

bool PolySystem::contains(const Poly& p) const {
  const Poly q = primitive_normal(p);
  for (const Poly& g : gens) {
    if (g == q) return true;
  }
  return false;
}

bool operator==(const PolySystem& a, const PolySystem& b) {
  if (a.gens.size() != b.gens.size()) return false;
  for (size_t i = 0; i < a.gens.size(); ++i) {
    if (!(a.gens[i] == b.gens[i])) return false;
  }
  return true;
}

}  // namespace moducert
