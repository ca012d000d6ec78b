/// @file surface.cpp
#include "moducert/surface.hpp"

#include "moducert/errors.hpp"

namespace moducert {

Lat make_lattice(std::vector<std::string> labels, const QMatrix& gram) {
  const Index n = static_cast<Index>(labels.size());
  if (gram.rows() != n || gram.cols() != n) {
    throw UsageError("make_lattice: gram size != label count");
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (gram(i, j) != gram(j, i)) {
        throw UsageError("make_lattice: gram matrix not symmetric");
      }
    }
  }
  auto lat = std::make_shared<SurfaceLattice>();
  lat->labels = std::move(labels);
  lat->gram = gram;
  return lat;
}

Lat picard_rank_one(const Rational& h) {
  QMatrix g(1, 1);
  g(0, 0) = h;
  return make_lattice({"H"}, g);
}

namespace {

void require_same_lattice(const Divisor& a, const Divisor& b) {
  if (a.lat == b.lat) return;
  if (!a.lat || !b.lat || a.lat->labels != b.lat->labels ||
      a.lat->gram != b.lat->gram) {
    throw ContextMismatch("Divisor: mixed lattices");
  }
}

}  // namespace

Divisor make_divisor(Lat lat, QVector coords) {
  if (!lat) throw UsageError("make_divisor: null lattice");
  if (coords.size() != static_cast<Index>(lat->labels.size())) {
    throw ContextMismatch("make_divisor: coordinate length != rank");
  }
  return Divisor{std::move(lat), std::move(coords)};
}

Divisor basis_divisor(Lat lat, const std::string& label) {
  if (!lat) throw UsageError("basis_divisor: null lattice");
  for (size_t i = 0; i < lat->labels.size(); ++i) {
    if (lat->labels[i] == label) {
      QVector c = QVector::Zero(static_cast<Index>(lat->labels.size()));
      c(static_cast<Index>(i)) = Rational(1);
      return Divisor{std::move(lat), std::move(c)};
    }
  }
  throw UsageError("basis_divisor: unknown label '" + label + "'");
}

Divisor operator+(const Divisor& a, const Divisor& b) {
  require_same_lattice(a, b);
  return Divisor{a.lat, a.coords + b.coords};
}

Divisor operator-(const Divisor& a, const Divisor& b) {
  require_same_lattice(a, b);
  return Divisor{a.lat, a.coords - b.coords};
}

Divisor operator*(const Rational& c, const Divisor& d) {
  return Divisor{d.lat, c * d.coords};
}

bool operator==(const Divisor& a, const Divisor& b) {
  require_same_lattice(a, b);
  return a.coords == b.coords;
}

Rational intersect(const Divisor& a, const Divisor& b) {
  require_same_lattice(a, b);
  return (a.coords.transpose() * a.lat->gram * b.coords)(0, 0);
}

Rational self_intersection(const Divisor& d) { return intersect(d, d); }

Lat blowup(const Lat& lat, const std::string& exceptional_label) {
  if (!lat) throw UsageError("blowup: null lattice");
  for (const auto& l : lat->labels) {
    if (l == exceptional_label) {
      throw UsageError("blowup: label '" + exceptional_label + "' already used");
    }
  }
  const Index n = static_cast<Index>(lat->labels.size());
  auto big = std::make_shared<SurfaceLattice>();
  big->labels = lat->labels;
  big->labels.push_back(exceptional_label);
  big->gram = QMatrix::Zero(n + 1, n + 1);
  big->gram.topLeftCorner(n, n) = lat->gram;
  big->gram(n, n) = Rational(-1);
  return big;
}

Divisor pullback(const Divisor& d, const Lat& bigger) {
  if (!bigger) throw UsageError("pullback: null lattice");
  const Index small = d.coords.size();
  const Index big = static_cast<Index>(bigger->labels.size());
  if (big < small) throw ContextMismatch("pullback: target lattice smaller");
  for (Index i = 0; i < small; ++i) {
    if (bigger->labels[static_cast<size_t>(i)] != d.lat->labels[static_cast<size_t>(i)]) {
      throw ContextMismatch("pullback: target does not extend the source");
    }
  }
  QVector c = QVector::Zero(big);
  c.topRows(small) = d.coords;
  return Divisor{bigger, std::move(c)};
}

Divisor strict_transform(const Divisor& d, const Lat& bigger, const Rational& mult) {
  Divisor total = pullback(d, bigger);
  total.coords(total.coords.size() - 1) -= mult;
  return total;
}

ChernChar operator+(const ChernChar& a, const ChernChar& b) {
  return ChernChar{a.ch0 + b.ch0, a.ch1 + b.ch1, a.ch2 + b.ch2};
}

bool operator==(const ChernChar& a, const ChernChar& b) {
  return a.ch0 == b.ch0 && a.ch1 == b.ch1 && a.ch2 == b.ch2;
}

ChernChar ch_pushforward(const Divisor& d, const Rational& deg_line) {
  // Grothendieck-Riemann-Roch for a line bundle on a divisor inside a
  // surface: rank 0, first class the divisor itself, second class
  // -D^2/2 + deg L.
  return ChernChar{Rational(0), d,
                   -(self_intersection(d) / Rational(2)) + deg_line};
}

bool ch_additivity_check(const ChernChar& left, const ChernChar& middle,
                         const ChernChar& right) {
  return middle == left + right;
}

DefectCheck strict_transform_defect_check(const Divisor& c,
                                          const std::vector<long>& mults) {
  Lat lat = c.lat;
  Divisor strict = c;
  std::vector<Divisor> exceptionals;
  for (size_t j = 0; j < mults.size(); ++j) {
    if (mults[j] < 0) {
      throw UsageError("strict_transform_defect_check: negative multiplicity");
    }
    lat = blowup(lat, "E" + std::to_string(j + 1));
    strict = strict_transform(strict, lat, Rational(mults[j]));
    for (Divisor& e : exceptionals) e = pullback(e, lat);
    exceptionals.push_back(Rational(mults[j]) *
                           basis_divisor(lat, "E" + std::to_string(j + 1)));
  }
  Divisor weighted = make_divisor(lat, QVector::Zero(static_cast<Index>(lat->labels.size())));
  for (const Divisor& e : exceptionals) weighted = weighted + e;
  DefectCheck out;
  out.lhs = self_intersection(c) - self_intersection(strict);
  out.rhs = intersect(strict, weighted);
  out.equal = out.lhs == out.rhs;
  return out;
}

IneqResult check_main_ineq(const std::vector<long>& ranks) {
  if (ranks.empty()) throw UsageError("check_main_ineq: empty rank list");
  const long m = static_cast<long>(ranks.size());
  Int total = 0;
  Int rhs = 0;
  for (long i = 1; i <= m; ++i) {
    const long r = ranks[static_cast<size_t>(i - 1)];
    if (r < 1) throw UsageError("check_main_ineq: ranks must be positive");
    total += r;
    rhs += Int(2 * m + 1 - 2 * i) * r;
  }
  IneqResult out;
  out.lhs = total * total;
  out.rhs = rhs;
  out.holds = out.lhs >= out.rhs;
  out.equality = out.lhs == out.rhs;
  return out;
}

FiltrationBound filtration_ch2_bound(const Rational& c2, const std::vector<long>& ranks) {
  if (ranks.empty()) throw UsageError("filtration_ch2_bound: empty rank list");
  const long m = static_cast<long>(ranks.size());
  Rational sum(0);
  long n = 0;
  for (long i = 1; i <= m; ++i) {
    const long r = ranks[static_cast<size_t>(i - 1)];
    if (r < 1) throw UsageError("filtration_ch2_bound: ranks must be positive");
    n += r;
    // Each filtration step contributes (-r_i/2 - (m-i) r_i) c2.
    sum += Rational(-r, 2) + Rational(-(m - i) * r);
  }
  FiltrationBound out;
  out.bound = sum * c2;
  out.fibre_value = Rational(-(static_cast<long long>(n) * n), 2) * c2;
  out.tight = out.bound == out.fibre_value;
  return out;
}

}  // namespace moducert
