/*
  Copyright 2026 The stringy-hd Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "stringy/twisted_arcs.hpp"

#include <algorithm>
#include <numeric>

#include "stringy/error.hpp"
#include "stringy/graded_smith.hpp"

namespace stringy {

std::string SectorDatum::label() const {
  return "ell=" + std::to_string(ell) + (group == GroupKind::mu ? ",a=" : ",b=") + std::to_string(a);
}

SectorDatum sector_of(const CyclicQuotientStack& stack, int ell, int a) {
  if (ell < 1) throw Error(ErrorCode::invalid_argument, "ell must be >= 1");
  SectorDatum s;
  s.group = stack.group();
  s.ell = ell;
  if (stack.is_mu()) {
    const int N = stack.order();
    a = mod_floor(a, N);
    if (N % ell != 0 || N / std::gcd(a, N) != ell) {
      throw Error(ErrorCode::invalid_argument,
                  std::to_string(a) + " does not have order " + std::to_string(ell) + " in Z/" + std::to_string(N));
    }
    s.a = a;
    for (int w : stack.weights()) s.eigen_exponents.push_back(static_cast<int>(mod_floor(static_cast<long>(a) * w, N) / (N / ell)));
  } else {
    a = mod_floor(a, ell);
    if (std::gcd(a, ell) != 1 && ell != 1) {
      throw Error(ErrorCode::invalid_argument, std::to_string(a) + " is not a unit mod " + std::to_string(ell));
    }
    s.a = a;
    for (int w : stack.weights()) s.eigen_exponents.push_back(mod_floor(static_cast<long>(a) * w, ell));
  }
  int sum = 0;
  for (int i = 0; i < static_cast<int>(s.eigen_exponents.size()); ++i) {
    if (s.eigen_exponents[static_cast<size_t>(i)] == 0) s.fixed_coords.push_back(i);
    sum += s.eigen_exponents[static_cast<size_t>(i)];
  }
  s.age = Rational(sum, ell);
  s.age.canonicalize();
  return s;
}

std::vector<SectorDatum> sectors(const CyclicQuotientStack& stack, int ell) {
  if (ell < 1) throw Error(ErrorCode::invalid_argument, "ell must be >= 1");
  std::vector<SectorDatum> out;
  if (stack.is_mu()) {
    const int N = stack.order();
    if (N % ell != 0) return out;
    for (int a = 0; a < N; ++a)
      if (N / std::gcd(a, N) == ell) out.push_back(sector_of(stack, ell, a));
    return out;
  }
  for (int b = 0; b < ell; ++b) {
    if (ell > 1 && (b == 0 || std::gcd(b, ell) != 1)) continue;
    SectorDatum s = sector_of(stack, ell, b);
    for (const auto& prev : out)
      if (prev.eigen_exponents == s.eigen_exponents) s.collision = true;
    out.push_back(s);
  }
  return out;
}

std::vector<SectorDatum> all_sectors(const CyclicQuotientStack& stack) {
  if (!stack.is_mu()) throw Error(ErrorCode::unsupported, "G_m quotients have sectors for every ell; ask per ell");
  std::vector<SectorDatum> out;
  for (int ell = 1; ell <= stack.order(); ++ell) {
    auto s = sectors(stack, ell);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

TwistedArc::TwistedArc(Field field, SectorDatum sector, int s_precision, std::vector<TruncPoly> series)
    : field_(field), sector_(std::move(sector)), s_precision_(s_precision), series_(std::move(series)) {
  const int ell = sector_.ell;
  if (s_precision < ell || s_precision % ell != 0) {
    throw Error(ErrorCode::invalid_argument, "arc precision must be a positive multiple of ell = " + std::to_string(ell));
  }
  if (series_.size() != sector_.eigen_exponents.size()) {
    throw Error(ErrorCode::invalid_argument, "arc has the wrong number of coordinates");
  }
  for (size_t i = 0; i < series_.size(); ++i) {
    auto& s = series_[i];
    s.resize(static_cast<size_t>(s_precision), Rational(0));
    for (int e = 0; e < s_precision; ++e) {
      Rational& c = s[static_cast<size_t>(e)];
      c = field_.reduce(c);
      if (c != 0 && mod_floor(e - sector_.eigen_exponents[i], ell) != 0) {
        throw Error(ErrorCode::invalid_argument, "coordinate " + std::to_string(i) + " has an s^" + std::to_string(e) +
                                                     " term, but its exponents must be " +
                                                     std::to_string(sector_.eigen_exponents[i]) + " mod " + std::to_string(ell));
      }
    }
  }
}

std::vector<Rational> TwistedArc::base_point() const {
  std::vector<Rational> p;
  for (const auto& s : series_) p.push_back(s[0]);
  return p;
}

TwistedArc TwistedArc::truncated(int s_precision) const {
  if (s_precision > s_precision_) throw InsufficientPrecision(s_precision, "cannot extend an arc by truncation");
  std::vector<TruncPoly> s = series_;
  for (auto& x : s) x.resize(static_cast<size_t>(s_precision));
  return TwistedArc(field_, sector_, s_precision, std::move(s));
}

UntwistedArc omega(const TwistedArc& arc, const AffineModelY& y) {
  const int ell = arc.ell(), n = arc.n();
  UntwistedArc out;
  out.field = arc.field();
  out.t_precision = arc.t_precision();
  for (const auto& g : y.generators) {
    if (static_cast<int>(g.size()) != n) throw Error(ErrorCode::invalid_argument, "Y model does not match the arc dimension");
    TruncPoly v = MultiPoly::monomial(n, g).eval_series(arc.field(), arc.series());
    TruncPoly tv = trunc::zero(out.t_precision);
    for (int e = 0; e < arc.s_precision(); ++e) {
      const Rational& c = v[static_cast<size_t>(e)];
      if (c == 0) continue;
      if (e % ell != 0) throw Error(ErrorCode::invalid_argument, "generator is not invariant on this sector");
      tv[static_cast<size_t>(e / ell)] = c;
    }
    out.values.push_back(std::move(tv));
  }
  return out;
}

UntwistedArc truncate(const UntwistedArc& arc, int t_precision) {
  if (t_precision > arc.t_precision) throw InsufficientPrecision(t_precision, "cannot extend an arc by truncation");
  UntwistedArc out = arc;
  out.t_precision = t_precision;
  for (auto& v : out.values) v.resize(static_cast<size_t>(t_precision));
  return out;
}

std::string Order::to_string() const { return (finite ? "" : ">=") + stringy::to_string(value); }

namespace {

Order min_valuation(const Field& k, const std::vector<TruncPoly>& series, const std::vector<MultiPoly>& ideal,
                    int precision, int scale) {
  int best = -1;
  for (const auto& g : ideal) {
    int v = trunc::valuation(g.eval_series(k, series));
    if (v >= 0 && (best < 0 || v < best)) best = v;
  }
  Order o;
  o.finite = best >= 0;
  o.value = Rational(o.finite ? best : precision, scale);
  o.value.canonicalize();
  return o;
}

}  // namespace

Order ord_ideal(const UntwistedArc& arc, const std::vector<MultiPoly>& ideal) {
  if (ideal.empty()) return Order{false, Rational(arc.t_precision)};
  return min_valuation(arc.field, arc.values, ideal, arc.t_precision, 1);
}

Order ord_ideal(const TwistedArc& arc, const std::vector<MultiPoly>& ideal) {
  if (ideal.empty()) {
    Rational b(arc.s_precision(), arc.ell());
    b.canonicalize();
    return Order{false, b};
  }
  return min_valuation(arc.field(), arc.series(), ideal, arc.s_precision(), arc.ell());
}

TwistedArc random_arc(const CyclicQuotientStack& stack, const SectorDatum& sector, const Field& field, int s_precision,
                      std::mt19937_64& rng) {
  if (static_cast<int>(sector.eigen_exponents.size()) != stack.n()) {
    throw Error(ErrorCode::invalid_argument, "sector does not belong to this stack");
  }
  const long p = field.characteristic();
  std::uniform_int_distribution<long> coeff(p == 0 ? -3 : 0, p == 0 ? 3 : p - 1);
  std::vector<TruncPoly> series;
  for (int i = 0; i < stack.n(); ++i) {
    TruncPoly s = trunc::zero(s_precision);
    for (int e = sector.eigen_exponents[static_cast<size_t>(i)]; e < s_precision; e += sector.ell) {
      s[static_cast<size_t>(e)] = field.reduce(Rational(coeff(rng)));
    }
    series.push_back(std::move(s));
  }
  return TwistedArc(field, sector, s_precision, std::move(series));
}

}  // namespace stringy
