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

#include "stringy/coeff_ring.hpp"

#include <algorithm>
#include <sstream>

#include "stringy/error.hpp"

namespace stringy {

std::string to_string(const Integer& x) { return x.get_str(); }

std::string to_string(const Rational& x) {
  Rational c = x;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0 || r.get_den() == 0) {
    throw Error(ErrorCode::parse, "malformed rational '" + text + "'");
  }
  r.canonicalize();
  return r;
}

// ---------------------------------------------------------------- IntPoly

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(const Integer& c) { return IntPoly({c}); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<size_t>(degree) + 1, 0);
  v.back() = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coeffs_[static_cast<size_t>(k)];
}

int IntPoly::valuation() const {
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = ::gcd(g, c);
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return *this;
  Integer g = content();
  if (leading() < 0) g = -g;
  std::vector<Integer> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.push_back(c / g);
  return IntPoly(std::move(v));
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  acc.canonicalize();
  return acc;
}

IntPoly IntPoly::operator-() const { return scaled(-1); }

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly IntPoly::scaled(const Integer& c) const {
  std::vector<Integer> v(coeffs_);
  for (auto& x : v) x *= c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::shifted(int k) const {
  if (is_zero()) return *this;
  std::vector<Integer> v(static_cast<size_t>(k), 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

IntPoly IntPoly::exact_div(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "polynomial division by zero");
  if (a.is_zero()) return {};
  IntPoly r = a;
  std::vector<Integer> q(static_cast<size_t>(std::max(0, a.degree() - b.degree() + 1)), 0);
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int shift = r.degree() - b.degree();
    Integer c;
    if (!mpz_divisible_p(r.leading().get_mpz_t(), b.leading().get_mpz_t())) {
      throw Error(ErrorCode::invalid_argument, "inexact polynomial division over Z");
    }
    c = r.leading() / b.leading();
    q[static_cast<size_t>(shift)] = c;
    r = r - monomial(c, shift) * b;
  }
  if (!r.is_zero()) throw Error(ErrorCode::invalid_argument, "inexact polynomial division over Z");
  return IntPoly(std::move(q));
}

namespace {

// lc(b)^k * a mod b, up to a nonzero constant factor; enough for primitive gcd.
IntPoly pseudo_rem(IntPoly a, const IntPoly& b) {
  while (!a.is_zero() && a.degree() >= b.degree()) {
    int shift = a.degree() - b.degree();
    a = a.scaled(b.leading()) - IntPoly::monomial(a.leading(), shift) * b;
  }
  return a;
}

}  // namespace

IntPoly IntPoly::gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part().scaled(b.is_zero() ? Integer(0) : b.content());
  if (b.is_zero()) return a.primitive_part().scaled(a.content());
  Integer c = ::gcd(a.content(), b.content());
  IntPoly x = a.primitive_part();
  IntPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_rem(x, y);
    x = y;
    y = r.is_zero() ? r : r.primitive_part();
  }
  return x.primitive_part().scaled(c);
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Integer& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) out << mag.get_str();
    if (k > 0) {
      if (mag != 1) out << "*";
      out << var;
      if (k > 1) out << "^" << k;
    }
  }
  return out.str();
}

// -------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction() : num_(), den_(IntPoly::constant(1)) {}

RationalFunction::RationalFunction(const IntPoly& num, const IntPoly& den) : num_(num), den_(den) {
  normalize();
}

RationalFunction::RationalFunction(const IntPoly& num) : num_(num), den_(IntPoly::constant(1)) {
  normalize();
}

RationalFunction RationalFunction::constant(const Integer& c) {
  return RationalFunction(IntPoly::constant(c));
}

RationalFunction RationalFunction::monomial(int k) {
  if (k >= 0) return RationalFunction(IntPoly::monomial(1, k));
  return RationalFunction(IntPoly::constant(1), IntPoly::monomial(1, -k));
}

void RationalFunction::normalize() {
  if (den_.is_zero()) throw Error(ErrorCode::invalid_argument, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = IntPoly::constant(1);
    return;
  }
  IntPoly g = IntPoly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = IntPoly::exact_div(num_, g);
    den_ = IntPoly::exact_div(den_, g);
  }
  Integer c = gcd(num_.content(), den_.content());
  if (den_.leading() < 0) c = -c;
  if (c != 1) {
    std::vector<Integer> n = num_.coeffs();
    std::vector<Integer> d = den_.coeffs();
    for (auto& x : n) x /= c;
    for (auto& x : d) x /= c;
    num_ = IntPoly(std::move(n));
    den_ = IntPoly(std::move(d));
  }
}

std::vector<Rational> RationalFunction::polynomial_coeffs() const {
  if (!is_polynomial()) throw Error(ErrorCode::not_polynomial, "rational function has a genuine denominator");
  std::vector<Rational> out;
  for (const auto& c : num_.coeffs()) {
    Rational r(c, den_.leading());
    r.canonicalize();
    out.push_back(r);
  }
  return out;
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d == 0) throw Error(ErrorCode::invalid_argument, "denominator vanishes at t = " + stringy::to_string(x));
  Rational r = num_.eval(x) / d;
  r.canonicalize();
  return r;
}

RationalFunction RationalFunction::inflate(int k) const {
  if (k < 1) throw Error(ErrorCode::invalid_argument, "inflate requires k >= 1");
  auto spread = [k](const IntPoly& p) {
    if (p.is_zero()) return p;
    std::vector<Integer> v(static_cast<size_t>(p.degree()) * static_cast<size_t>(k) + 1, 0);
    for (int i = 0; i <= p.degree(); ++i) v[static_cast<size_t>(i * k)] = p.coeff(i);
    return IntPoly(std::move(v));
  };
  return RationalFunction(spread(num_), spread(den_));
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(ErrorCode::invalid_argument, "division by zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::to_string() const {
  if (is_polynomial() && den_.leading() == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

// ------------------------------------------------------- StringyPolynomial

StringyPolynomial::StringyPolynomial(int m) : m_(m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "index m must be positive");
}

StringyPolynomial StringyPolynomial::constant(int m, const Integer& c) {
  return from_t(m, RationalFunction::constant(c));
}

StringyPolynomial StringyPolynomial::from_t(int m, const RationalFunction& c) {
  StringyPolynomial p(m);
  p.add_term({0, 0}, c);
  return p;
}

StringyPolynomial StringyPolynomial::monomial(int m, int a, int b, const RationalFunction& c) {
  if (a < 0 || b < 0) throw Error(ErrorCode::invalid_argument, "negative u/v exponent");
  int s = std::min(a, b);
  StringyPolynomial p(m);
  p.add_term({a - s, b - s}, c * RationalFunction::monomial(m * s));
  return p;
}

void StringyPolynomial::add_term(MonomialKey key, const RationalFunction& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

bool StringyPolynomial::is_pure() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == MonomialKey{0, 0});
}

RationalFunction StringyPolynomial::pure_part() const {
  auto it = terms_.find({0, 0});
  return it == terms_.end() ? RationalFunction() : it->second;
}

StringyPolynomial StringyPolynomial::reindexed(int new_m) const {
  if (new_m < 1 || new_m % m_ != 0) {
    throw Error(ErrorCode::invalid_argument, "reindex target must be a positive multiple of the index");
  }
  StringyPolynomial out(new_m);
  for (const auto& [key, c] : terms_) out.add_term(key, c.inflate(new_m / m_));
  return out;
}

StringyPolynomial StringyPolynomial::operator-() const {
  StringyPolynomial out(m_);
  for (const auto& [key, c] : terms_) out.terms_.emplace(key, -c);
  return out;
}

namespace {

void require_same_index(const StringyPolynomial& x, const StringyPolynomial& y) {
  if (x.index() != y.index()) {
    throw Error(ErrorCode::invalid_argument,
                "index mismatch (" + std::to_string(x.index()) + " vs " + std::to_string(y.index()) +
                    "); reindex explicitly");
  }
}

}  // namespace

StringyPolynomial operator+(const StringyPolynomial& x, const StringyPolynomial& y) {
  require_same_index(x, y);
  StringyPolynomial out = x;
  for (const auto& [key, c] : y.terms_) out.add_term(key, c);
  return out;
}

StringyPolynomial operator-(const StringyPolynomial& x, const StringyPolynomial& y) { return x + (-y); }

StringyPolynomial operator*(const StringyPolynomial& x, const StringyPolynomial& y) {
  require_same_index(x, y);
  StringyPolynomial out(x.m_);
  for (const auto& [kx, cx] : x.terms_) {
    for (const auto& [ky, cy] : y.terms_) {
      int a = kx.first + ky.first;
      int b = kx.second + ky.second;
      int s = std::min(a, b);
      RationalFunction c = cx * cy;
      if (s > 0) c = c * RationalFunction::monomial(x.m_ * s);
      out.add_term({a - s, b - s}, c);
    }
  }
  return out;
}

namespace {

std::string exponent_text(const Rational& e) {
  if (e == 1) return "";
  if (e.get_den() == 1) return "^" + e.get_str();
  return "^(" + e.get_str() + ")";
}

}  // namespace

std::string StringyPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Expand polynomial coefficients into fractional u/v monomials; keep the
  // rest as key * f(t).
  struct Piece {
    Rational p, q, c;
  };
  std::vector<Piece> pieces;
  std::vector<std::string> opaque;
  for (const auto& [key, c] : terms_) {
    if (!c.is_polynomial()) {
      std::string mono;
      if (key.first > 0) mono += "u" + exponent_text(key.first);
      if (key.second > 0) mono += (mono.empty() ? "" : " ") + std::string("v") + exponent_text(key.second);
      opaque.push_back((mono.empty() ? "" : mono + "*") + c.to_string());
      continue;
    }
    auto coeffs = c.polynomial_coeffs();
    for (size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      Rational frac(static_cast<long>(j), m_);
      frac.canonicalize();
      pieces.push_back({key.first + frac, key.second + frac, coeffs[j]});
    }
  }
  std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    Rational da = a.p + a.q, db = b.p + b.q;
    if (da != db) return da > db;
    return a.p > b.p;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& pc : pieces) {
    Rational mag = abs(pc.c);
    if (first) {
      if (pc.c < 0) out << "-";
    } else {
      out << (pc.c < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    if (pc.p == pc.q) {
      if (pc.p == 1) mono = "uv";
      else if (pc.p != 0) mono = "(uv)" + exponent_text(pc.p);
    } else {
      if (pc.p != 0) mono += "u" + exponent_text(pc.p);
      if (pc.q != 0) mono += (mono.empty() ? "" : " ") + std::string("v") + exponent_text(pc.q);
    }
    if (mono.empty()) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str() << "*";
      out << mono;
    }
  }
  for (const auto& o : opaque) {
    out << (first ? "" : " + ") << o;
    first = false;
  }
  return out.str();
}

// ------------------------------------------------------------- operations

StringyPolynomial hd_L_power(const Rational& k, int m) {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "index m must be positive");
  Rational e = k * m;
  e.canonicalize();
  if (e.get_den() != 1) {
    throw Error(ErrorCode::invalid_argument, "L^" + to_string(k) + " is not representable with index " +
                                                 std::to_string(m));
  }
  return StringyPolynomial::from_t(m, RationalFunction::monomial(static_cast<int>(e.get_num().get_si())));
}

RationalFunction batyrev_factor(const Rational& a, int m) {
  if (a <= -1) throw Error(ErrorCode::not_log_terminal, "discrepancy " + to_string(a) + " <= -1");
  Rational e = (a + 1) * m;
  e.canonicalize();
  if (e.get_den() != 1) {
    throw Error(ErrorCode::invalid_argument, "m(a+1) is not an integer for a = " + to_string(a));
  }
  int top = m;
  int bottom = static_cast<int>(e.get_num().get_si());
  IntPoly num = IntPoly::monomial(1, top) - IntPoly::constant(1);
  IntPoly den = IntPoly::monomial(1, bottom) - IntPoly::constant(1);
  return RationalFunction(num, den);
}

Rational specialize_count(const StringyPolynomial& x, const Rational& q) {
  if (!x.is_pure()) throw Error(ErrorCode::not_specializable, "mixed Hodge term not count-specializable");
  return x.pure_part().eval(q);
}

namespace {

Rational eval_deflated(const IntPoly& p, int m, const Rational& q) {
  Rational out = 0, power = 1;
  for (int k = 0; k <= p.degree(); ++k) {
    if (k % m == 0) {
      if (k > 0) power *= q;
      out += Rational(p.coeff(k)) * power;
    } else if (p.coeff(k) != 0) {
      throw Error(ErrorCode::not_specializable, "fractional power of L cannot be evaluated at a count");
    }
  }
  return out;
}

}  // namespace

Rational specialize_at_L(const StringyPolynomial& x, const Rational& q) {
  if (!x.is_pure()) throw Error(ErrorCode::not_specializable, "mixed Hodge term not count-specializable");
  const RationalFunction f = x.pure_part();
  const int m = x.index();
  Rational den = eval_deflated(f.den(), m, q);
  if (den == 0) throw Error(ErrorCode::invalid_argument, "denominator vanishes at L = " + to_string(q));
  Rational out = eval_deflated(f.num(), m, q) / den;
  out.canonicalize();
  return out;
}

HodgeTable extract_hpq(const StringyPolynomial& x) {
  HodgeTable table;
  const int m = x.index();
  for (const auto& [key, c] : x.terms()) {
    if (!c.is_polynomial()) {
      throw Error(ErrorCode::not_polynomial,
                  "not a stringy polynomial; increase resolution data or report non-polynomial E_str");
    }
    auto coeffs = c.polynomial_coeffs();
    // (-1)^{p+q} with p - q = a - b integral; the diagonal (uv)^{j/m} part
    // carries sign +1.
    const int sign = ((key.first + key.second) % 2 == 0) ? 1 : -1;
    for (size_t j = 0; j < coeffs.size(); ++j) {
      if (coeffs[j] == 0) continue;
      Rational frac(static_cast<long>(j), m);
      frac.canonicalize();
      Rational p = key.first + frac;
      Rational q = key.second + frac;
      p.canonicalize();
      q.canonicalize();
      table[{p, q}] += sign * coeffs[j];
    }
  }
  return table;
}

}  // namespace stringy
