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

// Exact arithmetic for Hodge-Deligne classes.
//
// A StringyPolynomial with index m is a finite sum of u^a v^b * c(t) where
// min(a, b) = 0, c is a reduced rational function in t, and t stands for
// (uv)^{1/m}. The relation uv = t^m is applied eagerly by multiplication, so
// the representation is canonical and equality is structural.

#ifndef STRINGY_COEFF_RING_HPP
#define STRINGY_COEFF_RING_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace stringy {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& x);
std::string to_string(const Rational& x);  // "p/q", or "p" when q == 1
Rational parse_rational(const std::string& text);

/// Univariate polynomial over Z, coefficients in ascending degree, no trailing zeros.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int degree);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int k) const;
  const Integer& leading() const { return coeffs_.back(); }
  int valuation() const;  // lowest nonzero degree; -1 for zero

  Integer content() const;  // nonnegative gcd of coefficients
  IntPoly primitive_part() const;
  Rational eval(const Rational& x) const;

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  IntPoly scaled(const Integer& c) const;
  IntPoly shifted(int k) const;  // multiply by t^k, k >= 0
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact quotient over Z; throws Error(invalid_argument) when b does not divide a.
  static IntPoly exact_div(const IntPoly& a, const IntPoly& b);
  /// Gcd over Z[t], normalized with positive leading coefficient.
  static IntPoly gcd(const IntPoly& a, const IntPoly& b);

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// num/den over Z[t], always reduced: gcd 1, content-free jointly, den leading coefficient > 0.
class RationalFunction {
 public:
  RationalFunction();  // zero
  RationalFunction(const IntPoly& num, const IntPoly& den);
  explicit RationalFunction(const IntPoly& num);
  static RationalFunction constant(const Integer& c);
  static RationalFunction monomial(int k);  // t^k, k may be negative

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// Polynomial coefficients as rationals; requires is_polynomial().
  std::vector<Rational> polynomial_coeffs() const;
  /// Throws Error(invalid_argument) if the denominator vanishes at x.
  Rational eval(const Rational& x) const;
  /// Substitutes t -> t^k for k >= 1.
  RationalFunction inflate(int k) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  std::string to_string() const;

 private:
  void normalize();
  IntPoly num_;
  IntPoly den_;
};

/// Exponent key (a, b) of u^a v^b with min(a, b) = 0.
using MonomialKey = std::pair<int, int>;

class StringyPolynomial {
 public:
  explicit StringyPolynomial(int m = 1);
  static StringyPolynomial constant(int m, const Integer& c);
  static StringyPolynomial from_t(int m, const RationalFunction& c);  // pure key (0,0)
  static StringyPolynomial monomial(int m, int a, int b, const RationalFunction& c);

  int index() const { return m_; }
  const std::map<MonomialKey, RationalFunction>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_pure() const;  // only the (0,0) key
  /// Coefficient of the (0,0) key (zero if absent).
  RationalFunction pure_part() const;

  /// Re-expresses the element with index new_m; new_m must be a multiple of m.
  StringyPolynomial reindexed(int new_m) const;

  StringyPolynomial operator-() const;
  friend StringyPolynomial operator+(const StringyPolynomial& x, const StringyPolynomial& y);
  friend StringyPolynomial operator-(const StringyPolynomial& x, const StringyPolynomial& y);
  friend StringyPolynomial operator*(const StringyPolynomial& x, const StringyPolynomial& y);
  friend bool operator==(const StringyPolynomial& x, const StringyPolynomial& y) {
    return x.m_ == y.m_ && x.terms_ == y.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(MonomialKey key, const RationalFunction& c);
  int m_;
  std::map<MonomialKey, RationalFunction> terms_;
};

/// HD(L^k) = t^{m k}. Throws when m*k is not an integer.
StringyPolynomial hd_L_power(const Rational& k, int m);

/// (t^m - 1) / (t^{m(a+1)} - 1), reduced. Requires a > -1 and m(a+1) integral.
RationalFunction batyrev_factor(const Rational& a, int m);

/// Evaluates a pure element at t = q.
Rational specialize_count(const StringyPolynomial& x, const Rational& q);

/// Evaluates a pure element at L = q. Every power of t must be a multiple of
/// the index, otherwise not_specializable.
Rational specialize_at_L(const StringyPolynomial& x, const Rational& q);

/// Sign-corrected Hodge table: (p, q) -> h^{p,q}. Keys lie in (1/m)Z.
using HodgeTable = std::map<std::pair<Rational, Rational>, Rational>;
HodgeTable extract_hpq(const StringyPolynomial& x);

}  // namespace stringy

#endif  // STRINGY_COEFF_RING_HPP
