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

#ifndef STRINGY_FIELD_HPP
#define STRINGY_FIELD_HPP

#include <string>
#include <vector>

#include "stringy/coeff_ring.hpp"

namespace stringy {

/// Base field descriptor: the rationals or a prime field F_p.
///
/// Elements are carried as Rational in both cases; F_p elements are kept as
/// integers in [0, p). Every arithmetic result is reduced, so two elements are
/// equal exactly when their representatives are.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(long p);

  bool is_rationals() const { return p_ == 0; }
  long characteristic() const { return p_; }
  std::string name() const;

  Rational reduce(const Rational& x) const;
  Rational from_int(long x) const { return reduce(Rational(x)); }
  Rational add(const Rational& a, const Rational& b) const { return reduce(a + b); }
  Rational sub(const Rational& a, const Rational& b) const { return reduce(a - b); }
  Rational mul(const Rational& a, const Rational& b) const { return reduce(a * b); }
  Rational neg(const Rational& a) const { return reduce(-a); }
  Rational inv(const Rational& a) const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(long p) : p_(p) {}
  long p_;
};

/// Element of K[t]/(t^P): coefficients of t^0 .. t^{P-1}.
using TruncPoly = std::vector<Rational>;

namespace trunc {

TruncPoly zero(int precision);
TruncPoly monomial(const Field& k, const Rational& c, int degree, int precision);
bool is_zero(const TruncPoly& a);
int valuation(const TruncPoly& a);  // -1 when zero to precision
TruncPoly add(const Field& k, const TruncPoly& a, const TruncPoly& b);
TruncPoly sub(const Field& k, const TruncPoly& a, const TruncPoly& b);
TruncPoly mul(const Field& k, const TruncPoly& a, const TruncPoly& b);
TruncPoly scale(const Field& k, const TruncPoly& a, const Rational& c);
/// Divides by t^v, dropping the v lowest (zero) coefficients; pads with zeros.
TruncPoly shift_down(const TruncPoly& a, int v);
/// Inverse of a unit (nonzero constant term).
TruncPoly inverse(const Field& k, const TruncPoly& a);

}  // namespace trunc

}  // namespace stringy

#endif  // STRINGY_FIELD_HPP
