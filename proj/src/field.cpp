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

#include "stringy/field.hpp"

#include "stringy/error.hpp"

namespace stringy {

Field Field::prime(long p) {
  if (p < 2) throw Error(ErrorCode::invalid_argument, "field characteristic must be a prime >= 2");
  for (long d = 2; d * d <= p; ++d) {
    if (p % d == 0) throw Error(ErrorCode::invalid_argument, std::to_string(p) + " is not prime");
  }
  return Field(p);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

Rational Field::reduce(const Rational& x) const {
  if (p_ == 0) {
    Rational r = x;
    r.canonicalize();
    return r;
  }
  Integer p(p_);
  Integer num = x.get_num() % p;
  Integer den = x.get_den() % p;
  if (den < 0) den += p;
  if (den == 0) throw Error(ErrorCode::invalid_argument, "denominator divisible by the characteristic");
  Integer inv_den;
  mpz_invert(inv_den.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  Integer r = (num * inv_den) % p;
  if (r < 0) r += p;
  return Rational(r);
}

Rational Field::inv(const Rational& a) const {
  if (a == 0) throw Error(ErrorCode::invalid_argument, "inverse of zero");
  return reduce(Rational(1) / a);
}

namespace trunc {

TruncPoly zero(int precision) { return TruncPoly(static_cast<size_t>(precision), Rational(0)); }

TruncPoly monomial(const Field& k, const Rational& c, int degree, int precision) {
  TruncPoly out = zero(precision);
  if (degree < precision) out[static_cast<size_t>(degree)] = k.reduce(c);
  return out;
}

bool is_zero(const TruncPoly& a) { return valuation(a) < 0; }

int valuation(const TruncPoly& a) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

TruncPoly add(const Field& k, const TruncPoly& a, const TruncPoly& b) {
  TruncPoly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = k.add(a[i], b[i]);
  return out;
}

TruncPoly sub(const Field& k, const TruncPoly& a, const TruncPoly& b) {
  TruncPoly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = k.sub(a[i], b[i]);
  return out;
}

TruncPoly mul(const Field& k, const TruncPoly& a, const TruncPoly& b) {
  const size_t n = a.size();
  TruncPoly out(n, Rational(0));
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j < n; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  for (auto& x : out) x = k.reduce(x);
  return out;
}

TruncPoly scale(const Field& k, const TruncPoly& a, const Rational& c) {
  TruncPoly out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = k.mul(a[i], c);
  return out;
}

TruncPoly shift_down(const TruncPoly& a, int v) {
  TruncPoly out(a.size(), Rational(0));
  for (size_t i = static_cast<size_t>(v); i < a.size(); ++i) out[i - static_cast<size_t>(v)] = a[i];
  return out;
}

TruncPoly inverse(const Field& k, const TruncPoly& a) {
  if (a.empty() || a[0] == 0) throw Error(ErrorCode::invalid_argument, "inverse of a non-unit");
  const size_t n = a.size();
  TruncPoly out(n, Rational(0));
  Rational c0 = k.inv(a[0]);
  out[0] = c0;
  for (size_t i = 1; i < n; ++i) {
    Rational acc = 0;
    for (size_t j = 1; j <= i; ++j) acc += a[j] * out[i - j];
    out[i] = k.mul(k.neg(acc), c0);
  }
  return out;
}

}  // namespace trunc

}  // namespace stringy
