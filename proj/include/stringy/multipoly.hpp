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

#ifndef STRINGY_MULTIPOLY_HPP
#define STRINGY_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "stringy/field.hpp"

namespace stringy {

using ExponentVector = std::vector<int>;

/// Sparse polynomial with integer coefficients in a fixed number of variables.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}
  static MultiPoly constant(int nvars, const Integer& c);
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(int nvars, const ExponentVector& e, const Integer& c = 1);

  int nvars() const { return nvars_; }
  const std::map<ExponentVector, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly pow(int k) const;
  MultiPoly derivative(int i) const;

  Rational eval(const Field& k, const std::vector<Rational>& point) const;
  /// Substitutes truncated series for the variables; result truncated alike.
  TruncPoly eval_series(const Field& k, const std::vector<TruncPoly>& series) const;

  std::string to_string(const std::vector<std::string>& names) const;
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

 private:
  void add_term(const ExponentVector& e, const Integer& c);
  int nvars_;
  std::map<ExponentVector, Integer> terms_;
};

}  // namespace stringy

#endif  // STRINGY_MULTIPOLY_HPP
