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

// Sectors of cyclotomic inertia and twisted arcs, represented by their
// equivariant lift: series in s = t^{1/ell} whose i-th coordinate is supported
// on exponents congruent to k_i mod ell.

#ifndef STRINGY_TWISTED_ARCS_HPP
#define STRINGY_TWISTED_ARCS_HPP

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "stringy/quotient_stack.hpp"

namespace stringy {

struct SectorDatum {
  GroupKind group = GroupKind::mu;
  int ell = 1;
  /// mu_N: the element a of Z/N of exact order ell. G_m: the unit b mod ell.
  int a = 0;
  std::vector<int> fixed_coords;     // 0-based i with k_i == 0
  std::vector<int> eigen_exponents;  // k_i in [0, ell)
  Rational age;
  std::optional<Rational> wt;
  /// G_m only: an earlier b of the same ell has identical eigen data.
  bool collision = false;

  int nonfixed() const { return static_cast<int>(eigen_exponents.size() - fixed_coords.size()); }
  std::string label() const;  // "ell=2,a=1" or "ell=3,b=2"
  friend bool operator==(const SectorDatum&, const SectorDatum&) = default;
};

/// One sector per element of exact order ell (mu_N) or unit b mod ell (G_m).
/// Empty when ell does not divide N.
std::vector<SectorDatum> sectors(const CyclicQuotientStack& stack, int ell);
/// All sectors over every ell | N (mu_N only), ordered by ell then a.
std::vector<SectorDatum> all_sectors(const CyclicQuotientStack& stack);
/// The sector of a given element; throws when a does not have order ell.
SectorDatum sector_of(const CyclicQuotientStack& stack, int ell, int a);

class TwistedArc {
 public:
  /// series[i] holds s-coefficients 0 .. s_precision-1 of coordinate i.
  TwistedArc(Field field, SectorDatum sector, int s_precision, std::vector<TruncPoly> series);

  const Field& field() const { return field_; }
  const SectorDatum& sector() const { return sector_; }
  int ell() const { return sector_.ell; }
  int s_precision() const { return s_precision_; }
  int t_precision() const { return s_precision_ / sector_.ell; }
  int n() const { return static_cast<int>(series_.size()); }
  const std::vector<TruncPoly>& series() const { return series_; }
  /// Constant terms: the closed point of the arc.
  std::vector<Rational> base_point() const;
  TwistedArc truncated(int s_precision) const;

 private:
  Field field_;
  SectorDatum sector_;
  int s_precision_;
  std::vector<TruncPoly> series_;
};

/// An ordinary arc of Y: one series in t per coordinate function.
struct UntwistedArc {
  Field field = Field::rationals();
  int t_precision = 0;
  std::vector<TruncPoly> values;
};

/// The untwisting map followed by the quotient map: evaluates every generator
/// of Y on the arc and substitutes s^ell = t.
UntwistedArc omega(const TwistedArc& arc, const AffineModelY& y);
UntwistedArc truncate(const UntwistedArc& arc, int t_precision);

/// An order in t-units, or a lower bound when everything vanished to precision.
struct Order {
  bool finite = true;
  Rational value;  // the order, or the certified lower bound when !finite
  std::string to_string() const;  // "3/2" or ">=6"
  friend bool operator==(const Order&, const Order&) = default;
};

/// Order along an arc of Y of the ideal generated by polynomials in Y's coordinates.
Order ord_ideal(const UntwistedArc& arc, const std::vector<MultiPoly>& ideal);
/// Order along a twisted arc of an ideal of A^n, scaled by 1/ell.
Order ord_ideal(const TwistedArc& arc, const std::vector<MultiPoly>& ideal);

/// Uniformly random coefficients on the allowed exponents. Over Q they are
/// drawn from [-3, 3].
TwistedArc random_arc(const CyclicQuotientStack& stack, const SectorDatum& sector, const Field& field,
                      int s_precision, std::mt19937_64& rng);

}  // namespace stringy

#endif  // STRINGY_TWISTED_ARCS_HPP
