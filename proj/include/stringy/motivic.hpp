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

// Motivic volumes of twisted-jet cylinders on [A^n/mu_N].
//
// A level-n jet in the sector (ell, a) is a tuple of series x_i(s) truncated at
// s^{ell(n+1)} whose exponents are congruent to k_i mod ell, so each coordinate
// carries exactly n + 1 coefficients. A cylinder fixes some of these to be zero
// or nonzero and leaves the rest free.

#ifndef STRINGY_MOTIVIC_HPP
#define STRINGY_MOTIVIC_HPP

#include <vector>

#include "stringy/coeff_ring.hpp"
#include "stringy/twisted_arcs.hpp"

namespace stringy {

enum class CoeffCondition { free, zero, nonzero };

struct CoefficientConstraint {
  int coord = 0;     // 0-based coordinate
  int exponent = 0;  // exponent of s, congruent to k_coord mod ell
  CoeffCondition condition = CoeffCondition::free;
  friend bool operator==(const CoefficientConstraint&, const CoefficientConstraint&) = default;
};

struct CylinderSpec {
  SectorDatum sector;
  int level = 0;
  std::vector<CoefficientConstraint> conditions;

  /// Smallest level whose jets see every constrained coefficient.
  int min_level() const;
  /// Throws invalid_argument on out-of-range or incongruent exponents and on
  /// duplicate constraints for the same coefficient.
  void validate() const;
  /// L^{#free} (L-1)^{#nonzero} with index m: the class of the level-n image.
  StringyPolynomial level_class(int m) const;
};

struct MotivicVolume {
  StringyPolynomial value;
  int level_used = 0;
  friend bool operator==(const MotivicVolume&, const MotivicVolume&) = default;
};

/// Volume of the cylinder cut out by the conditions, stabilized over two
/// consecutive levels starting from the smallest admissible one.
MotivicVolume sector_volume(const CyclicQuotientStack& stack, const SectorDatum& sector,
                            const std::vector<CoefficientConstraint>& conditions = {});

/// Level-n class times L^{-(n+1) dim X} at one fixed level.
StringyPolynomial cylinder_volume_at_level(const CyclicQuotientStack& stack, const CylinderSpec& spec);

inline constexpr long long kEnumerationGuard = 10'000'000;

/// Counts level-n twisted jets over F_q in the sector satisfying the
/// conditions by enumerating coefficient tuples coordinate by coordinate.
/// Requires q a prime power with q == 1 mod N.
Rational groupoid_count_oracle(const CyclicQuotientStack& stack, const SectorDatum& sector, int n, long q,
                               const std::vector<CoefficientConstraint>& conditions = {});

/// Sum over all sectors of L^{-wt} times the sector volume, with index m.
StringyPolynomial integrate_weight(const CyclicQuotientStack& stack);

struct ThinSetRow {
  SectorDatum sector;
  int level = 0;
  StringyPolynomial volume;
};

/// Volume of the jets factoring through the coordinate subspace where the
/// listed coordinates vanish, for every sector and every level 0..n_max.
std::vector<ThinSetRow> thin_set_decay(const CyclicQuotientStack& stack, const std::vector<int>& vanishing_coords,
                                       int n_max);

/// The constraints that force every level-n coefficient of the listed
/// coordinates to vanish.
std::vector<CoefficientConstraint> vanishing_constraints(const SectorDatum& sector,
                                                         const std::vector<int>& vanishing_coords, int n);

bool is_prime_power(long q);

}  // namespace stringy

#endif  // STRINGY_MOTIVIC_HPP
