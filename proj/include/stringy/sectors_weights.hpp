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

// The weight function on cyclotomic inertia, read off from the graded
// cohomology of the cotangent complex restricted to a twisted point.

#ifndef STRINGY_SECTORS_WEIGHTS_HPP
#define STRINGY_SECTORS_WEIGHTS_HPP

#include <vector>

#include "stringy/twisted_arcs.hpp"

namespace stringy {

/// How the cotangent line dx_i at a point with eigen-exponent k_i is twisted.
/// standard: d = ell - k_i (k_i != 0), ell (k_i == 0). inverted: d = k_i, or ell.
enum class WeightConvention { standard, inverted };

struct WeightReport {
  SectorDatum sector;
  std::vector<int> d_list;  // weights in [1, ell] of H^0
  std::vector<int> c_list;  // weights in [1, ell] of H^1
  Rational wt;
};

/// Graded degree of dx_i: k_i under the standard convention, -k_i otherwise.
/// A summand generated in degree g carries the weight rep(-g) in (0, ell].
int cotangent_degree(int k, int ell, WeightConvention conv);

/// Weight at the sector's distinguished point: coordinates in fixed_coords
/// set to 1, the rest 0.
WeightReport weight_of_sector(const CyclicQuotientStack& stack, const SectorDatum& sector,
                              WeightConvention conv = WeightConvention::standard);

/// Weight at an explicit closed point of the sector's fixed locus, with
/// coordinates in the field k.
WeightReport weight_at_point(const CyclicQuotientStack& stack, const SectorDatum& sector,
                             const std::vector<Rational>& point, WeightConvention conv = WeightConvention::standard,
                             const Field& k = Field::rationals());

/// Weight of the sector component containing the arc's closed point.
Rational wt_of_arc(const CyclicQuotientStack& stack, const TwistedArc& arc,
                   WeightConvention conv = WeightConvention::standard);

/// Every sector over every ell | N with wt filled in (mu_N only).
std::vector<SectorDatum> weight_table(const CyclicQuotientStack& stack,
                                      WeightConvention conv = WeightConvention::standard);

}  // namespace stringy

#endif  // STRINGY_SECTORS_WEIGHTS_HPP
