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

#include "stringy/motivic.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <set>
#include <string>

#include "stringy/error.hpp"
#include "stringy/graded_smith.hpp"
#include "stringy/sectors_weights.hpp"

namespace stringy {

namespace {

void require_mu(const CyclicQuotientStack& stack, const char* what) {
  if (!stack.is_mu()) throw Error(ErrorCode::unsupported, std::string(what) + ": measures on G_m quotients are not implemented");
}

void require_sector_of(const CyclicQuotientStack& stack, const SectorDatum& sector) {
  if (sector.group != GroupKind::mu || static_cast<int>(sector.eigen_exponents.size()) != stack.n())
    throw Error(ErrorCode::invalid_argument, "sector " + sector.label() + " does not belong to " + stack.name());
}

StringyPolynomial L_power(long k, int m) { return hd_L_power(Rational(k), m); }

// Index of the coefficient of s^exponent among the n + 1 coefficients of a coordinate.
int slot_of(const SectorDatum& sector, const CoefficientConstraint& c) {
  return (c.exponent - sector.eigen_exponents[static_cast<size_t>(c.coord)]) / sector.ell;
}

// Number of coefficient tuples of one coordinate, over an alphabet of q labels
// with label 0 the zero scalar, meeting the per-slot conditions.
Integer count_coordinate(int slots, long q, const std::vector<CoeffCondition>& cond) {
  std::vector<long> digit(static_cast<size_t>(slots), 0);
  Integer count = 0;
  for (;;) {
    bool ok = true;
    for (int j = 0; j < slots && ok; ++j) {
      const long d = digit[static_cast<size_t>(j)];
      switch (cond[static_cast<size_t>(j)]) {
        case CoeffCondition::zero: ok = d == 0; break;
        case CoeffCondition::nonzero: ok = d != 0; break;
        case CoeffCondition::free: break;
      }
    }
    if (ok) ++count;
    int j = 0;
    while (j < slots && ++digit[static_cast<size_t>(j)] == q) digit[static_cast<size_t>(j++)] = 0;
    if (j == slots) return count;
  }
}

}  // namespace

int CylinderSpec::min_level() const {
  int n = 0;
  for (const auto& c : conditions) n = std::max(n, c.exponent / sector.ell);
  return n;
}

void CylinderSpec::validate() const {
  if (level < 0) throw Error(ErrorCode::invalid_argument, "cylinder level must be nonnegative");
  const int ell = sector.ell;
  const int ncoords = static_cast<int>(sector.eigen_exponents.size());
  std::set<std::pair<int, int>> seen;
  for (const auto& c : conditions) {
    const std::string where = "constraint on coordinate " + std::to_string(c.coord) + ", exponent " +
                              std::to_string(c.exponent);
    if (c.coord < 0 || c.coord >= ncoords) throw Error(ErrorCode::invalid_argument, where + ": no such coordinate");
    if (c.exponent < 0 || c.exponent >= ell * (level + 1))
      throw Error(ErrorCode::invalid_argument, where + ": exponent outside the level-" + std::to_string(level) + " jet");
    if (mod_floor(c.exponent - sector.eigen_exponents[static_cast<size_t>(c.coord)], ell) != 0)
      throw Error(ErrorCode::invalid_argument, where + ": exponent not congruent to the eigen-exponent");
    if (!seen.emplace(c.coord, c.exponent).second)
      throw Error(ErrorCode::invalid_argument, where + ": duplicate constraint");
  }
}

StringyPolynomial CylinderSpec::level_class(int m) const {
  validate();
  long zero = 0, nonzero = 0;
  for (const auto& c : conditions) {
    zero += c.condition == CoeffCondition::zero;
    nonzero += c.condition == CoeffCondition::nonzero;
  }
  const long total = static_cast<long>(level + 1) * static_cast<long>(sector.eigen_exponents.size());
  StringyPolynomial out = L_power(total - zero - nonzero, m);
  const StringyPolynomial torus = L_power(1, m) - StringyPolynomial::constant(m, 1);
  for (long i = 0; i < nonzero; ++i) out = out * torus;
  return out;
}

StringyPolynomial cylinder_volume_at_level(const CyclicQuotientStack& stack, const CylinderSpec& spec) {
  require_mu(stack, "cylinder volume");
  require_sector_of(stack, spec.sector);
  const int m = stack.gorenstein_index();
  return spec.level_class(m) * L_power(-static_cast<long>(spec.level + 1) * stack.dim(), m);
}

MotivicVolume sector_volume(const CyclicQuotientStack& stack, const SectorDatum& sector,
                            const std::vector<CoefficientConstraint>& conditions) {
  require_mu(stack, "sector_volume");
  CylinderSpec spec{sector, 0, conditions};
  spec.level = spec.min_level();
  StringyPolynomial here = cylinder_volume_at_level(stack, spec);
  ++spec.level;
  if (cylinder_volume_at_level(stack, spec) != here)
    throw Error(ErrorCode::not_stabilized, "cylinder volume of sector " + sector.label() + " did not stabilize");
  return {here, spec.level - 1};
}

bool is_prime_power(long q) {
  if (q < 2) return false;
  for (long p = 2; p * p <= q; ++p) {
    if (q % p != 0) continue;
    while (q % p == 0) q /= p;
    return q == 1;
  }
  return true;
}

Rational groupoid_count_oracle(const CyclicQuotientStack& stack, const SectorDatum& sector, int n, long q,
                               const std::vector<CoefficientConstraint>& conditions) {
  require_mu(stack, "groupoid_count_oracle");
  if (!is_prime_power(q)) throw Error(ErrorCode::invalid_argument, "q = " + std::to_string(q) + " is not a prime power");
  if ((q - 1) % stack.order() != 0)
    throw Error(ErrorCode::invalid_argument,
                "q = " + std::to_string(q) + " is not congruent to 1 mod " + std::to_string(stack.order()));
  if (n < 0) throw Error(ErrorCode::invalid_argument, "level must be nonnegative");
  if (sector.ell < 1 || stack.order() % sector.ell != 0) return Rational(0);
  require_sector_of(stack, sector);
  CylinderSpec spec{sector, n, conditions};
  spec.validate();

  const int slots = n + 1;
  long double work = 0;
  for (int i = 0; i < stack.n(); ++i) work += std::pow(static_cast<long double>(q), slots);
  if (work > static_cast<long double>(kEnumerationGuard))
    throw Error(ErrorCode::guard_exceeded, "groupoid count needs more than 10^7 coefficient tuples; lower n or q");

  std::vector<std::vector<CoeffCondition>> per_coord(static_cast<size_t>(stack.n()),
                                                     std::vector<CoeffCondition>(static_cast<size_t>(slots)));
  for (const auto& c : conditions) per_coord[static_cast<size_t>(c.coord)][static_cast<size_t>(slot_of(sector, c))] = c.condition;

  // Coordinates are independent; each worker counts one of them.
  std::vector<std::future<Integer>> parts;
  for (const auto& cond : per_coord)
    parts.push_back(std::async(std::launch::async, [slots, q, cond] { return count_coordinate(slots, q, cond); }));
  Integer total = 1;
  for (auto& f : parts) total *= f.get();
  return Rational(total);
}

StringyPolynomial integrate_weight(const CyclicQuotientStack& stack) {
  require_mu(stack, "integrate_weight");
  const int m = stack.gorenstein_index();
  StringyPolynomial out(m);
  for (const auto& sector : weight_table(stack)) {
    const MotivicVolume vol = sector_volume(stack, sector);
    out = out + hd_L_power(-*sector.wt, m) * vol.value;
  }
  return out;
}

std::vector<CoefficientConstraint> vanishing_constraints(const SectorDatum& sector,
                                                         const std::vector<int>& vanishing_coords, int n) {
  std::vector<CoefficientConstraint> out;
  for (int i : vanishing_coords) {
    if (i < 0 || i >= static_cast<int>(sector.eigen_exponents.size()))
      throw Error(ErrorCode::invalid_argument, "no coordinate " + std::to_string(i));
    for (int j = 0; j <= n; ++j)
      out.push_back({i, sector.eigen_exponents[static_cast<size_t>(i)] + j * sector.ell, CoeffCondition::zero});
  }
  return out;
}

std::vector<ThinSetRow> thin_set_decay(const CyclicQuotientStack& stack, const std::vector<int>& vanishing_coords,
                                       int n_max) {
  require_mu(stack, "thin_set_decay");
  std::set<int> coords(vanishing_coords.begin(), vanishing_coords.end());
  if (coords.size() != vanishing_coords.size())
    throw Error(ErrorCode::invalid_argument, "vanishing coordinates must be distinct");
  if (coords.empty()) throw Error(ErrorCode::invalid_argument, "Z = X is not a thin set");
  if (n_max < 0) throw Error(ErrorCode::invalid_argument, "n_max must be nonnegative");
  std::vector<ThinSetRow> out;
  for (const auto& sector : all_sectors(stack)) {
    for (int n = 0; n <= n_max; ++n) {
      CylinderSpec spec{sector, n, vanishing_constraints(sector, vanishing_coords, n)};
      out.push_back({sector, n, cylinder_volume_at_level(stack, spec)});
    }
  }
  return out;
}

}  // namespace stringy
