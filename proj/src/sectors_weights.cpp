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

#include "stringy/sectors_weights.hpp"

#include <algorithm>

#include "stringy/error.hpp"
#include "stringy/graded_smith.hpp"

namespace stringy {

namespace {

int rep_in_one_to_ell(int x, int ell) {
  int r = mod_floor(x, ell);
  return r == 0 ? ell : r;
}

Rational weight_formula(int dim, const std::vector<int>& c, const std::vector<int>& d, int ell) {
  long sc = 0, sd = 0;
  for (int x : c) sc += x;
  for (int x : d) sd += x;
  Rational wt = Rational(dim) + Rational(sc - sd, ell);
  wt.canonicalize();
  return wt;
}

}  // namespace

int cotangent_degree(int k, int ell, WeightConvention conv) {
  return conv == WeightConvention::standard ? mod_floor(k, ell) : mod_floor(-k, ell);
}

WeightReport weight_at_point(const CyclicQuotientStack& stack, const SectorDatum& sector,
                             const std::vector<Rational>& point, WeightConvention conv, const Field& k) {
  const int ell = sector.ell, n = stack.n();
  if (static_cast<int>(sector.eigen_exponents.size()) != n || static_cast<int>(point.size()) != n) {
    throw Error(ErrorCode::invalid_argument, "sector or point does not match the stack dimension");
  }
  WeightReport rep;
  rep.sector = sector;
  if (stack.is_mu()) {
    // No Lie algebra: the complex is [Omega -> 0] and H^0 = Omega.
    for (int k : sector.eigen_exponents) rep.d_list.push_back(rep_in_one_to_ell(-cotangent_degree(k, ell, conv), ell));
  } else {
    // [Omega -> g^dual] on the closed fiber K[s]/(s^ell): dx_i -> w_i x_i.
    std::vector<int> rows;
    for (int k : sector.eigen_exponents) rows.push_back(cotangent_degree(k, ell, conv));
    GradedMatrix alpha(k, ell, ell, rows, {0});
    for (int i = 0; i < n; ++i) {
      const Rational x = k.reduce(point[static_cast<size_t>(i)]);
      if (x != 0 && sector.eigen_exponents[static_cast<size_t>(i)] != 0) {
        throw Error(ErrorCode::invalid_argument, "point is not fixed by the sector: coordinate " + std::to_string(i));
      }
      alpha.set(i, 0, {Rational(stack.weights()[static_cast<size_t>(i)]) * x});
    }
    TwoTermCohomology h = two_term_cohomology(alpha);
    // Constant entries give only unit pivots, so both groups are free over K[s]/(s^ell).
    if (!h.h0.torsion.empty() || !h.h1.torsion.empty()) {
      throw Error(ErrorCode::invalid_argument, "cotangent cohomology at a point must be locally free");
    }
    // A summand generated in degree g has weight rep(-g) in (0, ell].
    for (int a : h.h0.free_shifts) rep.d_list.push_back(rep_in_one_to_ell(-a, ell));
    for (int c : h.h1.free_shifts) rep.c_list.push_back(rep_in_one_to_ell(-c, ell));
  }
  std::sort(rep.d_list.begin(), rep.d_list.end());
  std::sort(rep.c_list.begin(), rep.c_list.end());
  rep.wt = weight_formula(stack.dim(), rep.c_list, rep.d_list, ell);
  rep.sector.wt = rep.wt;
  return rep;
}

WeightReport weight_of_sector(const CyclicQuotientStack& stack, const SectorDatum& sector, WeightConvention conv) {
  std::vector<Rational> point(static_cast<size_t>(stack.n()), Rational(0));
  for (int i : sector.fixed_coords) point[static_cast<size_t>(i)] = 1;
  return weight_at_point(stack, sector, point, conv);
}

Rational wt_of_arc(const CyclicQuotientStack& stack, const TwistedArc& arc, WeightConvention conv) {
  if (stack.is_mu()) return weight_of_sector(stack, arc.sector(), conv).wt;
  return weight_at_point(stack, arc.sector(), arc.base_point(), conv, arc.field()).wt;
}

std::vector<SectorDatum> weight_table(const CyclicQuotientStack& stack, WeightConvention conv) {
  std::vector<SectorDatum> out = all_sectors(stack);
  for (auto& s : out) s.wt = weight_of_sector(stack, s, conv).wt;
  return out;
}

}  // namespace stringy
