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

// Cotangent complexes pulled back along twisted arcs, height functions, and
// the degree-zero Ext identity relating heights and weights.
//
// Grading: x_i and dx_i sit in degree k_i, the dual vector fields in -k_i.
// A summand generated in degree g corresponds to S(c) with c == -g.

#ifndef STRINGY_HEIGHTS_HPP
#define STRINGY_HEIGHTS_HPP

#include <optional>
#include <string>
#include <vector>

#include "stringy/graded_smith.hpp"
#include "stringy/sectors_weights.hpp"

namespace stringy {

struct ArcCotangentData {
  int ell = 1;
  /// [F -> G] restricted to the arc: dx_i -> (w_i x_i) for G_m, no columns for mu_N.
  GradedMatrix lx_complex{Field::rationals(), 1, 1, {}, {}};
  /// Dual vector fields to the pulled-back generator differentials of Y,
  /// entry (i, j) = d g_j / d x_i along the arc (present when Y was supplied).
  std::optional<GradedMatrix> ly_pullback;

  std::vector<int> a;  // H^0 = sum S(a_i), a_i in (0, ell]
  std::vector<int> b;  // H^1 = sum S/u^{n_j}(b_j), b_j in (0, ell]
  std::vector<int> n;
  std::vector<int> q;  // b_j - n_j = q_j ell + r_j with r_j in (0, ell]
  std::vector<int> r;
  std::vector<int> m;  // Ext^1(L_{X/Y}) = sum S/u^{m_k}; m_k >= 0
  std::vector<int> c;  // c_k = (-m_k) mod ell
  /// False when H^1 has a free part to the arc's precision (non-generic arc).
  bool h1_torsion = true;
};

/// Smith data of the pulled-back cotangent complex; with a Y model also the
/// pullback of Y's differentials. Precision shortfalls raise InsufficientPrecision.
ArcCotangentData pullback_LX(const CyclicQuotientStack& stack, const TwistedArc& arc,
                             const AffineModelY* y = nullptr);

/// het^(0)_{L_{X/Y}} = (1/ell) sum m_k (i = 0) or het^(1) = (1/ell) sum n_j (i = 1).
/// Infinite (a precision lower bound) when the cohomology is not torsion.
Order het_i(const ArcCotangentData& data, int i);

struct HeightReport {
  Rational het0;
  Rational het1;
  Rational torsion_coker;  // zero on smooth X
  Rational het_XY;
};
HeightReport height_report(const ArcCotangentData& data);

/// dim (S/u^n(c))_0 = 1 + floor((n - c - 1)/ell) for c in [0, ell).
long torsion_piece_dim0(long n, int c, int ell);

/// wt = dim X + (1/ell)(sum b - sum a - sum r), from the Smith data alone.
Rational weight_from_smith(const CyclicQuotientStack& stack, const ArcCotangentData& data);

/// The arc's generic point avoids every fixed locus of a nontrivial element
/// (checked to the arc's precision).
bool is_generic(const CyclicQuotientStack& stack, const TwistedArc& arc);

struct HeightWeightLedger {
  ArcCotangentData data;
  long ext1_dim0 = 0;        // dim Ext^1(L_{X/Y}|_D, O)_0
  long ext0_tors_dim0 = 0;   // dim (Ext^0(L_X|_D, O)_tors)_0
  Rational het_XY;
  Rational wt;               // from the sector
  Rational wt_smith;         // from the Smith data
  Rational lhs;              // ext1_dim0 - ext0_tors_dim0
  Rational rhs;              // het_XY + wt
  bool c_matches_a = false;  // {c_k} == {ell - a_i}
  bool ext1_formula = false; // ext1_dim0 == het0 + (1/ell) sum c_k == het0 - (1/ell) sum a_i + #a
  bool ext0_formula = false; // ext0_tors_dim0 == het1 - (1/ell) sum b_j + (1/ell) sum r_j
  bool holds = false;        // every check above, wt == wt_smith, and lhs == rhs
};

/// Both sides of dim Ext^1(L_{X/Y}|_D, O)_0 - dim (Ext^0(L_X|_D, O)_tors)_0
/// = het_{X/Y} + wt_X along the arc. Rejects non-generic arcs and ell == 1
/// with ErrorCode::non_generic / invalid_argument.
HeightWeightLedger check_height_weight_identity(const CyclicQuotientStack& stack, const AffineModelY& y,
                                                const TwistedArc& arc);

struct CrepancyCheck {
  int m = 1;        // Gorenstein index
  Rational lhs;     // m * het_{X/Y}
  Order rhs;        // ord of I_{Y,m} along omega(arc)
  bool holds = false;
};

/// m het_{X/Y}(arc) == ord_{I_{Y,m}}(omega(arc)) for crepant X -> Y (m == 1,
/// Y a hypersurface with known Jacobian ideal).
CrepancyCheck check_crepant_height(const CyclicQuotientStack& stack, const AffineModelY& y, const TwistedArc& arc);

}  // namespace stringy

#endif  // STRINGY_HEIGHTS_HPP
