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

#include "stringy/heights.hpp"

#include <algorithm>
#include <numeric>

#include "stringy/error.hpp"

namespace stringy {

namespace {

int rep_in_one_to_ell(long x, int ell) {
  int r = mod_floor(x, ell);
  return r == 0 ? ell : r;
}

Rational over_ell(long x, int ell) {
  Rational r(x, ell);
  r.canonicalize();
  return r;
}

long sum(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0L); }

}  // namespace

ArcCotangentData pullback_LX(const CyclicQuotientStack& stack, const TwistedArc& arc, const AffineModelY* y) {
  const int ell = arc.ell(), P = arc.s_precision(), n = stack.n();
  const Field& k = arc.field();
  const auto& kk = arc.sector().eigen_exponents;
  if (arc.n() != n) throw Error(ErrorCode::invalid_argument, "arc does not match the stack dimension");

  std::vector<int> row_deg(kk.begin(), kk.end());
  std::vector<int> col_deg;
  if (!stack.is_mu()) col_deg.push_back(0);
  GradedMatrix lx(k, ell, P, row_deg, col_deg);
  if (!stack.is_mu()) {
    for (int i = 0; i < n; ++i) {
      lx.at(i, 0) = trunc::scale(k, arc.series()[static_cast<size_t>(i)], k.from_int(stack.weights()[static_cast<size_t>(i)]));
    }
  }

  ArcCotangentData out{ell, lx, std::nullopt, {}, {}, {}, {}, {}, {}, {}, true};
  SmithResult s = graded_smith(lx);
  if (!stack.is_mu() && s.pivots.empty()) out.h1_torsion = false;  // the covector vanishes to precision
  for (const auto& p : s.pivots) {
    if (p.exponent == 0) continue;  // cancels a generator of G
    const int b = rep_in_one_to_ell(-p.col_degree, ell);
    const int r = rep_in_one_to_ell(b - p.exponent, ell);
    out.b.push_back(b);
    out.n.push_back(p.exponent);
    out.r.push_back(r);
    out.q.push_back((b - p.exponent - r) / ell);
  }
  // Over the power series ring the kernel is free on the non-pivot rows.
  for (int i = static_cast<int>(s.pivots.size()); i < s.D.rows(); ++i) {
    out.a.push_back(rep_in_one_to_ell(-s.D.row_degrees()[static_cast<size_t>(i)], ell));
  }

  if (y != nullptr) {
    std::vector<int> vf_deg;
    for (int x : kk) vf_deg.push_back(mod_floor(-x, ell));
    GradedMatrix j(k, ell, P, vf_deg, std::vector<int>(y->generators.size(), 0));
    for (int i = 0; i < n; ++i) {
      for (size_t g = 0; g < y->generators.size(); ++g) {
        j.at(i, static_cast<int>(g)) =
            MultiPoly::monomial(n, y->generators[g]).derivative(i).eval_series(k, arc.series());
      }
    }
    SmithResult sj = graded_smith(j, true);
    if (static_cast<int>(sj.pivots.size()) != n) {
      throw Error(ErrorCode::non_generic, "pullback of Y's differentials is not generically surjective along the arc");
    }
    for (const auto& p : sj.pivots) {
      out.m.push_back(p.exponent);
      out.c.push_back(mod_floor(-p.exponent, ell));
    }
    out.ly_pullback = j;
  }
  return out;
}

Order het_i(const ArcCotangentData& data, int i) {
  if (i == 0) {
    if (!data.ly_pullback) throw Error(ErrorCode::unsupported, "het^(0) of L_{X/Y} needs a model of Y");
    return Order{true, over_ell(sum(data.m), data.ell)};
  }
  if (i != 1) throw Error(ErrorCode::invalid_argument, "het index must be 0 or 1");
  if (!data.h1_torsion) return Order{false, over_ell(data.lx_complex.precision(), data.ell)};
  return Order{true, over_ell(sum(data.n), data.ell)};
}

HeightReport height_report(const ArcCotangentData& data) {
  Order h0 = het_i(data, 0), h1 = het_i(data, 1);
  if (!h1.finite) throw Error(ErrorCode::non_generic, "H^1 of the pulled-back cotangent complex is not torsion");
  HeightReport r;
  r.het0 = h0.value;
  r.het1 = h1.value;
  r.torsion_coker = 0;
  r.het_XY = r.het0 - r.het1;
  return r;
}

long torsion_piece_dim0(long n, int c, int ell) {
  if (c < 0 || c >= ell) throw Error(ErrorCode::invalid_argument, "shift must lie in [0, ell)");
  long x = n - c - 1;
  long fl = x >= 0 ? x / ell : -((-x + ell - 1) / ell);
  return 1 + fl;
}

Rational weight_from_smith(const CyclicQuotientStack& stack, const ArcCotangentData& data) {
  return Rational(stack.dim()) + over_ell(sum(data.b) - sum(data.a) - sum(data.r), data.ell);
}

bool is_generic(const CyclicQuotientStack& stack, const TwistedArc& arc) {
  const auto& w = stack.weights();
  auto nonzero = [&](int i) { return !trunc::is_zero(arc.series()[static_cast<size_t>(i)]); };
  if (stack.is_mu()) {
    const int N = stack.order();
    for (int a = 1; a < N; ++a) {
      bool moved = false;
      for (int i = 0; i < stack.n() && !moved; ++i)
        moved = (static_cast<long>(a) * w[static_cast<size_t>(i)]) % N != 0 && nonzero(i);
      if (!moved) return false;
    }
    return true;
  }
  int g = 0;
  for (int i = 0; i < stack.n(); ++i)
    if (nonzero(i)) g = std::gcd(g, std::abs(w[static_cast<size_t>(i)]));
  return g == 1;
}

HeightWeightLedger check_height_weight_identity(const CyclicQuotientStack& stack, const AffineModelY& y,
                                                const TwistedArc& arc) {
  const int ell = arc.ell();
  if (ell < 2) throw Error(ErrorCode::invalid_argument, "the height-weight identity is stated for twisted arcs (ell > 1)");
  if (!is_generic(stack, arc)) {
    throw Error(ErrorCode::non_generic, "arc lies in the fixed locus of a nontrivial stabilizer to precision " +
                                            std::to_string(arc.s_precision()));
  }
  HeightWeightLedger L;
  L.data = pullback_LX(stack, arc, &y);
  const auto& d = L.data;
  HeightReport h = height_report(d);
  L.het_XY = h.het_XY;

  for (int m : d.m) L.ext1_dim0 += torsion_piece_dim0(m, 0, ell);
  for (size_t j = 0; j < d.n.size(); ++j) L.ext0_tors_dim0 += torsion_piece_dim0(d.n[j], ell - d.r[j], ell);

  L.wt = wt_of_arc(stack, arc);
  L.wt_smith = weight_from_smith(stack, d);
  L.lhs = Rational(L.ext1_dim0 - L.ext0_tors_dim0);
  L.rhs = L.het_XY + L.wt;

  std::vector<int> c = d.c, la;
  for (int a : d.a) la.push_back(ell - a);
  std::sort(c.begin(), c.end());
  std::sort(la.begin(), la.end());
  L.c_matches_a = c == la;
  const Rational e1(L.ext1_dim0);
  L.ext1_formula = e1 == h.het0 + over_ell(sum(d.c), ell) &&
                   e1 == h.het0 - over_ell(sum(d.a), ell) + Rational(static_cast<long>(d.a.size()));
  L.ext0_formula = Rational(L.ext0_tors_dim0) == h.het1 - over_ell(sum(d.b), ell) + over_ell(sum(d.r), ell);
  L.holds = L.c_matches_a && L.ext1_formula && L.ext0_formula && L.wt == L.wt_smith && L.lhs == L.rhs;
  return L;
}

CrepancyCheck check_crepant_height(const CyclicQuotientStack& stack, const AffineModelY& y, const TwistedArc& arc) {
  CrepancyCheck out;
  out.m = stack.gorenstein_index();
  if (out.m != 1 || y.jacobian_ideal.empty()) {
    throw Error(ErrorCode::unsupported, "the crepancy check needs a Gorenstein hypersurface model of Y");
  }
  HeightReport h = height_report(pullback_LX(stack, arc, &y));
  out.lhs = Rational(out.m) * h.het_XY;
  out.rhs = ord_ideal(omega(arc, y), y.jacobian_ideal);
  out.holds = out.rhs.finite && out.rhs.value == out.lhs;
  return out;
}

}  // namespace stringy
