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

// JSON encodings of the library's value types. Integers that fit in 64 bits
// are JSON numbers, larger ones are decimal strings; rationals are "p/q"
// strings.

#ifndef STRINGY_JSON_IO_HPP
#define STRINGY_JSON_IO_HPP

#include "json.hpp"
#include "stringy/coeff_ring.hpp"
#include "stringy/graded_smith.hpp"
#include "stringy/motivic.hpp"
#include "stringy/quotient_stack.hpp"
#include "stringy/stringy.hpp"
#include "stringy/twisted_arcs.hpp"

namespace stringy {

nlohmann::json integer_to_json(const Integer& x);
Integer integer_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& x);
Rational rational_from_json(const nlohmann::json& j);  // accepts "p/q" strings and integers

/// {"m": int, "terms": [{"u": a, "v": b, "num": [...], "den": [...]}, ...]}, terms in key order.
nlohmann::json stringy_polynomial_to_json(const StringyPolynomial& x);
StringyPolynomial stringy_polynomial_from_json(const nlohmann::json& j);

nlohmann::json hodge_table_to_json(const HodgeTable& table);

/// {"group": {"mu": N} | "Gm", "weights": [...]}
nlohmann::json stack_to_json(const CyclicQuotientStack& s);
CyclicQuotientStack stack_from_json(const nlohmann::json& j);

/// "Q" or {"Fp": p}
nlohmann::json field_to_json(const Field& k);
Field field_from_json(const nlohmann::json& j);

/// {"field", "ell", "precision", "row_degrees", "col_degrees", "entries": [[[coeffs]]]}
nlohmann::json graded_matrix_to_json(const GradedMatrix& m);
GradedMatrix graded_matrix_from_json(const nlohmann::json& j);
nlohmann::json module_decomp_to_json(const GradedModuleDecomp& d);
nlohmann::json smith_result_to_json(const SmithResult& r);

nlohmann::json affine_model_to_json(const AffineModelY& y);

nlohmann::json sector_to_json(const SectorDatum& s);
/// {"field"?: ..., "sector": {"ell", "a"}, "precision", "series": [[[exponent, coeff], ...] per coordinate]}
nlohmann::json arc_to_json(const TwistedArc& arc);
TwistedArc arc_from_json(const CyclicQuotientStack& stack, const nlohmann::json& j);

/// {"text": human-readable form, "value": stringy_polynomial_to_json}
nlohmann::json stringy_value_to_json(const StringyPolynomial& x);

/// [{"coord", "exponent", "condition": "free" | "zero" | "nonzero"}, ...]
std::vector<CoefficientConstraint> constraints_from_json(const nlohmann::json& j);
nlohmann::json motivic_volume_to_json(const MotivicVolume& v);
nlohmann::json thin_set_to_json(const std::vector<ThinSetRow>& rows);

/// {"m", "discrepancies": ["p/q", ...], "strata": [{"subset": [...], "e": stringy polynomial}], "provenance"?}
/// A stratum's "e" may also be a polynomial in L given as {"L": [c0, c1, ...]}.
nlohmann::json resolution_to_json(const ResolutionData& r);
ResolutionData resolution_from_json(const nlohmann::json& j);

nlohmann::json oracle_result_to_json(const GorensteinOracleResult& r);
nlohmann::json report_to_json(const StringyReport& r);

}  // namespace stringy

#endif  // STRINGY_JSON_IO_HPP
