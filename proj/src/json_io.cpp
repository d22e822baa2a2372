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

#include "stringy/json_io.hpp"

#include "stringy/error.hpp"

namespace stringy {

using nlohmann::json;

json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return json(x.get_si());
  return json(x.get_str());
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer x;
    if (x.set_str(j.get<std::string>(), 10) != 0) throw Error(ErrorCode::parse, "malformed integer string");
    return x;
  }
  throw Error(ErrorCode::parse, "expected an integer, got " + j.dump());
}

json rational_to_json(const Rational& x) { return json(to_string(x)); }

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw Error(ErrorCode::parse, "expected a rational, got " + j.dump());
}

namespace {

json poly_coeffs(const IntPoly& p) {
  json arr = json::array();
  for (const auto& c : p.coeffs()) arr.push_back(integer_to_json(c));
  return arr;
}

IntPoly poly_from(const json& arr) {
  if (!arr.is_array()) throw Error(ErrorCode::parse, "expected a coefficient array");
  std::vector<Integer> v;
  for (const auto& c : arr) v.push_back(integer_from_json(c));
  return IntPoly(std::move(v));
}

}  // namespace

json stringy_polynomial_to_json(const StringyPolynomial& x) {
  json terms = json::array();
  for (const auto& [key, c] : x.terms()) {
    terms.push_back({{"u", key.first}, {"v", key.second}, {"num", poly_coeffs(c.num())}, {"den", poly_coeffs(c.den())}});
  }
  return json{{"m", x.index()}, {"terms", terms}};
}

StringyPolynomial stringy_polynomial_from_json(const json& j) {
  try {
    int m = j.at("m").get<int>();
    if (m < 1) throw Error(ErrorCode::parse, "index m must be positive");
    StringyPolynomial out(m);
    for (const auto& t : j.at("terms")) {
      int a = t.at("u").get<int>();
      int b = t.at("v").get<int>();
      if (a < 0 || b < 0 || std::min(a, b) != 0) {
        throw Error(ErrorCode::parse, "monomial key must satisfy min(u, v) = 0");
      }
      IntPoly num = poly_from(t.at("num"));
      IntPoly den = t.contains("den") ? poly_from(t.at("den")) : IntPoly::constant(1);
      if (den.is_zero()) throw Error(ErrorCode::parse, "zero denominator");
      out = out + StringyPolynomial::monomial(m, a, b, RationalFunction(num, den));
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("stringy polynomial JSON: ") + e.what());
  }
}

json hodge_table_to_json(const HodgeTable& table) {
  json arr = json::array();
  for (const auto& [pq, h] : table) {
    arr.push_back({{"p", to_string(pq.first)}, {"q", to_string(pq.second)}, {"h", to_string(h)}});
  }
  return arr;
}

json stack_to_json(const CyclicQuotientStack& s) {
  json g = s.is_mu() ? json{{"mu", s.order()}} : json("Gm");
  return {{"group", g}, {"weights", s.weights()}};
}

CyclicQuotientStack stack_from_json(const json& j) {
  try {
    if (!j.is_object()) throw Error(ErrorCode::parse, "stack spec must be an object");
    if (j.contains("action") && j.at("action") != "diagonal") {
      throw Error(ErrorCode::unsupported, "only diagonal actions are supported");
    }
    auto w = j.at("weights").get<std::vector<int>>();
    const json& g = j.at("group");
    if (g.is_string() && (g == "Gm" || g == "G_m")) return CyclicQuotientStack::gm(std::move(w));
    if (g.is_object() && g.contains("mu")) return CyclicQuotientStack::mu(g.at("mu").get<int>(), std::move(w));
    throw Error(ErrorCode::parse, "group must be {\"mu\": N} or \"Gm\"");
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("stack JSON: ") + e.what());
  }
}

json field_to_json(const Field& k) {
  if (k.is_rationals()) return "Q";
  return {{"Fp", k.characteristic()}};
}

Field field_from_json(const json& j) {
  if (j.is_string() && j == "Q") return Field::rationals();
  if (j.is_object() && j.contains("Fp") && j.at("Fp").is_number_integer()) return Field::prime(j.at("Fp").get<long>());
  throw Error(ErrorCode::parse, "field must be \"Q\" or {\"Fp\": p}, got " + j.dump());
}

json graded_matrix_to_json(const GradedMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) {
      const TruncPoly& e = m.at(i, j);
      size_t len = e.size();
      while (len > 0 && e[len - 1] == 0) --len;
      json coeffs = json::array();
      for (size_t k = 0; k < len; ++k) coeffs.push_back(rational_to_json(e[k]));
      row.push_back(coeffs);
    }
    rows.push_back(row);
  }
  return {{"field", field_to_json(m.field())}, {"ell", m.ell()}, {"precision", m.precision()},
          {"row_degrees", m.row_degrees()}, {"col_degrees", m.col_degrees()}, {"entries", rows}};
}

GradedMatrix graded_matrix_from_json(const json& j) {
  try {
    GradedMatrix m(field_from_json(j.at("field")), j.at("ell").get<int>(), j.at("precision").get<int>(),
                   j.at("row_degrees").get<std::vector<int>>(), j.at("col_degrees").get<std::vector<int>>());
    const json& e = j.at("entries");
    if (!e.is_array() || static_cast<int>(e.size()) != m.rows()) throw Error(ErrorCode::parse, "entries: wrong number of rows");
    for (int r = 0; r < m.rows(); ++r) {
      const json& row = e.at(static_cast<size_t>(r));
      if (!row.is_array() || static_cast<int>(row.size()) != m.cols()) {
        throw Error(ErrorCode::parse, "entries: row " + std::to_string(r) + " has the wrong length");
      }
      for (int c = 0; c < m.cols(); ++c) {
        std::vector<Rational> coeffs;
        for (const auto& x : row.at(static_cast<size_t>(c))) coeffs.push_back(rational_from_json(x));
        m.set(r, c, coeffs);
      }
    }
    m.validate();
    return m;
  } catch (const json::exception& ex) {
    throw Error(ErrorCode::parse, std::string("matrix JSON: ") + ex.what());
  }
}

json module_decomp_to_json(const GradedModuleDecomp& d) {
  json tors = json::array();
  for (const auto& [n, b] : d.torsion) tors.push_back({{"length", n}, {"degree", b}});
  return {{"ell", d.ell}, {"precision", d.precision}, {"free_shifts", d.free_shifts}, {"torsion", tors}};
}

json smith_result_to_json(const SmithResult& r) {
  json piv = json::array();
  for (const auto& p : r.pivots) piv.push_back({{"exponent", p.exponent}, {"row_degree", p.row_degree}, {"col_degree", p.col_degree}});
  return {{"pivots", piv},
          {"valid_precision", r.valid_precision},
          {"certified", r.certified()},
          {"unresolved_rows", r.unresolved_rows},
          {"unresolved_cols", r.unresolved_cols},
          {"U", graded_matrix_to_json(r.U)},
          {"V", graded_matrix_to_json(r.V)},
          {"D", graded_matrix_to_json(r.D)}};
}

json affine_model_to_json(const AffineModelY& y) {
  json rel = json::array();
  for (const auto& r : y.relations) rel.push_back({{"lhs", r.lhs}, {"rhs", r.rhs}});
  json out = {{"generators", y.generators}, {"variables", y.variable_names}, {"relations", rel}};
  if (y.hypersurface) out["hypersurface"] = y.hypersurface->to_string(y.variable_names);
  json jac = json::array();
  for (const auto& g : y.jacobian_ideal) jac.push_back(g.to_string(y.variable_names));
  out["jacobian_ideal"] = jac;
  return out;
}

json sector_to_json(const SectorDatum& s) {
  json out = {{"ell", s.ell},
              {s.group == GroupKind::mu ? "a" : "b", s.a},
              {"eigen_exponents", s.eigen_exponents},
              {"fixed_coords", s.fixed_coords},
              {"age", rational_to_json(s.age)}};
  if (s.wt) out["wt"] = rational_to_json(*s.wt);
  if (s.group == GroupKind::gm) out["collision"] = s.collision;
  return out;
}

json arc_to_json(const TwistedArc& arc) {
  json series = json::array();
  for (const auto& s : arc.series()) {
    json terms = json::array();
    for (size_t e = 0; e < s.size(); ++e)
      if (s[e] != 0) terms.push_back({static_cast<int>(e), rational_to_json(s[e])});
    series.push_back(terms);
  }
  return {{"field", field_to_json(arc.field())},
          {"sector", {{"ell", arc.ell()}, {"a", arc.sector().a}}},
          {"precision", arc.s_precision()},
          {"series", series}};
}

TwistedArc arc_from_json(const CyclicQuotientStack& stack, const json& j) {
  try {
    Field k = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
    const json& sec = j.at("sector");
    int a = sec.contains("a") ? sec.at("a").get<int>() : sec.at("b").get<int>();
    SectorDatum s = sector_of(stack, sec.at("ell").get<int>(), a);
    const int P = j.at("precision").get<int>();
    std::vector<TruncPoly> series;
    for (const auto& coord : j.at("series")) {
      TruncPoly x = trunc::zero(P);
      for (const auto& term : coord) {
        int e = term.at(0).get<int>();
        if (e < 0) throw Error(ErrorCode::parse, "negative exponent in arc series");
        if (e < P) x[static_cast<size_t>(e)] = rational_from_json(term.at(1));
      }
      series.push_back(std::move(x));
    }
    return TwistedArc(k, s, P, std::move(series));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("arc JSON: ") + e.what());
  }
}

}  // namespace stringy

namespace stringy {

json stringy_value_to_json(const StringyPolynomial& x) {
  return {{"text", x.to_string()}, {"value", stringy_polynomial_to_json(x)}};
}

std::vector<CoefficientConstraint> constraints_from_json(const json& j) {
  try {
    std::vector<CoefficientConstraint> out;
    for (const auto& c : j) {
      const std::string kind = c.at("condition").get<std::string>();
      CoeffCondition cond = CoeffCondition::free;
      if (kind == "zero") cond = CoeffCondition::zero;
      else if (kind == "nonzero") cond = CoeffCondition::nonzero;
      else if (kind != "free") throw Error(ErrorCode::parse, "unknown coefficient condition '" + kind + "'");
      out.push_back({c.at("coord").get<int>(), c.at("exponent").get<int>(), cond});
    }
    return out;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("constraint JSON: ") + e.what());
  }
}

json motivic_volume_to_json(const MotivicVolume& v) {
  return {{"volume", stringy_value_to_json(v.value)}, {"level_used", v.level_used}};
}

json thin_set_to_json(const std::vector<ThinSetRow>& rows) {
  json out = json::array();
  for (const auto& r : rows)
    out.push_back({{"sector", sector_to_json(r.sector)}, {"level", r.level}, {"volume", stringy_value_to_json(r.volume)}});
  return out;
}

json resolution_to_json(const ResolutionData& r) {
  json disc = json::array(), strata = json::array();
  for (const auto& a : r.discrepancies) disc.push_back(rational_to_json(a));
  for (const auto& s : r.strata) strata.push_back({{"subset", s.subset}, {"e", stringy_polynomial_to_json(s.e)}});
  json out = {{"m", r.m}, {"discrepancies", disc}, {"strata", strata}};
  if (!r.provenance.empty()) out["provenance"] = r.provenance;
  return out;
}

ResolutionData resolution_from_json(const json& j) {
  try {
    ResolutionData r;
    r.m = j.at("m").get<int>();
    if (r.m < 1) throw Error(ErrorCode::parse, "index m must be positive");
    for (const auto& a : j.at("discrepancies")) r.discrepancies.push_back(rational_from_json(a));
    for (const auto& s : j.at("strata")) {
      Stratum st{s.at("subset").get<std::vector<int>>(), StringyPolynomial(r.m)};
      const json& e = s.at("e");
      if (e.contains("L")) {
        StringyPolynomial power = StringyPolynomial::constant(r.m, 1);
        for (const auto& c : e.at("L")) {
          st.e = st.e + StringyPolynomial::constant(r.m, integer_from_json(c)) * power;
          power = power * hd_L_power(Rational(1), r.m);
        }
      } else {
        st.e = stringy_polynomial_from_json(e);
      }
      r.strata.push_back(std::move(st));
    }
    if (j.contains("provenance")) r.provenance = j.at("provenance").get<std::string>();
    r.validate();
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::parse, std::string("resolution JSON: ") + e.what());
  }
}

json oracle_result_to_json(const GorensteinOracleResult& r) {
  json terms = json::array();
  for (size_t e = 0; e < r.y_terms.size(); ++e)
    terms.push_back({{"e", static_cast<int>(e)},
                     {"level", r.levels[e]},
                     {"jet_count_term", rational_to_json(r.y_terms[e])},
                     {"previous_level_term", rational_to_json(r.y_terms_prev[e])},
                     {"twisted_arc_term", rational_to_json(r.x_terms[e])}});
  return {{"q", r.q},
          {"n_max", r.n_max},
          {"e_max", r.e_max},
          {"terms", terms},
          {"partial_sum", rational_to_json(r.partial)},
          {"certified_tail", rational_to_json(r.tail)},
          {"target", rational_to_json(r.target)},
          {"stabilized", r.stabilized},
          {"terms_agree", r.terms_agree},
          {"total_agrees", r.total_agrees}};
}

json report_to_json(const StringyReport& r) {
  json out = {{"stack", r.stack_name}, {"sector_formula", stringy_value_to_json(r.e_str_sector_formula)}};
  out["batyrev"] = r.e_str_batyrev ? stringy_value_to_json(*r.e_str_batyrev) : json(nullptr);
  json counts = json::array();
  for (const auto& c : r.e_str_pointcount) counts.push_back(oracle_result_to_json(c));
  out["pointcount"] = counts;
  out["hpq"] = r.hpq ? hodge_table_to_json(*r.hpq) : json(nullptr);
  out["agreement"] = {{"batyrev", to_string(r.batyrev_agreement)},
                      {"pointcount", to_string(r.pointcount_agreement)},
                      {"all", r.all_agree()}};
  out["notes"] = r.notes;
  return out;
}

}  // namespace stringy
