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

#include "stringy/stringy.h"

#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>

#include "stringy/error.hpp"
#include "stringy/heights.hpp"
#include "stringy/json_io.hpp"
#include "stringy/motivic.hpp"
#include "stringy/sectors_weights.hpp"
#include "stringy/stringy.hpp"

using nlohmann::json;
using namespace stringy;

struct stringy_stack {
  CyclicQuotientStack stack;
};

struct stringy_result {
  std::string text;
  bool ok = true;
};

namespace {

thread_local std::string last_error;

stringy_status run(const std::function<void()>& body) {
  try {
    body();
    last_error.clear();
    return STRINGY_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<stringy_status>(e.code());
  } catch (const json::exception& e) {
    last_error = std::string("JSON: ") + e.what();
    return STRINGY_E_PARSE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return STRINGY_E_INTERNAL;
  }
}

void require(bool cond, const char* what) {
  if (!cond) throw Error(ErrorCode::invalid_argument, what);
}

void emit(stringy_result** out, const json& j, bool ok) {
  require(out != nullptr, "output pointer is NULL");
  *out = new stringy_result{j.dump(), ok};
}

const CyclicQuotientStack& deref(const stringy_stack* s) {
  require(s != nullptr, "stack handle is NULL");
  return s->stack;
}

std::vector<long> q_list(const long* qs, size_t nq) {
  require(nq == 0 || qs != nullptr, "q list is NULL");
  return std::vector<long>(qs, qs + nq);
}

Rational q_power(long q, long e) {
  Rational out = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= q;
  return e < 0 ? 1 / out : out;
}

json weight_report_to_json(const WeightReport& w) {
  return {{"sector", sector_to_json(w.sector)}, {"d", w.d_list}, {"c", w.c_list}, {"wt", rational_to_json(w.wt)}};
}

// Groupoid count of a cylinder at one level against its symbolic volume.
json count_check(const CyclicQuotientStack& stack, const CylinderSpec& spec, long q, bool& ok) {
  const Rational count = groupoid_count_oracle(stack, spec.sector, spec.level, q, spec.conditions);
  Rational normalized = count * q_power(q, -static_cast<long>(spec.level + 1) * stack.dim());
  normalized.canonicalize();
  const Rational symbolic = specialize_at_L(cylinder_volume_at_level(stack, spec), Rational(q));
  const bool agree = normalized == symbolic;
  ok = ok && agree;
  return {{"q", q},
          {"level", spec.level},
          {"count", rational_to_json(count)},
          {"normalized", rational_to_json(normalized)},
          {"symbolic", rational_to_json(symbolic)},
          {"agree", agree}};
}

std::vector<SectorDatum> sectors_up_to(const CyclicQuotientStack& stack, int max_ell) {
  if (stack.is_mu()) return all_sectors(stack);
  std::vector<SectorDatum> out;
  for (int ell = 1; ell <= max_ell; ++ell) {
    auto s = sectors(stack, ell);
    out.insert(out.end(), s.begin(), s.end());
  }
  return out;
}

}  // namespace

extern "C" {

const char* stringy_version(void) { return "0.1.0"; }

const char* stringy_status_name(stringy_status status) {
  switch (status) {
    case STRINGY_OK: return "ok";
    case STRINGY_E_INVALID_ARGUMENT: return "invalid_argument";
    case STRINGY_E_PARSE: return "parse";
    case STRINGY_E_UNSUPPORTED: return "unsupported";
    case STRINGY_E_INSUFFICIENT_PRECISION: return "insufficient_precision";
    case STRINGY_E_NOT_LOG_TERMINAL: return "not_log_terminal";
    case STRINGY_E_GUARD_EXCEEDED: return "guard_exceeded";
    case STRINGY_E_NOT_SPECIALIZABLE: return "not_specializable";
    case STRINGY_E_NOT_POLYNOMIAL: return "not_polynomial";
    case STRINGY_E_NOT_STABILIZED: return "not_stabilized";
    case STRINGY_E_NON_GENERIC: return "non_generic";
    case STRINGY_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* stringy_last_error(void) { return last_error.c_str(); }

stringy_status stringy_stack_from_json(const char* json_text, stringy_stack** out) {
  return run([&] {
    require(json_text != nullptr && out != nullptr, "NULL argument");
    json j;
    try {
      j = json::parse(json_text);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::parse, std::string("stack JSON: ") + e.what());
    }
    *out = new stringy_stack{stack_from_json(j)};
  });
}

stringy_status stringy_stack_mu(int order, const int* weights, size_t n, stringy_stack** out) {
  return run([&] {
    require(out != nullptr && (n == 0 || weights != nullptr), "NULL argument");
    *out = new stringy_stack{CyclicQuotientStack::mu(order, std::vector<int>(weights, weights + n))};
  });
}

stringy_status stringy_stack_gm(const int* weights, size_t n, stringy_stack** out) {
  return run([&] {
    require(out != nullptr && (n == 0 || weights != nullptr), "NULL argument");
    *out = new stringy_stack{CyclicQuotientStack::gm(std::vector<int>(weights, weights + n))};
  });
}

void stringy_stack_free(stringy_stack* stack) { delete stack; }

const char* stringy_result_json(const stringy_result* result) { return result ? result->text.c_str() : ""; }
int stringy_result_ok(const stringy_result* result) { return result && result->ok ? 1 : 0; }
void stringy_result_free(stringy_result* result) { delete result; }

stringy_status stringy_sectors(const stringy_stack* stack, int ell, stringy_result** out) {
  return run([&] {
    const auto& st = deref(stack);
    require(ell >= 0, "ell must be nonnegative");
    json list = json::array();
    for (const auto& s : ell == 0 ? all_sectors(st) : sectors(st, ell)) list.push_back(sector_to_json(s));
    emit(out, {{"stack", stack_to_json(st)}, {"sectors", list}}, true);
  });
}

stringy_status stringy_weights(const stringy_stack* stack, int max_ell, stringy_result** out) {
  return run([&] {
    const auto& st = deref(stack);
    require(max_ell >= 1, "max_ell must be positive");
    json rows = json::array();
    bool ok = true;
    for (const auto& s : sectors_up_to(st, max_ell)) {
      WeightReport w = weight_of_sector(st, s);
      json row = weight_report_to_json(w);
      if (st.is_mu()) {
        row["matches_age"] = w.wt == s.age;
        ok = ok && w.wt == s.age;
      }
      rows.push_back(row);
    }
    emit(out, {{"stack", stack_to_json(st)}, {"weights", rows}}, ok);
  });
}

stringy_status stringy_integrate(const stringy_stack* stack, const long* qs, size_t nq, int level,
                                 stringy_result** out) {
  return run([&] {
    const auto& st = deref(stack);
    require(level >= 0, "level must be nonnegative");
    if (!st.is_mu()) throw Error(ErrorCode::unsupported, "measures on G_m quotients are not implemented");
    const auto q = q_list(qs, nq);
    bool ok = true;
    json rows = json::array();
    for (const auto& s : weight_table(st)) {
      MotivicVolume v = sector_volume(st, s);
      json checks = json::array();
      for (long qq : q) checks.push_back(count_check(st, CylinderSpec{s, level, {}}, qq, ok));
      rows.push_back({{"sector", sector_to_json(s)}, {"volume", motivic_volume_to_json(v)}, {"checks", checks}});
    }
    emit(out,
         {{"stack", stack_to_json(st)},
          {"integral", stringy_value_to_json(integrate_weight(st))},
          {"e_str", stringy_value_to_json(stringy_via_sectors(st))},
          {"sectors", rows}},
         ok);
  });
}

stringy_status stringy_oracle(const stringy_stack* stack, int ell, int a, int level, const char* constraints_json,
                              const long* qs, size_t nq, stringy_result** out) {
  return run([&] {
    const auto& st = deref(stack);
    CylinderSpec spec{sector_of(st, ell, a), level,
                      constraints_json ? constraints_from_json(json::parse(constraints_json))
                                       : std::vector<CoefficientConstraint>{}};
    spec.validate();
    bool ok = true;
    json checks = json::array();
    for (long q : q_list(qs, nq)) checks.push_back(count_check(st, spec, q, ok));
    emit(out,
         {{"sector", sector_to_json(spec.sector)},
          {"volume", stringy_value_to_json(cylinder_volume_at_level(st, spec))},
          {"checks", checks}},
         ok);
  });
}

stringy_status stringy_thin_set(const stringy_stack* stack, const int* coords, size_t ncoords, int n_max,
                                const long* qs, size_t nq, stringy_result** out) {
  return run([&] {
    const auto& st = deref(stack);
    require(ncoords == 0 || coords != nullptr, "coordinate list is NULL");
    const std::vector<int> vanish(coords, coords + ncoords);
    const auto rows = thin_set_decay(st, vanish, n_max);
    bool ok = true;
    json checks = json::array();
    for (long q : q_list(qs, nq))
      for (const auto& r : rows) {
        try {
          checks.push_back(count_check(st, CylinderSpec{r.sector, r.level, vanishing_constraints(r.sector, vanish, r.level)}, q, ok));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::guard_exceeded) throw;
          checks.push_back({{"q", q}, {"level", r.level}, {"skipped", "enumeration guard"}});
        }
      }
    emit(out, {{"stack", stack_to_json(st)}, {"table", thin_set_to_json(rows)}, {"checks", checks}}, ok);
  });
}

stringy_status stringy_batyrev(const stringy_stack* stack, const char* resolution_json, stringy_result** out) {
  return run([&] {
    require(stack != nullptr || resolution_json != nullptr, "need a stack or a resolution");
    std::optional<ResolutionData> res;
    if (resolution_json) {
      res = resolution_from_json(json::parse(resolution_json));
    } else {
      res = builtin_resolution(stack->stack);
      if (!res) throw Error(ErrorCode::unsupported, "no built-in resolution for " + stack->stack.name());
    }
    const StringyPolynomial value = stringy_via_batyrev(*res);
    json j = {{"resolution", resolution_to_json(*res)}, {"e_str", stringy_value_to_json(value)}};
    bool ok = true;
    if (stack) {
      const StringyPolynomial sectors = stringy_via_sectors(stack->stack);
      const int m = std::lcm(sectors.index(), value.index());
      ok = sectors.reindexed(m) == value.reindexed(m);
      j["sector_formula"] = stringy_value_to_json(sectors);
      j["agree"] = ok;
    }
    emit(out, j, ok);
  });
}

stringy_status stringy_gorenstein_oracle(const stringy_stack* stack, const long* qs, size_t nq, int n_max, int e_max,
                                         stringy_result** out) {
  return run([&] {
    const auto& st = deref(stack);
    auto q = q_list(qs, nq);
    if (q.empty()) q = primes_one_mod(st.order(), 3);
    bool ok = true;
    json results = json::array();
    for (long qq : q) {
      auto r = gorenstein_measure_oracle(st, qq, n_max, e_max);
      ok = ok && r.ok();
      results.push_back(oracle_result_to_json(r));
    }
    emit(out, {{"stack", stack_to_json(st)}, {"results", results}}, ok);
  });
}

stringy_status stringy_compare(const stringy_stack* stack, const char* resolution_json, const long* qs, size_t nq,
                               int n_max, int e_max, stringy_result** out) {
  return run([&] {
    const auto& st = deref(stack);
    std::optional<ResolutionData> res;
    if (resolution_json) res = resolution_from_json(json::parse(resolution_json));
    CompareOptions opt{q_list(qs, nq), n_max, e_max};
    StringyReport r = compare_all(st, res ? &*res : nullptr, opt);
    emit(out, report_to_json(r), r.all_agree());
  });
}

stringy_status stringy_gsnf(const char* matrix_json, int require_certified, stringy_result** out) {
  return run([&] {
    require(matrix_json != nullptr, "matrix JSON is NULL");
    GradedMatrix a = graded_matrix_from_json(json::parse(matrix_json));
    SmithResult r = graded_smith(a, require_certified != 0);
    const bool verified = verify_smith_certificate(a, r);
    TwoTermCohomology h = two_term_cohomology(a);
    emit(out,
         {{"smith", smith_result_to_json(r)},
          {"certificate_verified", verified},
          {"certified", r.certified()},
          {"cokernel", module_decomp_to_json(h.h1)},
          {"kernel", module_decomp_to_json(h.h0)}},
         verified);
  });
}

stringy_status stringy_verify(const stringy_stack* stack, const char* identity, int samples, unsigned long long seed,
                              int precision, long p, stringy_result** out) {
  return run([&] {
    const auto& st = deref(stack);
    require(identity != nullptr, "identity is NULL");
    require(samples >= 1 && precision >= 1, "samples and precision must be positive");
    const std::string which = identity;
    require(which == "height-weight" || which == "crepancy" || which == "weight-constancy",
            "identity must be height-weight, crepancy or weight-constancy");
    const Field k = Field::prime(p);
    std::mt19937_64 rng(seed);
    std::optional<AffineModelY> y, hyper;
    if (which == "height-weight") y = affine_model(st);
    if (which == "crepancy") {
      hyper = hypersurface_model(st);
      if (!hyper) throw Error(ErrorCode::unsupported, "crepancy check needs the hypersurface model");
    }
    bool ok = true;
    json per_sector = json::array();
    for (const auto& s : sectors_up_to(st, 6)) {
      if (which == "height-weight" && s.ell < 2) continue;
      const int sp = ((precision + s.ell - 1) / s.ell) * s.ell;
      const Rational sector_wt = weight_of_sector(st, s).wt;
      json arcs = json::array();
      int passed = 0, tried = 0, skipped = 0;
      while (tried < samples) {
        TwistedArc arc = random_arc(st, s, k, sp, rng);
        if (which != "weight-constancy" && !is_generic(st, arc)) {
          require(++skipped <= 100 * samples, "could not sample generic arcs");
          continue;
        }
        ++tried;
        json entry = {{"arc", arc_to_json(arc)}};
        bool holds = false;
        if (which == "height-weight") {
          auto l = check_height_weight_identity(st, *y, arc);
          holds = l.holds;
          entry.update({{"ext1_dim0", l.ext1_dim0},
                        {"ext0_tors_dim0", l.ext0_tors_dim0},
                        {"het_XY", rational_to_json(l.het_XY)},
                        {"wt", rational_to_json(l.wt)},
                        {"lhs", rational_to_json(l.lhs)},
                        {"rhs", rational_to_json(l.rhs)}});
        } else if (which == "crepancy") {
          auto c = check_crepant_height(st, *hyper, arc);
          holds = c.holds;
          entry.update({{"m", c.m}, {"lhs", rational_to_json(c.lhs)}, {"rhs", c.rhs.to_string()}});
        } else {
          const Rational w = wt_of_arc(st, arc);
          holds = w == sector_wt;
          entry["wt"] = rational_to_json(w);
        }
        entry["holds"] = holds;
        passed += holds;
        arcs.push_back(entry);
      }
      ok = ok && passed == tried;
      per_sector.push_back({{"sector", sector_to_json(s)},
                            {"samples", tried},
                            {"passed", passed},
                            {"non_generic_skipped", skipped},
                            {"arcs", arcs}});
    }
    emit(out, {{"stack", stack_to_json(st)}, {"identity", which}, {"field", field_to_json(k)}, {"sectors", per_sector}},
         ok);
  });
}

}  // extern "C"
