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

// Stringy Hodge-Deligne invariants of cyclic quotient singularities, computed
// three ways: from twisted sectors, from a log resolution, and by counting
// jets of a hypersurface model over finite fields.

#ifndef STRINGY_STRINGY_HPP
#define STRINGY_STRINGY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stringy/coeff_ring.hpp"
#include "stringy/quotient_stack.hpp"

namespace stringy {

/// L^{dim X} times the weighted integral over twisted arcs, with index m.
StringyPolynomial stringy_via_sectors(const CyclicQuotientStack& stack);

struct Stratum {
  std::vector<int> subset;  // sorted 0-based divisor indices; empty for the complement of the exceptional locus
  StringyPolynomial e;      // E-polynomial of the open stratum
};

struct ResolutionData {
  int m = 1;
  std::vector<Rational> discrepancies;
  std::vector<Stratum> strata;
  std::string provenance;

  /// Throws not_log_terminal for a_i <= -1 and invalid_argument for
  /// non-integral m(a_i + 1), bad subsets or repeated strata.
  void validate() const;
};

/// Sum over strata of E(E_I) times prod_{i in I} (L - 1)/(L^{a_i + 1} - 1).
/// With require_polynomial a surviving denominator raises not_polynomial.
StringyPolynomial stringy_via_batyrev(const ResolutionData& data, bool require_polynomial = false);

/// Continued fraction N/q = b_1 - 1/(b_2 - ...), 0 < q < N, gcd(N, q) = 1.
std::vector<int> hirzebruch_jung(int N, int q);

/// Minimal resolution of A^2/mu_N for an isolated singularity (both weights
/// units mod N), with the chain of rational curves and its discrepancies.
/// Returns nothing for any other stack.
std::optional<ResolutionData> builtin_resolution(const CyclicQuotientStack& stack);

/// True when some non-identity element fixes a hyperplane.
bool has_pseudo_reflections(const CyclicQuotientStack& stack);

/// Number of jets mod t^{M+1} on xy = z^N, keyed by the order e <= M of the
/// Jacobian ideal (y, x, N z^{N-1}). Counted in closed form over the t-adic
/// valuation classes of z and x; valid for any q prime to N.
std::map<int, Integer> hypersurface_jet_counts(int N, long q, int M);

/// The same table by enumerating every triple over F_p (p prime, guarded).
std::map<int, Integer> enumerate_hypersurface_jets(int N, long p, int M);

struct GorensteinOracleResult {
  long q = 0;
  int n_max = 0;
  int e_max = 0;
  std::vector<int> levels;             // jet level used for each e
  std::vector<Rational> y_terms;       // q^e mu_Y(ord = e) at levels[e]
  std::vector<Rational> y_terms_prev;  // the same at levels[e] - 1
  std::vector<Rational> x_terms;       // matching twisted-arc contribution
  Rational partial;                    // sum of y_terms
  Rational tail;                       // twisted-arc mass with ord > e_max
  Rational target;                     // integrate_weight at L = q
  bool stabilized = false;
  bool terms_agree = false;
  bool total_agrees = false;

  bool ok() const { return stabilized && terms_agree && total_agrees; }
};

/// Estimates the Gorenstein measure of the arc space of the hypersurface model
/// of [A^2/mu_N](w, -w) by jet counts over F_q, certifies the truncation with
/// the twisted-arc tail past e_max, and compares with the sector formula.
GorensteinOracleResult gorenstein_measure_oracle(const CyclicQuotientStack& stack, long q, int n_max, int e_max);

/// The first count primes congruent to 1 mod N.
std::vector<long> primes_one_mod(int N, int count);

enum class CheckStatus { passed, failed, skipped };
std::string to_string(CheckStatus s);

struct StringyReport {
  std::string stack_name;
  StringyPolynomial e_str_sector_formula;
  std::optional<StringyPolynomial> e_str_batyrev;
  std::vector<GorensteinOracleResult> e_str_pointcount;
  std::optional<HodgeTable> hpq;
  CheckStatus batyrev_agreement = CheckStatus::skipped;
  CheckStatus pointcount_agreement = CheckStatus::skipped;
  std::vector<std::string> notes;

  bool all_agree() const {
    return batyrev_agreement != CheckStatus::failed && pointcount_agreement != CheckStatus::failed;
  }
};

struct CompareOptions {
  std::vector<long> qs;  // empty: the first three primes == 1 mod N
  int n_max = 3;
  int e_max = 3;
};

/// Runs the three pipelines concurrently. A supplied resolution replaces the
/// built-in one.
StringyReport compare_all(const CyclicQuotientStack& stack, const ResolutionData* resolution = nullptr,
                          const CompareOptions& options = {});

}  // namespace stringy

#endif  // STRINGY_STRINGY_HPP
