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

#include "stringy/stringy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <future>
#include <numeric>
#include <set>

#include "stringy/error.hpp"
#include "stringy/graded_smith.hpp"
#include "stringy/motivic.hpp"
#include "stringy/sectors_weights.hpp"

namespace stringy {

namespace {

constexpr int kInf = std::numeric_limits<int>::max();

StringyPolynomial L_pow(long k, int m) { return hd_L_power(Rational(k), m); }
StringyPolynomial one(int m) { return StringyPolynomial::constant(m, 1); }

Integer ipow(long q, long e) {
  Integer out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  return out;
}

Rational rpow(long q, long e) { return e >= 0 ? Rational(ipow(q, e)) : Rational(1) / Rational(ipow(q, -e)); }

int cap(long v, int L) { return v >= L ? kInf : static_cast<int>(v); }

int modinv(int a, int N) {
  for (int x = 1; x < N; ++x)
    if ((static_cast<long>(a) * x) % N == 1) return x;
  throw Error(ErrorCode::invalid_argument, "weight is not a unit");
}

// Equality after moving both sides to a common index.
bool same_value(const StringyPolynomial& a, const StringyPolynomial& b) {
  const int m = std::lcm(a.index(), b.index());
  return a.reindexed(m) == b.reindexed(m);
}

std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const size_t n = b.size();
  for (size_t c = 0; c < n; ++c) {
    size_t piv = c;
    while (piv < n && a[piv][c] == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::invalid_argument, "singular intersection matrix");
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    for (size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      Rational f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  for (size_t i = 0; i < n; ++i) {
    b[i] /= a[i][i];
    b[i].canonicalize();
  }
  return b;
}

}  // namespace

StringyPolynomial stringy_via_sectors(const CyclicQuotientStack& stack) {
  if (!stack.is_mu()) throw Error(ErrorCode::unsupported, "stringy invariants need a mu_N quotient");
  const int m = stack.gorenstein_index();
  return L_pow(stack.dim(), m) * integrate_weight(stack);
}

void ResolutionData::validate() const {
  if (m < 1) throw Error(ErrorCode::invalid_argument, "index m must be positive");
  for (size_t i = 0; i < discrepancies.size(); ++i) {
    const Rational& a = discrepancies[i];
    if (a <= -1)
      throw Error(ErrorCode::not_log_terminal, "divisor " + std::to_string(i) + " has discrepancy " + to_string(a) +
                                                   " <= -1; Y is not log terminal");
    Rational scaled = m * (a + 1);
    scaled.canonicalize();
    if (scaled.get_den() != 1)
      throw Error(ErrorCode::invalid_argument, "m (a + 1) is not integral for divisor " + std::to_string(i));
  }
  std::set<std::vector<int>> seen;
  for (const auto& s : strata) {
    if (!std::is_sorted(s.subset.begin(), s.subset.end()) ||
        std::adjacent_find(s.subset.begin(), s.subset.end()) != s.subset.end())
      throw Error(ErrorCode::invalid_argument, "stratum subsets must be sorted without repeats");
    for (int i : s.subset)
      if (i < 0 || i >= static_cast<int>(discrepancies.size()))
        throw Error(ErrorCode::invalid_argument, "stratum refers to unknown divisor " + std::to_string(i));
    if (!seen.insert(s.subset).second) throw Error(ErrorCode::invalid_argument, "repeated stratum");
    if (m % s.e.index() != 0)
      throw Error(ErrorCode::invalid_argument, "stratum E-polynomial index does not divide m");
  }
}

StringyPolynomial stringy_via_batyrev(const ResolutionData& data, bool require_polynomial) {
  data.validate();
  const int m = data.m;
  StringyPolynomial out(m);
  for (const auto& s : data.strata) {
    StringyPolynomial term = s.e.reindexed(m);
    for (int i : s.subset)
      term = term * StringyPolynomial::from_t(m, batyrev_factor(data.discrepancies[static_cast<size_t>(i)], m));
    out = out + term;
  }
  if (require_polynomial)
    for (const auto& [key, c] : out.terms())
      if (!c.is_polynomial())
        throw Error(ErrorCode::not_polynomial, "E_str has a surviving denominator " + c.den().to_string());
  return out;
}

std::vector<int> hirzebruch_jung(int N, int q) {
  if (N < 2 || q <= 0 || q >= N || std::gcd(N, q) != 1)
    throw Error(ErrorCode::invalid_argument, "continued fraction needs 0 < q < N coprime");
  std::vector<int> b;
  for (int a = N, c = q; c > 0;) {
    const int bi = (a + c - 1) / c;
    b.push_back(bi);
    const int next = bi * c - a;
    a = c;
    c = next;
  }
  return b;
}

bool has_pseudo_reflections(const CyclicQuotientStack& stack) {
  if (!stack.is_mu()) return false;
  const int N = stack.order();
  for (int a = 1; a < N; ++a) {
    int moved = 0;
    for (int w : stack.weights()) moved += mod_floor(static_cast<long>(a) * w, N) != 0;
    if (moved == 1) return true;
  }
  return false;
}

std::optional<ResolutionData> builtin_resolution(const CyclicQuotientStack& stack) {
  if (!stack.is_mu() || stack.n() != 2 || stack.order() < 2) return std::nullopt;
  const int N = stack.order();
  const int w1 = mod_floor(stack.weights()[0], N), w2 = mod_floor(stack.weights()[1], N);
  if (std::gcd(w1, N) != 1 || std::gcd(w2, N) != 1) return std::nullopt;
  const int q = static_cast<int>((static_cast<long>(w2) * modinv(w1, N)) % N);
  const std::vector<int> b = hirzebruch_jung(N, q);
  const size_t r = b.size();

  // K_Z . E_i = b_i - 2 by adjunction, and the pullback of K_Y meets E_i trivially.
  std::vector<std::vector<Rational>> inter(r, std::vector<Rational>(r, Rational(0)));
  std::vector<Rational> rhs(r);
  for (size_t i = 0; i < r; ++i) {
    inter[i][i] = -b[i];
    if (i + 1 < r) inter[i][i + 1] = inter[i + 1][i] = 1;
    rhs[i] = b[i] - 2;
  }

  ResolutionData out;
  out.m = stack.gorenstein_index();
  out.discrepancies = solve(inter, rhs);
  const int m = out.m;
  out.strata.push_back({{}, L_pow(2, m) - one(m)});
  for (size_t i = 0; i < r; ++i) {
    const int neighbours = (i > 0) + (i + 1 < r);
    out.strata.push_back({{static_cast<int>(i)}, L_pow(1, m) + StringyPolynomial::constant(m, 1 - neighbours)});
    if (i + 1 < r) out.strata.push_back({{static_cast<int>(i), static_cast<int>(i) + 1}, one(m)});
  }
  out.provenance = "minimal resolution of 1/" + std::to_string(N) + "(1," + std::to_string(q) +
                   "): chain of rational curves with self-intersections";
  for (int bi : b) out.provenance += " -" + std::to_string(bi);
  return out;
}

std::map<int, Integer> hypersurface_jet_counts(int N, long q, int M) {
  if (N < 1 || M < 0 || q < 2 || std::gcd(q, static_cast<long>(N)) != 1)
    throw Error(ErrorCode::invalid_argument, "jet counts need N >= 1, M >= 0 and q prime to N");
  const int L = M + 1;
  std::map<int, Integer> out;
  auto add = [&](int e, const Integer& c) {
    if (e != kInf) out[e] += c;
  };
  // z ranges over valuation classes vz = 0..M with (q-1) q^{L-vz-1} members, then z = 0.
  for (int vz = 0; vz <= L; ++vz) {
    const bool zero_z = vz == L;
    const Integer cz = zero_z ? Integer(1) : Integer((q - 1) * ipow(q, L - vz - 1));
    const int vg = zero_z ? kInf : cap(static_cast<long>(N) * vz, L);
    const int dz = N == 1 ? 0 : (zero_z ? kInf : cap(static_cast<long>(N - 1) * vz, L));
    // x = t^a u with u a unit: y is fixed mod t^{L-a} and free above.
    for (int a = 0; a < L; ++a) {
      if (vg != kInf && vg < a) continue;
      const Integer cx = (q - 1) * ipow(q, L - a - 1);
      if (vg != kInf) {
        add(std::min({a, vg - a, dz}), cz * cx * ipow(q, a));
        continue;
      }
      for (int jw = 0; jw < a; ++jw)
        add(std::min({a, cap(L - a + jw, L), dz}), cz * cx * (q - 1) * ipow(q, a - jw - 1));
      add(std::min(a, dz), cz * cx);
    }
    if (vg == kInf) {  // x = 0, y arbitrary
      for (int vy = 0; vy < L; ++vy) add(std::min(vy, dz), cz * (q - 1) * ipow(q, L - vy - 1));
      add(dz, cz);
    }
  }
  return out;
}

std::map<int, Integer> enumerate_hypersurface_jets(int N, long p, int M) {
  if (N < 1 || M < 0 || !is_prime_power(p) || std::gcd(p, static_cast<long>(N)) != 1)
    throw Error(ErrorCode::invalid_argument, "enumeration needs N >= 1, M >= 0 and p prime to N");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) throw Error(ErrorCode::invalid_argument, "enumeration needs a prime field");
  const int L = M + 1;
  const long double work = std::pow(static_cast<long double>(p), 3 * L);
  if (work > static_cast<long double>(kEnumerationGuard))
    throw Error(ErrorCode::guard_exceeded, "jet enumeration exceeds 10^7 triples");

  using Jet = std::vector<long>;
  std::vector<Jet> all;
  for (Jet j(static_cast<size_t>(L), 0);;) {
    all.push_back(j);
    int k = 0;
    while (k < L && ++j[static_cast<size_t>(k)] == p) j[static_cast<size_t>(k++)] = 0;
    if (k == L) break;
  }
  auto mul = [&](const Jet& a, const Jet& b) {
    Jet c(static_cast<size_t>(L), 0);
    for (int i = 0; i < L; ++i)
      for (int j = 0; i + j < L; ++j) c[static_cast<size_t>(i + j)] = (c[static_cast<size_t>(i + j)] + a[static_cast<size_t>(i)] * b[static_cast<size_t>(j)]) % p;
    return c;
  };
  auto val = [&](const Jet& a) {
    for (int i = 0; i < L; ++i)
      if (a[static_cast<size_t>(i)] != 0) return i;
    return kInf;
  };
  std::map<int, Integer> out;
  for (const Jet& z : all) {
    Jet zn1(static_cast<size_t>(L), 0);
    zn1[0] = 1;
    for (int i = 0; i + 1 < N; ++i) zn1 = mul(zn1, z);
    const Jet g = mul(zn1, z);
    Jet dz = zn1;
    for (auto& c : dz) c = (c * (N % p)) % p;
    const int vdz = val(dz);
    for (const Jet& x : all) {
      const int vx = val(x);
      for (const Jet& y : all) {
        if (mul(x, y) != g) continue;
        const int e = std::min({vx, val(y), vdz});
        if (e != kInf) out[e] += 1;
      }
    }
  }
  return out;
}

namespace {

// Mass of twisted arcs in one sector whose Jacobian order after omega exceeds e.
// Coordinate i has s-valuation k_i + ell j with probability (1 - 1/q) q^{-j}.
Rational sector_tail(int N, const SectorDatum& s, long q, long e) {
  if (e < 0) return 1;
  const long ell = s.ell, k1 = s.eigen_exponents[0], k2 = s.eigen_exponents[1];
  auto v1 = [&](long j) { return k1 + ell * j; };
  auto v2 = [&](long j) { return k2 + ell * j; };
  auto first_above = [&](long k) {
    long j = 0;
    while (N * (k + ell * j) / ell <= e) ++j;
    return j;
  };
  const long t1 = first_above(k1), t2 = first_above(k2);
  auto c = [&](long j1, long j2) { return (N - 1) * (v1(j1) + v2(j2)) / ell; };
  auto p = [&](long j) { return (1 - Rational(1, q)) * rpow(q, -j); };
  Rational out = rpow(q, -t1 - t2);
  for (long j1 = t1; c(j1, t2) <= e; ++j1)
    for (long j2 = t2; c(j1, j2) <= e; ++j2) out -= p(j1) * p(j2);
  out.canonicalize();
  return out;
}

}  // namespace

GorensteinOracleResult gorenstein_measure_oracle(const CyclicQuotientStack& stack, long q, int n_max, int e_max) {
  if (!stack.is_mu()) throw Error(ErrorCode::unsupported, "the Gorenstein oracle needs a mu_N quotient");
  auto model = hypersurface_model(stack);
  if (!model || stack.gorenstein_index() != 1)
    throw Error(ErrorCode::unsupported, "the Gorenstein oracle needs the hypersurface model xy = z^N");
  const int N = stack.order();
  if (!is_prime_power(q) || (q - 1) % N != 0)
    throw Error(ErrorCode::invalid_argument, "q must be a prime power congruent to 1 mod " + std::to_string(N));
  if (n_max < 1 || e_max < 0) throw Error(ErrorCode::invalid_argument, "need n_max >= 1 and e_max >= 0");

  GorensteinOracleResult r;
  r.q = q;
  r.n_max = n_max;
  r.e_max = e_max;
  std::map<int, std::map<int, Integer>> counts;  // by jet length M
  auto T = [&](int M, int e) -> Rational {
    auto it = counts.find(M);
    if (it == counts.end()) it = counts.emplace(M, hypersurface_jet_counts(N, q, M)).first;
    auto c = it->second.find(e);
    return c == it->second.end() ? Rational(0) : Rational(c->second);
  };
  // An arc's level-n jet with ord = e <= n has exactly q^{3e} extensions to
  // level n + e solving the equation, and any of them lifts to an arc.
  auto term = [&](int n, int e) {
    Rational mu = T(n + e, e) * rpow(q, -3L * e) * rpow(q, -2L * (n + 1));
    Rational out = rpow(q, e) * mu;
    out.canonicalize();
    return out;
  };

  const auto table = weight_table(stack);
  std::vector<Rational> sector_factor;  // q^{-wt}
  for (const auto& s : table) {
    if (s.wt->get_den() != 1) throw Error(ErrorCode::unsupported, "non-integral weight on a Gorenstein stack");
    sector_factor.push_back(rpow(q, -s.wt->get_num().get_si()));
  }
  auto x_side = [&](long e) {
    Rational out = 0;
    for (size_t i = 0; i < table.size(); ++i)
      out += sector_factor[i] * (sector_tail(N, table[i], q, e - 1) - sector_tail(N, table[i], q, e));
    out.canonicalize();
    return out;
  };

  r.stabilized = r.terms_agree = true;
  for (int e = 0; e <= e_max; ++e) {
    const int level = std::max(n_max, e + 1);
    r.levels.push_back(level);
    r.y_terms.push_back(term(level, e));
    r.y_terms_prev.push_back(term(level - 1, e));
    r.x_terms.push_back(x_side(e));
    r.stabilized = r.stabilized && r.y_terms.back() == r.y_terms_prev.back();
    r.terms_agree = r.terms_agree && r.y_terms.back() == r.x_terms.back();
    r.partial += r.y_terms.back();
  }
  for (size_t i = 0; i < table.size(); ++i) r.tail += sector_factor[i] * sector_tail(N, table[i], q, e_max);
  r.partial.canonicalize();
  r.tail.canonicalize();
  r.target = specialize_at_L(integrate_weight(stack), Rational(q));
  Rational total = r.partial + r.tail;
  total.canonicalize();
  r.total_agrees = total == r.target && r.tail >= 0;
  return r;
}

std::vector<long> primes_one_mod(int N, int count) {
  std::vector<long> out;
  for (long p = 2; static_cast<int>(out.size()) < count; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p && prime; ++d) prime = p % d != 0;
    if (prime && (p - 1) % N == 0) out.push_back(p);
  }
  return out;
}

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::passed: return "passed";
    case CheckStatus::failed: return "failed";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

StringyReport compare_all(const CyclicQuotientStack& stack, const ResolutionData* resolution,
                          const CompareOptions& options) {
  if (!stack.is_mu()) throw Error(ErrorCode::unsupported, "compare needs a mu_N quotient");
  StringyReport report;
  report.stack_name = stack.name();

  std::optional<ResolutionData> res = resolution ? std::optional<ResolutionData>(*resolution) : builtin_resolution(stack);
  const bool pointcount = hypersurface_model(stack).has_value() && stack.gorenstein_index() == 1;
  const std::vector<long> qs = options.qs.empty() ? primes_one_mod(stack.order(), 3) : options.qs;

  auto sectors_job = std::async(std::launch::async, [&stack] { return stringy_via_sectors(stack); });
  auto batyrev_job = std::async(std::launch::async, [&res]() -> std::optional<StringyPolynomial> {
    if (!res) return std::nullopt;
    return stringy_via_batyrev(*res);
  });
  auto count_job = std::async(std::launch::async, [&]() {
    std::vector<GorensteinOracleResult> out;
    if (pointcount)
      for (long q : qs) out.push_back(gorenstein_measure_oracle(stack, q, options.n_max, options.e_max));
    return out;
  });
  report.e_str_sector_formula = sectors_job.get();
  report.e_str_batyrev = batyrev_job.get();
  report.e_str_pointcount = count_job.get();

  try {
    report.hpq = extract_hpq(report.e_str_sector_formula);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::not_polynomial) throw;
    report.notes.push_back("warning: E_str is not a polynomial; returned as a reduced rational function");
  }

  if (report.e_str_batyrev) {
    report.batyrev_agreement =
        same_value(*report.e_str_batyrev, report.e_str_sector_formula) ? CheckStatus::passed : CheckStatus::failed;
    if (res && !res->provenance.empty()) report.notes.push_back("resolution: " + res->provenance);
  } else {
    report.notes.push_back("batyrev: skipped, no resolution data for this stack");
  }
  if (pointcount) {
    bool ok = true;
    for (const auto& r : report.e_str_pointcount) ok = ok && r.ok();
    report.pointcount_agreement = ok ? CheckStatus::passed : CheckStatus::failed;
  } else {
    report.notes.push_back("pointcount: skipped, no Gorenstein hypersurface model");
  }
  if (has_pseudo_reflections(stack))
    report.notes.push_back("stack has pseudo-reflections; the sector formula is the invariant of the stack");
  if (report.hpq)
    for (const auto& [pq, h] : *report.hpq)
      if (h < 0) report.notes.push_back("observed a negative stringy Hodge number");
  return report;
}

}  // namespace stringy
