#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "doctest.h"
#include "stringy/error.hpp"
#include "stringy/json_io.hpp"
#include "stringy/motivic.hpp"
#include "stringy/stringy.hpp"

using namespace stringy;

namespace {

StringyPolynomial L(const Rational& k, int m = 1) { return hd_L_power(k, m); }
StringyPolynomial C(long c, int m = 1) { return StringyPolynomial::constant(m, c); }

}  // namespace

TEST_CASE("sector formula examples") {
  CHECK(stringy_via_sectors(CyclicQuotientStack::mu(2, {1, 1})) == L(2) + L(1));
  CHECK(stringy_via_sectors(CyclicQuotientStack::mu(1, {0, 0, 0})) == L(3));
  for (int N = 2; N <= 7; ++N)
    CHECK(stringy_via_sectors(CyclicQuotientStack::mu(N, {1, N - 1})) == L(2) + C(N - 1) * L(1));
  CHECK(stringy_via_sectors(CyclicQuotientStack::mu(3, {1, 1})) ==
        L(2, 3) + L(Rational(4, 3), 3) + L(Rational(2, 3), 3));
}

TEST_CASE("Hirzebruch-Jung continued fractions") {
  CHECK(hirzebruch_jung(2, 1) == std::vector<int>{2});
  CHECK(hirzebruch_jung(5, 4) == std::vector<int>{2, 2, 2, 2});
  CHECK(hirzebruch_jung(3, 1) == std::vector<int>{3});
  CHECK(hirzebruch_jung(7, 3) == std::vector<int>{3, 2, 2});
  CHECK(hirzebruch_jung(5, 2) == std::vector<int>{3, 2});
  CHECK_THROWS_AS(hirzebruch_jung(4, 2), Error);
}

TEST_CASE("built-in resolutions") {
  auto a1 = builtin_resolution(CyclicQuotientStack::mu(2, {1, 1}));
  REQUIRE(a1);
  CHECK(a1->discrepancies == std::vector<Rational>{0});
  CHECK(stringy_via_batyrev(*a1, true) == L(2) + L(1));

  auto third = builtin_resolution(CyclicQuotientStack::mu(3, {1, 1}));
  REQUIRE(third);
  CHECK(third->m == 3);
  CHECK(third->discrepancies == std::vector<Rational>{Rational(-1, 3)});
  CHECK(stringy_via_batyrev(*third, true) == L(2, 3) + L(Rational(4, 3), 3) + L(Rational(2, 3), 3));

  for (int N = 2; N <= 5; ++N) {
    auto r = builtin_resolution(CyclicQuotientStack::mu(N, {1, N - 1}));
    REQUIRE(r);
    CHECK(r->discrepancies == std::vector<Rational>(static_cast<size_t>(N - 1), Rational(0)));
    CHECK(stringy_via_batyrev(*r, true) == L(2) + C(N - 1) * L(1));
  }
  CHECK_FALSE(builtin_resolution(CyclicQuotientStack::mu(4, {1, 2})));
  CHECK_FALSE(builtin_resolution(CyclicQuotientStack::mu(3, {1, 1, 1})));
}

TEST_CASE("Batyrev agrees with sectors on every isolated surface quotient with N <= 11") {
  for (int N = 2; N <= 11; ++N)
    for (int q = 1; q < N; ++q) {
      if (std::gcd(N, q) != 1) continue;
      auto stack = CyclicQuotientStack::mu(N, {1, q});
      auto r = builtin_resolution(stack);
      REQUIRE(r);
      CHECK_MESSAGE(stringy_via_batyrev(*r) == stringy_via_sectors(stack), stack.name());
    }
}

TEST_CASE("Batyrev input validation and the smooth case") {
  ResolutionData smooth{1, {}, {{{}, L(2)}}, ""};
  CHECK(stringy_via_batyrev(smooth) == L(2));
  ResolutionData bad{1, {Rational(-1)}, {{{}, L(2)}, {{0}, L(1)}}, ""};
  try {
    stringy_via_batyrev(bad);
    FAIL("expected not_log_terminal");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_log_terminal);
  }
  ResolutionData twice{1, {Rational(0)}, {{{0}, L(1)}, {{0}, C(1)}}, ""};
  CHECK_THROWS_AS(stringy_via_batyrev(twice), Error);
  ResolutionData unknown{1, {Rational(0)}, {{{1}, L(1)}}, ""};
  CHECK_THROWS_AS(stringy_via_batyrev(unknown), Error);
  ResolutionData fractional{1, {Rational(1, 2)}, {{{0}, L(1)}}, ""};
  CHECK_THROWS_AS(stringy_via_batyrev(fractional), Error);
  // A single divisor of discrepancy 1 leaves (L - 1)/(L^2 - 1) = 1/(L + 1).
  ResolutionData rational{1, {Rational(1)}, {{{0}, C(1)}}, ""};
  CHECK_NOTHROW(stringy_via_batyrev(rational));
  try {
    stringy_via_batyrev(rational, true);
    FAIL("expected not_polynomial");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_polynomial);
  }
}

TEST_CASE("splitting strata leaves Batyrev unchanged") {
  std::mt19937_64 rng(17);
  for (auto stack : {CyclicQuotientStack::mu(5, {1, 4}), CyclicQuotientStack::mu(7, {1, 3}),
                     CyclicQuotientStack::mu(3, {1, 1})}) {
    auto base = *builtin_resolution(stack);
    const auto expected = stringy_via_batyrev(base);
    for (int trial = 0; trial < 20; ++trial) {
      ResolutionData split = base;
      std::uniform_int_distribution<size_t> pick(0, split.strata.size() - 1);
      Stratum& s = split.strata[pick(rng)];
      if (s.subset.empty()) continue;
      // Clone one divisor of the stratum and move part of the E-polynomial onto it.
      const int old = s.subset.back();
      const int fresh = static_cast<int>(split.discrepancies.size());
      split.discrepancies.push_back(split.discrepancies[static_cast<size_t>(old)]);
      std::uniform_int_distribution<long> c(-3, 3);
      StringyPolynomial piece = C(c(rng), split.m) + C(c(rng), split.m) * L(1, split.m);
      Stratum moved{s.subset, piece};
      moved.subset.back() = fresh;
      std::sort(moved.subset.begin(), moved.subset.end());
      s.e = s.e - piece;
      split.strata.push_back(moved);
      CHECK(stringy_via_batyrev(split) == expected);
    }
  }
}

TEST_CASE("jet counts: closed form matches enumeration") {
  for (int N = 1; N <= 3; ++N)
    for (long p : {2L, 3L, 5L})
      for (int M = 0; M <= 2; ++M) {
        if (std::gcd(p, static_cast<long>(N)) != 1) continue;
        if (std::pow(p, 3 * (M + 1)) > 2e6) continue;
        CHECK_MESSAGE(hypersurface_jet_counts(N, p, M) == enumerate_hypersurface_jets(N, p, M),
                      "N=" << N << " p=" << p << " M=" << M);
      }
  CHECK_THROWS_AS(enumerate_hypersurface_jets(2, 7, 4), Error);
}

TEST_CASE("smooth surface xy = z has measure 1 at every level") {
  for (long q : {3L, 5L})
    for (int n = 0; n <= 4; ++n) {
      auto c = hypersurface_jet_counts(1, q, n);
      REQUIRE(c.size() == 1);
      Integer qq;
      mpz_ui_pow_ui(qq.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(2 * (n + 1)));
      CHECK(c.at(0) == qq);
    }
}

TEST_CASE("Gorenstein oracle on A1 and A2") {
  for (long q : {3L, 5L, 7L}) {
    auto r = gorenstein_measure_oracle(CyclicQuotientStack::mu(2, {1, 1}), q, 3, 3);
    CHECK(r.stabilized);
    CHECK(r.terms_agree);
    CHECK(r.total_agrees);
    CHECK(r.target == 1 + Rational(1, q));
    CHECK(r.y_terms[0] == 1 - Rational(1, q * q));
    CHECK(r.tail > 0);
  }
  auto a2 = gorenstein_measure_oracle(CyclicQuotientStack::mu(3, {1, 2}), 7, 3, 3);
  CHECK(a2.ok());
  CHECK(a2.target == 1 + Rational(2, 7));
  CHECK_THROWS_AS(gorenstein_measure_oracle(CyclicQuotientStack::mu(3, {1, 1}), 7, 3, 3), Error);
  CHECK_THROWS_AS(gorenstein_measure_oracle(CyclicQuotientStack::mu(2, {1, 1}), 4, 3, 3), Error);
}

TEST_CASE("tail shrinks as e_max grows") {
  auto stack = CyclicQuotientStack::mu(2, {1, 1});
  Rational prev = 2;
  for (int e = 0; e <= 5; ++e) {
    auto r = gorenstein_measure_oracle(stack, 5, 2, e);
    CHECK(r.ok());
    CHECK(r.tail < prev);
    prev = r.tail;
  }
}

TEST_CASE("compare_all") {
  auto a1 = compare_all(CyclicQuotientStack::mu(2, {1, 1}));
  CHECK(a1.all_agree());
  CHECK(a1.batyrev_agreement == CheckStatus::passed);
  CHECK(a1.pointcount_agreement == CheckStatus::passed);
  CHECK(a1.e_str_pointcount.size() == 3);
  REQUIRE(a1.hpq);

  auto a4 = compare_all(CyclicQuotientStack::mu(5, {1, 4}));
  CHECK(a4.all_agree());
  CHECK(a4.e_str_sector_formula == L(2) + C(4) * L(1));

  auto third = compare_all(CyclicQuotientStack::mu(3, {1, 1}));
  CHECK(third.batyrev_agreement == CheckStatus::passed);
  CHECK(third.pointcount_agreement == CheckStatus::skipped);
  CHECK(third.all_agree());

  ResolutionData wrong = *builtin_resolution(CyclicQuotientStack::mu(2, {1, 1}));
  wrong.strata[0].e = wrong.strata[0].e + C(1);
  auto failed = compare_all(CyclicQuotientStack::mu(2, {1, 1}), &wrong, {{3}, 3, 3});
  CHECK(failed.batyrev_agreement == CheckStatus::failed);
  CHECK_FALSE(failed.all_agree());

  auto pseudo = compare_all(CyclicQuotientStack::mu(4, {1, 2}));
  CHECK(pseudo.batyrev_agreement == CheckStatus::skipped);
  CHECK(has_pseudo_reflections(CyclicQuotientStack::mu(4, {1, 2})));
  CHECK_FALSE(has_pseudo_reflections(CyclicQuotientStack::mu(5, {1, 2})));
}

TEST_CASE("resolution and report JSON") {
  auto r = *builtin_resolution(CyclicQuotientStack::mu(3, {1, 1}));
  auto back = resolution_from_json(resolution_to_json(r));
  CHECK(stringy_via_batyrev(back) == stringy_via_batyrev(r));
  auto lin = nlohmann::json::parse(R"({"m":1,"discrepancies":["0"],
      "strata":[{"subset":[],"e":{"L":[-1,0,1]}},{"subset":[0],"e":{"L":[1,1]}}]})");
  CHECK(stringy_via_batyrev(resolution_from_json(lin)) == L(2) + L(1));
  auto bad = nlohmann::json::parse(R"({"m":1,"discrepancies":["-3/2"],"strata":[]})");
  CHECK_THROWS_AS(resolution_from_json(bad), Error);
  auto rep = report_to_json(compare_all(CyclicQuotientStack::mu(2, {1, 1}), nullptr, {{3}, 3, 3}));
  CHECK(rep["agreement"]["all"] == true);
  CHECK(rep["pointcount"][0]["target"] == "4/3");
}
