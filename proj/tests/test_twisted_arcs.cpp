#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "stringy/error.hpp"
#include "stringy/json_io.hpp"
#include "stringy/twisted_arcs.hpp"

using namespace stringy;

namespace {

std::vector<Rational> Q(std::vector<long> c) { return {c.begin(), c.end()}; }

TwistedArc a1_arc(int P) {
  auto s = CyclicQuotientStack::mu(2, {1, 1});
  TruncPoly x = trunc::zero(P);
  x[1] = 1;
  return TwistedArc(Field::rationals(), sector_of(s, 2, 1), P, {x, x});
}

std::vector<Rational> ages(const std::vector<SectorDatum>& ss) {
  std::vector<Rational> out;
  for (const auto& s : ss) out.push_back(s.age);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("sector enumeration") {
  auto a1 = CyclicQuotientStack::mu(2, {1, 1});
  auto s2 = sectors(a1, 2);
  REQUIRE(s2.size() == 1);
  CHECK(s2[0].a == 1);
  CHECK(s2[0].eigen_exponents == std::vector<int>{1, 1});
  CHECK(s2[0].age == 1);
  CHECK(s2[0].fixed_coords.empty());

  auto one = sectors(CyclicQuotientStack::mu(5, {1, 2}), 1);
  REQUIRE(one.size() == 1);
  CHECK(one[0].age == 0);
  CHECK(one[0].fixed_coords == std::vector<int>{0, 1});

  auto s5 = sectors(CyclicQuotientStack::mu(5, {1, 2}), 5);
  CHECK(s5.size() == 4);
  CHECK(ages(s5) == std::vector<Rational>{Rational(3, 5), Rational(4, 5), Rational(6, 5), Rational(7, 5)});

  CHECK(sectors(CyclicQuotientStack::mu(4, {1, 1}), 3).empty());
  CHECK(sectors(CyclicQuotientStack::mu(6, {1, 5}), 6).size() == 2);
  CHECK(all_sectors(CyclicQuotientStack::mu(6, {1, 5})).size() == 6);

  auto gm = sectors(CyclicQuotientStack::gm({1, -1}), 3);
  REQUIRE(gm.size() == 2);
  CHECK(gm[0].eigen_exponents == std::vector<int>{1, 2});
  CHECK(gm[1].eigen_exponents == std::vector<int>{2, 1});
  CHECK_FALSE(gm[1].collision);
  auto gm2 = sectors(CyclicQuotientStack::gm({2, 4}), 2);
  REQUIRE(gm2.size() == 1);
  CHECK(gm2[0].fixed_coords == std::vector<int>{0, 1});
  auto gm4 = sectors(CyclicQuotientStack::gm({2, 2}), 4);
  REQUIRE(gm4.size() == 2);
  CHECK(gm4[1].collision);
  CHECK_THROWS_AS(sector_of(CyclicQuotientStack::mu(4, {1, 1}), 4, 2), Error);
}

TEST_CASE("age inversion symmetry and permutation equivariance") {
  for (int N = 1; N <= 8; ++N)
    for (int w1 = 1; w1 <= N; ++w1)
      for (int w2 = 0; w2 < N; ++w2) {
        if (std::gcd(std::gcd(N, w1), w2) != 1) continue;
        auto st = CyclicQuotientStack::mu(N, {w1, w2, 1});
        auto sw = CyclicQuotientStack::mu(N, {w2, 1, w1});
        for (const auto& s : all_sectors(st)) {
          auto inv = sector_of(st, s.ell, N - s.a);
          CHECK(s.age + inv.age == s.nonfixed());
          auto p = sector_of(sw, s.ell, s.a);
          CHECK(p.age == s.age);
          CHECK(p.eigen_exponents == std::vector<int>{s.eigen_exponents[1], s.eigen_exponents[2], s.eigen_exponents[0]});
        }
        std::vector<Rational> a, b;
        for (const auto& s : all_sectors(st)) {
          a.push_back(s.age);
          b.push_back(s.nonfixed() - s.age);
        }
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
      }
}

TEST_CASE("twisted arcs enforce the support congruence") {
  auto s = sector_of(CyclicQuotientStack::mu(3, {1, 1}), 3, 1);
  TruncPoly bad = trunc::zero(6);
  bad[2] = 1;
  CHECK_THROWS_AS(TwistedArc(Field::rationals(), s, 6, {bad, trunc::zero(6)}), Error);
  CHECK_THROWS_AS(TwistedArc(Field::rationals(), s, 5, {trunc::zero(5), trunc::zero(5)}), Error);
  TruncPoly good = trunc::zero(6);
  good[1] = 2;
  good[4] = 7;
  TwistedArc arc(Field::prime(7), s, 6, {good, good});
  CHECK(arc.series()[0][4] == 0);  // reduced mod 7
  CHECK(arc.t_precision() == 2);
}

TEST_CASE("omega on the A1 arc") {
  auto st = CyclicQuotientStack::mu(2, {1, 1});
  auto y = *hypersurface_model(st);
  auto w = omega(a1_arc(8), y);
  CHECK(w.t_precision == 4);
  for (const auto& v : w.values) CHECK(v == Q({0, 1, 0, 0}));

  TwistedArc zero(Field::rationals(), sector_of(st, 2, 1), 8, {trunc::zero(8), trunc::zero(8)});
  for (const auto& v : omega(zero, y).values) CHECK(trunc::is_zero(v));

  // Untwisted sector: omega is the quotient map itself.
  TwistedArc u(Field::rationals(), sector_of(st, 1, 0), 3, {Q({1, 2, 0}), Q({0, 1, 1})});
  auto wu = omega(u, y);
  CHECK(wu.values[0] == Q({1, 4, 4}));  // x1^2
  CHECK(wu.values[1] == Q({0, 0, 1}));  // x2^2 mod t^3
  CHECK(wu.values[2] == Q({0, 1, 3}));  // x1 x2
}

TEST_CASE("omega respects truncation") {
  std::mt19937_64 rng(23);
  auto st = CyclicQuotientStack::mu(5, {1, 4});
  auto y = *hypersurface_model(st);
  for (const auto& s : all_sectors(st)) {
    for (int trial = 0; trial < 10; ++trial) {
      auto arc = random_arc(st, s, Field::prime(11), s.ell * 6, rng);
      for (int P = 1; P <= 6; ++P) {
        auto lhs = omega(arc.truncated(s.ell * P), y);
        auto rhs = truncate(omega(arc, y), P);
        CHECK(lhs.values == rhs.values);
      }
      // The image satisfies the hypersurface equation.
      auto w = omega(arc, y);
      CHECK(trunc::is_zero(y.hypersurface->eval_series(Field::prime(11), w.values)));
    }
  }
}

TEST_CASE("order functions") {
  auto st = CyclicQuotientStack::mu(2, {1, 1});
  auto y = *hypersurface_model(st);
  auto w = omega(a1_arc(8), y);
  CHECK(ord_ideal(w, y.jacobian_ideal) == Order{true, 1});
  CHECK(ord_ideal(w, {MultiPoly::constant(3, 1)}) == Order{true, 0});

  TwistedArc xzero(Field::rationals(), sector_of(st, 2, 1), 12, {trunc::zero(12), Q({0, 1})});
  auto o = ord_ideal(xzero, {MultiPoly::variable(2, 0)});
  CHECK_FALSE(o.finite);
  CHECK(o.value == 6);
  CHECK(o.to_string() == ">=6");
  CHECK(ord_ideal(xzero, {MultiPoly::variable(2, 1)}) == Order{true, Rational(1, 2)});

  // Additivity on principal ideals and nonnegativity.
  std::mt19937_64 rng(31);
  auto st3 = CyclicQuotientStack::mu(3, {1, 2});
  for (const auto& s : all_sectors(st3)) {
    for (int trial = 0; trial < 20; ++trial) {
      auto arc = random_arc(st3, s, Field::prime(7), 3 * 8, rng);
      MultiPoly f = MultiPoly::variable(2, 0) + MultiPoly::variable(2, 1).pow(2);
      MultiPoly g = MultiPoly::variable(2, 1) * MultiPoly::variable(2, 0) - MultiPoly::constant(2, 1);
      auto of = ord_ideal(arc, {f}), og = ord_ideal(arc, {g}), ofg = ord_ideal(arc, {f * g});
      CHECK(of.value >= 0);
      if (of.finite && og.finite && of.value + og.value < Rational(arc.s_precision(), arc.ell())) {
        CHECK(ofg == Order{true, of.value + og.value});
      }
    }
  }
}

TEST_CASE("random arcs are reproducible and arc JSON round trips") {
  auto st = CyclicQuotientStack::mu(3, {1, 1});
  auto s = sector_of(st, 3, 2);
  std::mt19937_64 r1(5), r2(5);
  auto a = random_arc(st, s, Field::prime(7), 9, r1);
  auto b = random_arc(st, s, Field::prime(7), 9, r2);
  CHECK(a.series() == b.series());
  auto back = arc_from_json(st, arc_to_json(a));
  CHECK(back.series() == a.series());
  CHECK(back.sector() == a.sector());
  CHECK(back.field() == a.field());
  CHECK_THROWS_AS(arc_from_json(st, nlohmann::json::parse(R"({"sector":{"ell":3,"a":1},"precision":3,"series":[[[1,1]],[[0,1]]]})")),
                  Error);
}
