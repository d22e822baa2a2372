#include <vector>

#include "doctest.h"
#include "stringy/error.hpp"
#include "stringy/motivic.hpp"
#include "stringy/sectors_weights.hpp"

using namespace stringy;

namespace {

std::vector<long> primes_one_mod(int N, int count) {
  std::vector<long> out;
  for (long p = 2; static_cast<int>(out.size()) < count; ++p) {
    bool prime = true;
    for (long d = 2; d * d <= p; ++d) prime = prime && p % d != 0;
    if (prime && (p - 1) % N == 0) out.push_back(p);
  }
  return out;
}

Rational q_power(long q, long e) {
  Rational out = 1;
  for (long i = 0; i < (e < 0 ? -e : e); ++i) out *= q;
  return e < 0 ? 1 / out : out;
}

StringyPolynomial L(long k, int m = 1) { return hd_L_power(Rational(k), m); }

}  // namespace

TEST_CASE("whole-sector volumes are 1") {
  for (auto stack : {CyclicQuotientStack::mu(2, {1, 1}), CyclicQuotientStack::mu(3, {1, 1}),
                     CyclicQuotientStack::mu(5, {1, 2}), CyclicQuotientStack::mu(4, {1, 1, 2})}) {
    const int m = stack.gorenstein_index();
    for (const auto& s : all_sectors(stack)) {
      auto v = sector_volume(stack, s);
      CHECK(v.value == StringyPolynomial::constant(m, 1));
      CHECK(v.level_used == 0);
    }
  }
}

TEST_CASE("one nonzero coefficient on the A1 twisted sector") {
  auto stack = CyclicQuotientStack::mu(2, {1, 1});
  auto s = sector_of(stack, 2, 1);
  auto v = sector_volume(stack, s, {{0, 1, CoeffCondition::nonzero}});
  CHECK(v.value == (L(1) - StringyPolynomial::constant(1, 1)) * L(-1));
  auto deep = sector_volume(stack, s, {{0, 5, CoeffCondition::zero}, {1, 3, CoeffCondition::nonzero}});
  CHECK(deep.level_used == 2);
  CHECK(deep.value == (L(1) - StringyPolynomial::constant(1, 1)) * L(-2));
}

TEST_CASE("constraint validation") {
  auto stack = CyclicQuotientStack::mu(2, {1, 1});
  auto s = sector_of(stack, 2, 1);
  CHECK_THROWS_AS(sector_volume(stack, s, {{0, 2, CoeffCondition::zero}}), Error);  // wrong parity
  CHECK_THROWS_AS(sector_volume(stack, s, {{2, 1, CoeffCondition::zero}}), Error);
  CHECK_THROWS_AS(sector_volume(stack, s, {{0, 1, CoeffCondition::zero}, {0, 1, CoeffCondition::nonzero}}), Error);
  CylinderSpec spec{s, 1, {{0, 5, CoeffCondition::zero}}};
  CHECK_THROWS_AS(spec.validate(), Error);
  CHECK_THROWS_AS(sector_volume(CyclicQuotientStack::gm({1, -1}), s), Error);
}

TEST_CASE("groupoid count examples") {
  auto stack = CyclicQuotientStack::mu(2, {1, 1});
  CHECK(groupoid_count_oracle(stack, sector_of(stack, 2, 1), 1, 3) == 81);
  CHECK(groupoid_count_oracle(stack, sector_of(stack, 1, 0), 0, 9) == 81);  // prime power
  CHECK_THROWS_AS(groupoid_count_oracle(stack, sector_of(stack, 2, 1), 1, 4), Error);  // 4 != 1 mod 2
  CHECK_THROWS_AS(groupoid_count_oracle(stack, sector_of(stack, 2, 1), 1, 6), Error);
  try {
    groupoid_count_oracle(stack, sector_of(stack, 2, 1), 12, 7);
    FAIL("expected guard");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::guard_exceeded);
  }
  SectorDatum empty = sector_of(stack, 2, 1);
  empty.ell = 3;
  CHECK(groupoid_count_oracle(stack, empty, 1, 7) == 0);
}

TEST_CASE("symbolic volumes agree with the groupoid count at the first three primes") {
  for (auto stack : {CyclicQuotientStack::mu(2, {1, 1}), CyclicQuotientStack::mu(3, {1, 2}),
                     CyclicQuotientStack::mu(3, {1, 1})}) {
    const int N = stack.order();
    for (long q : primes_one_mod(N, 3)) {
      for (const auto& s : all_sectors(stack)) {
        std::vector<std::vector<CoefficientConstraint>> cases = {
            {},
            {{0, s.eigen_exponents[0], CoeffCondition::nonzero}},
            {{1, s.eigen_exponents[1], CoeffCondition::zero}, {0, s.eigen_exponents[0] + s.ell, CoeffCondition::nonzero}},
        };
        for (const auto& cond : cases) {
          auto v = sector_volume(stack, s, cond);
          for (int n = v.level_used; n <= v.level_used + 1; ++n) {
            if (q > 13 && n > 1) continue;
            Rational count = groupoid_count_oracle(stack, s, n, q, cond);
            CHECK(specialize_at_L(v.value, q) == count * q_power(q, -static_cast<long>(n + 1) * stack.dim()));
          }
        }
      }
    }
  }
}

TEST_CASE("level ratios equal q^dim") {
  for (int N = 2; N <= 4; ++N) {
    auto stack = CyclicQuotientStack::mu(N, {1, N - 1});
    for (long q : {7L, 13L}) {
      if ((q - 1) % N != 0) continue;
      for (const auto& s : all_sectors(stack))
        for (int n = 0; n <= 2; ++n)
          CHECK(groupoid_count_oracle(stack, s, n + 1, q) / groupoid_count_oracle(stack, s, n, q) ==
                q_power(q, stack.dim()));
    }
  }
}

TEST_CASE("integrate_weight examples") {
  CHECK(integrate_weight(CyclicQuotientStack::mu(2, {1, 1})) == L(0) + L(-1));
  CHECK(integrate_weight(CyclicQuotientStack::mu(1, {0, 0, 0})) == L(0));
  auto third = integrate_weight(CyclicQuotientStack::mu(3, {1, 1}));
  CHECK(third.index() == 3);
  CHECK(L(2, 3) * third ==
        hd_L_power(Rational(2), 3) + hd_L_power(Rational(4, 3), 3) + hd_L_power(Rational(2, 3), 3));
  for (int N = 2; N <= 6; ++N)
    CHECK(L(2) * integrate_weight(CyclicQuotientStack::mu(N, {1, N - 1})) ==
          L(2) + StringyPolynomial::constant(1, N - 1) * L(1));
}

TEST_CASE("thin set decay") {
  auto stack = CyclicQuotientStack::mu(2, {1, 1});
  CHECK_THROWS_AS(thin_set_decay(stack, {}, 3), Error);
  auto rows = thin_set_decay(stack, {0, 1}, 5);
  CHECK(rows.size() == 12);
  for (const auto& r : rows) {
    CHECK(r.volume == L(-2 * (r.level + 1)));
    if (r.level <= 2) {
      Rational count = groupoid_count_oracle(stack, r.sector, r.level, 5, vanishing_constraints(r.sector, {0, 1}, r.level));
      CHECK(specialize_at_L(r.volume, 5) == count * q_power(5, -2 * (r.level + 1)));
    }
  }
  auto line = thin_set_decay(CyclicQuotientStack::mu(3, {1, 1, 1}), {2}, 3);
  for (const auto& r : line) CHECK(r.volume == hd_L_power(Rational(-(r.level + 1)), 1));
}
