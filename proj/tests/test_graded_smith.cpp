#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "stringy/error.hpp"
#include "stringy/graded_smith.hpp"

using namespace stringy;

namespace {

std::vector<Rational> Q(std::vector<long> c) { return {c.begin(), c.end()}; }

void check_against_oracle(const GradedMatrix& a) {
  SmithResult r = graded_smith(a);
  REQUIRE(verify_smith_certificate(a, r));
  GradedModuleDecomp coker = cokernel_from_smith(r, a.ell(), a.precision());
  TwoTermCohomology h = two_term_cohomology(a);
  CHECK(h.h1 == coker);
  for (int d = 0; d < a.ell(); ++d) {
    CHECK(coker.graded_dimension(d) == oracle::coker_dim(a, d));
    CHECK(h.h0.graded_dimension(d) == oracle::ker_dim(a, d));
  }
}

}  // namespace

TEST_CASE("single entry t") {
  GradedMatrix a(Field::rationals(), 2, 4, {1}, {0});
  a.set(0, 0, Q({0, 1}));
  auto r = graded_smith(a, true);
  REQUIRE(r.pivots.size() == 1);
  CHECK(r.pivots[0] == Pivot{1, 1, 0});
  CHECK(verify_smith_certificate(a, r));
}

TEST_CASE("zero matrix") {
  GradedMatrix a(Field::prime(5), 3, 5, {0, 1}, {2, 0});
  auto r = graded_smith(a);
  CHECK(r.pivots.empty());
  CHECK(r.U == GradedMatrix::identity(Field::prime(5), 3, 5, {0, 1}));
  CHECK(r.V == GradedMatrix::identity(Field::prime(5), 3, 5, {2, 0}));
  CHECK(r.unresolved_rows == 2);
  CHECK_FALSE(r.certified());
  try {
    graded_smith(a, true);
    FAIL("expected InsufficientPrecision");
  } catch (const InsufficientPrecision& e) {
    CHECK(e.required_precision() == 6);
    CHECK(e.code() == ErrorCode::insufficient_precision);
  }
}

TEST_CASE("two-by-two example: degrees cannot be homogeneous mod 2, ungraded pivots are {1, 1}") {
  // Entries t, t^2 / t^3, t force c1 - c0 to be both 1 and 0 mod 2.
  for (int r0 = 0; r0 < 2; ++r0)
    for (int r1 = 0; r1 < 2; ++r1)
      for (int c0 = 0; c0 < 2; ++c0)
        for (int c1 = 0; c1 < 2; ++c1) {
          GradedMatrix a(Field::prime(5), 2, 8, {r0, r1}, {c0, c1});
          a.set(0, 0, Q({0, 1}));
          a.set(0, 1, Q({0, 0, 1}));
          a.set(1, 0, Q({0, 0, 0, 1}));
          a.set(1, 1, Q({0, 1}));
          CHECK_FALSE(a.is_homogeneous());
          CHECK_THROWS_AS(graded_smith(a), Error);
        }
  GradedMatrix a(Field::prime(5), 1, 8, {0, 0}, {0, 0});
  a.set(0, 0, Q({0, 1}));
  a.set(0, 1, Q({0, 0, 1}));
  a.set(1, 0, Q({0, 0, 0, 1}));
  a.set(1, 1, Q({0, 1}));
  auto r = graded_smith(a, true);
  REQUIRE(r.pivots.size() == 2);
  CHECK(r.pivots[0].exponent == 1);
  CHECK(r.pivots[1].exponent == 1);
  CHECK(verify_smith_certificate(a, r));
  check_against_oracle(a);
  auto m = module_decomposition(a);
  CHECK(m.torsion == std::vector<std::pair<int, int>>{{1, 0}, {1, 0}});
}

TEST_CASE("module decomposition examples") {
  GradedMatrix zero(Field::rationals(), 2, 6, {}, {0, 1});
  auto m = module_decomposition(zero);
  CHECK(m.free_shifts == std::vector<int>{0, 1});
  CHECK(m.torsion.empty());

  GradedMatrix cube(Field::rationals(), 2, 6, {1}, {0});
  cube.set(0, 0, Q({0, 0, 0, 1}));
  auto c = module_decomposition(cube);
  CHECK(c.free_shifts.empty());
  CHECK(c.torsion == std::vector<std::pair<int, int>>{{3, 0}});

  GradedMatrix unit(Field::rationals(), 2, 6, {0}, {0});
  unit.set(0, 0, Q({2, 0, 5}));
  auto u = module_decomposition(unit);
  CHECK(u.free_shifts.empty());
  CHECK(u.torsion.empty());
}

TEST_CASE("random 3x3 over F7, ell = 3, P = 10 matches dense linear algebra") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto a = oracle::random_homogeneous(Field::prime(7), 3, 10, 3, 3, rng);
    check_against_oracle(a);
  }
}

TEST_CASE("two-term cohomology examples") {
  auto id = GradedMatrix::identity(Field::rationals(), 2, 4, {0});
  auto h = two_term_cohomology(id);
  CHECK(h.h0 == GradedModuleDecomp{2, 4, {}, {}});
  CHECK(h.h1 == GradedModuleDecomp{2, 4, {}, {}});

  GradedMatrix z(Field::rationals(), 2, 4, {0, 0}, {1});
  auto hz = two_term_cohomology(z);
  CHECK(hz.h0.free_shifts == std::vector<int>{0, 0});
  CHECK(hz.h1.free_shifts == std::vector<int>{1});

  // Row (s, -s) from F = R(1) to G = R(0)^2: rank-one free kernel, torsion of length one.
  GradedMatrix row(Field::rationals(), 2, 6, {1}, {0, 0});
  row.set(0, 0, Q({0, 1}));
  row.set(0, 1, Q({0, -1}));
  auto hr = two_term_cohomology(row);
  CHECK(hr.h1.free_shifts == std::vector<int>{0});
  CHECK(hr.h1.torsion == std::vector<std::pair<int, int>>{{1, 0}});
  CHECK(hr.h0.torsion == std::vector<std::pair<int, int>>{{1, 0}});
  check_against_oracle(row);
}

TEST_CASE("h0 of the closed fiber") {
  CHECK(h0_dim_closed_fiber(GradedModuleDecomp{3, 3, {}, {{3, 0}}}) == 1);
  CHECK(h0_dim_closed_fiber(GradedModuleDecomp{3, 3, {}, {{3, 2}}}) == 1);
  CHECK(h0_dim_closed_fiber(GradedModuleDecomp{3, 3, {1, 2}, {}}) == 2);
  CHECK_THROWS_AS(h0_dim_closed_fiber(GradedModuleDecomp{3, 3, {}, {{2, 0}}}), Error);
  CHECK_THROWS_AS(h0_dim_closed_fiber(GradedModuleDecomp{3, 5, {0}, {}}), Error);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> deg(0, 4), cnt(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    int r = cnt(rng);
    GradedModuleDecomp d{5, 5, {}, {}};
    long monomials_in_degree_zero = 0;
    for (int i = 0; i < r; ++i) {
      int a = deg(rng);
      d.torsion.emplace_back(5, a);
      for (int k = 0; k < 5; ++k) monomials_in_degree_zero += (a + k) % 5 == 0;
    }
    d.canonicalize();
    CHECK(h0_dim_closed_fiber(d) == r);
    CHECK(monomials_in_degree_zero == r);
  }
}

TEST_CASE("pivots are invariant under graded changes of basis") {
  std::mt19937_64 rng(11);
  for (Field k : {Field::prime(5), Field::rationals()}) {
    for (int size = 1; size <= 4; ++size) {
      for (int trial = 0; trial < 100; ++trial) {
        const int ell = 1 + trial % 4, P = 4 + trial % 5;
        auto a = oracle::random_homogeneous(k, ell, P, size, size + trial % 2, rng);
        auto base = graded_smith(a);
        REQUIRE(verify_smith_certificate(a, base));
        auto q = oracle::random_graded_invertible(k, ell, P, a.row_degrees(), false, rng);
        auto s = oracle::random_graded_invertible(k, ell, P, a.col_degrees(), true, rng);
        auto b = q * a * s;
        CHECK(constant_term_invertible(q));
        CHECK(constant_term_invertible(s));
        auto moved = graded_smith(b);
        REQUIRE(verify_smith_certificate(b, moved));
        CHECK(moved.sorted_pivots() == base.sorted_pivots());
      }
    }
  }
}

TEST_CASE("non-homogeneous input is rejected with a named entry") {
  GradedMatrix a(Field::rationals(), 3, 4, {0}, {0});
  a.set(0, 0, Q({0, 1}));
  CHECK_FALSE(a.is_homogeneous());
  CHECK_THROWS_WITH_AS(graded_smith(a), doctest::Contains("entry (0, 0)"), Error);
}
