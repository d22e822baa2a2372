#include <random>

#include "doctest.h"
#include "stringy/coeff_ring.hpp"
#include "stringy/error.hpp"
#include "stringy/json_io.hpp"

using namespace stringy;

namespace {

IntPoly P(std::vector<long> c) {
  std::vector<Integer> v(c.begin(), c.end());
  return IntPoly(v);
}

RationalFunction T(int k) { return RationalFunction::monomial(k); }

// Schoolbook long division over int64, independent of IntPoly; asserts exactness.
std::vector<long> oracle_divide(std::vector<long> num, const std::vector<long>& den) {
  std::vector<long> q(num.size() - den.size() + 1, 0);
  for (size_t k = q.size(); k-- > 0;) {
    long c = num[k + den.size() - 1] / den.back();
    q[k] = c;
    for (size_t j = 0; j < den.size(); ++j) num[k + j] -= c * den[j];
  }
  for (long r : num) REQUIRE(r == 0);
  return q;
}

StringyPolynomial random_element(std::mt19937_64& rng, int m) {
  std::uniform_int_distribution<int> coeff(-3, 3), expo(0, 3), nterms(0, 3);
  StringyPolynomial x(m);
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<Integer> n(static_cast<size_t>(expo(rng)) + 1);
    for (auto& c : n) c = coeff(rng);
    RationalFunction c(IntPoly(n), IntPoly({Integer(1), Integer(coeff(rng) == 0 ? 0 : 1)}));
    x = x + StringyPolynomial::monomial(m, expo(rng), expo(rng), c);
  }
  return x;
}

}  // namespace

TEST_CASE("rational functions are stored reduced") {
  RationalFunction r(P({-1, 0, 0, 0, 0, 0, 1}), P({-1, 0, 1}));  // (t^6-1)/(t^2-1)
  CHECK(r.is_polynomial());
  CHECK(r.num() == P({1, 0, 1, 0, 1}));
  RationalFunction s(P({2}), P({0, -4}));  // 2/(-4t)
  CHECK(s.num() == P({-1}));
  CHECK(s.den() == P({0, 2}));
  CHECK_THROWS_AS(RationalFunction(P({1}), IntPoly()), Error);
}

TEST_CASE("hd_L_power") {
  auto uv = hd_L_power(1, 1);
  CHECK(uv.terms().size() == 1);
  CHECK(uv.pure_part() == T(1));
  CHECK(uv == StringyPolynomial::monomial(1, 1, 1, RationalFunction::constant(1)));
  CHECK(hd_L_power(0, 3) == StringyPolynomial::constant(3, 1));
  CHECK(hd_L_power(-1, 1).pure_part() == RationalFunction(P({1}), P({0, 1})));
  CHECK_THROWS_AS(hd_L_power(Rational(1, 2), 3), Error);
  CHECK(hd_L_power(Rational(2, 3), 3).pure_part() == T(2));
}

TEST_CASE("batyrev_factor") {
  CHECK(batyrev_factor(0, 1) == RationalFunction::constant(1));
  auto f = batyrev_factor(Rational(-1, 3), 3);
  CHECK(f == RationalFunction(P({-1, 0, 0, 1}), P({-1, 0, 1})));
  // (t^3-1)(t^3+1) / (t^2-1) by the independent divider.
  auto expected = oracle_divide({-1, 0, 0, 0, 0, 0, 1}, {-1, 0, 1});
  CHECK(f * RationalFunction(P({1, 0, 0, 1})) == RationalFunction(P(expected)));
  CHECK(expected == std::vector<long>{1, 0, 1, 0, 1});
  CHECK_THROWS_AS(batyrev_factor(-1, 1), Error);
  CHECK_THROWS_AS(batyrev_factor(Rational(-3, 2), 2), Error);
  CHECK_THROWS_AS(batyrev_factor(Rational(1, 2), 1), Error);
}

TEST_CASE("batyrev_factor times denominator is t^m - 1") {
  for (int m = 1; m <= 6; ++m) {
    for (int k = 1; k <= 12; ++k) {  // m(a+1) = k
      Rational a(k - m, m);
      a.canonicalize();
      auto f = batyrev_factor(a, m);
      RationalFunction den(IntPoly::monomial(1, k) - IntPoly::constant(1));
      CHECK(f * den == RationalFunction(IntPoly::monomial(1, m) - IntPoly::constant(1)));
    }
  }
}

TEST_CASE("specialize_count") {
  auto x = hd_L_power(2, 1) + hd_L_power(1, 1);
  CHECK(specialize_count(x, 3) == 12);
  CHECK(specialize_count(StringyPolynomial::constant(1, 1), 17) == 1);
  auto ratio = StringyPolynomial::from_t(1, RationalFunction(P({-1, 0, 1}), P({-1, 1})));
  CHECK(specialize_count(ratio, 5) == 6);
  auto mixed = StringyPolynomial::monomial(1, 1, 0, RationalFunction::constant(1));
  CHECK_THROWS_AS(specialize_count(mixed, 3), Error);
}

TEST_CASE("extract_hpq") {
  auto a1 = hd_L_power(2, 1) + hd_L_power(1, 1);
  auto t1 = extract_hpq(a1);
  CHECK(t1.size() == 2);
  CHECK(t1.at({2, 2}) == 1);
  CHECK(t1.at({1, 1}) == 1);
  CHECK(extract_hpq(StringyPolynomial(1)).empty());

  auto third = hd_L_power(2, 3) + hd_L_power(Rational(4, 3), 3) + hd_L_power(Rational(2, 3), 3);
  auto t3 = extract_hpq(third);
  CHECK(t3.size() == 3);
  CHECK(t3.at({Rational(4, 3), Rational(4, 3)}) == 1);
  CHECK(t3.at({Rational(2, 3), Rational(2, 3)}) == 1);
  CHECK(third.to_string() == "(uv)^2 + (uv)^(4/3) + (uv)^(2/3)");

  auto off = StringyPolynomial::monomial(1, 1, 0, RationalFunction::constant(2));
  CHECK(extract_hpq(off).at({1, 0}) == -2);

  auto bad = StringyPolynomial::from_t(1, RationalFunction(P({1}), P({-1, 1})));
  CHECK_THROWS_AS(extract_hpq(bad), Error);
}

TEST_CASE("u*v = t^m after canonicalization") {
  for (int m = 1; m <= 4; ++m) {
    auto u = StringyPolynomial::monomial(m, 1, 0, RationalFunction::constant(1));
    auto v = StringyPolynomial::monomial(m, 0, 1, RationalFunction::constant(1));
    CHECK(u * v == StringyPolynomial::from_t(m, T(m)));
  }
}

TEST_CASE("reindexing is explicit") {
  auto x = hd_L_power(1, 1);
  auto y = hd_L_power(Rational(1, 3), 3);
  CHECK_THROWS_AS(x + y, Error);
  CHECK(x.reindexed(3) == hd_L_power(1, 3));
  CHECK((x.reindexed(3) + y).to_string() == "uv + (uv)^(1/3)");
  CHECK_THROWS_AS(y.reindexed(4), Error);
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    int m = 1 + trial % 3;
    auto x = random_element(rng, m), y = random_element(rng, m), z = random_element(rng, m);
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    CHECK(x * StringyPolynomial::constant(m, 1) == x);
    CHECK(x - x == StringyPolynomial(m));
  }
}

TEST_CASE("specialization is multiplicative on pure elements") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coeff(-4, 4), qd(2, 97);
  for (int trial = 0; trial < 200; ++trial) {
    auto mk = [&] {
      std::vector<Integer> n(4), d(2);
      for (auto& c : n) c = coeff(rng);
      d[0] = 1 + std::abs(coeff(rng)) * 100;  // no root in 2..97
      d[1] = 1;
      return StringyPolynomial::from_t(1, RationalFunction(IntPoly(n), IntPoly(d)));
    };
    auto x = mk(), y = mk();
    Rational q = qd(rng);
    CHECK(specialize_count(x * y, q) == specialize_count(x, q) * specialize_count(y, q));
  }
}

TEST_CASE("JSON round trip is the identity") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    auto x = random_element(rng, 1 + trial % 4);
    auto text = stringy_polynomial_to_json(x).dump();
    auto back = stringy_polynomial_from_json(nlohmann::json::parse(text));
    CHECK(back == x);
    CHECK(stringy_polynomial_to_json(back).dump() == text);
  }
  // Coefficients beyond 64 bits survive as strings.
  Integer big("123456789012345678901234567890");
  auto x = StringyPolynomial::constant(2, big);
  auto j = stringy_polynomial_to_json(x);
  CHECK(stringy_polynomial_from_json(j) == x);
  CHECK_THROWS_AS(stringy_polynomial_from_json(nlohmann::json::parse(R"({"m":0,"terms":[]})")), Error);
}
