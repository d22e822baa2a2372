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

#include "stringy/quotient_stack.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

#include "stringy/error.hpp"

namespace stringy {

namespace {

bool dominated(const ExponentVector& small, const ExponentVector& big) {
  for (size_t i = 0; i < small.size(); ++i)
    if (small[i] > big[i]) return false;
  return true;
}

// Visits every exponent vector of length n with total degree exactly d.
template <class F>
void for_each_of_degree(int n, int d, ExponentVector& cur, int pos, F&& f) {
  if (pos == n - 1) {
    cur[static_cast<size_t>(pos)] = d;
    f(cur);
    return;
  }
  for (int x = d; x >= 0; --x) {
    cur[static_cast<size_t>(pos)] = x;
    for_each_of_degree(n, d - x, cur, pos + 1, f);
  }
}

}  // namespace

CyclicQuotientStack CyclicQuotientStack::mu(int N, std::vector<int> weights) {
  if (N < 1) throw Error(ErrorCode::invalid_argument, "mu_N needs N >= 1");
  if (weights.empty()) throw Error(ErrorCode::invalid_argument, "at least one coordinate is required");
  int g = N;
  for (int w : weights) g = std::gcd(g, w);
  if (g != 1) {
    throw Error(ErrorCode::invalid_argument,
                "mu_" + std::to_string(N) + " action is not faithful: gcd(N, weights) = " + std::to_string(g));
  }
  return CyclicQuotientStack(GroupKind::mu, N, std::move(weights));
}

CyclicQuotientStack CyclicQuotientStack::gm(std::vector<int> weights) {
  if (weights.empty()) throw Error(ErrorCode::invalid_argument, "at least one coordinate is required");
  if (std::all_of(weights.begin(), weights.end(), [](int w) { return w == 0; })) {
    throw Error(ErrorCode::invalid_argument, "G_m weights are all zero");
  }
  return CyclicQuotientStack(GroupKind::gm, 0, std::move(weights));
}

int CyclicQuotientStack::gorenstein_index() const {
  if (!is_mu()) throw Error(ErrorCode::unsupported, "Gorenstein index is only defined here for mu_N quotients");
  long s = 0;
  for (int w : weights_) s += w;
  for (int m = 1;; ++m)
    if ((static_cast<long>(m) * s) % order_ == 0) return m;
}

std::string CyclicQuotientStack::name() const {
  std::string out = "[A^" + std::to_string(n()) + "/" + (is_mu() ? "mu_" + std::to_string(order_) : "Gm") + "](";
  for (size_t i = 0; i < weights_.size(); ++i) out += (i ? "," : "") + std::to_string(weights_[i]);
  return out + ")";
}

std::vector<ExponentVector> invariant_generators(const CyclicQuotientStack& stack, int degree_bound) {
  if (!stack.is_mu()) throw Error(ErrorCode::unsupported, "the good moduli space is only implemented for mu_N quotients");
  const int N = stack.order(), n = stack.n();
  if (degree_bound < N) throw Error(ErrorCode::invalid_argument, "degree bound must be at least N");
  std::vector<ExponentVector> basis;
  ExponentVector cur(static_cast<size_t>(n), 0);
  for (int d = 1; d <= degree_bound; ++d) {
    std::vector<ExponentVector> layer;
    for_each_of_degree(n, d, cur, 0, [&](const ExponentVector& e) {
      long s = 0;
      for (int i = 0; i < n; ++i) s += static_cast<long>(stack.weights()[static_cast<size_t>(i)]) * e[static_cast<size_t>(i)];
      if (s % N != 0) return;
      // A smaller invariant below e splits it as a sum of two invariants.
      for (const auto& b : basis)
        if (dominated(b, e)) return;
      layer.push_back(e);
    });
    basis.insert(basis.end(), layer.begin(), layer.end());  // already lex-descending within a degree
  }
  return basis;
}

std::vector<ExponentVector> invariant_generators(const CyclicQuotientStack& stack) {
  return invariant_generators(stack, stack.order() * stack.n());
}

std::vector<Rational> AffineModelY::generator_values(const Field& k, const std::vector<Rational>& x) const {
  std::vector<Rational> out;
  out.reserve(generators.size());
  for (const auto& e : generators) {
    out.push_back(MultiPoly::monomial(static_cast<int>(e.size()), e).eval(k, x));
  }
  return out;
}

namespace {

std::vector<BinomialRelation> quadratic_relations(const std::vector<ExponentVector>& gens) {
  const size_t g = gens.size();
  std::vector<std::pair<ExponentVector, ExponentVector>> products;  // (sum, generator-exponent vector)
  for (size_t i = 0; i < g; ++i) {
    for (size_t j = i; j < g; ++j) {
      ExponentVector sum = gens[i];
      for (size_t c = 0; c < sum.size(); ++c) sum[c] += gens[j][c];
      ExponentVector which(g, 0);
      which[i] += 1;
      which[j] += 1;
      products.emplace_back(sum, which);
    }
  }
  std::vector<BinomialRelation> out;
  for (size_t a = 0; a < products.size(); ++a)
    for (size_t b = a + 1; b < products.size(); ++b)
      if (products[a].first == products[b].first) out.push_back({products[a].second, products[b].second});
  return out;
}

bool is_a_surface_case(const CyclicQuotientStack& s) {
  if (!s.is_mu() || s.n() != 2 || s.order() < 2) return false;
  const int N = s.order(), w1 = s.weights()[0], w2 = s.weights()[1];
  return ((static_cast<long>(w1) + w2) % N == 0) && std::gcd(N, std::abs(w1)) == 1;
}

}  // namespace

std::optional<AffineModelY> hypersurface_model(const CyclicQuotientStack& stack) {
  if (!stack.is_mu()) throw Error(ErrorCode::unsupported, "the good moduli space is only implemented for mu_N quotients");
  if (!is_a_surface_case(stack)) return std::nullopt;
  const int N = stack.order();
  AffineModelY y;
  y.generators = {{N, 0}, {0, N}, {1, 1}};
  y.variable_names = {"x", "y", "z"};
  y.relations = quadratic_relations(y.generators);
  MultiPoly x = MultiPoly::variable(3, 0), yy = MultiPoly::variable(3, 1), z = MultiPoly::variable(3, 2);
  MultiPoly f = x * yy - z.pow(N);
  y.hypersurface = f;
  for (int i = 0; i < 3; ++i) y.jacobian_ideal.push_back(f.derivative(i));
  // (y, x, -N z^{N-1}); the sign of a generator does not change the ideal.
  y.jacobian_ideal[2] = MultiPoly::constant(3, 0) - y.jacobian_ideal[2];
  return y;
}

AffineModelY affine_model(const CyclicQuotientStack& stack) {
  if (auto h = hypersurface_model(stack)) return *h;
  AffineModelY y;
  y.generators = invariant_generators(stack);
  for (size_t i = 0; i < y.generators.size(); ++i) y.variable_names.push_back("g" + std::to_string(i + 1));
  y.relations = quadratic_relations(y.generators);
  return y;
}

}  // namespace stringy
