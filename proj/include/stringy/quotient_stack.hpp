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

// Quotient stacks [A^n / G] for diagonal actions of mu_N or G_m, and the
// invariant-theoretic presentation of the good moduli space Y = A^n / mu_N.

#ifndef STRINGY_QUOTIENT_STACK_HPP
#define STRINGY_QUOTIENT_STACK_HPP

#include <optional>
#include <string>
#include <vector>

#include "stringy/multipoly.hpp"

namespace stringy {

enum class GroupKind { mu, gm };

class CyclicQuotientStack {
 public:
  /// mu_N acting with the given weights; the action must be faithful.
  static CyclicQuotientStack mu(int N, std::vector<int> weights);
  /// G_m acting with the given weights, not all zero.
  static CyclicQuotientStack gm(std::vector<int> weights);

  GroupKind group() const { return group_; }
  bool is_mu() const { return group_ == GroupKind::mu; }
  int order() const { return order_; }  // N for mu_N, 0 for G_m
  int n() const { return static_cast<int>(weights_.size()); }
  const std::vector<int>& weights() const { return weights_; }
  int dim() const { return is_mu() ? n() : n() - 1; }
  /// Smallest m >= 1 with m * sum(w) == 0 mod N (mu_N only).
  int gorenstein_index() const;
  /// e.g. "[A^2/mu_2](1,1)".
  std::string name() const;

  friend bool operator==(const CyclicQuotientStack&, const CyclicQuotientStack&) = default;

 private:
  CyclicQuotientStack(GroupKind g, int order, std::vector<int> w) : group_(g), order_(order), weights_(std::move(w)) {}
  GroupKind group_;
  int order_;
  std::vector<int> weights_;
};

/// Hilbert basis of the invariant monoid {e : sum w_i e_i == 0 mod N} among
/// vectors of total degree <= degree_bound, sorted by total degree and then
/// lexicographically descending. Complete once degree_bound >= N * n.
std::vector<ExponentVector> invariant_generators(const CyclicQuotientStack& stack, int degree_bound);
std::vector<ExponentVector> invariant_generators(const CyclicQuotientStack& stack);

/// prod g_i^{lhs_i} = prod g_i^{rhs_i} among the invariant generators g_i.
struct BinomialRelation {
  ExponentVector lhs;
  ExponentVector rhs;
  friend bool operator==(const BinomialRelation&, const BinomialRelation&) = default;
};

struct AffineModelY {
  std::vector<ExponentVector> generators;  // monomials in the coordinates of A^n
  std::vector<std::string> variable_names;  // one per generator
  std::vector<BinomialRelation> relations;
  std::optional<MultiPoly> hypersurface;   // in the generator variables
  std::vector<MultiPoly> jacobian_ideal;   // generators of I_{Y,m}, when known

  /// Evaluates the generator monomials at a point of A^n.
  std::vector<Rational> generator_values(const Field& k, const std::vector<Rational>& x) const;
};

/// Generators and degree-two binomial relations of Y; adds the hypersurface
/// equation and Jacobian ideal when Y is an A_{N-1} surface singularity.
AffineModelY affine_model(const CyclicQuotientStack& stack);

/// The model xy - z^N with Jacobian ideal (y, x, N z^{N-1}) for weights
/// (w, -w) mod N with w a unit; absent otherwise.
std::optional<AffineModelY> hypersurface_model(const CyclicQuotientStack& stack);

}  // namespace stringy

#endif  // STRINGY_QUOTIENT_STACK_HPP
