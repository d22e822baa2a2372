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

// Smith normal form for Z/ell-graded matrices over R = K[t]/(t^P), t of degree 1.
//
// Conventions used throughout the library:
//  * A matrix is a map of graded free modules from the row space to the column
//    space (row vectors, x -> x A). Row i is a basis element of degree
//    row_degrees[i], column j one of degree col_degrees[j].
//  * Homogeneity: every monomial c t^v of entry (i, j) has
//    v == row_degrees[i] - col_degrees[j] (mod ell).
//  * Degrees stored in a GradedModuleDecomp are the degrees of the generators
//    themselves, so R(a) here is the free module generated in degree a.

#ifndef STRINGY_GRADED_SMITH_HPP
#define STRINGY_GRADED_SMITH_HPP

#include <utility>
#include <vector>

#include "stringy/field.hpp"

namespace stringy {

int mod_floor(long x, long m);  // representative in [0, m)

class GradedMatrix {
 public:
  GradedMatrix(Field field, int ell, int precision, std::vector<int> row_degrees, std::vector<int> col_degrees);

  static GradedMatrix identity(Field field, int ell, int precision, const std::vector<int>& degrees);

  const Field& field() const { return field_; }
  int ell() const { return ell_; }
  int precision() const { return precision_; }
  int rows() const { return static_cast<int>(row_degrees_.size()); }
  int cols() const { return static_cast<int>(col_degrees_.size()); }
  const std::vector<int>& row_degrees() const { return row_degrees_; }
  const std::vector<int>& col_degrees() const { return col_degrees_; }

  const TruncPoly& at(int i, int j) const { return entries_[index(i, j)]; }
  TruncPoly& at(int i, int j) { return entries_[index(i, j)]; }
  /// Sets entry (i, j) from arbitrary coefficients (reduced into the field, truncated to P).
  void set(int i, int j, const std::vector<Rational>& coeffs);

  /// validate() throws naming the first offending entry.
  bool is_homogeneous() const;
  void validate() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);

  friend GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b);
  friend bool operator==(const GradedMatrix& a, const GradedMatrix& b);

 private:
  size_t index(int i, int j) const { return static_cast<size_t>(i) * col_degrees_.size() + static_cast<size_t>(j); }
  Field field_;
  int ell_;
  int precision_;
  std::vector<int> row_degrees_;
  std::vector<int> col_degrees_;
  std::vector<TruncPoly> entries_;
};

struct Pivot {
  int exponent;    // v_k: the diagonal entry of D is exactly t^{v_k}
  int row_degree;  // degree of D's row k
  int col_degree;  // degree of D's column k
  friend auto operator<=>(const Pivot&, const Pivot&) = default;
};

struct SmithResult {
  /// Pivot k sits at D(k, k); order is nondecreasing in exponent.
  std::vector<Pivot> pivots;
  GradedMatrix U;  // rows(A) x rows(A), row degrees = D rows, col degrees = A rows
  GradedMatrix V;  // cols(A) x cols(A), row degrees = A cols, col degrees = D cols
  GradedMatrix D;
  int valid_precision;
  /// Size of the trailing block that vanishes to precision: pivots with
  /// exponent >= valid_precision may hide there.
  int unresolved_rows;
  int unresolved_cols;

  bool certified() const { return unresolved_rows == 0 || unresolved_cols == 0; }
  std::vector<Pivot> sorted_pivots() const;
};

/// Graded Smith form U A V = D with the lexicographic (row, column) tie-break
/// among minimal-valuation entries. With require_certified, a nonempty
/// unresolved block raises InsufficientPrecision.
SmithResult graded_smith(const GradedMatrix& a, bool require_certified = false);

/// U A V == D exactly mod t^P, D diagonal with monic t^v pivots, U and V
/// invertible over R (their constant terms are invertible over K).
bool verify_smith_certificate(const GradedMatrix& a, const SmithResult& r);

/// Determinant-free invertibility test of the constant-term matrix.
bool constant_term_invertible(const GradedMatrix& m);

struct GradedModuleDecomp {
  int ell = 1;
  int precision = 1;
  std::vector<int> free_shifts;               // generator degrees of free summands R(a)
  std::vector<std::pair<int, int>> torsion;   // (n, b): R/t^n generated in degree b

  void canonicalize();  // sorts both multisets
  /// dim_K of the degree-d piece, free summands counted over K[t]/(t^P).
  long graded_dimension(int d) const;
  long total_length_torsion() const;
  friend bool operator==(const GradedModuleDecomp&, const GradedModuleDecomp&) = default;
};

/// Cokernel of a presentation whose columns are the generators.
GradedModuleDecomp module_decomposition(const GradedMatrix& presentation);
GradedModuleDecomp cokernel_from_smith(const SmithResult& r, int ell, int precision);

struct TwoTermCohomology {
  GradedModuleDecomp h0;  // kernel of F -> G, over K[t]/(t^P)
  GradedModuleDecomp h1;  // cokernel
};

/// H^0 and H^1 of the two-term complex [F -> G] given by alpha (rows F, columns G).
TwoTermCohomology two_term_cohomology(const GradedMatrix& alpha);

/// dim H^0 (the degree-0 piece) of a sheaf on the truncated twisted disc,
/// given as a module over K[s]/(s^ell) graded by Z/ell; every summand must
/// be a copy of K[s]/(s^ell)(a).
long h0_dim_closed_fiber(const GradedModuleDecomp& decomp);

}  // namespace stringy

#endif  // STRINGY_GRADED_SMITH_HPP
