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

#include "stringy/graded_smith.hpp"

#include <algorithm>
#include <cassert>

#include "stringy/error.hpp"

namespace stringy {

int mod_floor(long x, long m) {
  long r = x % m;
  if (r < 0) r += m;
  return static_cast<int>(r);
}

// ------------------------------------------------------------ GradedMatrix

GradedMatrix::GradedMatrix(Field field, int ell, int precision, std::vector<int> row_degrees,
                           std::vector<int> col_degrees)
    : field_(field),
      ell_(ell),
      precision_(precision),
      row_degrees_(std::move(row_degrees)),
      col_degrees_(std::move(col_degrees)) {
  if (ell < 1) throw Error(ErrorCode::invalid_argument, "grading modulus ell must be >= 1");
  if (precision < 1) throw Error(ErrorCode::invalid_argument, "precision must be >= 1");
  for (auto& d : row_degrees_) d = mod_floor(d, ell);
  for (auto& d : col_degrees_) d = mod_floor(d, ell);
  entries_.assign(row_degrees_.size() * col_degrees_.size(), trunc::zero(precision));
}

GradedMatrix GradedMatrix::identity(Field field, int ell, int precision, const std::vector<int>& degrees) {
  GradedMatrix m(field, ell, precision, degrees, degrees);
  for (int i = 0; i < m.rows(); ++i) m.at(i, i)[0] = 1;
  return m;
}

void GradedMatrix::set(int i, int j, const std::vector<Rational>& coeffs) {
  TruncPoly& e = at(i, j);
  e = trunc::zero(precision_);
  for (size_t k = 0; k < coeffs.size() && k < e.size(); ++k) e[k] = field_.reduce(coeffs[k]);
}

bool GradedMatrix::is_homogeneous() const {
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) {
      const int want = mod_floor(row_degrees_[static_cast<size_t>(i)] - col_degrees_[static_cast<size_t>(j)], ell_);
      const TruncPoly& e = at(i, j);
      for (int v = 0; v < precision_; ++v) {
        if (e[static_cast<size_t>(v)] != 0 && mod_floor(v, ell_) != want) return false;
      }
    }
  }
  return true;
}

void GradedMatrix::validate() const {
  for (int i = 0; i < rows(); ++i) {
    for (int j = 0; j < cols(); ++j) {
      const int want = mod_floor(row_degrees_[static_cast<size_t>(i)] - col_degrees_[static_cast<size_t>(j)], ell_);
      const TruncPoly& e = at(i, j);
      for (int v = 0; v < precision_; ++v) {
        if (e[static_cast<size_t>(v)] != 0 && mod_floor(v, ell_) != want) {
          throw Error(ErrorCode::invalid_argument,
                      "entry (" + std::to_string(i) + ", " + std::to_string(j) + ") has a t^" + std::to_string(v) +
                          " term but row/column degrees require exponents = " + std::to_string(want) + " mod " +
                          std::to_string(ell_));
        }
      }
    }
  }
}

void GradedMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols(); ++j) std::swap(at(a, j), at(b, j));
  std::swap(row_degrees_[static_cast<size_t>(a)], row_degrees_[static_cast<size_t>(b)]);
}

void GradedMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows(); ++i) std::swap(at(i, a), at(i, b));
  std::swap(col_degrees_[static_cast<size_t>(a)], col_degrees_[static_cast<size_t>(b)]);
}

GradedMatrix operator*(const GradedMatrix& a, const GradedMatrix& b) {
  if (!(a.field_ == b.field_) || a.ell_ != b.ell_ || a.precision_ != b.precision_) {
    throw Error(ErrorCode::invalid_argument, "matrix product over mismatched rings");
  }
  if (a.cols() != b.rows() || a.col_degrees_ != b.row_degrees_) {
    throw Error(ErrorCode::invalid_argument, "matrix product with mismatched inner graded basis");
  }
  GradedMatrix out(a.field_, a.ell_, a.precision_, a.row_degrees_, b.col_degrees_);
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      TruncPoly acc = trunc::zero(a.precision_);
      for (int k = 0; k < a.cols(); ++k) {
        if (trunc::is_zero(a.at(i, k)) || trunc::is_zero(b.at(k, j))) continue;
        acc = trunc::add(a.field_, acc, trunc::mul(a.field_, a.at(i, k), b.at(k, j)));
      }
      out.at(i, j) = std::move(acc);
    }
  }
  return out;
}

bool operator==(const GradedMatrix& a, const GradedMatrix& b) {
  return a.field_ == b.field_ && a.ell_ == b.ell_ && a.precision_ == b.precision_ &&
         a.row_degrees_ == b.row_degrees_ && a.col_degrees_ == b.col_degrees_ && a.entries_ == b.entries_;
}

// ------------------------------------------------------------ Smith form

std::vector<Pivot> SmithResult::sorted_pivots() const {
  std::vector<Pivot> p = pivots;
  std::sort(p.begin(), p.end());
  return p;
}

SmithResult graded_smith(const GradedMatrix& a, bool require_certified) {
  a.validate();
  const Field& k = a.field();
  const int P = a.precision();
  GradedMatrix w = a;
  GradedMatrix u = GradedMatrix::identity(k, a.ell(), P, a.row_degrees());
  GradedMatrix v = GradedMatrix::identity(k, a.ell(), P, a.col_degrees());
  std::vector<Pivot> pivots;

  const int n = std::min(a.rows(), a.cols());
  int step = 0;
  for (; step < n; ++step) {
    // Minimal valuation over the trailing block; ties go to the smallest (row, col).
    int best_v = -1, bi = -1, bj = -1;
    for (int i = step; i < w.rows(); ++i) {
      for (int j = step; j < w.cols(); ++j) {
        int val = trunc::valuation(w.at(i, j));
        if (val >= 0 && (best_v < 0 || val < best_v)) {
          best_v = val;
          bi = i;
          bj = j;
        }
      }
    }
    if (best_v < 0) break;

    w.swap_rows(step, bi);
    u.swap_rows(step, bi);
    w.swap_cols(step, bj);
    v.swap_cols(step, bj);

    // Normalize the pivot to exactly t^v.
    TruncPoly unit_inv = trunc::inverse(k, trunc::shift_down(w.at(step, step), best_v));
    for (int j = 0; j < w.cols(); ++j) w.at(step, j) = trunc::mul(k, w.at(step, j), unit_inv);
    for (int j = 0; j < u.cols(); ++j) u.at(step, j) = trunc::mul(k, u.at(step, j), unit_inv);
    w.at(step, step) = trunc::monomial(k, 1, best_v, P);

    // Clear the pivot column with row operations.
    for (int i = 0; i < w.rows(); ++i) {
      if (i == step || trunc::is_zero(w.at(i, step))) continue;
      TruncPoly f = trunc::shift_down(w.at(i, step), best_v);
      for (int j = 0; j < w.cols(); ++j) {
        if (trunc::is_zero(w.at(step, j))) continue;
        // f is only known mod t^{P-v}, but W(step, j) has valuation >= v, so the
        // product is exact mod t^P.
        w.at(i, j) = trunc::sub(k, w.at(i, j), trunc::mul(k, f, w.at(step, j)));
      }
      for (int j = 0; j < u.cols(); ++j) {
        if (trunc::is_zero(u.at(step, j))) continue;
        u.at(i, j) = trunc::sub(k, u.at(i, j), trunc::mul(k, f, u.at(step, j)));
      }
      assert(trunc::is_zero(w.at(i, step)));
    }
    // Clear the pivot row with column operations.
    for (int j = 0; j < w.cols(); ++j) {
      if (j == step || trunc::is_zero(w.at(step, j))) continue;
      TruncPoly g = trunc::shift_down(w.at(step, j), best_v);
      w.at(step, j) = trunc::zero(P);
      for (int i = 0; i < v.rows(); ++i) {
        if (trunc::is_zero(v.at(i, step))) continue;
        v.at(i, j) = trunc::sub(k, v.at(i, j), trunc::mul(k, v.at(i, step), g));
      }
    }
    assert(w.is_homogeneous());
    pivots.push_back({best_v, w.row_degrees()[static_cast<size_t>(step)], w.col_degrees()[static_cast<size_t>(step)]});
  }

  SmithResult r{pivots, u, v, w, P, a.rows() - step, a.cols() - step};
  if (require_certified && !r.certified()) {
    throw InsufficientPrecision(P + 1, "graded Smith form: a " + std::to_string(r.unresolved_rows) + "x" +
                                           std::to_string(r.unresolved_cols) + " block vanishes to precision " +
                                           std::to_string(P));
  }
  return r;
}

bool constant_term_invertible(const GradedMatrix& m) {
  if (m.rows() != m.cols()) return false;
  const Field& k = m.field();
  const int n = m.rows();
  std::vector<std::vector<Rational>> c(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j)[0];
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i) {
      if (c[static_cast<size_t>(i)][static_cast<size_t>(col)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) return false;
    std::swap(c[static_cast<size_t>(piv)], c[static_cast<size_t>(col)]);
    Rational inv = k.inv(c[static_cast<size_t>(col)][static_cast<size_t>(col)]);
    for (int i = col + 1; i < n; ++i) {
      Rational f = k.mul(c[static_cast<size_t>(i)][static_cast<size_t>(col)], inv);
      if (f == 0) continue;
      for (int j = col; j < n; ++j) {
        auto& x = c[static_cast<size_t>(i)][static_cast<size_t>(j)];
        x = k.sub(x, k.mul(f, c[static_cast<size_t>(col)][static_cast<size_t>(j)]));
      }
    }
  }
  return true;
}

bool verify_smith_certificate(const GradedMatrix& a, const SmithResult& r) {
  if (!r.U.is_homogeneous() || !r.V.is_homogeneous() || !r.D.is_homogeneous()) return false;
  if (!constant_term_invertible(r.U) || !constant_term_invertible(r.V)) return false;
  // D must be diagonal with the recorded pivots and zero elsewhere.
  for (int i = 0; i < r.D.rows(); ++i) {
    for (int j = 0; j < r.D.cols(); ++j) {
      const TruncPoly& e = r.D.at(i, j);
      if (i == j && i < static_cast<int>(r.pivots.size())) {
        if (e != trunc::monomial(a.field(), 1, r.pivots[static_cast<size_t>(i)].exponent, a.precision())) return false;
      } else if (!trunc::is_zero(e)) {
        return false;
      }
    }
  }
  return r.U * a * r.V == r.D;
}

// ------------------------------------------------------- decompositions

void GradedModuleDecomp::canonicalize() {
  for (auto& a : free_shifts) a = mod_floor(a, ell);
  for (auto& [n, b] : torsion) b = mod_floor(b, ell);
  std::sort(free_shifts.begin(), free_shifts.end());
  std::sort(torsion.begin(), torsion.end());
}

namespace {

// #{ k in [0, len) : gen + k == d mod ell }
long count_degree(int gen, long len, int d, int ell) {
  if (len <= 0) return 0;
  long first = mod_floor(static_cast<long>(d) - gen, ell);
  if (first >= len) return 0;
  return 1 + (len - 1 - first) / ell;
}

}  // namespace

long GradedModuleDecomp::graded_dimension(int d) const {
  long total = 0;
  for (int a : free_shifts) total += count_degree(a, precision, d, ell);
  for (const auto& [n, b] : torsion) total += count_degree(b, n, d, ell);
  return total;
}

long GradedModuleDecomp::total_length_torsion() const {
  long total = 0;
  for (const auto& [n, b] : torsion) total += n;
  return total;
}

GradedModuleDecomp cokernel_from_smith(const SmithResult& r, int ell, int precision) {
  GradedModuleDecomp out;
  out.ell = ell;
  out.precision = precision;
  for (const auto& p : r.pivots) {
    if (p.exponent > 0) out.torsion.emplace_back(p.exponent, p.col_degree);
  }
  for (int j = static_cast<int>(r.pivots.size()); j < r.D.cols(); ++j) {
    out.free_shifts.push_back(r.D.col_degrees()[static_cast<size_t>(j)]);
  }
  out.canonicalize();
  return out;
}

GradedModuleDecomp module_decomposition(const GradedMatrix& presentation) {
  SmithResult r = graded_smith(presentation);
  return cokernel_from_smith(r, presentation.ell(), presentation.precision());
}

TwoTermCohomology two_term_cohomology(const GradedMatrix& alpha) {
  SmithResult r = graded_smith(alpha);
  const int P = alpha.precision();
  const int ell = alpha.ell();
  TwoTermCohomology out;
  out.h1 = cokernel_from_smith(r, ell, P);
  // x alpha = 0  <=>  y D = 0 for y = x U^{-1}. A pivot t^v with 0 < v kills
  // y_k exactly on t^{P-v} R, a copy of R/t^v generated in degree deg + P - v.
  out.h0.ell = ell;
  out.h0.precision = P;
  for (const auto& p : r.pivots) {
    if (p.exponent > 0) out.h0.torsion.emplace_back(p.exponent, mod_floor(p.row_degree + P - p.exponent, ell));
  }
  for (int i = static_cast<int>(r.pivots.size()); i < r.D.rows(); ++i) {
    out.h0.free_shifts.push_back(r.D.row_degrees()[static_cast<size_t>(i)]);
  }
  out.h0.canonicalize();
  return out;
}

long h0_dim_closed_fiber(const GradedModuleDecomp& decomp) {
  const int ell = decomp.ell;
  if (!decomp.free_shifts.empty() && decomp.precision != ell) {
    throw Error(ErrorCode::invalid_argument,
                "closed-fiber sheaf must be a module over K[s]/(s^ell): free summands need precision == ell");
  }
  for (const auto& [n, b] : decomp.torsion) {
    if (n != ell) {
      throw Error(ErrorCode::invalid_argument,
                  "closed-fiber sheaf is not locally free: summand of length " + std::to_string(n) +
                      " != ell = " + std::to_string(ell));
    }
  }
  return decomp.graded_dimension(0);
}

}  // namespace stringy
