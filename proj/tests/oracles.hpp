// Test-only brute-force oracles and random generators for graded matrices.
#ifndef STRINGY_TESTS_ORACLES_HPP
#define STRINGY_TESTS_ORACLES_HPP

#include <random>
#include <vector>

#include "stringy/graded_smith.hpp"

namespace oracle {

using stringy::Field;
using stringy::GradedMatrix;
using stringy::Rational;

// Rank of a dense matrix over the field by plain Gaussian elimination.
inline long rank(const Field& k, std::vector<std::vector<Rational>> m) {
  long r = 0;
  const size_t rows = m.size();
  const size_t cols = rows ? m[0].size() : 0;
  for (size_t c = 0; c < cols && r < static_cast<long>(rows); ++c) {
    size_t piv = static_cast<size_t>(r);
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[static_cast<size_t>(r)]);
    auto& pr = m[static_cast<size_t>(r)];
    Rational inv = k.inv(pr[c]);
    for (size_t i = static_cast<size_t>(r) + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = k.mul(m[i][c], inv);
      for (size_t j = c; j < cols; ++j) m[i][j] = k.sub(m[i][j], k.mul(f, pr[j]));
    }
    ++r;
  }
  return r;
}

// Degree-d piece of the map F -> G of K-vector spaces. F_d has basis t^p f_i
// with row_deg_i + p == d; G_d has basis t^q e_j with col_deg_j + q == d.
struct Piece {
  long dim_source = 0;
  long dim_target = 0;
  long rank = 0;
};

inline Piece graded_piece(const GradedMatrix& a, int d) {
  const int P = a.precision(), ell = a.ell();
  std::vector<std::pair<int, int>> src, tgt;  // (index, power of t)
  for (int i = 0; i < a.rows(); ++i)
    for (int p = 0; p < P; ++p)
      if (stringy::mod_floor(a.row_degrees()[static_cast<size_t>(i)] + p - d, ell) == 0) src.emplace_back(i, p);
  for (int j = 0; j < a.cols(); ++j)
    for (int q = 0; q < P; ++q)
      if (stringy::mod_floor(a.col_degrees()[static_cast<size_t>(j)] + q - d, ell) == 0) tgt.emplace_back(j, q);
  std::vector<std::vector<Rational>> m(src.size(), std::vector<Rational>(tgt.size(), Rational(0)));
  for (size_t s = 0; s < src.size(); ++s) {
    auto [i, p] = src[s];
    for (size_t t = 0; t < tgt.size(); ++t) {
      auto [j, q] = tgt[t];
      int e = q - p;  // coefficient of t^e in A(i, j) sends t^p f_i to t^q e_j
      if (e >= 0) m[s][t] = a.at(i, j)[static_cast<size_t>(e)];
    }
  }
  Piece out;
  out.dim_source = static_cast<long>(src.size());
  out.dim_target = static_cast<long>(tgt.size());
  out.rank = rank(a.field(), m);
  return out;
}

inline long coker_dim(const GradedMatrix& a, int d) {
  Piece p = graded_piece(a, d);
  return p.dim_target - p.rank;
}

inline long ker_dim(const GradedMatrix& a, int d) {
  Piece p = graded_piece(a, d);
  return p.dim_source - p.rank;
}

inline Rational random_scalar(const Field& k, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  return k.reduce(Rational(c(rng)));
}

inline Rational random_nonzero(const Field& k, std::mt19937_64& rng) {
  for (;;) {
    Rational x = random_scalar(k, rng);
    if (x != 0) return x;
  }
}

// Homogeneous entry for (row degree r, column degree c) with t-adic valuation
// at least min_val; each admissible coefficient is nonzero with probability density.
inline std::vector<Rational> random_entry(const Field& k, int ell, int P, int r, int c, int min_val, double density,
                                          std::mt19937_64& rng) {
  std::vector<Rational> e(static_cast<size_t>(P), Rational(0));
  std::bernoulli_distribution keep(density);
  for (int v = min_val; v < P; ++v) {
    if (stringy::mod_floor(v - r + c, ell) == 0 && keep(rng)) e[static_cast<size_t>(v)] = random_scalar(k, rng);
  }
  return e;
}

inline std::vector<int> random_degrees(int n, int ell, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(0, ell - 1);
  std::vector<int> out(static_cast<size_t>(n));
  for (auto& x : out) x = d(rng);
  return out;
}

inline GradedMatrix random_homogeneous(const Field& k, int ell, int P, int rows, int cols, std::mt19937_64& rng) {
  GradedMatrix a(k, ell, P, random_degrees(rows, ell, rng), random_degrees(cols, ell, rng));
  std::uniform_int_distribution<int> mv(0, P / 2);
  std::uniform_real_distribution<double> dens(0.1, 0.7);
  const int min_val = mv(rng);
  const double density = dens(rng);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j)
      a.set(i, j,
            random_entry(k, ell, P, a.row_degrees()[static_cast<size_t>(i)], a.col_degrees()[static_cast<size_t>(j)],
                         min_val, density, rng));
  return a;
}

// Graded automorphism of the free module with the given degrees, built as a
// permutation times (I + N), N strictly lower triangular, with a random unit
// diagonal in degree 0. For a left factor the rows come out permuted; for a
// right factor the columns do.
inline GradedMatrix random_graded_invertible(const Field& k, int ell, int P, const std::vector<int>& degrees,
                                             bool right, std::mt19937_64& rng) {
  const int n = static_cast<int>(degrees.size());
  GradedMatrix lower(k, ell, P, degrees, degrees);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j)
      lower.set(i, j,
                random_entry(k, ell, P, degrees[static_cast<size_t>(i)], degrees[static_cast<size_t>(j)], 0, 0.5, rng));
    std::vector<Rational> unit = random_entry(k, ell, P, 0, 0, 1, 0.5, rng);
    unit[0] = random_nonzero(k, rng);
    lower.set(i, i, unit);
  }
  std::vector<int> perm(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> pdeg(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) pdeg[static_cast<size_t>(i)] = degrees[static_cast<size_t>(perm[static_cast<size_t>(i)])];
  if (right) {
    GradedMatrix p(k, ell, P, degrees, pdeg);
    for (int i = 0; i < n; ++i) p.set(perm[static_cast<size_t>(i)], i, {Rational(1)});
    return lower * p;
  }
  GradedMatrix p(k, ell, P, pdeg, degrees);
  for (int i = 0; i < n; ++i) p.set(i, perm[static_cast<size_t>(i)], {Rational(1)});
  return p * lower;
}

}  // namespace oracle

#endif  // STRINGY_TESTS_ORACLES_HPP
