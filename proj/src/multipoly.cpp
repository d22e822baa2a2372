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

#include "stringy/multipoly.hpp"

#include <algorithm>

#include "stringy/error.hpp"

namespace stringy {

MultiPoly MultiPoly::constant(int nvars, const Integer& c) {
  return monomial(nvars, ExponentVector(static_cast<size_t>(nvars), 0), c);
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  if (i < 0 || i >= nvars) throw Error(ErrorCode::invalid_argument, "variable index out of range");
  ExponentVector e(static_cast<size_t>(nvars), 0);
  e[static_cast<size_t>(i)] = 1;
  return monomial(nvars, e);
}

MultiPoly MultiPoly::monomial(int nvars, const ExponentVector& e, const Integer& c) {
  if (static_cast<int>(e.size()) != nvars) throw Error(ErrorCode::invalid_argument, "exponent vector length mismatch");
  for (int x : e)
    if (x < 0) throw Error(ErrorCode::invalid_argument, "negative exponent");
  MultiPoly p(nvars);
  p.add_term(e, c);
  return p;
}

void MultiPoly::add_term(const ExponentVector& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw Error(ErrorCode::invalid_argument, "polynomial ring mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw Error(ErrorCode::invalid_argument, "polynomial ring mismatch");
  MultiPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  if (nvars_ != o.nvars_) throw Error(ErrorCode::invalid_argument, "polynomial ring mismatch");
  MultiPoly r(nvars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      ExponentVector e = e1;
      for (size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
      r.add_term(e, c1 * c2);
    }
  }
  return r;
}

MultiPoly MultiPoly::pow(int k) const {
  if (k < 0) throw Error(ErrorCode::invalid_argument, "negative power");
  MultiPoly r = constant(nvars_, 1);
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

MultiPoly MultiPoly::derivative(int i) const {
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    int k = e[static_cast<size_t>(i)];
    if (k == 0) continue;
    ExponentVector d = e;
    d[static_cast<size_t>(i)] -= 1;
    r.add_term(d, c * k);
  }
  return r;
}

Rational MultiPoly::eval(const Field& k, const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != nvars_) throw Error(ErrorCode::invalid_argument, "evaluation point has wrong length");
  Rational acc = 0;
  for (const auto& [e, c] : terms_) {
    Rational m = k.reduce(Rational(c));
    for (size_t i = 0; i < e.size(); ++i)
      for (int j = 0; j < e[i]; ++j) m = k.mul(m, point[i]);
    acc = k.add(acc, m);
  }
  return acc;
}

TruncPoly MultiPoly::eval_series(const Field& k, const std::vector<TruncPoly>& series) const {
  if (static_cast<int>(series.size()) != nvars_) throw Error(ErrorCode::invalid_argument, "wrong number of series");
  if (series.empty()) {
    throw Error(ErrorCode::invalid_argument, "series substitution needs at least one variable");
  }
  const int P = static_cast<int>(series[0].size());
  // powers[i][j] = series[i]^j, built on demand.
  std::vector<std::vector<TruncPoly>> powers(series.size());
  for (size_t i = 0; i < series.size(); ++i) powers[i].push_back(trunc::monomial(k, 1, 0, P));
  TruncPoly acc = trunc::zero(P);
  for (const auto& [e, c] : terms_) {
    TruncPoly m = trunc::monomial(k, Rational(c), 0, P);
    for (size_t i = 0; i < e.size(); ++i) {
      auto& pw = powers[i];
      while (static_cast<int>(pw.size()) <= e[i]) pw.push_back(trunc::mul(k, pw.back(), series[i]));
      if (e[i] > 0) m = trunc::mul(k, m, pw[static_cast<size_t>(e[i])]);
    }
    acc = trunc::add(k, acc, m);
  }
  return acc;
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest total degree first.
  std::vector<std::pair<ExponentVector, Integer>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    return da > db;
  });
  bool first = true;
  for (const auto& [e, c] : ordered) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names.at(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

}  // namespace stringy
