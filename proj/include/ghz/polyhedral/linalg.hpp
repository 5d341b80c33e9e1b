#pragma once

#include "ghz/arith/integer.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace ghz {

using RatVec = std::vector<Rational>;
using IntVec = std::vector<Integer>;
using RatMatrix = std::vector<RatVec>;

inline RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

inline IntVec to_int(const RatVec& v) {
  IntVec r;
  for (const auto& x : v) {
    if (!is_integral(x)) throw std::domain_error("vector is not integral");
    r.push_back(x.get_num());
  }
  return r;
}

inline bool is_integral(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integral(x); });
}

inline bool is_zero(const RatVec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
}

template <class A, class B>
Rational dot(const A& a, const B& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch in pairing");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += Rational(a[i]) * Rational(b[i]);
  return s;
}

inline RatVec operator+(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline RatVec operator-(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline RatVec operator*(const Rational& s, const RatVec& a) {
  RatVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}
inline IntVec operator+(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}
inline IntVec operator-(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}
inline IntVec operator*(const Integer& s, const IntVec& a) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
  return r;
}

/// Smallest positive multiple of v that is a lattice point.
inline IntVec primitive(const RatVec& v) {
  if (is_zero(v)) throw std::domain_error("primitive generator of the zero vector");
  Integer den = 1, g = 0;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVec r;
  for (const auto& x : v) {
    Integer n = x.get_num() * (den / x.get_den());
    r.push_back(n);
    g = gcd(g, n);
  }
  for (auto& x : r) x /= g;
  return r;
}

/// Nonzero rows of the reduced row echelon form.
inline RatMatrix rref(RatMatrix m) {
  if (m.empty()) return m;
  std::size_t cols = m[0].size(), row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[row], m[piv]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c] == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
    }
    ++row;
  }
  m.resize(row);
  return m;
}

inline std::size_t rank(const RatMatrix& m) { return rref(m).size(); }

/// Basis of {x in Q^n : m x = 0}, canonical for the row space of m.
inline RatMatrix nullspace(const RatMatrix& m, std::size_t n) {
  RatMatrix r = rref(m);
  std::vector<long> pivot_of_col(n, -1);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t c = 0; c < n; ++c)
      if (r[i][c] != 0) {
        pivot_of_col[c] = static_cast<long>(i);
        break;
      }
  RatMatrix basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (pivot_of_col[f] >= 0) continue;
    RatVec x(n, Rational(0));
    x[f] = 1;
    for (std::size_t c = 0; c < n; ++c)
      if (pivot_of_col[c] >= 0) x[c] = -r[static_cast<std::size_t>(pivot_of_col[c])][f];
    basis.push_back(x);
  }
  return basis;
}

/// Solve x * rows = target for x if possible (target in the row span).
inline std::optional<RatVec> solve_in_span(const RatMatrix& rows, const RatVec& target) {
  std::size_t k = rows.size(), n = target.size();
  // columns are rows[i]; solve A x = target with A n-by-k
  RatMatrix aug(n, RatVec(k + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug[r][c] = rows[c][r];
    aug[r][k] = target[r];
  }
  RatMatrix red = rref(aug);
  RatVec x(k, Rational(0));
  for (const auto& row : red) {
    std::size_t c = 0;
    while (c <= k && row[c] == 0) ++c;
    if (c == k) return std::nullopt;
    x[c] = row[k];
  }
  return x;
}

template <class V>
std::string vec_str(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

}  // namespace ghz
