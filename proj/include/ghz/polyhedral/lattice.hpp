#pragma once

#include "ghz/polyhedral/cone.hpp"

#include <functional>

namespace ghz {

/// Calls f on every integer point of [-B, B]^n.
inline void for_each_box_point(std::size_t n, long B, const std::function<void(const IntVec&)>& f) {
  IntVec x(n, Integer(-B));
  for (;;) {
    f(x);
    std::size_t i = 0;
    while (i < n && x[i] == B) x[i++] = -B;
    if (i == n) return;
    ++x[i];
  }
}

inline Integer l1_norm(const IntVec& v) {
  Integer s = 0;
  for (const auto& x : v) s += abs(x);
  return s;
}

inline Integer max_norm(const IntVec& v) {
  Integer s = 0;
  for (const auto& x : v) s = std::max<Integer>(s, abs(x));
  return s;
}

/// Sublattice of Z^n in row echelon (Hermite) form.
class Lattice {
 public:
  Lattice(std::size_t n, std::vector<IntVec> gens) : n_(n) {
    std::vector<IntVec> rows;
    for (auto& g : gens)
      if (std::any_of(g.begin(), g.end(), [](const Integer& x) { return x != 0; })) rows.push_back(std::move(g));
    std::size_t r = 0;
    for (std::size_t c = 0; c < n_ && r < rows.size(); ++c) {
      // Euclid on column c among rows r..end
      for (;;) {
        std::size_t piv = rows.size();
        for (std::size_t i = r; i < rows.size(); ++i)
          if (rows[i][c] != 0 && (piv == rows.size() || abs(rows[i][c]) < abs(rows[piv][c]))) piv = i;
        if (piv == rows.size()) break;
        std::swap(rows[r], rows[piv]);
        bool done = true;
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
          if (rows[i][c] == 0) continue;
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
          rows[i] = rows[i] - q * rows[r];
          if (rows[i][c] != 0) done = false;
        }
        if (done) break;
      }
      if (rows[r][c] == 0) continue;
      if (rows[r][c] < 0) rows[r] = Integer(-1) * rows[r];
      for (std::size_t i = 0; i < r; ++i) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][c].get_mpz_t(), rows[r][c].get_mpz_t());
        rows[i] = rows[i] - q * rows[r];
      }
      pivots_.push_back(c);
      ++r;
    }
    rows.resize(r);
    basis_ = std::move(rows);
  }

  const std::vector<IntVec>& basis() const { return basis_; }
  std::size_t rank() const { return basis_.size(); }

  bool contains(IntVec x) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      std::size_t c = pivots_[i];
      if (x[c] % basis_[i][c] != 0) return false;
      x = x - Integer(x[c] / basis_[i][c]) * basis_[i];
    }
    return std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; });
  }

  /// Index in Z^n, 0 if not of full rank.
  Integer index() const {
    if (rank() != n_) return 0;
    Integer p = 1;
    for (std::size_t i = 0; i < basis_.size(); ++i) p *= basis_[i][pivots_[i]];
    return p;
  }

  friend bool operator==(const Lattice& a, const Lattice& b) { return a.basis_ == b.basis_; }

 private:
  std::size_t n_;
  std::vector<IntVec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Minimal generators of the semigroup K cap Z^n for a pointed cone K.
inline std::vector<IntVec> hilbert_basis(const Cone& K) {
  if (!K.is_pointed()) throw std::invalid_argument("Hilbert basis needs a pointed cone");
  std::size_t n = K.ambient_dim();
  long B = 0;
  for (const auto& r : K.rays()) B += to_long(max_norm(r));
  // a functional positive on K minus the origin
  RatVec g(n, Rational(0));
  for (const auto& f : K.facets()) g = g + to_rat(f);
  std::vector<std::pair<Rational, IntVec>> cand;
  for_each_box_point(n, B, [&](const IntVec& x) {
    if (std::all_of(x.begin(), x.end(), [](const Integer& v) { return v == 0; })) return;
    if (K.contains(x)) cand.emplace_back(dot(g, x), x);
  });
  std::sort(cand.begin(), cand.end());
  std::vector<IntVec> hb;
  for (const auto& [w, x] : cand) {
    bool reducible = false;
    for (const auto& h : hb) {
      IntVec d = x - h;
      if (K.contains(d)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) hb.push_back(x);
  }
  std::sort(hb.begin(), hb.end());
  return hb;
}

}  // namespace ghz
