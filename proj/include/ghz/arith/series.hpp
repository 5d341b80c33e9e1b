#pragma once

#include <stdexcept>
#include <vector>

namespace ghz {

/// Power series in T truncated at order O: indices 0..O-1 only.
/// Coeff needs +, *, unary -, is_zero() and, for inverse(), inverse().
template <class Coeff>
class TruncatedSeries {
 public:
  TruncatedSeries(std::size_t order, Coeff zero) : zero_(zero), c_(order, zero) {
    if (order == 0) throw std::invalid_argument("series order must be positive");
  }

  std::size_t order() const { return c_.size(); }
  const Coeff& operator[](std::size_t i) const { return c_.at(i); }
  void set(std::size_t i, Coeff v) {
    if (i < c_.size()) c_[i] = std::move(v);
  }
  void add(std::size_t i, const Coeff& v) {
    if (i < c_.size()) c_[i] = c_[i] + v;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) {
    a.check(b);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] = a.c_[i] + b.c_[i];
    return a;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    TruncatedSeries r(a.order(), a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; i + j < a.c_.size(); ++j)
        if (!b.c_[j].is_zero()) r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    return r;
  }

  /// Multiplicative inverse; requires an invertible constant term.
  TruncatedSeries inverse() const {
    if (c_[0].is_zero()) throw std::domain_error("series with zero constant term is not invertible");
    TruncatedSeries r(order(), zero_);
    Coeff inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (std::size_t i = 1; i < c_.size(); ++i) {
      Coeff acc = zero_;
      for (std::size_t k = 1; k <= i; ++k)
        if (!c_[k].is_zero() && !r.c_[i - k].is_zero()) acc = acc + c_[k] * r.c_[i - k];
      r.c_[i] = -(acc * inv0);
    }
    return r;
  }

 private:
  void check(const TruncatedSeries& b) const {
    if (b.order() != order()) throw std::invalid_argument("series order mismatch");
  }

  Coeff zero_;
  std::vector<Coeff> c_;
};

}  // namespace ghz
