#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ghz {

inline std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("inverse of zero mod p");
  return mod_pow(a, p - 2, p);
}

/// Dense univariate polynomial over F_p, coefficients low to high, trimmed.
class FpPoly {
 public:
  FpPoly() = default;
  explicit FpPoly(std::uint32_t p) : p_(p) {}
  FpPoly(std::uint32_t p, std::vector<std::uint32_t> c) : p_(p), c_(std::move(c)) {
    for (auto& x : c_) x %= p_;
    trim();
  }

  static FpPoly constant(std::uint32_t p, std::uint64_t v) { return FpPoly(p, {static_cast<std::uint32_t>(v % p)}); }
  static FpPoly x(std::uint32_t p) { return FpPoly(p, {0, 1}); }

  std::uint32_t modulus() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }

  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.c_ == b.c_; }

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    std::vector<std::uint32_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
    return FpPoly(a.p_, std::move(r));
  }
  FpPoly operator-() const {
    std::vector<std::uint32_t> r(c_);
    for (auto& x : r) x = (p_ - x) % p_;
    return FpPoly(p_, std::move(r));
  }
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b) { return a + (-b); }
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
    std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (!a.c_[i]) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) acc[i + j] = (acc[i + j] + std::uint64_t(a.c_[i]) * b.c_[j]) % a.p_;
    }
    std::vector<std::uint32_t> r(acc.begin(), acc.end());
    return FpPoly(a.p_, std::move(r));
  }
  FpPoly scaled(std::uint32_t s) const {
    std::vector<std::uint32_t> r(c_);
    for (auto& x : r) x = static_cast<std::uint32_t>(std::uint64_t(x) * s % p_);
    return FpPoly(p_, std::move(r));
  }

  FpPoly monic() const { return is_zero() ? *this : scaled(mod_inv(lead(), p_)); }

  FpPoly derivative() const {
    std::vector<std::uint32_t> r;
    for (std::size_t i = 1; i < c_.size(); ++i) r.push_back(static_cast<std::uint32_t>(std::uint64_t(c_[i]) * (i % p_) % p_));
    return FpPoly(p_, std::move(r));
  }

  friend std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::uint32_t p = a.p_;
    std::vector<std::uint32_t> r = a.c_;
    if (r.size() < b.c_.size()) return {FpPoly(p), a};
    std::vector<std::uint32_t> q(r.size() - b.c_.size() + 1, 0);
    std::uint32_t inv = mod_inv(b.lead(), p);
    for (std::size_t k = q.size(); k-- > 0;) {
      std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t(r[k + b.c_.size() - 1]) * inv % p);
      q[k] = c;
      if (!c) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j)
        r[k + j] = static_cast<std::uint32_t>((r[k + j] + std::uint64_t(p - c) * b.c_[j]) % p);
    }
    return {FpPoly(p, std::move(q)), FpPoly(p, std::move(r))};
  }

  friend FpPoly gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
      FpPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  /// a^e mod m.
  friend FpPoly powmod(FpPoly a, std::uint64_t e, const FpPoly& m) {
    FpPoly r = divmod(FpPoly::constant(m.p_, 1), m).second;
    a = divmod(a, m).second;
    while (e) {
      if (e & 1) r = divmod(r * a, m).second;
      a = divmod(a * a, m).second;
      e >>= 1;
    }
    return r;
  }

  /// Printed in variable `var`, highest degree first, e.g. "l^2+l+1".
  std::string str(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = c_.size(); k-- > 0;) {
      if (!c_[k]) continue;
      if (!out.empty()) out += "+";
      bool unit = c_[k] == 1;
      if (k == 0) {
        out += std::to_string(c_[k]);
        continue;
      }
      if (!unit) out += std::to_string(c_[k]) + "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
  }

  friend bool operator<(const FpPoly& a, const FpPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t k = a.c_.size(); k-- > 0;)
      if (a.c_[k] != b.c_[k]) return a.c_[k] < b.c_[k];
    return false;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> c_;
};

}  // namespace ghz
