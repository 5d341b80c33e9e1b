#pragma once

/**
 * @file poly.hpp
 * @brief Sparse univariate (Laurent) polynomials and reduced rational
 * functions over a BaseField.
 *
 * Negative exponents are allowed in Poly; operations that need a true
 * polynomial (division, gcd) check for it.
 */

#include "ghz/arith/binomial.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace ghz {

class Poly {
 public:
  /// Degree of the zero polynomial.
  static constexpr long kZeroDegree = -1;

  Poly() = default;
  explicit Poly(BaseField k, char var = 't') : field_(k), var_(var) {}

  static Poly constant(const Scalar& c, char var = 't') { return monomial(c, 0, var); }
  static Poly monomial(const Scalar& c, long e, char var = 't') {
    Poly p(c.field(), var);
    p.add_term(e, c);
    return p;
  }
  static Poly variable(const BaseField& k, char var = 't') { return monomial(Scalar::one(k), 1, var); }
  /// x - c
  static Poly linear(const Scalar& c, char var = 't') { return variable(c.field(), var) - constant(c, var); }

  const BaseField& field() const { return field_; }
  char var() const { return var_; }
  const std::map<long, Scalar>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  long degree() const { return terms_.empty() ? kZeroDegree : terms_.rbegin()->first; }
  long low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  bool is_polynomial() const { return low_degree() >= 0; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  bool is_monomial() const { return terms_.size() == 1; }

  Scalar coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
  }
  Scalar lead() const { return terms_.empty() ? Scalar::zero(field_) : terms_.rbegin()->second; }

  void add_term(long e, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.terms_ == b.terms_;
  }

  friend Poly operator+(Poly a, const Poly& b) {
    for (const auto& [e, c] : b.terms_) a.add_term(e, c);
    return a;
  }
  Poly operator-() const {
    Poly r(field_, var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.field_, a.var_);
    for (const auto& [e1, c1] : a.terms_)
      for (const auto& [e2, c2] : b.terms_) r.add_term(e1 + e2, c1 * c2);
    return r;
  }
  friend Poly operator*(const Scalar& s, const Poly& a) {
    Poly r(a.field_, a.var_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : a.terms_) r.terms_.emplace(e, s * c);
    return r;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  Poly pow(unsigned long e) const {
    Poly r = constant(Scalar::one(field_), var_), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  Poly monic() const { return is_zero() ? *this : lead().inverse() * *this; }

  /// Multiply by x^k.
  Poly shifted(long k) const {
    Poly r(field_, var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
    return r;
  }

  /// P(x^d).
  Poly spread(long d) const {
    Poly r(field_, var_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e * d, c);
    return r;
  }

  /// Q with Q(x^d) = P, if every exponent is divisible by d.
  std::optional<Poly> compress(long d) const {
    Poly r(field_, var_);
    for (const auto& [e, c] : terms_) {
      if (e % d != 0) return std::nullopt;
      r.terms_.emplace(e / d, c);
    }
    return r;
  }

  /// P(x + c) for a polynomial P.
  Poly taylor_shift(const Scalar& c) const {
    require_polynomial("taylor_shift");
    Poly r(field_, var_);
    if (c.is_zero()) return *this;
    for (const auto& [e, a] : terms_) {
      Scalar cpow = Scalar::one(field_);
      for (long k = e; k >= 0; --k) {
        r.add_term(k, a * binom_in_field(Integer(e), static_cast<unsigned long>(e - k), field_) * cpow);
        cpow *= c;
      }
    }
    return r;
  }

  /// j-th Hasse derivative: sum_a c_a C(a, j) x^(a-j); valid for Laurent input.
  Poly hasse(unsigned long j) const {
    Poly r(field_, var_);
    for (const auto& [e, a] : terms_) r.add_term(e - static_cast<long>(j), a * binom_in_field(Integer(e), j, field_));
    return r;
  }

  Poly derivative() const { return hasse(1); }

  Scalar eval(const Scalar& x) const {
    Scalar r = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) r += c * x.pow(e);
    return r;
  }

  Poly with_var(char v) const {
    Poly r = *this;
    r.var_ = v;
    return r;
  }

  /// Compact text, highest degree first: "t^2+l", "-1/2*t+3".
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string cs = c.str();
      bool neg = !c.needs_parens() && !cs.empty() && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (c.needs_parens()) cs = "(" + cs + ")";
      if (!out.empty() || neg) out += neg ? "-" : "+";
      std::string mono;
      if (e != 0) {
        mono = std::string(1, var_);
        if (e != 1) mono += "^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
      }
      if (mono.empty())
        out += cs;
      else if (cs == "1")
        out += mono;
      else
        out += cs + "*" + mono;
    }
    return out;
  }

  void require_polynomial(const char* what) const {
    if (!is_polynomial()) throw std::invalid_argument(std::string(what) + " needs a polynomial, got Laurent " + str());
  }

 private:
  BaseField field_;
  char var_ = 't';
  std::map<long, Scalar> terms_;
};

/// Total order for canonical sorting (degree, then coefficients from the top).
inline bool poly_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  auto ia = a.terms().rbegin(), ib = b.terms().rbegin();
  for (; ia != a.terms().rend() && ib != b.terms().rend(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    auto c = compare(ia->second, ib->second);
    if (c != 0) return c < 0;
  }
  return ia == a.terms().rend() && ib != b.terms().rend();
}

inline std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  a.require_polynomial("divmod");
  b.require_polynomial("divmod");
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly q(a.field(), a.var()), r = a;
  Scalar inv = b.lead().inverse();
  long db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    Poly m = Poly::monomial(r.lead() * inv, r.degree() - db, a.var());
    q += m;
    r = r - m * b;
  }
  return {q, r};
}

inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Largest k with q^k | f, for polynomial f != 0 and nonconstant q.
inline long valuation(Poly f, const Poly& q) {
  if (f.is_zero()) throw std::domain_error("valuation of zero");
  long k = 0;
  for (;;) {
    auto [quo, rem] = divmod(f, q);
    if (!rem.is_zero()) return k;
    f = std::move(quo);
    ++k;
  }
}

/// Reduced fraction num/den of polynomials, den monic.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(const Poly& num) : RatFunc(num, Poly::constant(Scalar::one(num.field()), num.var())) {}
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }

  static RatFunc constant(const Scalar& c, char var = 't') { return RatFunc(Poly::constant(c, var)); }
  static RatFunc zero(const BaseField& k, char var = 't') { return RatFunc(Poly(k, var)); }
  static RatFunc one(const BaseField& k, char var = 't') { return constant(Scalar::one(k), var); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const BaseField& field() const { return num_.field(); }
  char var() const { return num_.var(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  bool is_constant() const { return is_polynomial() && num_.is_constant(); }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return zero(a.field(), a.var());
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const Scalar& s, const RatFunc& a) {
    RatFunc r = a;
    r.num_ = s * r.num_;
    if (r.num_.is_zero()) r.den_ = Poly::constant(Scalar::one(a.field()), a.var());
    return r;
  }
  RatFunc inverse() const {
    if (is_zero()) throw std::domain_error("division by zero rational function");
    return RatFunc(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc& operator+=(const RatFunc& b) { return *this = *this + b; }
  RatFunc& operator*=(const RatFunc& b) { return *this = *this * b; }

  RatFunc pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    return RatFunc(num_.pow(static_cast<unsigned long>(e)), den_.pow(static_cast<unsigned long>(e)));
  }

  /// Order of vanishing at the monic irreducible q (negative for poles).
  long ord(const Poly& q) const {
    if (is_zero()) throw std::domain_error("order of zero");
    return valuation(num_, q) - valuation(den_, q);
  }

  /// deg num - deg den.
  long degree() const { return num_.degree() - den_.degree(); }

  std::string str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.str(), d = den_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    if (den_.terms().size() > 1 || !den_.is_monomial() || den_.lead() != Scalar::one(field())) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  void normalize() {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    long low = std::min(num_.is_zero() ? 0 : num_.low_degree(), den_.low_degree());
    if (low < 0) {
      num_ = num_.shifted(-low);
      den_ = den_.shifted(-low);
    }
    if (num_.is_zero()) {
      den_ = Poly::constant(Scalar::one(den_.field()), den_.var());
      return;
    }
    if (den_.degree() > 0) {
      Poly g = gcd(num_, den_);
      if (g.degree() > 0) {
        num_ = divmod(num_, g).first;
        den_ = divmod(den_, g).first;
      }
    }
    Scalar inv = den_.lead().inverse();
    if (!inv.is_one()) {
      num_ = inv * num_;
      den_ = inv * den_;
    }
  }

  Poly num_, den_;
};

}  // namespace ghz
