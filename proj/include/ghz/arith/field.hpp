#pragma once

/**
 * @file field.hpp
 * @brief Base fields Q, F_p and F_p(l), and their elements.
 *
 * Every element has a unique canonical representation, so equality is
 * structural. Elements of F_p(l) are reduced fractions with monic
 * denominator.
 */

#include "ghz/arith/fp_poly.hpp"
#include "ghz/arith/integer.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <variant>

namespace ghz {

enum class FieldKind { Rationals, PrimeField, RationalFunctions };

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct BaseField {
  FieldKind kind = FieldKind::Rationals;
  std::uint32_t p = 1;

  static BaseField rationals() { return {FieldKind::Rationals, 1}; }
  static BaseField prime_field(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("F_p needs a prime p, got " + std::to_string(p));
    return {FieldKind::PrimeField, p};
  }
  static BaseField rational_functions(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("F_p(l) needs a prime p, got " + std::to_string(p));
    return {FieldKind::RationalFunctions, p};
  }

  /// Characteristic exponent: 1 for Q, p otherwise.
  std::uint32_t char_exponent() const { return kind == FieldKind::Rationals ? 1 : p; }
  bool is_perfect() const { return kind != FieldKind::RationalFunctions; }

  std::string name() const {
    switch (kind) {
      case FieldKind::Rationals: return "Q";
      case FieldKind::PrimeField: return "F_" + std::to_string(p);
      case FieldKind::RationalFunctions: return "F_" + std::to_string(p) + "(l)";
    }
    return "?";
  }

  friend bool operator==(const BaseField&, const BaseField&) = default;
};

/// Reduced fraction num/den of polynomials in l over F_p, den monic.
struct LambdaFrac {
  FpPoly num, den;

  LambdaFrac() = default;
  LambdaFrac(FpPoly n, FpPoly d) : num(std::move(n)), den(std::move(d)) { normalize(); }

  void normalize() {
    if (den.is_zero()) throw std::domain_error("division by zero in F_p(l)");
    std::uint32_t p = den.modulus();
    if (num.is_zero()) {
      den = FpPoly::constant(p, 1);
      return;
    }
    FpPoly g = gcd(num, den);
    num = divmod(num, g).first;
    den = divmod(den, g).first;
    std::uint32_t inv = mod_inv(den.lead(), p);
    num = num.scaled(inv);
    den = den.scaled(inv);
  }

  friend bool operator==(const LambdaFrac&, const LambdaFrac&) = default;
};

class Scalar {
 public:
  Scalar() : field_(BaseField::rationals()), v_(Rational(0)) {}

  static Scalar from_integer(const BaseField& k, const Integer& n) { return from_rational(k, Rational(n)); }
  static Scalar from_int(const BaseField& k, long n) { return from_integer(k, Integer(n)); }
  static Scalar zero(const BaseField& k) { return from_int(k, 0); }
  static Scalar one(const BaseField& k) { return from_int(k, 1); }

  /// Image of a rational number; throws if its denominator vanishes in k.
  static Scalar from_rational(const BaseField& k, const Rational& q) {
    Scalar s;
    s.field_ = k;
    if (k.kind == FieldKind::Rationals) {
      Rational c = q;
      c.canonicalize();
      s.v_ = c;
      return s;
    }
    std::uint32_t num = reduce(q.get_num(), k.p), den = reduce(q.get_den(), k.p);
    if (den == 0) throw std::domain_error("denominator of " + q.get_str() + " vanishes in " + k.name());
    std::uint32_t r = static_cast<std::uint32_t>(std::uint64_t(num) * mod_inv(den, k.p) % k.p);
    if (k.kind == FieldKind::PrimeField)
      s.v_ = r;
    else
      s.v_ = LambdaFrac(FpPoly::constant(k.p, r), FpPoly::constant(k.p, 1));
    return s;
  }

  static Scalar lambda(const BaseField& k) {
    if (k.kind != FieldKind::RationalFunctions) throw std::invalid_argument("l is only defined in F_p(l)");
    Scalar s;
    s.field_ = k;
    s.v_ = LambdaFrac(FpPoly::x(k.p), FpPoly::constant(k.p, 1));
    return s;
  }

  static Scalar from_lambda_frac(const BaseField& k, LambdaFrac f) {
    Scalar s;
    s.field_ = k;
    s.v_ = std::move(f);
    return s;
  }

  const BaseField& field() const { return field_; }

  bool is_zero() const {
    if (auto q = std::get_if<Rational>(&v_)) return *q == 0;
    if (auto r = std::get_if<std::uint32_t>(&v_)) return *r == 0;
    return std::get<LambdaFrac>(v_).num.is_zero();
  }
  bool is_one() const { return *this == one(field_); }

  const Rational& rational() const { return std::get<Rational>(v_); }
  std::uint32_t residue() const { return std::get<std::uint32_t>(v_); }
  const LambdaFrac& lambda_frac() const { return std::get<LambdaFrac>(v_); }

  friend bool operator==(const Scalar& a, const Scalar& b) { return a.field_ == b.field_ && a.v_ == b.v_; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check(a, b);
    Scalar s;
    s.field_ = a.field_;
    switch (a.field_.kind) {
      case FieldKind::Rationals: s.v_ = Rational(a.rational() + b.rational()); break;
      case FieldKind::PrimeField: s.v_ = static_cast<std::uint32_t>((std::uint64_t(a.residue()) + b.residue()) % a.field_.p); break;
      case FieldKind::RationalFunctions: {
        const auto &x = a.lambda_frac(), &y = b.lambda_frac();
        s.v_ = LambdaFrac(x.num * y.den + y.num * x.den, x.den * y.den);
        break;
      }
    }
    return s;
  }
  Scalar operator-() const {
    Scalar s = *this;
    switch (field_.kind) {
      case FieldKind::Rationals: s.v_ = Rational(-rational()); break;
      case FieldKind::PrimeField: s.v_ = static_cast<std::uint32_t>((field_.p - residue()) % field_.p); break;
      case FieldKind::RationalFunctions: s.v_ = LambdaFrac(-lambda_frac().num, lambda_frac().den); break;
    }
    return s;
  }
  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }
  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check(a, b);
    Scalar s;
    s.field_ = a.field_;
    switch (a.field_.kind) {
      case FieldKind::Rationals: s.v_ = Rational(a.rational() * b.rational()); break;
      case FieldKind::PrimeField: s.v_ = static_cast<std::uint32_t>(std::uint64_t(a.residue()) * b.residue() % a.field_.p); break;
      case FieldKind::RationalFunctions: {
        const auto &x = a.lambda_frac(), &y = b.lambda_frac();
        s.v_ = LambdaFrac(x.num * y.num, x.den * y.den);
        break;
      }
    }
    return s;
  }
  Scalar inverse() const {
    if (is_zero()) throw std::domain_error("division by zero in " + field_.name());
    Scalar s;
    s.field_ = field_;
    switch (field_.kind) {
      case FieldKind::Rationals: s.v_ = Rational(1 / rational()); break;
      case FieldKind::PrimeField: s.v_ = mod_inv(residue(), field_.p); break;
      case FieldKind::RationalFunctions: s.v_ = LambdaFrac(lambda_frac().den, lambda_frac().num); break;
    }
    return s;
  }
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  Scalar pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Scalar r = one(field_), b = *this;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }

  /// True if the element is a p-th power in k (always for perfect fields).
  bool is_pth_power() const {
    if (field_.kind != FieldKind::RationalFunctions) return true;
    auto only_multiples = [&](const FpPoly& f) {
      for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (f.coeffs()[i] && i % field_.p) return false;
      return true;
    };
    return only_multiples(lambda_frac().num) && only_multiples(lambda_frac().den);
  }

  /// Total order used only for canonical sorting.
  friend std::strong_ordering compare(const Scalar& a, const Scalar& b) {
    check(a, b);
    switch (a.field_.kind) {
      case FieldKind::Rationals: {
        int c = cmp(a.rational(), b.rational());
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
      }
      case FieldKind::PrimeField: return a.residue() <=> b.residue();
      case FieldKind::RationalFunctions: {
        const auto &x = a.lambda_frac(), &y = b.lambda_frac();
        if (x.den < y.den) return std::strong_ordering::less;
        if (y.den < x.den) return std::strong_ordering::greater;
        if (x.num < y.num) return std::strong_ordering::less;
        if (y.num < x.num) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
      }
    }
    return std::strong_ordering::equal;
  }

  std::string str() const {
    switch (field_.kind) {
      case FieldKind::Rationals: return rational().get_str();
      case FieldKind::PrimeField: return std::to_string(residue());
      case FieldKind::RationalFunctions: {
        const auto& f = lambda_frac();
        std::string n = f.num.str('l');
        if (f.den.is_one()) return n;
        std::string d = f.den.str('l');
        if (f.num.degree() > 0 && n.find('+') != std::string::npos) n = "(" + n + ")";
        if (d.find('+') != std::string::npos || d.find('*') != std::string::npos) d = "(" + d + ")";
        return n + "/" + d;
      }
    }
    return "?";
  }

  /// Whether str() needs parentheses when used as a coefficient.
  bool needs_parens() const {
    if (field_.kind != FieldKind::RationalFunctions) return false;
    std::string s = str();
    return s.find('+') != std::string::npos || s.find('/') != std::string::npos;
  }

 private:
  static void check(const Scalar& a, const Scalar& b) {
    if (!(a.field_ == b.field_)) throw std::invalid_argument("field mismatch: " + a.field_.name() + " vs " + b.field_.name());
  }
  static std::uint32_t reduce(const Integer& n, std::uint32_t p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
    return static_cast<std::uint32_t>(r.get_ui());
  }

  BaseField field_;
  std::variant<Rational, std::uint32_t, LambdaFrac> v_;
};

}  // namespace ghz
