#pragma once

/**
 * @file point.hpp
 * @brief Closed points of A^1 and P^1 and irreducibility validation.
 *
 * Strict validation proves irreducibility over F_p (distinct-degree test)
 * and over Q up to degree 3 (rational roots). Trusted validation runs
 * partial checks and marks the point as trusted.
 */

#include "ghz/arith/factored.hpp"

#include <optional>

namespace ghz {

enum class Curve { A1, P1 };
enum class TrustPolicy { Strict, Trusted };

inline std::string curve_name(Curve c) { return c == Curve::A1 ? "A1" : "P1"; }

struct ReducibleError : std::runtime_error {
  ReducibleError(const Poly& q, std::string witness)
      : std::runtime_error("polynomial " + q.str() + " is reducible: " + witness), witness(std::move(witness)) {}
  std::string witness;
};

struct UndecidableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class ClosedPoint {
 public:
  ClosedPoint() = default;
  static ClosedPoint infinity() { return ClosedPoint(); }
  /// Unchecked constructor; use point_validate for user input.
  static ClosedPoint finite(const Poly& q, bool trusted = false) {
    if (q.degree() < 1) throw std::invalid_argument("closed point needs a polynomial of degree >= 1");
    ClosedPoint y;
    y.q_ = q.monic();
    y.trusted_ = trusted;
    return y;
  }
  /// The rational point t - c.
  static ClosedPoint rational(const Scalar& c) { return finite(Poly::linear(c)); }

  bool is_infinity() const { return !q_.has_value(); }
  const Poly& poly() const {
    if (!q_) throw std::logic_error("the point at infinity has no polynomial");
    return *q_;
  }
  long residue_degree() const { return q_ ? q_->degree() : 1; }
  bool is_rational() const { return residue_degree() == 1; }
  bool trusted() const { return trusted_; }

  /// c for the point t - c.
  Scalar value() const {
    if (!q_ || q_->degree() != 1) throw std::logic_error("point " + str() + " is not a finite rational point");
    return -q_->coeff(0);
  }

  std::string str() const { return q_ ? q_->str() : "infinity"; }

  friend bool operator==(const ClosedPoint& a, const ClosedPoint& b) { return a.q_ == b.q_; }
  friend bool operator<(const ClosedPoint& a, const ClosedPoint& b) {
    if (a.is_infinity() || b.is_infinity()) return !a.is_infinity() && b.is_infinity();
    return poly_less(*a.q_, *b.q_);
  }

 private:
  std::optional<Poly> q_;
  bool trusted_ = false;
};

struct InsepProfile {
  long ell = 0;
  Integer eps = 1;
  long s = 1;
  Poly qtilde;
};

/// q(t) = qtilde(t^{p^ell}) with ell maximal.
inline InsepProfile insep_profile(const ClosedPoint& y) {
  const Poly& q = y.poly();
  std::uint32_t p = q.field().char_exponent();
  InsepProfile prof;
  prof.qtilde = q;
  if (p > 1) {
    while (auto c = prof.qtilde.compress(p)) {
      if (c->degree() < 1) break;
      prof.qtilde = *c;
      ++prof.ell;
      prof.eps *= p;
    }
  }
  prof.s = prof.qtilde.degree();
  return prof;
}

namespace detail {

inline FpPoly to_fp(const Poly& q) {
  std::vector<std::uint32_t> c(static_cast<std::size_t>(q.degree() + 1), 0);
  for (const auto& [e, a] : q.terms()) c[static_cast<std::size_t>(e)] = a.residue();
  return FpPoly(q.field().p, c);
}

inline Poly from_fp(const FpPoly& f, const BaseField& k) {
  Poly r(k);
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) r.add_term(static_cast<long>(i), Scalar::from_int(k, f.coeffs()[i]));
  return r;
}

/// Throws with a witness if q (monic, deg >= 2) over F_p is reducible.
inline void check_irreducible_fp(const Poly& q) {
  std::uint32_t p = q.field().p;
  FpPoly f = to_fp(q);
  FpPoly df = f.derivative();
  if (df.is_zero()) {
    // f = r^p with r obtained by taking p-th roots (identity on F_p)
    std::vector<std::uint32_t> r;
    for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(f.coeffs()[i]);
    FpPoly root(p, r);
    throw ReducibleError(q, "(" + from_fp(root, q.field()).str() + ")^" + std::to_string(p));
  }
  FpPoly g = gcd(f, df);
  if (g.degree() > 0) throw ReducibleError(q, "repeated factor " + from_fp(g, q.field()).str());
  FpPoly x = FpPoly::x(p), h = x;
  for (long i = 1; 2 * i <= f.degree(); ++i) {
    h = powmod(h, p, f);
    FpPoly d = gcd(f, h - x);
    if (d.degree() > 0) throw ReducibleError(q, "factor " + from_fp(d, q.field()).str() + " (degree-" + std::to_string(i) + " part)");
  }
}

inline std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  if (n == 0) return out;
  if (n > 1000000) throw UndecidableError("rational root search: coefficient too large");
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  return out;
}

/// A rational root of q over Q, if any.
inline std::optional<Rational> rational_root(const Poly& q) {
  Integer den = 1;
  for (const auto& [e, a] : q.terms()) den = lcm(den, a.rational().get_den());
  std::map<long, Integer> c;
  for (const auto& [e, a] : q.terms()) c[e] = Integer(a.rational() * den);
  if (!c.count(0)) return Rational(0);
  Integer lead = c.rbegin()->second;
  for (const auto& u : divisors(c[0]))
    for (const auto& v : divisors(lead))
      for (int sign : {1, -1}) {
        Rational r = make_rational(sign * u, v);
        if (q.eval(Scalar::from_rational(q.field(), r)).is_zero()) return r;
      }
  return std::nullopt;
}

}  // namespace detail

inline ClosedPoint point_validate(const Poly& q_in, TrustPolicy policy = TrustPolicy::Strict) {
  if (q_in.is_zero() || q_in.degree() < 1 || !q_in.is_polynomial())
    throw std::invalid_argument("point polynomial must have degree >= 1, got " + q_in.str());
  if (!q_in.lead().is_one()) throw std::invalid_argument("point polynomial must be monic, got " + q_in.str());
  const Poly& q = q_in;
  const BaseField& k = q.field();
  if (q.degree() == 1) return ClosedPoint::finite(q);
  switch (k.kind) {
    case FieldKind::PrimeField:
      detail::check_irreducible_fp(q);
      return ClosedPoint::finite(q);
    case FieldKind::Rationals:
      if (q.degree() <= 3) {
        if (auto r = detail::rational_root(q)) throw ReducibleError(q, "root " + r->get_str());
        return ClosedPoint::finite(q);
      }
      if (policy == TrustPolicy::Strict) throw UndecidableError("strict irreducibility over Q is limited to degree <= 3");
      if (auto r = detail::rational_root(q)) throw ReducibleError(q, "root " + r->get_str());
      break;
    case FieldKind::RationalFunctions: {
      if (policy == TrustPolicy::Strict) throw UndecidableError("strict irreducibility over " + k.name() + " is not available");
      InsepProfile prof = insep_profile(ClosedPoint::finite(q));
      Poly qt = prof.qtilde;
      if (qt.degree() > 1) {
        Poly g = gcd(qt, qt.derivative());
        if (g.degree() > 0) throw ReducibleError(q, "repeated factor " + g.str() + " of the separable part");
      }
      if (prof.ell > 0) {
        bool all_pth = std::all_of(qt.terms().begin(), qt.terms().end(), [](const auto& kv) { return kv.second.is_pth_power(); });
        if (all_pth) throw ReducibleError(q, "all coefficients are p-th powers, so q is a p-th power");
      }
      Scalar l = Scalar::lambda(k);
      for (std::uint32_t a = 0; a < k.p; ++a)
        for (std::uint32_t b = 0; b < k.p; ++b) {
          Scalar c = Scalar::from_int(k, a) + Scalar::from_int(k, b) * l;
          if (q.eval(c).is_zero()) throw ReducibleError(q, "root " + c.str());
          if (!c.is_zero() && q.eval(c.inverse()).is_zero()) throw ReducibleError(q, "root " + c.inverse().str());
        }
      break;
    }
  }
  return ClosedPoint::finite(q, true);
}

}  // namespace ghz
