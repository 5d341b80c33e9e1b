#pragma once

#include "ghz/curve/point.hpp"

#include <map>

namespace ghz {

/// Finite formal sum of closed points with rational coefficients.
class QDivisor {
 public:
  QDivisor() = default;

  Rational coeff(const ClosedPoint& y) const {
    auto it = c_.find(y);
    return it == c_.end() ? Rational(0) : it->second;
  }
  void add(const ClosedPoint& y, const Rational& a) {
    if (a == 0) return;
    auto [it, fresh] = c_.try_emplace(y, a);
    if (!fresh) {
      it->second += a;
      if (it->second == 0) c_.erase(it);
    }
  }
  const std::map<ClosedPoint, Rational>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  friend QDivisor operator+(QDivisor a, const QDivisor& b) {
    for (const auto& [y, x] : b.c_) a.add(y, x);
    return a;
  }
  friend QDivisor operator*(const Rational& s, const QDivisor& a) {
    QDivisor r;
    for (const auto& [y, x] : a.c_) r.add(y, s * x);
    return r;
  }
  friend bool operator==(const QDivisor& a, const QDivisor& b) { return a.c_ == b.c_; }

  QDivisor floor() const {
    QDivisor r;
    for (const auto& [y, x] : c_) r.add(y, Rational(floor_of(x)));
    return r;
  }
  /// sum of coefficient * residue degree
  Rational degree() const {
    Rational d = 0;
    for (const auto& [y, x] : c_) d += x * y.residue_degree();
    return d;
  }
  bool is_integral() const {
    return std::all_of(c_.begin(), c_.end(), [](const auto& kv) { return ghz::is_integral(kv.second); });
  }
  bool is_effective() const {
    return std::all_of(c_.begin(), c_.end(), [](const auto& kv) { return kv.second >= 0; });
  }

  /// "-1·[t] -1·[t^2+l]"; "0" when empty.
  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (const auto& [y, x] : c_) {
      if (!s.empty()) s += x < 0 ? " " : " +";
      s += x.get_str() + "·[" + y.str() + "]";
    }
    return s;
  }

 private:
  std::map<ClosedPoint, Rational> c_;
};

inline QDivisor principal_divisor(const FactoredRatFunc& f, Curve curve, TrustPolicy policy = TrustPolicy::Trusted) {
  QDivisor d;
  long total = 0;
  for (const auto& [q, a] : f.factors()) {
    ClosedPoint y = point_validate(q, policy);
    d.add(y, Rational(a));
    total += a * q.degree();
  }
  if (curve == Curve::P1) d.add(ClosedPoint::infinity(), Rational(-total));
  return d;
}

inline std::pair<QDivisor, Rational> divisor_floor_deg(const QDivisor& E) {
  QDivisor f = E.floor();
  return {f, f.degree()};
}

/// H^0 of O(floor E): a k[t]-generator on A1, a k-basis on P1.
struct ModuleDescription {
  Curve curve = Curve::A1;
  FactoredRatFunc generator = FactoredRatFunc::one(BaseField::rationals());
  /// P1 only: {generator * t^j : 0 <= j <= degree bound}.
  std::vector<FactoredRatFunc> basis;
  /// P1 only: deg floor E (negative means H^0 = 0).
  long degree_bound = 0;

  bool is_zero() const { return curve == Curve::P1 && degree_bound < 0; }
};

inline ModuleDescription h0_generators(const QDivisor& E, Curve curve, const BaseField& k) {
  ModuleDescription m;
  m.curve = curve;
  std::vector<FactoredRatFunc::Factor> factors;
  long deg = 0;
  for (const auto& [y, a] : E.terms()) {
    long fl = to_long(floor_of(a));
    deg += fl * y.residue_degree();
    if (y.is_infinity()) {
      if (curve == Curve::A1) throw std::invalid_argument("divisor on A1 supported at infinity");
      continue;
    }
    factors.emplace_back(y.poly(), -fl);
  }
  m.generator = FactoredRatFunc(Scalar::one(k), factors);
  if (curve == Curve::P1) {
    m.degree_bound = deg;
    for (long j = 0; j <= deg; ++j) m.basis.push_back(m.generator * FactoredRatFunc::of(Poly::variable(k), 1).pow(j));
  }
  return m;
}

/// f in H^0(C, O(floor E)).
inline bool in_h0(const RatFunc& f, const ModuleDescription& m) {
  if (f.is_zero()) return true;
  if (m.is_zero()) return false;
  RatFunc h = f / m.generator.to_ratfunc();
  if (!h.is_polynomial()) return false;
  return m.curve == Curve::A1 || h.num().degree() <= m.degree_bound;
}

}  // namespace ghz
