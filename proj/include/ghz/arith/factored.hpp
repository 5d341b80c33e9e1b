#pragma once

#include "ghz/arith/expr.hpp"

#include <algorithm>
#include <vector>

namespace ghz {

/// unit * prod q_i^{a_i} with monic nonconstant q_i, pairwise distinct, a_i != 0.
/// The factors are never factored further.
class FactoredRatFunc {
 public:
  using Factor = std::pair<Poly, long>;

  explicit FactoredRatFunc(Scalar unit, std::vector<Factor> factors = {}) : unit_(std::move(unit)) {
    if (unit_.is_zero()) throw std::domain_error("factored rational function with zero unit");
    for (auto& [q, a] : factors) absorb(q, a);
    std::sort(factors_.begin(), factors_.end(), [](const Factor& x, const Factor& y) { return poly_less(x.first, y.first); });
  }

  static FactoredRatFunc one(const BaseField& k) { return FactoredRatFunc(Scalar::one(k)); }
  static FactoredRatFunc of(const Poly& q, long a = 1) { return FactoredRatFunc(Scalar::one(q.field()), {{q, a}}); }

  const Scalar& unit() const { return unit_; }
  const std::vector<Factor>& factors() const { return factors_; }
  const BaseField& field() const { return unit_.field(); }

  long exponent_of(const Poly& q) const {
    Poly m = q.monic();
    for (const auto& [f, a] : factors_)
      if (f == m) return a;
    return 0;
  }

  friend bool operator==(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    return a.unit_ == b.unit_ && a.factors_ == b.factors_;
  }

  friend FactoredRatFunc operator*(const FactoredRatFunc& a, const FactoredRatFunc& b) {
    std::vector<Factor> all = a.factors_;
    all.insert(all.end(), b.factors_.begin(), b.factors_.end());
    return FactoredRatFunc(a.unit_ * b.unit_, std::move(all));
  }
  FactoredRatFunc pow(long e) const {
    std::vector<Factor> f;
    for (const auto& [q, a] : factors_) f.emplace_back(q, a * e);
    return FactoredRatFunc(unit_.pow(e), std::move(f));
  }
  friend FactoredRatFunc operator/(const FactoredRatFunc& a, const FactoredRatFunc& b) { return a * b.pow(-1); }

  RatFunc to_ratfunc(char var = 't') const {
    Poly num = Poly::constant(unit_, var), den = Poly::constant(Scalar::one(field()), var);
    for (const auto& [q, a] : factors_) {
      if (a > 0)
        num *= q.with_var(var).pow(static_cast<unsigned long>(a));
      else
        den *= q.with_var(var).pow(static_cast<unsigned long>(-a));
    }
    return RatFunc(num, den);
  }

  /// e.g. "1/2*t*(t-1)^-1"; "1" for the unit one.
  std::string str() const {
    std::string out;
    if (!unit_.is_one() || factors_.empty()) out = unit_.needs_parens() ? "(" + unit_.str() + ")" : unit_.str();
    for (const auto& [q, a] : factors_) {
      if (!out.empty()) out += "*";
      std::string qs = q.str();
      if (q.terms().size() > 1) qs = "(" + qs + ")";
      out += qs;
      if (a != 1) out += "^" + std::to_string(a);
    }
    return out;
  }

 private:
  void absorb(const Poly& q, long a) {
    if (a == 0) return;
    if (q.is_zero()) throw std::domain_error("zero factor");
    q.require_polynomial("factor");
    if (q.degree() == 0) {
      unit_ *= q.lead().pow(a);
      return;
    }
    unit_ *= q.lead().pow(a);
    Poly m = q.monic();
    for (auto it = factors_.begin(); it != factors_.end(); ++it) {
      if (it->first == m) {
        it->second += a;
        if (it->second == 0) factors_.erase(it);
        return;
      }
    }
    factors_.emplace_back(std::move(m), a);
  }

  Scalar unit_;
  std::vector<Factor> factors_;
};

/// Parses a product of powered factors, e.g. "t^2*(t-1)^-1" or "2*t/(t+1)".
/// Each parenthesised base becomes one factor (not factored further).
inline FactoredRatFunc parse_factored(std::string_view s, const BaseField& k) {
  FactoredRatFunc acc = FactoredRatFunc::one(k);
  std::size_t i = 0;
  bool divide = false;
  auto skip = [&] {
    while (i < s.size() && s[i] == ' ') ++i;
  };
  skip();
  while (i < s.size()) {
    std::size_t start = i;
    if (s[i] == '(') {
      int depth = 0;
      for (; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) {
          ++i;
          break;
        }
      }
      if (depth != 0) throw ParseError("unbalanced parentheses in '" + std::string(s) + "'");
    } else {
      while (i < s.size() && s[i] != '*' && s[i] != '/' && s[i] != '^' && s[i] != ' ') ++i;
    }
    Poly base = parse_poly(s.substr(start, i - start), k);
    skip();
    long e = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      skip();
      std::size_t es = i;
      if (i < s.size() && (s[i] == '-' || s[i] == '(')) ++i;
      while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '-' || s[i] == ')')) ++i;
      std::string ex(s.substr(es, i - es));
      ex.erase(std::remove(ex.begin(), ex.end(), '('), ex.end());
      ex.erase(std::remove(ex.begin(), ex.end(), ')'), ex.end());
      try {
        e = std::stol(ex);
      } catch (const std::exception&) {
        throw ParseError("bad exponent in '" + std::string(s) + "'");
      }
    }
    if (base.is_zero()) throw ParseError("zero factor in '" + std::string(s) + "'");
    acc = acc * FactoredRatFunc(Scalar::one(k), {{base, divide ? -e : e}});
    skip();
    if (i >= s.size()) break;
    if (s[i] == '*') {
      divide = false;
    } else if (s[i] == '/') {
      divide = true;
    } else {
      throw ParseError("expected '*' or '/' in '" + std::string(s) + "'");
    }
    ++i;
    skip();
  }
  return acc;
}

}  // namespace ghz
