#pragma once

#include <map>
#include <sstream>

#include "ghz/arith/poly.hpp"
#include "ghz/polyhedral/linalg.hpp"

namespace ghz {

/// Finite sum of f_m chi^m with f_m in k(t).
class GradedElement {
 public:
  explicit GradedElement(BaseField k) : k_(k) {}

  static GradedElement monomial(const IntVec& m, const RatFunc& f) {
    GradedElement x(f.field());
    x.add(m, f);
    return x;
  }

  const BaseField& field() const { return k_; }
  const std::map<IntVec, RatFunc>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const { return terms_.size() <= 1; }

  RatFunc coeff(const IntVec& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RatFunc::zero(k_) : it->second;
  }

  void add(const IntVec& m, const RatFunc& f) {
    if (f.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, f);
      return;
    }
    it->second = it->second + f;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend GradedElement operator+(GradedElement a, const GradedElement& b) {
    for (const auto& [m, f] : b.terms_) a.add(m, f);
    return a;
  }
  friend GradedElement operator-(const GradedElement& a, const GradedElement& b) {
    return a + Scalar::from_int(b.k_, -1) * b;
  }
  friend GradedElement operator*(const Scalar& s, const GradedElement& a) {
    GradedElement r(a.k_);
    for (const auto& [m, f] : a.terms_) r.add(m, s * f);
    return r;
  }
  friend GradedElement operator*(const GradedElement& a, const GradedElement& b) {
    GradedElement r(a.k_);
    for (const auto& [m1, f1] : a.terms_)
      for (const auto& [m2, f2] : b.terms_) r.add(m1 + m2, f1 * f2);
    return r;
  }
  friend bool operator==(const GradedElement& a, const GradedElement& b) { return a.terms_ == b.terms_; }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, f] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << "(" << f.str() << ")*chi^" << vec_str(m);
    }
    return os.str();
  }

 private:
  BaseField k_;
  std::map<IntVec, RatFunc> terms_;
};

}  // namespace ghz
