#pragma once

#include "ghz/tvariety/pdiv.hpp"

namespace ghz {

enum class ToricityVerdict { Met, Violated, NotApplicable };

inline const char* verdict_name(ToricityVerdict v) {
  switch (v) {
    case ToricityVerdict::Met: return "met";
    case ToricityVerdict::Violated: return "violated";
    default: return "not applicable (hyperbolic)";
  }
}

struct ToricityReport {
  ToricityVerdict verdict = ToricityVerdict::NotApplicable;
  QDivisor fractional;  ///< {D(u)} for u the primitive generator of the weight cone
  std::string reason;
};

/// Surface criterion for rank one: the fractional part of D(u) sits on at most
/// one rational point (A1) or two (P1).
inline ToricityReport toricity_check(const PolyhedralDivisor& D) {
  if (D.rank() != 1) throw std::invalid_argument("toricity check needs rank 1, got " + std::to_string(D.rank()));
  ToricityReport r;
  const Cone& tail = D.tail();
  if (tail.rays().empty() && tail.lineality().empty()) {
    r.reason = "tail cone is {0}, the grading is hyperbolic";
    return r;
  }
  IntVec u = D.weight_cone().rays().front();
  QDivisor E = pdiv_eval(D, u);
  std::size_t limit = D.curve() == Curve::A1 ? 1 : 2;
  std::size_t count = 0;
  for (const auto& [y, a] : E.terms()) {
    Rational frac = a - Rational(floor_of(a));
    if (frac == 0) continue;
    r.fractional.add(y, frac);
    ++count;
    if (!y.is_rational()) {
      r.verdict = ToricityVerdict::Violated;
      r.reason = "fractional part at non-rational point " + y.str();
    }
  }
  if (!r.reason.empty()) return r;
  if (count > limit) {
    r.verdict = ToricityVerdict::Violated;
    r.reason = "fractional part supported at " + std::to_string(count) + " points, at most " + std::to_string(limit) + " allowed";
  } else {
    r.verdict = ToricityVerdict::Met;
    r.reason = "fractional part supported at " + std::to_string(count) + " rational point(s)";
  }
  return r;
}

}  // namespace ghz
