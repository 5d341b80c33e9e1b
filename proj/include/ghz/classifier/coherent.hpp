#pragma once

/**
 * @file coherent.hpp
 * @brief Coherent families: the vertex conditions and their floor forms.
 */

#include <sstream>

#include "ghz/classifier/coloring.hpp"

namespace ghz {

struct CoherentFamily {
  Coloring coloring;
  IntVec e;
  std::vector<long> s;
  std::vector<Scalar> lambda;

  /// Characteristic zero only knows s = (1).
  static CoherentFamily make(Coloring c, IntVec e, std::vector<long> s, std::vector<Scalar> lambda) {
    if (c.D.field().char_exponent() == 1 && s.size() == 1) s = {1};
    return {std::move(c), std::move(e), std::move(s), std::move(lambda)};
  }

  Integer p_pow(long si) const {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), Integer(coloring.D.field().char_exponent()).get_mpz_t(), static_cast<unsigned long>(si));
    return r;
  }

  /// p^{s_1} e
  IntVec w() const {
    IntVec out = e;
    Integer f = p_pow(s.at(0));
    for (auto& x : out) x *= f;
    return out;
  }

  /// (p^{s_i} e, -1/d - <p^{s_i} e, v_y0>)
  RatVec lifted_root(std::size_t i, const Integer& d) const {
    Integer f = p_pow(s.at(i));
    RatVec out;
    for (const auto& x : e) out.push_back(Rational(x * f));
    Rational last = Rational(-1) / Rational(d) - dot(out, coloring.v(coloring.y0));
    last.canonicalize();
    out.push_back(last);
    return out;
  }
};

struct CoherenceViolation {
  std::string clause;  ///< "(i)", "(ii)", "(iii)", "(iv)", "(v)", "(vi)", "(vii)"
  std::optional<ClosedPoint> point;
  std::optional<RatVec> vertex;
  Rational lhs, rhs;
  std::string detail;

  std::string str() const {
    std::ostringstream os;
    os << clause << " fails";
    if (point) os << " at " << point->str();
    if (vertex) os << ", v=" << vec_str(*vertex);
    if (!detail.empty()) os << ": " << detail;
    return os.str();
  }
};

struct CoherenceReport {
  std::vector<CoherenceViolation> violations;
  std::vector<std::string> notes;
  std::optional<AssociatedCones> cones;
  bool coherent() const { return violations.empty(); }
  bool fails(const std::string& clause) const {
    return std::any_of(violations.begin(), violations.end(), [&](const CoherenceViolation& v) { return v.clause == clause; });
  }
};

namespace detail {

inline std::string inequality(const Rational& lhs, const Rational& rhs) {
  return to_string(lhs) + " >= " + to_string(rhs) + " is false";
}

/// Conditions (v), (vi), (vii); shared by coherent_validate and the probe.
inline void vertex_conditions(const CoherentFamily& th, const AssociatedCones& a, CoherenceReport& r) {
  const Coloring& c = th.coloring;
  RatVec w = to_rat(th.w());
  Integer pu;
  mpz_pow_ui(pu.get_mpz_t(), Integer(c.D.field().char_exponent()).get_mpz_t(), static_cast<unsigned long>(a.u));
  for (const auto& y : c.affine_support()) {
    if (y == c.y0) continue;
    Rational f(insep_profile(y).eps * pu);
    RatVec vy = c.v(y);
    for (const auto& v : c.D.at(y).vertices()) {
      if (v == vy) continue;
      Rational lhs = f * dot(w, v), rhs = 1 + f * dot(w, vy);
      if (lhs < rhs) r.violations.push_back({"(v)", y, v, lhs, rhs, inequality(lhs, rhs)});
    }
  }
  Rational d(a.d);
  if (c.D.in_support(c.y0)) {
    for (const auto& v : c.D.at(c.y0).vertices()) {
      if (v == a.v_y0) continue;
      Rational lhs = d * dot(w, v), rhs = 1 + d * dot(w, a.v_y0);
      if (lhs < rhs) r.violations.push_back({"(vi)", c.y0, v, lhs, rhs, inequality(lhs, rhs)});
    }
  }
  if (c.y_inf) {
    for (const auto& v : c.D.at(*c.y_inf).vertices()) {
      Rational lhs = d * dot(w, v), rhs = -1 - d * dot(w, a.v_deg);
      if (lhs < rhs) r.violations.push_back({"(vii)", *c.y_inf, v, lhs, rhs, inequality(lhs, rhs)});
    }
  }
}

}  // namespace detail

inline CoherenceReport coherent_validate(const CoherentFamily& th) {
  CoherenceReport r;
  const Coloring& c = th.coloring;
  ValidationReport cv = coloring_validate(c);
  for (const auto& v : cv.violations) r.violations.push_back({"(i)", std::nullopt, std::nullopt, 0, 0, v});
  r.notes = cv.notes;
  if (!r.coherent()) return r;
  std::size_t n = c.D.rank();
  if (th.e.size() != n) {
    r.violations.push_back({"(ii)", std::nullopt, std::nullopt, 0, 0, "e has " + std::to_string(th.e.size()) + " entries, rank is " + std::to_string(n)});
    return r;
  }
  std::uint32_t p = c.D.field().char_exponent();
  if (th.s.empty()) r.violations.push_back({"(iii)", std::nullopt, std::nullopt, 0, 0, "s is empty"});
  for (std::size_t i = 0; i < th.s.size(); ++i) {
    if (th.s[i] < 0) r.violations.push_back({"(iii)", std::nullopt, std::nullopt, 0, 0, "s entries must be nonnegative"});
    if (i && th.s[i] <= th.s[i - 1]) r.violations.push_back({"(iii)", std::nullopt, std::nullopt, 0, 0, "s must be strictly increasing"});
  }
  if (p == 1 && !(th.s.size() == 1 && th.s[0] == 1))
    r.violations.push_back({"(iii)", std::nullopt, std::nullopt, 0, 0, "in characteristic zero s must be (1)"});
  if (th.lambda.size() != th.s.size())
    r.violations.push_back({"(iv)", std::nullopt, std::nullopt, 0, 0, "lambda and s differ in length"});
  for (const auto& l : th.lambda)
    if (l.is_zero()) r.violations.push_back({"(iv)", std::nullopt, std::nullopt, 0, 0, "lambda entries must be nonzero"});
  if (!r.coherent()) return r;
  if (p > 1 && th.s[0] == 0) r.notes.push_back("s_1 = 0 is accepted (nonnegative exponents)");

  AssociatedCones a = associated_cones(c);
  r.cones = a;
  if (!a.ray_is_extremal) {
    r.violations.push_back({"(iii)", std::nullopt, std::nullopt, 0, 0, "(v_y0,1) does not span a ray of tau~ = " + a.tau_tilde.str()});
    return r;
  }
  for (std::size_t i = 0; i < th.s.size(); ++i) {
    RatVec et = th.lifted_root(i, a.d);
    std::string name = "e~_" + std::to_string(i + 1) + " = " + vec_str(et);
    if (!is_integral(et))
      r.violations.push_back({"(iii)", std::nullopt, et, 0, 0, name + " is not a lattice vector"});
    else if (!demazure_root_check(a.tau_tilde, a.distinguished_ray, et))
      r.violations.push_back({"(iii)", std::nullopt, et, 0, 0, name + " is not a Demazure root of " + a.tau_tilde.str()});
  }
  detail::vertex_conditions(th, a, r);
  return r;
}

struct FloorWitness {
  std::string clause;  ///< "(4)", "(5)" or "(6)"
  ClosedPoint point;
  IntVec m;
  Integer lhs, rhs;
  std::string str() const {
    return clause + " fails at " + point.str() + ", m=" + vec_str(m) + ": " + lhs.get_str() + " >= " + rhs.get_str() + " is false";
  }
};

struct ConditionReport {
  bool holds4 = true, holds5 = true, holds6 = true;
  std::vector<FloorWitness> witnesses;  ///< first failure per clause and point
  bool ok() const { return holds4 && holds5 && holds6; }
};

/// Floor forms of (v), (vi), (vii) over m in the box, m and m + p^{s_1}e in the weight cone.
inline ConditionReport floor_condition_check(const CoherentFamily& th, long box) {
  const Coloring& c = th.coloring;
  const auto& D = c.D;
  AssociatedCones a = associated_cones(c);
  Integer pu;
  mpz_pow_ui(pu.get_mpz_t(), Integer(D.field().char_exponent()).get_mpz_t(), static_cast<unsigned long>(a.u));
  IntVec w = th.w();
  RatVec wr = to_rat(w);
  Cone wc = D.weight_cone();
  Rational d(a.d);
  ConditionReport rep;
  std::set<std::pair<std::string, ClosedPoint>> seen;
  auto fail = [&](const std::string& cl, const ClosedPoint& y, const IntVec& m, const Integer& lhs, const Integer& rhs) {
    (cl == "(4)" ? rep.holds4 : cl == "(5)" ? rep.holds5 : rep.holds6) = false;
    if (seen.insert({cl, y}).second) rep.witnesses.push_back({cl, y, m, lhs, rhs});
  };
  std::vector<std::pair<ClosedPoint, Rational>> others;
  for (const auto& y : c.affine_support())
    if (!(y == c.y0) && D.in_support(y)) others.emplace_back(y, Rational(insep_profile(y).eps * pu));
  for_each_box_point(D.rank(), box, [&](const IntVec& m) {
    IntVec mw = m + w;
    if (!wc.contains(m) || !wc.contains(mw)) return;
    for (const auto& [y, f] : others) {
      Polyhedron P = D.at(y);
      RatVec vy = c.v(y);
      Rational h1 = *P.min(mw) - dot(to_rat(mw), vy), h0 = *P.min(m) - dot(to_rat(m), vy);
      if (h1 == 0) continue;
      Integer lhs = floor_of(f * h1) - floor_of(f * h0);
      if (lhs < 1) fail("(4)", y, m, lhs, 1);
    }
    if (D.in_support(c.y0)) {
      Polyhedron P = D.at(c.y0);
      Rational h1 = *P.min(mw), h0 = *P.min(m);
      if (h1 != dot(to_rat(mw), a.v_y0)) {
        Integer lhs = floor_of(d * h1) - floor_of(d * h0);
        Integer rhs = 1 + floor_of(d * dot(wr, a.v_y0));
        if (lhs < rhs) fail("(5)", c.y0, m, lhs, rhs);
      }
    }
    if (c.y_inf) {
      Polyhedron P = D.at(*c.y_inf);
      Integer lhs = floor_of(d * *P.min(mw)) - floor_of(d * *P.min(m));
      Integer rhs = -1 - floor_of(d * dot(wr, a.v_deg));
      if (lhs < rhs) fail("(6)", *c.y_inf, m, lhs, rhs);
    }
  });
  return rep;
}

}  // namespace ghz
