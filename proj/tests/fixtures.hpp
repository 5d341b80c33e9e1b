#pragma once

#include "ghz/tvariety/pdiv.hpp"

namespace ghz::fixtures {

inline RatVec rv(std::initializer_list<Rational> xs) { return RatVec(xs); }
inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}
inline ClosedPoint pt(const char* s, const BaseField& k) { return point_validate(parse_poly(s, k), TrustPolicy::Trusted); }

/// {1/5}[0] + [0,1/5][y] over A^1 with sigma = {0}; y = t^2 - l over F_2(l)
/// or, when rational_y, y = t + 1 over F_2.
inline PolyhedralDivisor w25(bool rational_y = false) {
  BaseField k = rational_y ? BaseField::prime_field(2) : BaseField::rational_functions(2);
  Cone z = Cone::zero(1);
  return PolyhedralDivisor(k, Curve::A1, z,
                           {{pt("t", k), Polyhedron::point(rv({Rational(1, 5)}), z)},
                            {pt(rational_y ? "t+1" : "t^2+l", k), Polyhedron({rv({0}), rv({Rational(1, 5)})}, z)}});
}

/// D_0 = (1/2,0) + sigma, D_1 = [(1/2,0),(0,1)] + sigma, sigma the orthant.
inline PolyhedralDivisor char2_ramified(const BaseField& k) {
  Cone o = Cone::orthant(2);
  return PolyhedralDivisor(k, Curve::A1, o,
                           {{pt("t", k), Polyhedron::point(rv({Rational(1, 2), 0}), o)},
                            {pt("t-1", k), Polyhedron({rv({Rational(1, 2), 0}), rv({0, 1})}, o)}});
}

}  // namespace ghz::fixtures
