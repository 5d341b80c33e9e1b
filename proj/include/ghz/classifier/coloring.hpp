#pragma once

/**
 * @file coloring.hpp
 * @brief Colorings of a polyhedral divisor and their associated cones.
 */

#include "ghz/polyhedral/lattice.hpp"
#include <set>

#include "ghz/tvariety/pdiv.hpp"

namespace ghz {

struct Coloring {
  PolyhedralDivisor D;
  /// colored vertex v_y for points of C' (points left out carry 0)
  std::vector<std::pair<ClosedPoint, RatVec>> vertices;
  ClosedPoint y0;
  std::optional<ClosedPoint> y_inf;

  RatVec v(const ClosedPoint& y) const {
    for (const auto& [p, x] : vertices)
      if (p == y) return x;
    return RatVec(D.rank(), Rational(0));
  }

  /// Support points of C' = C minus y_inf.
  std::vector<ClosedPoint> affine_support() const {
    std::vector<ClosedPoint> out;
    for (const auto& s : D.support())
      if (!y_inf || !(s.point == *y_inf)) out.push_back(s.point);
    return out;
  }

  /// sum [k_y : k] v_y over C'.
  RatVec v_deg() const {
    RatVec s(D.rank(), Rational(0));
    for (const auto& y : affine_support()) s = s + Rational(y.residue_degree()) * v(y);
    return s;
  }
};

inline ValidationReport coloring_validate(const Coloring& c) {
  ValidationReport r;
  const auto& D = c.D;
  // coloring (i)
  if (D.curve() == Curve::P1) {
    if (!c.y_inf)
      r.violations.push_back("coloring (i): a P1 coloring needs a rational point y_infinity");
    else if (!c.y_inf->is_rational())
      r.violations.push_back("coloring (i): y_infinity = " + c.y_inf->str() + " is not k-rational");
    else if (*c.y_inf == c.y0)
      r.violations.push_back("coloring (i): y_infinity must differ from y0");
  } else if (c.y_inf) {
    r.violations.push_back("coloring (i): y_infinity is only used over P1");
  }
  if (!r.ok()) return r;
  // coloring (ii)
  if (c.y0.is_infinity() || !c.y0.is_rational()) r.violations.push_back("coloring (ii): y0 = " + c.y0.str() + " is not a finite k-rational point");
  for (const auto& [y, v] : c.vertices) {
    if (c.y_inf && y == *c.y_inf) {
      r.violations.push_back("coloring (i): y_infinity carries no colored vertex");
      continue;
    }
    if (!(y == c.y0) && !is_integral(v))
      r.violations.push_back("coloring (ii): v_y = " + vec_str(v) + " at y = " + y.str() + " is not a lattice point");
  }
  if (!r.ok()) return r;
  // coloring (iii)
  for (const auto& y : c.affine_support()) {
    bool listed = std::any_of(c.vertices.begin(), c.vertices.end(), [&](const auto& kv) { return kv.first == y; });
    if (!listed) {
      r.violations.push_back("coloring (iii): no colored vertex at support point " + y.str());
      continue;
    }
    if (!D.at(y).is_vertex(c.v(y))) r.violations.push_back("coloring (iii): " + vec_str(c.v(y)) + " is not a vertex of D_" + y.str());
  }
  for (const auto& [y, v] : c.vertices)
    if (!D.in_support(y) && !is_zero(v)) r.violations.push_back("coloring (iii): off-support point " + y.str() + " must carry the vertex 0");
  if (r.ok()) {
    DegreeData deg = deg_restricted(D, c.y_inf);
    if (!deg.polyhedron.is_vertex(c.v_deg()))
      r.violations.push_back("coloring (iii): v_deg = " + vec_str(c.v_deg()) + " is not a vertex of deg D|C'");
  }
  for (const auto& s : D.support())
    if (s.point.trusted()) r.notes.push_back("irreducibility of " + s.point.str() + " is trusted, not proved");
  return r;
}

struct AssociatedCones {
  Cone omega, tau, tau_tilde;
  Integer d = 1, ell = 1;
  long u = 0;
  IntVec distinguished_ray;
  RatVec v_y0, v_deg;
  bool ray_is_extremal = true;
};

inline AssociatedCones associated_cones(const Coloring& c) {
  ValidationReport rep = coloring_validate(c);
  if (!rep.ok()) throw std::invalid_argument("invalid coloring: " + rep.violations.front());
  const auto& D = c.D;
  std::size_t n = D.rank();
  AssociatedCones a;
  a.v_y0 = c.v(c.y0);
  a.v_deg = c.v_deg();
  DegreeData deg = deg_restricted(D, c.y_inf);
  RatMatrix gens;
  for (const auto& w : deg.vertices) gens.push_back(w - a.v_deg);
  for (const auto& r : D.tail().rays()) gens.push_back(to_rat(r));
  a.tau = Cone::from_generators(n, gens);
  a.omega = a.tau.dual();
  for (const auto& x : a.v_y0) a.d = lcm(a.d, x.get_den());
  std::uint32_t p = D.field().char_exponent();
  a.ell = a.d;
  if (p > 1)
    while (a.ell % p == 0) {
      a.ell /= p;
      ++a.u;
    }
  RatMatrix tg;
  for (const auto& r : a.tau.rays()) {
    RatVec g = to_rat(r);
    g.push_back(0);
    tg.push_back(g);
  }
  for (const auto& l : a.tau.lineality()) {
    RatVec g = to_rat(l);
    g.push_back(0);
    tg.push_back(g);
    tg.push_back(Rational(-1) * g);
  }
  RatVec top = a.v_y0;
  top.push_back(1);
  tg.push_back(top);
  if (c.y_inf) {
    for (const auto& w : D.at(*c.y_inf).vertices()) {
      RatVec g = w + a.v_deg - a.v_y0;
      g.push_back(-1);
      tg.push_back(g);
    }
  }
  a.tau_tilde = Cone::from_generators(n + 1, tg);
  a.distinguished_ray = primitive(top);
  a.ray_is_extremal = a.tau_tilde.has_ray(a.distinguished_ray);
  return a;
}

/// <e, mu> = -1 on the distinguished ray, >= 0 on the other rays, 0 on the lineality.
inline bool demazure_root_check(const Cone& cone, const IntVec& ray, const RatVec& e) {
  if (!cone.has_ray(ray)) throw std::invalid_argument("distinguished ray " + vec_str(ray) + " is not a ray of " + cone.str());
  if (e.size() != cone.ambient_dim()) throw std::invalid_argument("root candidate of wrong dimension");
  if (dot(e, ray) != -1) return false;
  for (const auto& r : cone.rays())
    if (r != ray && dot(e, r) < 0) return false;
  for (const auto& l : cone.lineality())
    if (dot(e, l) != 0) return false;
  return true;
}

/// Roots with |e_i| <= B; the last coordinate may have denominator up to max_den.
inline std::vector<RatVec> demazure_roots_enumerate(const Cone& cone, const IntVec& ray, long B, long max_den = 1) {
  std::set<RatVec> found;
  std::size_t n = cone.ambient_dim();
  if (B < 0 || n < 1) return {};
  for_each_box_point(n - 1, B, [&](const IntVec& head) {
    for (long q = 1; q <= max_den; ++q)
      for (long k = -B * q; k <= B * q; ++k) {
        RatVec e = to_rat(head);
        e.push_back(make_rational(Integer(k), Integer(q)));
        if (!found.count(e) && demazure_root_check(cone, ray, e)) found.insert(e);
      }
  });
  return {found.begin(), found.end()};
}

}  // namespace ghz
