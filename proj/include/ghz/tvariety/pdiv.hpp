#pragma once

/**
 * @file pdiv.hpp
 * @brief Polyhedral divisors over A^1 or P^1 and their graded pieces.
 */

#include "ghz/curve/divisor.hpp"
#include "ghz/polyhedral/polyhedron.hpp"

#include <optional>

namespace ghz {

struct SupportEntry {
  ClosedPoint point;
  Polyhedron polyhedron;
};

class PolyhedralDivisor {
 public:
  PolyhedralDivisor(BaseField k, Curve curve, Cone tail, std::vector<SupportEntry> support)
      : k_(k), curve_(curve), tail_(std::move(tail)), support_(std::move(support)),
        trivial_(Polyhedron::point(RatVec(tail_.ambient_dim(), Rational(0)), tail_)) {
    std::sort(support_.begin(), support_.end(), [](const SupportEntry& a, const SupportEntry& b) { return a.point < b.point; });
    for (std::size_t i = 0; i < support_.size(); ++i) {
      if (support_[i].polyhedron.dim() != tail_.ambient_dim()) throw std::invalid_argument("support polyhedron of wrong dimension");
      if (i && support_[i].point == support_[i - 1].point) throw std::invalid_argument("point " + support_[i].point.str() + " listed twice");
      if (curve_ == Curve::A1 && support_[i].point.is_infinity()) throw std::invalid_argument("A1 divisor supported at infinity");
    }
  }

  const BaseField& field() const { return k_; }
  Curve curve() const { return curve_; }
  std::size_t rank() const { return tail_.ambient_dim(); }
  const Cone& tail() const { return tail_; }
  Cone weight_cone() const { return tail_.dual(); }
  const std::vector<SupportEntry>& support() const { return support_; }

  bool in_support(const ClosedPoint& y) const {
    return std::any_of(support_.begin(), support_.end(), [&](const SupportEntry& s) { return s.point == y; });
  }
  /// D_y, which is the tail itself off the support.
  const Polyhedron& at(const ClosedPoint& y) const {
    for (const auto& s : support_)
      if (s.point == y) return s.polyhedron;
    return trivial_;
  }

 private:
  BaseField k_;
  Curve curve_;
  Cone tail_;
  std::vector<SupportEntry> support_;
  Polyhedron trivial_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> notes;
  bool ok() const { return violations.empty(); }
};

/// deg D = sum [k_y : k] D_y over the points other than `skip`.
inline Polyhedron degree_polyhedron(const PolyhedralDivisor& D, const std::optional<ClosedPoint>& skip = std::nullopt) {
  std::vector<std::pair<Integer, Polyhedron>> terms;
  for (const auto& s : D.support())
    if (!skip || !(s.point == *skip)) terms.emplace_back(s.point.residue_degree(), s.polyhedron);
  return minkowski_weighted_sum(D.tail(), terms);
}

inline ValidationReport pdiv_validate(const PolyhedralDivisor& D) {
  ValidationReport r;
  for (const auto& s : D.support()) {
    if (!(s.polyhedron.tail() == D.tail())) r.violations.push_back("tail of D_" + s.point.str() + " differs from the tail cone");
    if (s.point.trusted()) r.notes.push_back("irreducibility of " + s.point.str() + " is trusted, not proved");
  }
  if (!D.tail().is_pointed()) r.violations.push_back("tail cone is not pointed (weight cone not full-dimensional)");
  if (r.violations.empty() && D.curve() == Curve::P1) {
    Polyhedron deg = degree_polyhedron(D);
    bool inside = std::all_of(deg.vertices().begin(), deg.vertices().end(), [&](const RatVec& v) { return D.tail().contains(v); });
    if (!inside) r.violations.push_back("P1 positivity: deg D is not contained in the tail cone");
    if (deg.contains(RatVec(D.rank(), Rational(0)))) r.violations.push_back("P1 positivity: 0 lies in deg D, so deg D is not a proper subset");
  }
  return r;
}

/// D(m) = sum_y min_{D_y} <m, .> [y]; throws outside the weight cone.
inline QDivisor pdiv_eval(const PolyhedralDivisor& D, const IntVec& m) {
  if (!D.weight_cone().contains(m)) throw std::domain_error("weight " + vec_str(m) + " lies outside the weight cone");
  QDivisor E;
  for (const auto& s : D.support()) E.add(s.point, *s.polyhedron.min(m));
  return E;
}

struct GradedPiece {
  IntVec m;
  ModuleDescription module;
};

inline GradedPiece graded_piece(const PolyhedralDivisor& D, const IntVec& m) {
  return {m, h0_generators(pdiv_eval(D, m), D.curve(), D.field())};
}

/// f chi^m in A.
inline bool membership(const RatFunc& f, const IntVec& m, const PolyhedralDivisor& D) {
  return in_h0(f, graded_piece(D, m).module);
}

struct DegreeData {
  Polyhedron polyhedron;
  std::vector<RatVec> vertices;
};

inline DegreeData deg_restricted(const PolyhedralDivisor& D, const std::optional<ClosedPoint>& y_inf) {
  if (y_inf && !y_inf->is_rational()) throw std::invalid_argument("y_infinity must be a rational point");
  Polyhedron P = degree_polyhedron(D, y_inf);
  return {P, P.vertices()};
}

struct FanCell {
  Cone cone;
  RatVec degree_vertex;
  /// minimizing vertex of D_y on the cone, for each support point of C'
  std::vector<std::pair<ClosedPoint, RatVec>> minimizers;
};

inline RatVec minimizing_vertex(const Polyhedron& P, const RatVec& m) {
  const RatVec* best = &P.vertices()[0];
  for (const auto& v : P.vertices())
    if (dot(m, v) < dot(m, *best)) best = &v;
  return *best;
}

/// Maximal cones of the weight cone on which D|C' is linear.
inline std::vector<FanCell> linearity_fan(const PolyhedralDivisor& D, const std::optional<ClosedPoint>& y_inf) {
  DegreeData deg = deg_restricted(D, y_inf);
  std::vector<FanCell> out;
  for (const auto& [v, c] : normal_fan(deg.polyhedron)) {
    FanCell cell{c, v, {}};
    RatVec mid = c.relative_interior_point();
    for (const auto& s : D.support()) {
      if (y_inf && s.point == *y_inf) continue;
      cell.minimizers.emplace_back(s.point, minimizing_vertex(s.polyhedron, mid));
    }
    out.push_back(std::move(cell));
  }
  return out;
}

struct ProfileEntry {
  ClosedPoint point;
  Integer eps = 1;
  long s = 1;
  Polyhedron polyhedron;  // eps * D_y
  std::vector<std::string> tags;
};

/// Symbolic base change to the algebraic closure: each point splits into
/// s conjugate tags carrying eps * D_y.
inline std::vector<ProfileEntry> base_change_profile(const PolyhedralDivisor& D) {
  std::vector<ProfileEntry> out;
  for (const auto& sp : D.support()) {
    ProfileEntry e;
    e.point = sp.point;
    if (sp.point.is_infinity()) {
      e.polyhedron = sp.polyhedron;
      e.tags = {"infinity"};
    } else {
      InsepProfile prof = insep_profile(sp.point);
      e.eps = prof.eps;
      e.s = prof.s;
      e.polyhedron = sp.polyhedron.scaled(Rational(prof.eps));
      for (long i = 1; i <= prof.s; ++i) e.tags.push_back("alpha_" + std::to_string(i) + "[" + sp.point.str() + "]");
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace ghz
