#pragma once

#include "ghz/polyhedral/cone.hpp"

#include <optional>

namespace ghz {

/// conv(vertices) + tail with a pointed tail; vertices irredundant and sorted.
class Polyhedron {
 public:
  Polyhedron() = default;
  Polyhedron(std::vector<RatVec> points, Cone tail) : tail_(std::move(tail)) {
    if (points.empty()) throw std::invalid_argument("polyhedron needs at least one point");
    if (!tail_.is_pointed()) throw std::invalid_argument("polyhedron tail must be pointed");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    for (const auto& p : points) {
      if (p.size() != tail_.ambient_dim()) throw std::invalid_argument("point of wrong dimension");
      if (normal_cone_of(p, points).is_full_dimensional()) vertices_.push_back(p);
    }
  }

  static Polyhedron point(RatVec p, Cone tail) { return Polyhedron({std::move(p)}, std::move(tail)); }

  std::size_t dim() const { return tail_.ambient_dim(); }
  const std::vector<RatVec>& vertices() const { return vertices_; }
  const Cone& tail() const { return tail_; }

  /// min over P of <m, .>, or nullopt for minus infinity.
  std::optional<Rational> min(const RatVec& m) const {
    for (const auto& r : tail_.rays())
      if (dot(m, r) < 0) return std::nullopt;
    Rational best = dot(m, vertices_[0]);
    for (const auto& v : vertices_) best = std::min(best, dot(m, v));
    return best;
  }
  std::optional<Rational> min(const IntVec& m) const { return min(to_rat(m)); }

  bool contains(const RatVec& x) const {
    RatMatrix gens;
    for (const auto& v : vertices_) {
      RatVec g = v;
      g.push_back(1);
      gens.push_back(g);
    }
    for (const auto& r : tail_.rays()) {
      RatVec g = to_rat(r);
      g.push_back(0);
      gens.push_back(g);
    }
    RatVec y = x;
    y.push_back(1);
    return Cone::from_generators(dim() + 1, gens).contains(y);
  }

  bool is_vertex(const RatVec& x) const { return std::find(vertices_.begin(), vertices_.end(), x) != vertices_.end(); }

  /// {m : <m, v> = min_P <m, .>} for a vertex v.
  Cone normal_cone(const RatVec& v) const { return normal_cone_of(v, vertices_); }

  Polyhedron scaled(const Rational& c) const {
    if (c <= 0) throw std::invalid_argument("polyhedron scaling needs a positive factor");
    std::vector<RatVec> pts;
    for (const auto& v : vertices_) pts.push_back(c * v);
    return Polyhedron(pts, tail_);
  }
  Polyhedron translated(const RatVec& t) const {
    std::vector<RatVec> pts;
    for (const auto& v : vertices_) pts.push_back(v + t);
    return Polyhedron(pts, tail_);
  }

  friend bool operator==(const Polyhedron& a, const Polyhedron& b) {
    return a.vertices_ == b.vertices_ && a.tail_ == b.tail_;
  }

  std::string str() const {
    std::string s = "conv{";
    for (std::size_t i = 0; i < vertices_.size(); ++i) s += (i ? "," : "") + vec_str(vertices_[i]);
    s += "}";
    if (!tail_.rays().empty()) s += "+" + tail_.str();
    return s;
  }

 private:
  Cone normal_cone_of(const RatVec& v, const std::vector<RatVec>& pts) const {
    RatMatrix rows;
    for (const auto& w : pts)
      if (w != v) rows.push_back(w - v);
    for (const auto& r : tail_.rays()) rows.push_back(to_rat(r));
    return Cone::from_inequalities(tail_.ambient_dim(), rows);
  }

  std::vector<RatVec> vertices_;
  Cone tail_;
};

/// sum of w_i * P_i; an empty list gives the tail itself.
inline Polyhedron minkowski_weighted_sum(const Cone& tail, const std::vector<std::pair<Integer, Polyhedron>>& terms) {
  std::vector<RatVec> acc = {RatVec(tail.ambient_dim(), Rational(0))};
  for (const auto& [w, P] : terms) {
    if (!(P.tail() == tail)) throw std::invalid_argument("Minkowski sum of polyhedra with different tails");
    if (w <= 0) throw std::invalid_argument("Minkowski weights must be positive");
    std::vector<RatVec> next;
    for (const auto& a : acc)
      for (const auto& v : P.vertices()) next.push_back(a + Rational(w) * v);
    acc = Polyhedron(next, tail).vertices();
  }
  return Polyhedron(acc, tail);
}

/// Normal fan: one full-dimensional cone per vertex.
inline std::vector<std::pair<RatVec, Cone>> normal_fan(const Polyhedron& P) {
  std::vector<std::pair<RatVec, Cone>> fan;
  for (const auto& v : P.vertices()) fan.emplace_back(v, P.normal_cone(v));
  return fan;
}

/// cone((v,h) for vertices v, (r,0) for tail rays r, extra).
inline Cone cone_from_polyhedron_at_height(const Polyhedron& P, const Rational& h, const RatMatrix& extra) {
  RatMatrix gens = extra;
  for (const auto& v : P.vertices()) {
    RatVec g = v;
    g.push_back(h);
    gens.push_back(g);
  }
  for (const auto& r : P.tail().rays()) {
    RatVec g = to_rat(r);
    g.push_back(0);
    gens.push_back(g);
  }
  return Cone::from_generators(P.dim() + 1, gens);
}

}  // namespace ghz
