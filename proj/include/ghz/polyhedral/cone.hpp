#pragma once

/**
 * @file cone.hpp
 * @brief Rational polyhedral cones in dimension <= 4, stored with both
 * their generators and their inequalities.
 *
 * Canonical form: lineality basis in reduced echelon form made primitive,
 * rays primitive, orthogonal to the lineality space, sorted
 * lexicographically. Both descriptions are computed by enumerating
 * (k-1)-subsets of constraints, which is adequate at this scale.
 */

#include "ghz/polyhedral/linalg.hpp"

#include <set>

namespace ghz {

inline constexpr std::size_t kMaxConeDim = 4;

/// Generators of a cone: lineality basis plus extreme rays.
struct ConeGenerators {
  std::vector<IntVec> lineality;
  std::vector<IntVec> rays;
  friend bool operator==(const ConeGenerators&, const ConeGenerators&) = default;
};

namespace detail {

inline std::vector<IntVec> canonical_lineality(const RatMatrix& basis) {
  std::vector<IntVec> out;
  for (const auto& row : rref(basis)) out.push_back(primitive(row));
  return out;
}

/// Generators of {x in Q^n : <a, x> >= 0 for every row a}.
inline ConeGenerators extreme_rays(std::size_t n, const RatMatrix& rows_in) {
  RatMatrix rows;
  for (const auto& r : rows_in) {
    if (r.size() != n) throw std::invalid_argument("constraint of wrong dimension");
    if (!is_zero(r)) rows.push_back(r);
  }
  ConeGenerators g;
  RatMatrix lin = nullspace(rows, n);
  g.lineality = canonical_lineality(lin);
  std::size_t k = n - lin.size();
  if (k == 0) return g;
  RatMatrix eqs;
  for (const auto& l : g.lineality) eqs.push_back(to_rat(l));
  std::set<IntVec> found;
  std::vector<std::size_t> idx(k - 1);
  auto consider = [&](const RatMatrix& m) {
    RatMatrix ns = nullspace(m, n);
    if (ns.size() != 1) return;
    for (int sign : {1, -1}) {
      RatVec x = Rational(sign) * ns[0];
      bool ok = std::all_of(rows.begin(), rows.end(), [&](const RatVec& a) { return dot(a, x) >= 0; });
      if (ok) found.insert(primitive(x));
    }
  };
  // iterate over all (k-1)-subsets of rows
  std::size_t m = rows.size();
  if (k - 1 > m) return g;
  for (std::size_t i = 0; i < k - 1; ++i) idx[i] = i;
  for (;;) {
    RatMatrix sys = eqs;
    for (auto i : idx) sys.push_back(rows[i]);
    consider(sys);
    if (k - 1 == 0) break;
    std::size_t pos = k - 1;
    while (pos > 0 && idx[pos - 1] == m - (k - 1) + (pos - 1)) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k - 1; ++j) idx[j] = idx[j - 1] + 1;
  }
  g.rays.assign(found.begin(), found.end());
  return g;
}

inline RatMatrix as_constraints(const ConeGenerators& g) {
  RatMatrix rows;
  for (const auto& r : g.rays) rows.push_back(to_rat(r));
  for (const auto& l : g.lineality) {
    rows.push_back(to_rat(l));
    rows.push_back(Rational(-1) * to_rat(l));
  }
  return rows;
}

}  // namespace detail

class Cone {
 public:
  Cone() = default;

  static Cone from_generators(std::size_t n, const RatMatrix& gens) {
    check_dim(n);
    Cone c;
    c.n_ = n;
    c.ineq_ = detail::extreme_rays(n, gens);
    c.gens_ = detail::extreme_rays(n, detail::as_constraints(c.ineq_));
    return c;
  }
  static Cone from_generators(std::size_t n, const std::vector<IntVec>& gens) {
    RatMatrix g;
    for (const auto& v : gens) g.push_back(to_rat(v));
    return from_generators(n, g);
  }
  /// {x : <a, x> >= 0 for every row a}.
  static Cone from_inequalities(std::size_t n, const RatMatrix& rows) {
    check_dim(n);
    Cone c;
    c.n_ = n;
    c.gens_ = detail::extreme_rays(n, rows);
    c.ineq_ = detail::extreme_rays(n, detail::as_constraints(c.gens_));
    return c;
  }
  static Cone zero(std::size_t n) { return from_generators(n, RatMatrix{}); }
  static Cone full(std::size_t n) { return from_inequalities(n, RatMatrix{}); }
  static Cone orthant(std::size_t n) {
    RatMatrix g;
    for (std::size_t i = 0; i < n; ++i) {
      RatVec e(n, Rational(0));
      e[i] = 1;
      g.push_back(e);
    }
    return from_generators(n, g);
  }

  std::size_t ambient_dim() const { return n_; }
  const std::vector<IntVec>& rays() const { return gens_.rays; }
  const std::vector<IntVec>& lineality() const { return gens_.lineality; }
  /// Inner normals of the facets (rays of the dual).
  const std::vector<IntVec>& facets() const { return ineq_.rays; }
  /// Linear equations satisfied by the cone (lineality of the dual).
  const std::vector<IntVec>& equations() const { return ineq_.lineality; }

  Cone dual() const {
    Cone c;
    c.n_ = n_;
    c.gens_ = ineq_;
    c.ineq_ = gens_;
    return c;
  }

  bool contains(const RatVec& x) const {
    for (const auto& f : ineq_.rays)
      if (dot(f, x) < 0) return false;
    for (const auto& e : ineq_.lineality)
      if (dot(e, x) != 0) return false;
    return true;
  }
  bool contains(const IntVec& x) const { return contains(to_rat(x)); }

  bool in_interior(const RatVec& x) const {
    if (!is_full_dimensional()) return false;
    for (const auto& f : ineq_.rays)
      if (dot(f, x) <= 0) return false;
    return true;
  }

  bool is_pointed() const { return gens_.lineality.empty(); }
  bool is_full_dimensional() const { return ineq_.lineality.empty(); }
  std::size_t dimension() const { return n_ - ineq_.lineality.size(); }

  bool has_ray(const IntVec& r) const {
    return std::find(gens_.rays.begin(), gens_.rays.end(), r) != gens_.rays.end();
  }

  /// A point of the relative interior (sum of rays).
  RatVec relative_interior_point() const {
    RatVec s(n_, Rational(0));
    for (const auto& r : gens_.rays) s = s + to_rat(r);
    return s;
  }

  friend bool operator==(const Cone& a, const Cone& b) { return a.n_ == b.n_ && a.gens_ == b.gens_; }

  std::string str() const {
    std::string s = "cone(";
    for (std::size_t i = 0; i < gens_.rays.size(); ++i) s += (i ? "," : "") + vec_str(gens_.rays[i]);
    if (!gens_.lineality.empty()) {
      s += "; lineality ";
      for (std::size_t i = 0; i < gens_.lineality.size(); ++i) s += (i ? "," : "") + vec_str(gens_.lineality[i]);
    }
    if (gens_.rays.empty() && gens_.lineality.empty()) s += "0";
    return s + ")";
  }

 private:
  static void check_dim(std::size_t n) {
    if (n == 0 || n > kMaxConeDim) throw std::invalid_argument("cone dimension " + std::to_string(n) + " unsupported (1..4)");
  }

  std::size_t n_ = 1;
  ConeGenerators gens_, ineq_;
};

inline IntVec primitive_ray_generator(const RatVec& r) { return primitive(r); }

}  // namespace ghz
