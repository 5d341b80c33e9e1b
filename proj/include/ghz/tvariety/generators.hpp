#pragma once

/**
 * @file generators.hpp
 * @brief Finite generating sets of A[A^1, D] inside a weight box.
 *
 * A weight m is covered by generators g_i = f_i chi^{m_i} when, at every
 * support point y, the best value of sum a_i floor(D(m_i)_y) over all
 * decompositions m = sum a_i m_i reaches floor(D(m)_y). Since k[t] is a
 * PID, this is exactly the condition that products of generators span
 * A_m over k[t]. The best values are longest paths, found by Bellman-Ford
 * on the box (decompositions leaving the box are not considered).
 */

#include "ghz/polyhedral/lattice.hpp"
#include "ghz/tvariety/pdiv.hpp"

#include <map>

namespace ghz {

struct GradedGenerator {
  IntVec m;
  FactoredRatFunc f;
};

struct GeneratorBounds {
  long box = 10;
  std::optional<Cone> restrict_to;
};

struct GeneratorResult {
  std::vector<GradedGenerator> generators;
  bool stabilized = false;
  std::string certificate;
};

namespace detail {

class CoverageTable {
 public:
  CoverageTable(const PolyhedralDivisor& D, const Cone& omega, long box) : D_(D), box_(box) {
    for_each_box_point(D.rank(), box, [&](const IntVec& m) {
      if (!omega.contains(m)) return;
      std::vector<Integer> fl;
      QDivisor E = pdiv_eval(D, m);
      for (const auto& s : D.support()) fl.push_back(floor_of(E.coeff(s.point)));
      index_.emplace(m, nodes_.size());
      nodes_.push_back(m);
      target_.push_back(std::move(fl));
    });
  }

  const std::vector<IntVec>& nodes() const { return nodes_; }

  /// Recompute best decompositions for the generator weights gens.
  void solve(const std::vector<IntVec>& gens) {
    std::size_t P = D_.support().size();
    best_.assign(nodes_.size(), std::nullopt);
    IntVec zero(D_.rank(), Integer(0));
    auto z = index_.find(zero);
    if (z == index_.end()) return;
    best_[z->second] = std::vector<Integer>(P, Integer(0));
    std::vector<std::size_t> gidx;
    for (const auto& g : gens) gidx.push_back(index_.at(g));
    bool changed = true;
    for (std::size_t iter = 0; changed && iter <= nodes_.size() + 1; ++iter) {
      changed = false;
      for (std::size_t u = 0; u < nodes_.size(); ++u) {
        if (!best_[u]) continue;
        for (std::size_t gi : gidx) {
          IntVec w = nodes_[u] + nodes_[gi];
          auto it = index_.find(w);
          if (it == index_.end()) continue;
          auto& dst = best_[it->second];
          std::vector<Integer> cand(P);
          for (std::size_t y = 0; y < P; ++y) cand[y] = (*best_[u])[y] + target_[gi][y];
          if (!dst) {
            dst = cand;
            changed = true;
            continue;
          }
          for (std::size_t y = 0; y < P; ++y)
            if (cand[y] > (*dst)[y]) {
              (*dst)[y] = cand[y];
              changed = true;
            }
        }
      }
    }
  }

  bool covered(const IntVec& m) const {
    auto it = index_.find(m);
    if (it == index_.end() || !best_[it->second]) return false;
    return *best_[it->second] == target_[it->second];
  }

 private:
  const PolyhedralDivisor& D_;
  long box_;
  std::vector<IntVec> nodes_;
  std::map<IntVec, std::size_t> index_;
  std::vector<std::vector<Integer>> target_;
  std::vector<std::optional<std::vector<Integer>>> best_;
};

inline Cone intersect(const Cone& a, const Cone& b) {
  RatMatrix rows;
  for (const auto& f : a.facets()) rows.push_back(to_rat(f));
  for (const auto& f : b.facets()) rows.push_back(to_rat(f));
  for (const auto& e : a.equations()) {
    rows.push_back(to_rat(e));
    rows.push_back(Rational(-1) * to_rat(e));
  }
  for (const auto& e : b.equations()) {
    rows.push_back(to_rat(e));
    rows.push_back(Rational(-1) * to_rat(e));
  }
  return Cone::from_inequalities(a.ambient_dim(), rows);
}

}  // namespace detail

inline GeneratorResult algebra_generators(const PolyhedralDivisor& D, const GeneratorBounds& bounds = {}) {
  if (D.curve() != Curve::A1) throw std::invalid_argument("generator search is implemented for A1 only");
  const long B = bounds.box;
  Cone omega = bounds.restrict_to ? detail::intersect(D.weight_cone(), *bounds.restrict_to) : D.weight_cone();
  detail::CoverageTable table(D, omega, B);

  // Seeds: Hilbert bases of the linearity cones and multiples up to the
  // lcm of the vertex denominators.
  Integer L = 1;
  for (const auto& s : D.support())
    for (const auto& v : s.polyhedron.vertices())
      for (const auto& x : v) L = lcm(L, x.get_den());
  std::vector<IntVec> seeds;
  for (const auto& cell : linearity_fan(D, std::nullopt)) {
    Cone c = detail::intersect(cell.cone, omega);
    std::vector<IntVec> base;
    if (c.is_pointed()) {
      base = hilbert_basis(c);
    } else {
      base = c.rays();
      for (const auto& l : c.lineality()) {
        base.push_back(l);
        base.push_back(Integer(-1) * l);
      }
    }
    for (const auto& h : base)
      for (Integer k = 1; k <= L; ++k) {
        IntVec x = k * h;
        if (max_norm(x) <= B) seeds.push_back(x);
      }
  }
  auto by_norm = [](const IntVec& a, const IntVec& b) {
    Integer na = l1_norm(a), nb = l1_norm(b);
    return na != nb ? na < nb : a < b;
  };
  std::sort(seeds.begin(), seeds.end(), by_norm);
  std::vector<IntVec> scan = table.nodes();
  std::sort(scan.begin(), scan.end(), by_norm);

  std::vector<IntVec> gens;
  bool dirty = true;
  auto consider = [&](const IntVec& m) {
    if (std::all_of(m.begin(), m.end(), [](const Integer& x) { return x == 0; })) return;
    if (dirty) table.solve(gens);
    dirty = false;
    if (!table.covered(m)) {
      gens.push_back(m);
      dirty = true;
    }
  };
  for (const auto& m : seeds) consider(m);
  for (const auto& m : scan) consider(m);

  // Minimalize, latest additions first.
  for (std::size_t i = gens.size(); i-- > 0;) {
    std::vector<IntVec> rest = gens;
    rest.erase(rest.begin() + static_cast<long>(i));
    table.solve(rest);
    if (table.covered(gens[i])) gens = rest;
  }

  GeneratorResult r;
  r.generators.push_back({IntVec(D.rank(), Integer(0)), FactoredRatFunc::of(Poly::variable(D.field()))});
  Integer worst = 0;
  for (const auto& m : gens) {
    r.generators.push_back({m, graded_piece(D, m).module.generator});
    worst = std::max(worst, max_norm(m));
  }
  r.stabilized = 2 * worst <= B;
  r.certificate = std::string("every graded piece with weight in the box |m_i| <= ") + std::to_string(B) +
                  " lies in the subalgebra generated by the listed elements" +
                  (r.stabilized ? "" : "; the outer half of the box still needed new generators (not stabilized)");
  return r;
}

}  // namespace ghz
