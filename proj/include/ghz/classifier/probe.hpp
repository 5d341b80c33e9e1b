#pragma once

/**
 * @file probe.hpp
 * @brief Randomized cross-check of the vertex conditions against their floor forms.
 */

#include <random>

#include "ghz/classifier/coherent.hpp"

namespace ghz {

struct ProbeConfig {
  std::uint32_t p = 2;  ///< characteristic exponent; p > 1 samples over F_p(l)
  std::size_t n = 1;
  Curve curve = Curve::A1;
  int trials = 100;
  std::uint64_t seed = 1;
  long box = 12;
};

struct ProbeReport {
  int instances = 0;
  int disagreements = 0;
  int resamples = 0;
  int failing_v = 0, failing_vi = 0, failing_vii = 0;  ///< instances where the vertex form fails
  std::vector<std::string> counterexamples;
};

/// Text form of a family, detailed enough to rebuild the instance by hand.
inline std::string family_str(const CoherentFamily& th) {
  std::ostringstream os;
  const auto& D = th.coloring.D;
  os << D.field().name() << " " << curve_name(D.curve()) << " tail " << D.tail().str() << ";";
  for (const auto& s : D.support()) os << " D_" << s.point.str() << " = " << s.polyhedron.str() << ";";
  os << " y0 = " << th.coloring.y0.str();
  for (const auto& [y, v] : th.coloring.vertices) os << ", v_" << y.str() << " = " << vec_str(v);
  os << "; e = " << vec_str(th.e) << ", s = (";
  for (std::size_t i = 0; i < th.s.size(); ++i) os << (i ? "," : "") << th.s[i];
  os << ")";
  return os.str();
}

namespace detail {

class ProbeSampler {
 public:
  explicit ProbeSampler(const ProbeConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
    k_ = cfg.p == 1 ? BaseField::rationals() : BaseField::rational_functions(cfg.p);
  }

  std::optional<CoherentFamily> draw() {
    std::size_t n = cfg_.n;
    Cone tail = pick_tail();
    ClosedPoint y0 = ClosedPoint::rational(Scalar::zero(k_));
    std::vector<ClosedPoint> pool = {ClosedPoint::rational(Scalar::one(k_))};
    if (cfg_.p == 1)
      pool.push_back(point_validate(parse_poly("t^2+1", k_), TrustPolicy::Strict));
    else
      pool.push_back(point_validate(parse_poly("t^" + std::to_string(cfg_.p) + "-l", k_), TrustPolicy::Trusted));
    std::vector<SupportEntry> sup;
    if (coin(4)) sup.push_back({y0, polyhedron(tail, 3)});
    for (const auto& y : pool)
      if (coin(3)) sup.push_back({y, polyhedron(tail, 2)});
    if (cfg_.curve == Curve::P1) {
      auto inf = infinity_part(tail, sup);
      if (!inf) return std::nullopt;
      sup.push_back({ClosedPoint::infinity(), *inf});
    }
    PolyhedralDivisor D(k_, cfg_.curve, tail, sup);
    if (!pdiv_validate(D).ok()) return std::nullopt;
    std::optional<ClosedPoint> yinf;
    if (cfg_.curve == Curve::P1) yinf = ClosedPoint::infinity();
    Cone wc = tail.dual();
    IntVec m0(n);
    for (auto& x : m0) x = uniform(-7, 7);
    if (!wc.contains(m0)) return std::nullopt;
    Coloring col{D, {}, y0, yinf};
    for (const auto& y : col.affine_support()) col.vertices.emplace_back(y, minimizing_vertex(D.at(y), to_rat(m0)));
    if (!coloring_validate(col).ok()) return std::nullopt;
    IntVec e(n);
    for (auto& x : e) x = uniform(-2, 2);
    if (is_zero(to_rat(e))) return std::nullopt;
    long s1 = cfg_.p == 1 ? 1 : uniform(0, 1);
    return CoherentFamily::make(col, e, {s1}, {Scalar::one(k_)});
  }

 private:
  bool coin(int k) { return uniform(0, k - 1) != 0; }
  long uniform(long a, long b) { return std::uniform_int_distribution<long>(a, b)(rng_); }

  Rational coord(long max_den) {
    long q = uniform(1, max_den);
    return make_rational(Integer(uniform(-2 * q, 2 * q)), Integer(q));
  }

  Cone pick_tail() {
    std::size_t n = cfg_.n;
    if (n == 1) return cfg_.curve == Curve::A1 && coin(3) == false ? Cone::zero(1) : Cone::orthant(1);
    if (cfg_.curve == Curve::P1 || coin(2)) return Cone::orthant(2);
    return Cone::from_generators(2, std::vector<IntVec>{IntVec{1, 0}, IntVec{1, 2}});
  }

  Polyhedron polyhedron(const Cone& tail, long max_den) {
    std::vector<RatVec> pts;
    long k = uniform(1, 2);
    for (long i = 0; i < k; ++i) {
      RatVec v(cfg_.n);
      for (auto& x : v) x = coord(max_den);
      pts.push_back(v);
    }
    if (max_den < 3) {
      RatVec v(cfg_.n);
      for (auto& x : v) x = Rational(uniform(-1, 1));
      pts.push_back(v);
    }
    return Polyhedron(pts, tail);
  }

  /// A polyhedron at infinity that keeps deg D strictly inside the (orthant) tail.
  std::optional<Polyhedron> infinity_part(const Cone& tail, const std::vector<SupportEntry>& sup) {
    std::vector<std::pair<Integer, Polyhedron>> terms;
    for (const auto& s : sup) terms.emplace_back(s.point.residue_degree(), s.polyhedron);
    Polyhedron P = minkowski_weighted_sum(tail, terms);
    RatVec q(cfg_.n);
    for (std::size_t i = 0; i < cfg_.n; ++i) {
      Rational lo = P.vertices().front()[i];
      for (const auto& v : P.vertices()) lo = std::min(lo, v[i]);
      q[i] = -lo + make_rational(Integer(uniform(0, 2)), Integer(2));
    }
    std::vector<RatVec> pts = {q};
    if (coin(2)) {
      RatVec q2 = q;
      q2[uniform(0, static_cast<long>(cfg_.n) - 1)] += make_rational(Integer(uniform(1, 3)), Integer(2));
      pts.push_back(q2);
    }
    return Polyhedron(pts, tail);
  }

  ProbeConfig cfg_;
  std::mt19937_64 rng_;
  BaseField k_ = BaseField::rationals();
};

}  // namespace detail

/// Vertex verdict per clause against the floor verdict over the box.
inline ProbeReport equivalence_probe(const ProbeConfig& cfg) {
  ProbeReport rep;
  detail::ProbeSampler sampler(cfg);
  while (rep.instances < cfg.trials) {
    auto th = sampler.draw();
    if (!th) {
      ++rep.resamples;
      if (rep.resamples > 200 * cfg.trials) break;
      continue;
    }
    ++rep.instances;
    AssociatedCones a = associated_cones(th->coloring);
    CoherenceReport vr;
    detail::vertex_conditions(*th, a, vr);
    ConditionReport fr = floor_condition_check(*th, cfg.box);
    rep.failing_v += vr.fails("(v)");
    rep.failing_vi += vr.fails("(vi)");
    rep.failing_vii += vr.fails("(vii)");
    std::string diff;
    if (vr.fails("(v)") == fr.holds4) diff += " (v)/(4)";
    if (vr.fails("(vi)") == fr.holds5) diff += " (vi)/(5)";
    if (vr.fails("(vii)") == fr.holds6) diff += " (vii)/(6)";
    if (!diff.empty()) {
      ++rep.disagreements;
      rep.counterexamples.push_back("disagree on" + diff + ": " + family_str(*th));
    }
  }
  return rep;
}

}  // namespace ghz
