// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "ghz/classifier/probe.hpp"
#include "ghz/classifier/toricity.hpp"
#include "ghz/cli/run.hpp"
#include "ghz/lfihd/verify.hpp"
#include "h0_oracle.hpp"

using namespace ghz;
using namespace ghz::fixtures;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

BaseField F2() { return BaseField::prime_field(2); }
BaseField F2l() { return BaseField::rational_functions(2); }
GradedElement el(std::initializer_list<long> m, const char* f, const BaseField& k) { return GradedElement::monomial(iv(m), parse_ratfunc(f, k)); }

CoherentFamily w25_family(bool rational_y) {
  PolyhedralDivisor D = w25(rational_y);
  const BaseField& k = D.field();
  Coloring c{D, {{pt("t", k), rv({Rational(1, 5)})}, {pt(rational_y ? "t+1" : "t^2+l", k), rv({0})}}, pt("t", k), std::nullopt};
  return CoherentFamily::make(c, iv({1}), {2}, {Scalar::one(k)});
}

CoherentFamily char2_family(const BaseField& k) {
  PolyhedralDivisor D = char2_ramified(k);
  Coloring c{D, {{pt("t", k), rv({Rational(1, 2), 0})}, {pt("t-1", k), rv({0, 1})}}, pt("t", k), std::nullopt};
  return CoherentFamily::make(c, iv({1, 0}), {0}, {Scalar::one(k)});
}

std::vector<GradedElement> generators_of(const PolyhedralDivisor& D) {
  std::vector<GradedElement> gens;
  for (const auto& g : algebra_generators(D, {}).generators) gens.push_back(GradedElement::monomial(g.m, g.f.to_ratfunc()));
  return gens;
}

// Binomial coefficients mod p from Pascal's recurrence; shares no code with the library.
long pascal_mod(long n, long j, long p) {
  if (j < 0 || j > n) return 0;
  std::vector<long> row{1};
  for (long i = 1; i <= n; ++i) {
    std::vector<long> nx(static_cast<std::size_t>(i + 1), 1);
    for (long a = 1; a < i; ++a) nx[a] = (row[a - 1] + row[a]) % p;
    row = nx;
  }
  return row[static_cast<std::size_t>(j)];
}

// Root test straight from the definition: pairing -1 with the ray, >= 0 with the other generators.
bool root_by_definition(const std::vector<IntVec>& gens, const IntVec& ray, const IntVec& e) {
  for (const auto& g : gens)
    if (g != ray && dot(to_rat(e), g) < 0) return false;
  return dot(to_rat(e), ray) == -1;
}

Outcome criterion1() {
  Outcome o;
  auto good = coherent_validate(w25_family(false));
  o.require(good.coherent(), "imperfect-field family rejected");
  auto bad = coherent_validate(w25_family(true));
  o.require(!bad.coherent() && bad.violations.front().clause == "(v)", "rational-point family not rejected at (v)");
  if (!bad.violations.empty()) {
    const auto& v = bad.violations.front();
    o.require(v.lhs == Rational(4, 5) && v.rhs == Rational(1), "witness is not 4/5 >= 1: " + v.str());
    o.detail = o.pass ? v.str() : o.detail;
  }
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto op = DthetaOperator::build(w25_family(false));
  const BaseField k = F2l();
  long cases = 0;
  for (long r = 0; r <= 5; ++r)
    for (long m = std::max(-25L, -5 * r); m <= 25; ++m) {
      auto D = op.apply(GradedElement::monomial(iv({m}), RatFunc(Poly::monomial(Scalar::one(k), r))), 40).orders;
      for (long i = 0; i <= 40; ++i) {
        GradedElement expect(k);
        if (i % 4 == 0 && pascal_mod(5 * r + m, i / 4, 2))
          expect = GradedElement::monomial(iv({m + i}), RatFunc(Poly::monomial(Scalar::one(k), r - i / 4)));
        o.require(D[static_cast<std::size_t>(i)] == expect,
                  "r=" + std::to_string(r) + " m=" + std::to_string(m) + " order " + std::to_string(i) + ": " + D[static_cast<std::size_t>(i)].str());
        ++cases;
      }
    }
  o.detail = o.pass ? std::to_string(cases) + " (r, m, i) cases" : o.detail;
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto op = DthetaOperator::build(w25_family(false));
  PolyhedralDivisor D = w25(false);
  const BaseField k = F2l();
  std::vector<GradedElement> gens = {el({0}, "t", k), el({1}, "1", k), el({5}, "t^-1", k), el({-5}, "t*(t^2+l)", k)};
  auto r = verify_stability(op, D, gens);
  o.require(r.stable(), r.stable() ? "" : r.witnesses.front().str());
  GradedElement x = el({-5}, "t*(t^2+l)", k);
  auto orders = op.apply(x).orders;
  for (std::size_t j = 0; j < orders.size(); ++j)
    for (const auto& [m, f] : orders[j].terms()) o.require(in_algebra(D, m, f), "order " + std::to_string(j) + " leaves A");
  o.detail = o.pass ? "bound " + std::to_string(*op.nilpotency_bound(x)) : o.detail;
  return o;
}

Outcome criterion4() {
  Outcome o;
  const BaseField k = F2();
  PolyhedralDivisor D = char2_ramified(k);
  auto op = DthetaOperator::build(char2_family(k));
  auto gens = generators_of(D);
  auto ax = verify_axioms(op, gens);
  o.require(ax.ok(), ax.failures.empty() ? "axioms" : ax.failures.front());
  o.require(verify_stability(op, D, gens).stable(), "char 2 stability");
  GradedElement z = el({2, 1}, "1/(t*(t-1))", k);
  o.require(op.apply(el({0, 1}, "1", k)).orders.at(2) == z, "d^(2)(chi^(0,1)) != z");
  auto ker = kernel_in_box(op, D, 3);
  bool z_in_kernel = false;
  for (const auto& p : ker.pieces) z_in_kernel |= p.m == iv({2, 1}) && p.phi == parse_ratfunc("1/(t*(t-1))", k);
  o.require(z_in_kernel, "z not in kernel");
  o.require(op.apply(z, 8).orders.at(1).is_zero(), "d^(1)(z) != 0");

  const BaseField Q = BaseField::rationals();
  auto rq = coherent_validate(char2_family(Q));
  o.require(!rq.coherent() && rq.violations.front().clause == "(v)", "char 0 not rejected at (v)");
  auto opq = DthetaOperator::build(char2_family(Q), true);
  auto st = verify_stability(opq, char2_ramified(Q), {el({0, 1}, "1", Q)});
  o.require(!st.stable() && st.witnesses.front().order == 1, "no order-1 stability witness over Q");
  if (o.pass) o.detail = st.witnesses.front().str();
  return o;
}

Outcome criterion5() {
  Outcome o;
  struct Case {
    std::vector<IntVec> gens;
    IntVec ray, root;
  };
  std::vector<Case> cases = {{{iv({1, 0}), iv({1, 5})}, iv({1, 5}), iv({4, -1})},
                             {{iv({1, -2, 0}), iv({0, 1, 0}), iv({1, 0, 2})}, iv({1, 0, 2}), iv({1, 0, -1})}};
  for (const auto& c : cases) {
    Cone cone = Cone::from_generators(c.ray.size(), c.gens);
    o.require(root_by_definition(c.gens, c.ray, c.root), "oracle rejects " + vec_str(c.root));
    o.require(demazure_root_check(cone, c.ray, to_rat(c.root)), "rejected " + vec_str(c.root));
    int rejected = 0;
    for_each_box_point(c.ray.size(), 2, [&](const IntVec& delta) {
      if (rejected == 10 || is_zero(to_rat(delta))) return;
      IntVec e = c.root;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] += delta[i];
      if (root_by_definition(c.gens, c.ray, e)) return;
      o.require(!demazure_root_check(cone, c.ray, to_rat(e)), "accepted perturbation " + vec_str(e));
      ++rejected;
    });
    o.require(rejected == 10, "fewer than ten perturbations");
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  long failing = 0, total = 0;
  for (std::uint32_t p : {1u, 2u, 3u})
    for (std::size_t n : {1u, 2u})
      for (Curve c : {Curve::A1, Curve::P1}) {
        ProbeConfig cfg{p, n, c, 100, 1000 + 17 * p + 3 * n + (c == Curve::P1), 12};
        auto r = equivalence_probe(cfg);
        std::string tag = "p=" + std::to_string(p) + " n=" + std::to_string(n) + " " + curve_name(c);
        o.require(r.instances == 100, tag + ": only " + std::to_string(r.instances) + " instances");
        o.require(r.disagreements == 0, tag + ": " + (r.counterexamples.empty() ? "" : r.counterexamples.front()));
        failing += r.failing_v + r.failing_vi + r.failing_vii;
        total += r.instances;
      }
  o.require(failing > 0, "probe never exercised a failing condition");
  if (o.pass) o.detail = std::to_string(total) + " instances, " + std::to_string(failing) + " clause failures, 0 disagreements";
  return o;
}

Outcome criterion7() {
  Outcome o;
  long families = 0, checks = 0;
  auto run = [&](const DthetaOperator& op, const std::vector<GradedElement>& xs, const std::string& tag) {
    auto r = verify_axioms(op, xs);
    o.require(r.ok(), tag + ": " + (r.failures.empty() ? "" : r.failures.front()));
    checks += r.checks;
    ++families;
  };
  run(DthetaOperator::build(w25_family(false)), {el({0}, "t", F2l()), el({1}, "1", F2l()), el({5}, "t^-1", F2l()), el({-5}, "t*(t^2+l)", F2l())},
      "w25");
  for (const auto& [name, text] : cli::builtin_scenarios()) {
    cli::Scenario s = cli::parse_scenario(text);
    if (!s.family) continue;
    PolyhedralDivisor D = cli::build_divisor(s);
    CoherentFamily th = cli::build_family(s, cli::build_coloring(s, D));
    if (!coherent_validate(th).coherent()) continue;
    run(DthetaOperator::build(th), cli::build_elements(s), name);
  }
  // randomized: coherent draws from the probe sampler, tested on graded-piece elements
  for (std::uint32_t p : {1u, 2u, 3u})
    for (Curve c : {Curve::A1, Curve::P1}) {
      detail::ProbeSampler sampler(ProbeConfig{p, 1, c, 0, 77 + p + 10 * (c == Curve::P1), 12});
      int found = 0;
      for (int attempt = 0; attempt < 400 && found < 3; ++attempt) {
        auto th = sampler.draw();
        if (!th || !coherent_validate(*th).coherent()) continue;
        if (th->coloring.y_inf && !th->coloring.y_inf->is_infinity()) continue;
        const PolyhedralDivisor& D = th->coloring.D;
        std::vector<GradedElement> xs;
        for (long m = -3; m <= 3 && xs.size() < 4; ++m) {
          if (!D.weight_cone().contains(iv({m}))) continue;
          auto piece = graded_piece(D, iv({m}));
          if (c == Curve::A1)
            xs.push_back(GradedElement::monomial(iv({m}), piece.module.generator.to_ratfunc()));
          else if (!piece.module.basis.empty())
            xs.push_back(GradedElement::monomial(iv({m}), piece.module.basis.back().to_ratfunc()));
        }
        if (xs.size() < 2) continue;
        run(DthetaOperator::build(*th), xs, family_str(*th));
        ++found;
      }
      o.require(found == 3, "too few coherent random families for p=" + std::to_string(p) + " " + curve_name(c));
    }
  if (o.pass) o.detail = std::to_string(families) + " families, " + std::to_string(checks) + " identities";
  return o;
}

Outcome criterion8() {
  Outcome o;
  BaseField k = BaseField::rationals();
  Cone h = Cone::orthant(1);
  PolyhedralDivisor one(k, Curve::A1, h, {{pt("t", k), Polyhedron::point(rv({Rational(1, 2)}), h)}});
  PolyhedralDivisor two(k, Curve::A1, h,
                        {{pt("t", k), Polyhedron::point(rv({Rational(1, 2)}), h)}, {pt("t-1", k), Polyhedron::point(rv({Rational(1, 3)}), h)}});
  o.require(toricity_check(one).verdict == ToricityVerdict::Met, "(1/2)[0] not met");
  o.require(toricity_check(two).verdict == ToricityVerdict::Violated, "(1/2)[0]+(1/3)[t-1] not violated");
  o.require(toricity_check(w25(false)).verdict == ToricityVerdict::NotApplicable, "w25 not hyperbolic");
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::mt19937_64 rng(90210);
  auto uni = [&](long a, long b) { return std::uniform_int_distribution<long>(a, b)(rng); };
  int done = 0;
  while (done < 20) {
    std::uint32_t p = static_cast<std::uint32_t>(std::vector<long>{1, 2, 3}[static_cast<std::size_t>(uni(0, 2))]);
    BaseField k = p == 1 ? BaseField::rationals() : BaseField::prime_field(p);
    std::size_t n = static_cast<std::size_t>(uni(2, 3));
    std::vector<IntVec> gens;
    for (long g = 0; g < uni(1, 2); ++g) {
      IntVec v(n - 1);
      for (auto& x : v) x = uni(-2, 2);
      v.push_back(0);
      gens.push_back(v);
    }
    IntVec top(n, Integer(0));
    top[n - 1] = 1;
    gens.push_back(top);
    Cone s0 = Cone::from_generators(n, gens);
    if (!s0.is_pointed() || !s0.has_ray(top)) continue;
    IntVec e(n);
    for (auto& x : e) x = uni(-2, 2);
    e[n - 1] = -1;
    if (!demazure_root_check(s0, top, to_rat(e))) continue;
    ToricRootOperator tor(s0, e, k);
    std::vector<GradedElement> mons;
    Cone dual = s0.dual();
    for_each_box_point(n, 2, [&](const IntVec& m) {
      if (dual.contains(m) && mons.size() < 5) mons.push_back(GradedElement::monomial(m, RatFunc::one(k)));
    });
    auto ax = verify_axioms(tor, mons);
    o.require(ax.ok(), ax.failures.empty() ? "" : ax.failures.front());
    // the same root through the trivial divisor on A1 with t as last coordinate
    std::vector<IntVec> low;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i) low.emplace_back(gens[i].begin(), gens[i].end() - 1);
    PolyhedralDivisor D(k, Curve::A1, Cone::from_generators(n - 1, low), {});
    Coloring c{D, {}, ClosedPoint::rational(Scalar::zero(k)), std::nullopt};
    auto op = DthetaOperator::build(CoherentFamily::make(c, IntVec(e.begin(), e.end() - 1), {p == 1 ? 1 : 0}, {Scalar::one(k)}));
    for (const auto& x : mons) {
      const IntVec& m = x.terms().begin()->first;
      auto A = op.apply(GradedElement::monomial(IntVec(m.begin(), m.end() - 1), RatFunc(Poly::monomial(Scalar::one(k), to_long(m[n - 1])))), 6).orders;
      auto B = tor.apply(x, 6).orders;
      for (std::size_t i = 0; i <= 6; ++i) {
        GradedElement Bi(k);
        for (const auto& [w, g] : B[i].terms())
          Bi.add(IntVec(w.begin(), w.end() - 1), g * RatFunc(Poly::monomial(Scalar::one(k), to_long(w[n - 1]))));
        o.require(A[i] == Bi, "disagreement at order " + std::to_string(i) + " on " + x.str());
      }
    }
    ++done;
  }
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::mt19937 rng(4242);
  const BaseField k = F2();
  std::vector<ClosedPoint> pool = {pt("t", k), pt("t+1", k), pt("t^2+t+1", k), ClosedPoint::infinity()};
  for (int i = 0; i < 100; ++i) {
    QDivisor E;
    for (const auto& y : pool)
      if (rng() % 3) E.add(y, make_rational(static_cast<long>(rng() % 6) - 3, 1 + rng() % 3));
    auto m = h0_generators(E, Curve::P1, k);
    long expect = std::max<long>(0, to_long(floor_of(divisor_floor_deg(E).second)) + 1);
    long brute = oracle::h0_dimension_bruteforce(E);
    long got = static_cast<long>(m.basis.size());
    o.require(got == expect && got == brute,
              E.str() + ": basis " + std::to_string(got) + ", formula " + std::to_string(expect) + ", brute force " + std::to_string(brute));
    for (const auto& f : m.basis) o.require(in_h0(f.to_ratfunc(), m), "basis element outside H0 for " + E.str());
  }
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"w25 coherence dichotomy", criterion1},
      {"w25 operator law", criterion2},
      {"w25 stability", criterion3},
      {"char2-ramified dichotomy", criterion4},
      {"root checks", criterion5},
      {"equivalence probe", criterion6},
      {"axiom property suite", criterion7},
      {"toricity criterion", criterion8},
      {"toric correspondence", criterion9},
      {"H0 oracle", criterion10},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    failed += !o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " (" << ms << " ms)";
    if (!o.detail.empty()) std::cout << ": " << o.detail;
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
