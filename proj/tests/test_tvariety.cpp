#include "fixtures.hpp"
#include "ghz/tvariety/generators.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <random>

using namespace ghz;
using namespace ghz::fixtures;

namespace {
const BaseField F2 = BaseField::prime_field(2);
const BaseField F2L = BaseField::rational_functions(2);
const BaseField QQ = BaseField::rationals();
}  // namespace

TEST(PolyhedralDivisor, ValidateExamples) {
  EXPECT_TRUE(pdiv_validate(w25()).ok());
  PolyhedralDivisor a = w25();
  PolyhedralDivisor onp1(a.field(), Curve::P1, a.tail(), a.support());
  EXPECT_FALSE(pdiv_validate(onp1).ok());
  EXPECT_TRUE(pdiv_validate(char2_ramified(F2)).ok());
  // P1 positivity: deg D = {1/2} + sigma is a proper subset of sigma
  Cone s = Cone::orthant(1);
  PolyhedralDivisor good(QQ, Curve::P1, s, {{pt("t", QQ), Polyhedron::point(rv({Rational(1, 2)}), s)}});
  EXPECT_TRUE(pdiv_validate(good).ok());
  PolyhedralDivisor bad(QQ, Curve::P1, s,
                        {{pt("t", QQ), Polyhedron::point(rv({Rational(1, 2)}), s)},
                         {ClosedPoint::infinity(), Polyhedron::point(rv({Rational(-1, 2)}), s)}});
  EXPECT_FALSE(pdiv_validate(bad).ok());
}

TEST(PolyhedralDivisor, EvalExamples) {
  PolyhedralDivisor D = w25();
  EXPECT_EQ(pdiv_eval(D, iv({1})).str(), "1/5·[t]");
  EXPECT_EQ(pdiv_eval(D, iv({-5})).str(), "-1·[t] -1·[t^2+l]");
  EXPECT_TRUE(pdiv_eval(D, iv({0})).is_zero());
  EXPECT_THROW(pdiv_eval(char2_ramified(F2), iv({-1, 0})), std::domain_error);
}

TEST(PolyhedralDivisor, GradedPieceExamples) {
  PolyhedralDivisor D = w25();
  EXPECT_EQ(graded_piece(D, iv({-5})).module.generator.to_ratfunc(), parse_ratfunc("t*(t^2+l)", F2L));
  EXPECT_EQ(graded_piece(D, iv({3})).module.generator, FactoredRatFunc::one(F2L));
  PolyhedralDivisor E = char2_ramified(F2);
  // (1,1) lies in omega_2 where D(m) = 1/2[0] + 1/2[1]
  EXPECT_EQ(graded_piece(E, iv({1, 1})).module.generator, FactoredRatFunc::one(F2));
  EXPECT_EQ(graded_piece(E, iv({2, 1})).module.generator.to_ratfunc(), parse_ratfunc("t^-1*(t-1)^-1", F2));
  EXPECT_EQ(graded_piece(E, iv({3, 1})).module.generator.to_ratfunc(), parse_ratfunc("t^-1*(t-1)^-1", F2));
  EXPECT_EQ(graded_piece(E, iv({4, 1})).module.generator.to_ratfunc(), parse_ratfunc("t^-2*(t-1)^-1", F2));
}

TEST(PolyhedralDivisor, MembershipExamples) {
  EXPECT_TRUE(membership(parse_ratfunc("t", F2L), iv({3}), w25()));
  EXPECT_FALSE(membership(parse_ratfunc("t^-1", F2), iv({1, 1}), char2_ramified(F2)));
  PolyhedralDivisor D = w25();
  for (long m = -10; m <= 10; ++m) EXPECT_TRUE(membership(graded_piece(D, iv({m})).module.generator.to_ratfunc(), iv({m}), D));
}

TEST(PolyhedralDivisor, DegreeRestricted) {
  auto d = deg_restricted(w25(), std::nullopt);
  EXPECT_EQ(d.vertices, (std::vector<RatVec>{rv({Rational(1, 5)}), rv({Rational(3, 5)})}));
  auto e = deg_restricted(char2_ramified(F2), std::nullopt);
  EXPECT_TRUE(e.polyhedron.is_vertex(rv({Rational(1, 2), 1})));
  Polyhedron shifted = e.polyhedron.translated(rv({Rational(-1, 2), -1}));
  EXPECT_EQ(shifted, Polyhedron({rv({Rational(1, 2), -1}), rv({0, 0})}, Cone::orthant(2)));
  PolyhedralDivisor triv(QQ, Curve::A1, Cone::orthant(2), {});
  EXPECT_EQ(deg_restricted(triv, std::nullopt).vertices, (std::vector<RatVec>{rv({0, 0})}));
}

TEST(PolyhedralDivisor, LinearityFanExamples) {
  auto fan = linearity_fan(w25(), std::nullopt);
  ASSERT_EQ(fan.size(), 2u);
  EXPECT_EQ(fan[0].cone, Cone::from_generators(1, std::vector<IntVec>{iv({1})}));
  EXPECT_EQ(fan[0].minimizers[0].second, rv({Rational(1, 5)}));
  EXPECT_EQ(fan[0].minimizers[1].second, rv({0}));
  EXPECT_EQ(fan[1].minimizers[1].second, rv({Rational(1, 5)}));
  auto fan2 = linearity_fan(char2_ramified(F2), std::nullopt);
  bool found = false;
  for (const auto& c : fan2)
    if (c.cone == Cone::from_generators(2, std::vector<IntVec>{iv({1, 0}), iv({2, 1})})) {
      found = true;
      EXPECT_EQ(c.minimizers[0].second, rv({Rational(1, 2), 0}));
      EXPECT_EQ(c.minimizers[1].second, rv({0, 1}));
    }
  EXPECT_TRUE(found);
  PolyhedralDivisor triv(QQ, Curve::A1, Cone::orthant(2), {});
  auto f3 = linearity_fan(triv, std::nullopt);
  ASSERT_EQ(f3.size(), 1u);
  EXPECT_EQ(f3[0].cone, Cone::orthant(2).dual());
}

TEST(PolyhedralDivisor, LinearOnFanCellsAndSuperadditive) {
  for (const PolyhedralDivisor& D : {w25(), char2_ramified(F2)}) {
    auto fan = linearity_fan(D, std::nullopt);
    Cone w = D.weight_cone();
    for_each_box_point(D.rank(), 6, [&](const IntVec& m) {
      if (!w.contains(m)) return;
      QDivisor Em = pdiv_eval(D, m);
      int cells = 0;
      for (const auto& c : fan) {
        if (!c.cone.contains(m)) continue;
        ++cells;
        for (const auto& [y, v] : c.minimizers) ASSERT_EQ(Em.coeff(y), dot(m, v));
      }
      ASSERT_GE(cells, 1);
      for_each_box_point(D.rank(), 3, [&](const IntVec& m2) {
        if (!w.contains(m2)) return;
        QDivisor sum = pdiv_eval(D, m + m2);
        QDivisor E2 = pdiv_eval(D, m2);
        for (const auto& s : D.support()) ASSERT_GE(sum.coeff(s.point), Em.coeff(s.point) + E2.coeff(s.point));
        RatFunc q = graded_piece(D, m).module.generator.to_ratfunc() * graded_piece(D, m2).module.generator.to_ratfunc() /
                    graded_piece(D, m + m2).module.generator.to_ratfunc();
        ASSERT_TRUE(q.is_polynomial());
      });
    });
  }
}

TEST(PolyhedralDivisor, BaseChangeProfile) {
  auto prof = base_change_profile(w25());
  ASSERT_EQ(prof.size(), 2u);
  EXPECT_EQ(prof[1].eps, 2);
  EXPECT_EQ(prof[1].s, 1);
  EXPECT_EQ(prof[1].polyhedron, Polyhedron({rv({0}), rv({Rational(2, 5)})}, Cone::zero(1)));
  auto rat = base_change_profile(char2_ramified(F2));
  for (const auto& e : rat) EXPECT_EQ(e.polyhedron, char2_ramified(F2).at(e.point));
  Cone z = Cone::zero(1);
  Polyhedron P({rv({0}), rv({1})}, z);
  PolyhedralDivisor D(F2L, Curve::A1, z, {{pt("t^4+l*t^2+l", F2L), P}});
  auto p3 = base_change_profile(D);
  EXPECT_EQ(p3[0].tags.size(), 2u);
  EXPECT_EQ(p3[0].polyhedron, P.scaled(2));
  for (const auto& e : p3) EXPECT_EQ(e.eps * static_cast<long>(e.tags.size()), e.point.residue_degree());
}

namespace {

// Independent subalgebra check: enumerate products of generators up to a
// total degree and compare the k[t]-span at each weight with A_m using
// valuations at the support points.
void expect_generates(const PolyhedralDivisor& D, const std::vector<GradedGenerator>& G, long box, long max_total) {
  std::map<IntVec, std::map<std::string, long>> best;  // weight -> point -> min order
  std::vector<std::pair<IntVec, FactoredRatFunc>> prods = {{IntVec(D.rank(), Integer(0)), FactoredRatFunc::one(D.field())}};
  std::vector<GradedGenerator> nonzero;
  for (const auto& g : G)
    if (std::any_of(g.m.begin(), g.m.end(), [](const Integer& x) { return x != 0; })) nonzero.push_back(g);
  std::function<void(std::size_t, IntVec, FactoredRatFunc, long)> rec = [&](std::size_t i, IntVec m, FactoredRatFunc f, long tot) {
    if (i == nonzero.size()) {
      if (max_norm(m) > box) return;
      auto& b = best[m];
      for (const auto& s : D.support()) {
        long o = f.exponent_of(s.point.poly());
        auto it = b.find(s.point.str());
        if (it == b.end() || o < it->second) b[s.point.str()] = o;
      }
      return;
    }
    for (long a = 0; tot + a <= max_total; ++a) {
      rec(i + 1, m, f, tot + a);
      m = m + nonzero[i].m;
      f = f * nonzero[i].f;
    }
  };
  rec(0, IntVec(D.rank(), Integer(0)), FactoredRatFunc::one(D.field()), 0);
  for_each_box_point(D.rank(), box, [&](const IntVec& m) {
    if (!D.weight_cone().contains(m)) return;
    ASSERT_TRUE(best.count(m)) << "weight " << vec_str(m) << " not reached";
    FactoredRatFunc fm = graded_piece(D, m).module.generator;
    for (const auto& s : D.support()) EXPECT_EQ(best[m][s.point.str()], fm.exponent_of(s.point.poly())) << vec_str(m);
  });
}

}  // namespace

TEST(Generators, W25) {
  PolyhedralDivisor D = w25();
  auto r = algebra_generators(D, {10, std::nullopt});
  std::vector<std::pair<IntVec, RatFunc>> got;
  for (const auto& g : r.generators) got.emplace_back(g.m, g.f.to_ratfunc());
  std::vector<std::pair<IntVec, RatFunc>> want = {{iv({0}), parse_ratfunc("t", F2L)},
                                                   {iv({1}), parse_ratfunc("1", F2L)},
                                                   {iv({5}), parse_ratfunc("t^-1", F2L)},
                                                   {iv({-5}), parse_ratfunc("t*(t^2+l)", F2L)}};
  std::sort(got.begin(), got.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::sort(want.begin(), want.end(), [](auto& a, auto& b) { return a.first < b.first; });
  EXPECT_EQ(got, want);
  EXPECT_TRUE(r.stabilized);
  expect_generates(D, r.generators, 8, 14);
}

TEST(Generators, TrivialDivisor) {
  PolyhedralDivisor D(QQ, Curve::A1, Cone::orthant(1), {});
  auto r = algebra_generators(D, {6, std::nullopt});
  ASSERT_EQ(r.generators.size(), 2u);
  EXPECT_EQ(r.generators[1].m, iv({1}));
}

TEST(Generators, Char2RamifiedRestrictedToOmega2) {
  PolyhedralDivisor D = char2_ramified(F2);
  Cone w2 = Cone::from_generators(2, std::vector<IntVec>{iv({0, 1}), iv({2, 1})});
  auto r = algebra_generators(D, {6, w2});
  std::vector<std::pair<IntVec, RatFunc>> got;
  for (const auto& g : r.generators) got.emplace_back(g.m, g.f.to_ratfunc());
  std::sort(got.begin(), got.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<std::pair<IntVec, RatFunc>> want = {{iv({0, 0}), parse_ratfunc("t", F2)},
                                                   {iv({0, 1}), parse_ratfunc("1", F2)},
                                                   {iv({1, 1}), parse_ratfunc("1", F2)},
                                                   {iv({2, 1}), parse_ratfunc("t^-1*(t-1)^-1", F2)}};
  EXPECT_EQ(got, want);
}

TEST(Generators, Char2RamifiedFull) {
  PolyhedralDivisor D = char2_ramified(F2);
  auto r = algebra_generators(D, {8, std::nullopt});
  EXPECT_TRUE(r.stabilized);
  expect_generates(D, r.generators, 5, 8);
}
