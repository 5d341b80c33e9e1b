#pragma once

/**
 * @file operator.hpp
 * @brief The higher derivation attached to a coherent family, and the toric one of a root.
 */

#include "ghz/arith/binomial.hpp"
#include "ghz/arith/series.hpp"
#include "ghz/classifier/coherent.hpp"
#include "ghz/lfihd/element.hpp"

namespace ghz {

struct DescentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ApplicationResult {
  std::vector<GradedElement> orders;  ///< orders[i] = d^(i)(x), i = 0..max order
  bool exact = false;                 ///< all higher orders are known to vanish
};

namespace detail {

/// Coefficients of S^j for S = sum lambda_i T^{q_i}, truncated after T^I.
inline std::vector<std::vector<Scalar>> substitution_powers(const BaseField& k, const std::vector<long>& q, const std::vector<Scalar>& lam,
                                                            long I) {
  std::vector<Scalar> S(static_cast<std::size_t>(I + 1), Scalar::zero(k));
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i] <= I) S[static_cast<std::size_t>(q[i])] += lam[i];
  std::vector<std::vector<Scalar>> pw;
  pw.push_back(std::vector<Scalar>(S.size(), Scalar::zero(k)));
  pw[0][0] = Scalar::one(k);
  long qmin = *std::min_element(q.begin(), q.end());
  for (long j = 1; j * qmin <= I; ++j) {
    std::vector<Scalar> nx(S.size(), Scalar::zero(k));
    const auto& prev = pw.back();
    for (std::size_t a = 0; a < S.size(); ++a) {
      if (prev[a].is_zero()) continue;
      for (std::size_t b = 1; a + b < S.size(); ++b)
        if (!S[b].is_zero()) nx[a + b] += prev[a] * S[b];
    }
    pw.push_back(std::move(nx));
  }
  return pw;
}

/// L(z + S) = sum_j L^[j](z) S^j, coefficientwise in T.
inline std::vector<Poly> substitute_laurent(const Poly& L, const std::vector<std::vector<Scalar>>& pw, long I) {
  std::vector<Poly> out(static_cast<std::size_t>(I + 1), Poly(L.field(), L.var()));
  for (std::size_t j = 0; j < pw.size(); ++j) {
    Poly h = L.hasse(j);
    if (h.is_zero()) continue;
    for (std::size_t i = 0; i < out.size(); ++i)
      if (!pw[j][i].is_zero()) out[i] = out[i] + pw[j][i] * h;
  }
  return out;
}

}  // namespace detail

/// Derivation from a coherent family: per term, pass to zeta = (t - y0)^{1/d},
/// substitute zeta -> zeta + sum lambda_i T^{p^{s_i}}, and descend back to k(t).
class DthetaOperator {
 public:
  static DthetaOperator build(const CoherentFamily& th, bool override_incoherent = false) {
    CoherenceReport rep = coherent_validate(th);
    if (!rep.coherent() && !override_incoherent)
      throw std::invalid_argument("family is not coherent: " + rep.violations.front().str());
    return DthetaOperator(th);
  }

  const CoherentFamily& family() const { return th_; }
  const AssociatedCones& cones() const { return a_; }
  const BaseField& field() const { return k_; }
  const IntVec& degree() const { return th_.e; }
  long d() const { return d_; }
  const std::vector<long>& exponents() const { return q_; }
  long nilpotency_margin() const { return q_.back(); }

  /// "z+T^4"
  std::string substitution_str() const {
    std::string s = "z";
    for (std::size_t i = 0; i < q_.size(); ++i) {
      s += "+";
      if (!th_.lambda[i].is_one()) s += (th_.lambda[i].needs_parens() ? "(" + th_.lambda[i].str() + ")" : th_.lambda[i].str()) + "*";
      s += q_[i] == 1 ? "T" : "T^" + std::to_string(q_[i]);
    }
    return s;
  }

  /// xi_m = prod over colored y != y0 of q_y^{-<m, v_y>}.
  RatFunc xi(const IntVec& m) const {
    RatFunc r = RatFunc::one(k_);
    for (const auto& [q, v] : xi_) {
      Rational x = dot(to_rat(m), v);
      r = r * RatFunc(q).pow(-to_long(x.get_num()));
    }
    return r;
  }

  /// Max over terms of deg_z(H) p^{s_r}; none when some H is not a polynomial in z.
  std::optional<long> nilpotency_bound(const GradedElement& x) const {
    long b = 0;
    for (const auto& [m, f] : x.terms()) {
      auto [L, Q] = lift(f, m);
      if (!Q.is_constant() || L.low_degree() < 0) return std::nullopt;
      b = std::max(b, L.degree() * q_.back());
    }
    return b;
  }

  ApplicationResult apply(const GradedElement& x, std::optional<long> max_order = std::nullopt) const {
    auto bound = nilpotency_bound(x);
    if (!max_order && !bound) throw std::invalid_argument("element is not in the algebra; an explicit order is required");
    long I = max_order ? *max_order : *bound;
    if (I < 0) throw std::invalid_argument("negative order");
    ApplicationResult res;
    res.exact = bound && *bound <= I;
    res.orders.assign(static_cast<std::size_t>(I + 1), GradedElement(k_));
    auto pw = detail::substitution_powers(k_, q_, th_.lambda, I);
    for (const auto& [m, f] : x.terms()) apply_term(f, m, I, pw, res.orders);
    return res;
  }

 private:
  explicit DthetaOperator(const CoherentFamily& th) : th_(th), a_(associated_cones(th.coloring)), k_(th.coloring.D.field()) {
    const Coloring& c = th.coloring;
    if (c.y0.is_infinity() || !c.y0.is_rational()) throw std::invalid_argument("y0 must be a finite rational point");
    if (c.y_inf && !c.y_inf->is_infinity()) throw std::invalid_argument("over P1 the operator is implemented for y_infinity = infinity only");
    if (th.s.size() != th.lambda.size() || th.s.empty()) throw std::invalid_argument("s and lambda must have the same positive length");
    y0c_ = c.y0.value();
    d_ = to_long(a_.d);
    for (std::size_t i = 0; i < th.s.size(); ++i) q_.push_back(to_long(th.p_pow(th.s[i])));
    for (const auto& [y, v] : c.vertices)
      if (!(y == c.y0) && !y.is_infinity() && !is_zero(v)) xi_.emplace_back(y.poly(), v);
  }

  /// f(z^d + c) with t replaced.
  Poly up(const Poly& P) const { return P.taylor_shift(y0c_).spread(d_).with_var('z'); }

  /// H = z^a N/Q with Q(0) != 0, returned as (z^a N, Q).
  std::pair<Poly, Poly> lift(const RatFunc& f, const IntVec& m) const {
    RatFunc xm = xi(m);
    Poly num = up(f.num()) * up(xm.den()), den = up(f.den()) * up(xm.num());
    Rational a = Rational(d_) * dot(to_rat(m), a_.v_y0);
    long shift = to_long(a.get_num()) + num.low_degree() - den.low_degree();
    num = num.shifted(-num.low_degree());
    den = den.shifted(-den.low_degree());
    Poly g = gcd(num, den);
    if (g.degree() > 0) {
      num = divmod(num, g).first;
      den = divmod(den, g).first;
    }
    Scalar inv = den.lead().inverse();
    return {(inv * num).shifted(shift), inv * den};
  }

  RatFunc descend(const RatFunc& R, const IntVec& weight, long order) const {
    auto n = R.num().compress(d_), dn = R.den().compress(d_);
    if (!n || !dn)
      throw DescentError("order " + std::to_string(order) + " at weight " + vec_str(weight) + ": " + R.str() + " is not a function of z^" +
                         std::to_string(d_));
    Scalar mc = Scalar::zero(k_) - y0c_;
    return RatFunc(n->with_var('t').taylor_shift(mc), dn->with_var('t').taylor_shift(mc));
  }

  void apply_term(const RatFunc& f, const IntVec& m, long I, const std::vector<std::vector<Scalar>>& pw,
                  std::vector<GradedElement>& out) const {
    auto [L, Q] = lift(f, m);
    auto A = detail::substitute_laurent(L, pw, I);
    std::vector<RatFunc> C;
    if (Q.is_constant()) {
      for (auto& a : A) C.push_back(RatFunc(a));
    } else {
      RatFunc zero = RatFunc::zero(k_, 'z');
      TruncatedSeries<RatFunc> sa(static_cast<std::size_t>(I + 1), zero), sb(static_cast<std::size_t>(I + 1), zero);
      auto B = detail::substitute_laurent(Q, pw, I);
      for (std::size_t i = 0; i < A.size(); ++i) {
        sa.set(i, RatFunc(A[i]));
        sb.set(i, RatFunc(B[i]));
      }
      auto prod = sa * sb.inverse();
      for (std::size_t i = 0; i < A.size(); ++i) C.push_back(prod[i]);
    }
    Poly z = Poly::variable(k_, 'z');
    for (long i = 0; i <= I; ++i) {
      const RatFunc& ci = C[static_cast<std::size_t>(i)];
      if (ci.is_zero()) continue;
      IntVec w = m;
      for (std::size_t j = 0; j < w.size(); ++j) w[j] += Integer(i) * th_.e[j];
      Rational b = Rational(d_) * dot(to_rat(w), a_.v_y0);
      RatFunc R = ci * RatFunc(z).pow(-to_long(b.get_num()));
      out[static_cast<std::size_t>(i)].add(w, descend(R, w, i) * xi(w));
    }
  }

  CoherentFamily th_;
  AssociatedCones a_;
  BaseField k_;
  Scalar y0c_;
  long d_ = 1;
  std::vector<long> q_;
  std::vector<std::pair<Poly, RatVec>> xi_;
};

/// d^(i)(chi^m) = C(<m, mu>, i) chi^{m + i e} for a Demazure root e of sigma0.
class ToricRootOperator {
 public:
  ToricRootOperator(Cone sigma0, IntVec e, BaseField k) : sigma0_(std::move(sigma0)), e_(std::move(e)), k_(k) {
    if (e_.size() != sigma0_.ambient_dim()) throw std::invalid_argument("root of wrong dimension");
    for (const auto& r : sigma0_.rays())
      if (dot(e_, r) == -1) {
        if (!mu_.empty()) throw std::invalid_argument(vec_str(e_) + " pairs to -1 with two rays");
        mu_ = r;
      }
    if (mu_.empty() || !demazure_root_check(sigma0_, mu_, to_rat(e_))) throw std::invalid_argument(vec_str(e_) + " is not a Demazure root of " + sigma0_.str());
  }

  const BaseField& field() const { return k_; }
  const IntVec& degree() const { return e_; }
  const IntVec& distinguished_ray() const { return mu_; }
  const Cone& cone() const { return sigma0_; }
  long nilpotency_margin() const { return 1; }

  std::optional<long> nilpotency_bound(const GradedElement& x) const {
    long b = 0;
    for (const auto& [m, f] : x.terms()) {
      Integer h = Rational(dot(m, mu_)).get_num();
      if (h < 0) return std::nullopt;
      b = std::max(b, to_long(h));
    }
    return b;
  }

  ApplicationResult apply(const GradedElement& x, std::optional<long> max_order = std::nullopt) const {
    auto bound = nilpotency_bound(x);
    if (!max_order && !bound) throw std::invalid_argument("element outside the monoid algebra needs an explicit order");
    long I = max_order ? *max_order : *bound;
    ApplicationResult res;
    res.exact = bound && *bound <= I;
    res.orders.assign(static_cast<std::size_t>(I + 1), GradedElement(k_));
    for (const auto& [m, f] : x.terms()) {
      if (!f.is_constant()) throw std::invalid_argument("toric operator acts on monomials with constant coefficients");
      Integer h = Rational(dot(m, mu_)).get_num();
      for (long i = 0; i <= I; ++i) {
        Scalar b = binom_in_field(h, static_cast<unsigned long>(i), k_);
        if (b.is_zero()) continue;
        IntVec w = m;
        for (std::size_t j = 0; j < w.size(); ++j) w[j] += Integer(i) * e_[j];
        res.orders[static_cast<std::size_t>(i)].add(w, b * f);
      }
    }
    return res;
  }

 private:
  Cone sigma0_;
  IntVec e_, mu_;
  BaseField k_;
};

}  // namespace ghz
