#pragma once

/**
 * @file verify.hpp
 * @brief Finite-window checks of the higher-derivation axioms, stability,
 * horizontality and the kernel.
 */

#include "ghz/lfihd/operator.hpp"
#include "ghz/polyhedral/lattice.hpp"
#include "ghz/tvariety/pdiv.hpp"

namespace ghz {

struct AxiomReport {
  bool identity = true, leibniz = true, iterativity = true, nilpotency = true, homogeneity = true;
  long checks = 0;
  std::vector<std::string> failures;
  bool ok() const { return identity && leibniz && iterativity && nilpotency && homogeneity; }
};

namespace detail {

inline std::string order_str(long i, const GradedElement& x) { return "d^(" + std::to_string(i) + ")(" + x.str() + ")"; }

template <class Op>
long order_for(const Op& op, const GradedElement& x, std::optional<long> order) {
  if (order) return *order;
  auto b = op.nilpotency_bound(x);
  if (!b) throw std::invalid_argument(x.str() + " has no nilpotency bound; pass an explicit order");
  return *b;
}

}  // namespace detail

/// Identity, homogeneity, nilpotency and iterativity on each element; Leibniz on
/// all pairs. Orders default to the nilpotency bounds (summed for products).
template <class Op>
AxiomReport verify_axioms(const Op& op, const std::vector<GradedElement>& xs, std::optional<long> order = std::nullopt) {
  AxiomReport r;
  const BaseField& k = op.field();
  auto fail = [&](bool& flag, std::string msg) {
    flag = false;
    if (r.failures.size() < 20) r.failures.push_back(std::move(msg));
  };
  std::vector<std::vector<GradedElement>> images;
  for (const auto& x : xs) {
    long I = detail::order_for(op, x, order);
    auto bound = op.nilpotency_bound(x);
    long top = bound ? std::max(I, *bound + op.nilpotency_margin()) : I;
    auto D = op.apply(x, top).orders;
    ++r.checks;
    if (!(D[0] == x)) fail(r.identity, "d^(0) is not the identity on " + x.str());
    if (bound)
      for (long i = *bound + 1; i <= top; ++i)
        if (!D[static_cast<std::size_t>(i)].is_zero()) fail(r.nilpotency, detail::order_str(i, x) + " is nonzero beyond the bound " + std::to_string(*bound));
    for (const auto& [m, f] : x.terms()) {
      auto Dm = op.apply(GradedElement::monomial(m, f), I).orders;
      for (long i = 0; i <= I; ++i)
        for (const auto& [w, g] : Dm[static_cast<std::size_t>(i)].terms()) {
          IntVec expect = m;
          for (std::size_t j = 0; j < expect.size(); ++j) expect[j] += Integer(i) * op.degree()[j];
          if (w != expect) fail(r.homogeneity, detail::order_str(i, GradedElement::monomial(m, f)) + " has weight " + vec_str(w));
        }
    }
    for (long b = 0; b <= I; ++b) {
      const GradedElement& Db = D[static_cast<std::size_t>(b)];
      auto E = op.apply(Db, I - b).orders;
      for (long a = 0; a + b <= I; ++a) {
        Scalar c = binom_in_field(Integer(a + b), static_cast<unsigned long>(a), k);
        GradedElement rhs = c * D[static_cast<std::size_t>(a + b)];
        ++r.checks;
        if (!(E[static_cast<std::size_t>(a)] == rhs))
          fail(r.iterativity, "d^(" + std::to_string(a) + ") d^(" + std::to_string(b) + ") != C(" + std::to_string(a + b) + "," +
                                  std::to_string(a) + ") d^(" + std::to_string(a + b) + ") on " + x.str());
      }
    }
  }
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i; j < xs.size(); ++j) {
      GradedElement xy = xs[i] * xs[j];
      long I = order ? *order : detail::order_for(op, xs[i], std::nullopt) + detail::order_for(op, xs[j], std::nullopt);
      auto Dxy = op.apply(xy, I).orders, Dx = op.apply(xs[i], I).orders, Dy = op.apply(xs[j], I).orders;
      for (long n = 0; n <= I; ++n) {
        GradedElement s(k);
        for (long a = 0; a <= n; ++a) s = s + Dx[static_cast<std::size_t>(a)] * Dy[static_cast<std::size_t>(n - a)];
        ++r.checks;
        if (!(s == Dxy[static_cast<std::size_t>(n)])) fail(r.leibniz, "Leibniz fails at order " + std::to_string(n) + " on " + xs[i].str() + " * " + xs[j].str());
      }
    }
  return r;
}

struct StabilityWitness {
  std::size_t generator = 0;
  long order = 0;
  IntVec weight;
  std::string term;
  std::string reason;
  std::string str() const { return "d^(" + std::to_string(order) + ") of generator " + std::to_string(generator) + ": " + reason; }
};

struct StabilityReport {
  std::vector<StabilityWitness> witnesses;
  bool stable() const { return witnesses.empty(); }
};

inline bool in_algebra(const PolyhedralDivisor& D, const IntVec& m, const RatFunc& f) {
  if (!D.weight_cone().contains(m)) return false;
  return membership(f, m, D);
}

/// Every d^(i)(g) lies in A for i <= order (default: the nilpotency bound of g).
inline StabilityReport verify_stability(const DthetaOperator& op, const PolyhedralDivisor& D, const std::vector<GradedElement>& gens,
                                        std::optional<long> order = std::nullopt) {
  StabilityReport r;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    const auto& g = gens[gi];
    bool member = true;
    for (const auto& [m, f] : g.terms()) member = member && in_algebra(D, m, f);
    if (!member) {
      r.witnesses.push_back({gi, 0, {}, g.str(), "generator " + g.str() + " is not in A"});
      continue;
    }
    long I = order ? *order : op.nilpotency_bound(g).value_or(0);
    std::vector<GradedElement> img;
    try {
      img = op.apply(g, I).orders;
    } catch (const DescentError& e) {
      r.witnesses.push_back({gi, -1, {}, g.str(), std::string("descent fails: ") + e.what()});
      continue;
    }
    for (long i = 1; i <= I; ++i)
      for (const auto& [m, f] : img[static_cast<std::size_t>(i)].terms())
        if (!in_algebra(D, m, f)) {
          std::string term = "(" + f.str() + ")*chi^" + vec_str(m);
          r.witnesses.push_back({gi, i, m, term, "d^(" + std::to_string(i) + ")(" + g.str() + ") has the term " + term + " outside A"});
        }
  }
  return r;
}

struct HorizontalReport {
  bool horizontal = false;
  std::optional<long> order;  ///< first j with d^(j)(t) != 0
  std::string value;
};

/// Searches d^(j)(t) != 0 for 1 <= j <= order, default p^{s_r + u} d.
inline HorizontalReport verify_horizontal(const DthetaOperator& op, std::optional<long> order = std::nullopt) {
  const BaseField& k = op.field();
  long I = order ? *order : op.exponents().back() * to_long(Integer(op.cones().d * (op.cones().d / op.cones().ell)));
  GradedElement t = GradedElement::monomial(IntVec(op.degree().size(), Integer(0)), RatFunc(Poly::variable(k)));
  auto D = op.apply(t, I).orders;
  HorizontalReport r;
  for (long j = 1; j <= I; ++j)
    if (!D[static_cast<std::size_t>(j)].is_zero()) {
      r.horizontal = true;
      r.order = j;
      r.value = D[static_cast<std::size_t>(j)].str();
      break;
    }
  return r;
}

/// A toric operator never moves a curve coordinate.
inline HorizontalReport verify_horizontal(const ToricRootOperator&, std::optional<long> = std::nullopt) { return {}; }

struct KernelPiece {
  IntVec m;
  long dimension = 0;
  RatFunc phi;
  bool phi_divisor_ok = false;
};

struct KernelReport {
  std::vector<KernelPiece> pieces;  ///< nonzero kernel pieces only
  std::vector<IntVec> weights;
  std::optional<Cone> omega;
  std::optional<Lattice> lattice;
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

namespace detail {

/// Nullspace of a matrix over k, as basis vectors.
inline std::vector<std::vector<Scalar>> scalar_nullspace(std::vector<std::vector<Scalar>> rows, std::size_t ncols, const BaseField& k) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      Scalar f = rows[i][c];
      for (std::size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    std::vector<Scalar> v(ncols, Scalar::zero(k));
    v[free] = Scalar::one(k);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = Scalar::zero(k) - rows[i][free];
    basis.push_back(v);
  }
  return basis;
}

}  // namespace detail

/// Kernel of d^(1..I) on A_m for m in the box, searched among g_m * P(t) with deg P <= window.
inline KernelReport kernel_in_box(const DthetaOperator& op, const PolyhedralDivisor& D, long box, std::optional<long> order = std::nullopt,
                                  long window = 2) {
  if (D.curve() != Curve::A1) throw std::invalid_argument("kernel_in_box is implemented over A1");
  const BaseField& k = D.field();
  KernelReport rep;
  Cone wc = D.weight_cone();
  std::set<IntVec> scanned;
  for_each_box_point(D.rank(), box, [&](const IntVec& m) {
    if (!wc.contains(m)) return;
    scanned.insert(m);
    ModuleDescription mod = graded_piece(D, m).module;
    RatFunc g = mod.generator.to_ratfunc();
    std::vector<GradedElement> cand;
    long I = 0;
    for (long j = 0; j <= window; ++j) {
      cand.push_back(GradedElement::monomial(m, g * RatFunc(Poly::monomial(Scalar::one(k), j))));
      I = std::max(I, order ? *order : op.nilpotency_bound(cand.back()).value_or(0));
    }
    // columns: candidates; rows: coefficients of numerators over a common denominator
    std::vector<std::vector<RatFunc>> imgs;
    for (const auto& c : cand) {
      auto D1 = op.apply(c, I).orders;
      std::vector<RatFunc> col;
      for (long i = 1; i <= I; ++i) {
        const auto& terms = D1[static_cast<std::size_t>(i)].terms();
        col.push_back(terms.empty() ? RatFunc::zero(k) : terms.begin()->second);
      }
      imgs.push_back(col);
    }
    std::vector<std::vector<Scalar>> rows;
    for (long i = 0; i < I; ++i) {
      Poly L = Poly::constant(Scalar::one(k));
      for (const auto& col : imgs) {
        const Poly& dn = col[static_cast<std::size_t>(i)].den();
        L = divmod(L * dn, gcd(L, dn)).first;
      }
      std::vector<Poly> nums;
      long lo = 0, hi = 0;
      for (const auto& col : imgs) {
        const RatFunc& f = col[static_cast<std::size_t>(i)];
        Poly n = f.num() * divmod(L, f.den()).first;
        if (!n.is_zero()) {
          lo = std::min(lo, n.low_degree());
          hi = std::max(hi, n.degree());
        }
        nums.push_back(n);
      }
      for (long e = lo; e <= hi; ++e) {
        std::vector<Scalar> row;
        for (const auto& n : nums) row.push_back(n.coeff(e));
        rows.push_back(row);
      }
    }
    auto ker = detail::scalar_nullspace(rows, cand.size(), k);
    if (ker.empty()) return;
    KernelPiece piece{m, static_cast<long>(ker.size()), g, false};
    if (ker.size() > 1) rep.failures.push_back("kernel at " + vec_str(m) + " has dimension " + std::to_string(ker.size()));
    bool constant = true;
    for (std::size_t j = 1; j < ker[0].size(); ++j) constant = constant && ker[0][j].is_zero();
    if (!constant) rep.failures.push_back("kernel element at " + vec_str(m) + " is not a constant multiple of the generator");
    QDivisor sum = principal_divisor(mod.generator, Curve::A1) + pdiv_eval(D, m);
    piece.phi_divisor_ok = sum.is_zero();
    if (!piece.phi_divisor_ok) rep.failures.push_back("div(phi) + D(m) = " + sum.str() + " at " + vec_str(m));
    rep.pieces.push_back(piece);
    rep.weights.push_back(m);
  });
  std::size_t n = D.rank();
  rep.omega = Cone::from_generators(n, rep.weights);
  rep.lattice = Lattice(n, rep.weights);
  std::set<IntVec> W(rep.weights.begin(), rep.weights.end());
  for (const auto& m : scanned)
    if (rep.omega->contains(m) && rep.lattice->contains(m) && !W.count(m))
      rep.failures.push_back(vec_str(m) + " lies in omega and L but carries no kernel element");
  return rep;
}

}  // namespace ghz
