#pragma once

#include "ghz/classifier/coherent.hpp"

namespace ghz {

struct EnumerationBounds {
  long e_box = 1;
  long s_max = 2;
  std::vector<Scalar> lambda_sample;                ///< empty means {1}
  std::optional<ClosedPoint> y_inf;                 ///< required over P1
  std::optional<std::vector<ClosedPoint>> y0_candidates;
};

namespace detail {

/// A finite rational point outside the support, trying t, t-1, t-2, ... then t-l.
inline std::optional<ClosedPoint> off_support_point(const PolyhedralDivisor& D, const std::optional<ClosedPoint>& y_inf) {
  const BaseField& k = D.field();
  std::vector<Scalar> tries;
  long limit = k.kind == FieldKind::Rationals ? 64 : static_cast<long>(k.p);
  for (long c = 0; c < limit; ++c) tries.push_back(Scalar::from_int(k, c));
  if (k.kind == FieldKind::RationalFunctions) tries.push_back(Scalar::lambda(k));
  for (const auto& c : tries) {
    ClosedPoint y = ClosedPoint::rational(c);
    if (!D.in_support(y) && !(y_inf && y == *y_inf)) return y;
  }
  return std::nullopt;
}

inline void strictly_increasing(long from, long to, std::vector<long>& cur, std::vector<std::vector<long>>& out) {
  for (long s = from; s <= to; ++s) {
    cur.push_back(s);
    out.push_back(cur);
    strictly_increasing(s + 1, to, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// Colorings from the linearity fan, one per (y0, cell) pair, deduplicated.
inline std::vector<Coloring> enumerate_colorings(const PolyhedralDivisor& D, const EnumerationBounds& b) {
  std::vector<ClosedPoint> y0s;
  if (b.y0_candidates) {
    y0s = *b.y0_candidates;
  } else {
    for (const auto& s : D.support())
      if (!s.point.is_infinity() && s.point.is_rational() && !(b.y_inf && s.point == *b.y_inf)) y0s.push_back(s.point);
    if (auto y = detail::off_support_point(D, b.y_inf)) y0s.push_back(*y);
  }
  std::vector<Coloring> out;
  std::set<std::string> seen;
  for (const auto& cell : linearity_fan(D, b.y_inf)) {
    for (const auto& y0 : y0s) {
      Coloring c{D, {}, y0, b.y_inf};
      for (const auto& [y, v] : cell.minimizers)
        if (!(b.y_inf && y == *b.y_inf)) c.vertices.emplace_back(y, v);
      if (!coloring_validate(c).ok()) continue;
      std::string key = y0.str();
      for (const auto& [y, v] : c.vertices) key += "|" + y.str() + ":" + vec_str(v);
      if (seen.insert(key).second) out.push_back(c);
    }
  }
  return out;
}

/// Every family in the candidate grid accepted by coherent_validate, in grid order.
inline std::vector<CoherentFamily> enumerate_coherent(const PolyhedralDivisor& D, const EnumerationBounds& b) {
  std::vector<CoherentFamily> out;
  if (b.e_box < 0) return out;
  const BaseField& k = D.field();
  std::vector<Scalar> lambdas = b.lambda_sample.empty() ? std::vector<Scalar>{Scalar::one(k)} : b.lambda_sample;
  std::vector<std::vector<long>> seqs;
  if (k.char_exponent() == 1) {
    seqs.push_back({1});
  } else {
    std::vector<long> cur;
    detail::strictly_increasing(0, b.s_max, cur, seqs);
  }
  for (const auto& c : enumerate_colorings(D, b)) {
    for_each_box_point(D.rank(), b.e_box, [&](const IntVec& e) {
      if (is_zero(to_rat(e))) return;
      for (const auto& s : seqs) {
        std::vector<std::size_t> idx(s.size(), 0);
        for (;;) {
          std::vector<Scalar> lam;
          for (auto i : idx) lam.push_back(lambdas[i]);
          CoherentFamily th = CoherentFamily::make(c, e, s, lam);
          if (coherent_validate(th).coherent()) out.push_back(th);
          std::size_t j = 0;
          while (j < idx.size() && idx[j] == lambdas.size() - 1) idx[j++] = 0;
          if (j == idx.size()) break;
          ++idx[j];
        }
      }
    });
  }
  return out;
}

}  // namespace ghz
