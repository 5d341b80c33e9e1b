#pragma once

// Brute-force H^0 oracle on P^1 over F_2: enumerate every candidate
// f = h / D with D = prod q_y^(floor a_y + 1) and deg h bounded, test div f + floor E >= 0
// by valuations, and return log2 of the number of members.

#include "ghz/curve/divisor.hpp"

#include <cstdint>

namespace ghz::oracle {

inline long h0_dimension_bruteforce(const QDivisor& E) {
  BaseField k = BaseField::prime_field(2);
  long a_inf = 0;
  Poly D = Poly::constant(Scalar::one(k));
  for (const auto& [y, a] : E.terms()) {
    long fl = to_long(floor_of(a));
    if (y.is_infinity())
      a_inf = fl;
    else if (fl > 0)
      D *= y.poly().pow(static_cast<unsigned long>(fl + 1));
  }
  long K = D.degree() + a_inf;
  if (K < 0) return 0;
  if (K > 16) throw std::invalid_argument("oracle bound too large");
  long members = 0;
  for (std::uint32_t bits = 0; bits < (1u << (K + 1)); ++bits) {
    if (bits == 0) {
      ++members;
      continue;
    }
    Poly h(k);
    for (long i = 0; i <= K; ++i)
      if (bits & (1u << i)) h.add_term(i, Scalar::one(k));
    RatFunc f(h, D);
    bool ok = true;
    for (const auto& [y, a] : E.terms()) {
      long fl = to_long(floor_of(a));
      long ord = y.is_infinity() ? -f.degree() : f.ord(y.poly());
      if (ord + fl < 0) ok = false;
    }
    // no poles outside the support of E at finite points: guaranteed by the shape h/D
    if (!E.terms().count(ClosedPoint::infinity()) && f.degree() > 0) ok = false;
    if (ok) ++members;
  }
  long dim = 0;
  while ((1L << dim) < members) ++dim;
  if ((1L << dim) != members) throw std::logic_error("member count is not a power of two");
  return dim;
}

}  // namespace ghz::oracle
