#pragma once

#include "ghz/arith/field.hpp"

namespace ghz {

/// n(n-1)...(n-j+1)/j!, any sign of n.
inline Integer binom_general(const Integer& n, unsigned long j) {
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), j);
  return r;
}

/// C(n, j) mod p for n, j >= 0 as a product of base-p digit binomials.
inline std::uint32_t binom_lucas(Integer n, Integer j, std::uint32_t p) {
  if (n < 0 || j < 0) throw std::invalid_argument("Lucas path needs nonnegative arguments");
  std::uint64_t acc = 1;
  while (j > 0) {
    Integer nd, jd;
    mpz_fdiv_qr_ui(n.get_mpz_t(), nd.get_mpz_t(), n.get_mpz_t(), p);
    mpz_fdiv_qr_ui(j.get_mpz_t(), jd.get_mpz_t(), j.get_mpz_t(), p);
    std::uint64_t a = nd.get_ui(), b = jd.get_ui();
    if (b > a) return 0;
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t i = 0; i < b; ++i) {
      num = num * ((a - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    acc = acc * num % p * mod_inv(static_cast<std::uint32_t>(den), p) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

inline Scalar binom_in_field(const Integer& n, unsigned long j, const BaseField& k) {
  if (k.kind == FieldKind::Rationals || n < 0) return Scalar::from_integer(k, binom_general(n, j));
  return Scalar::from_int(k, binom_lucas(n, Integer(j), k.p));
}

}  // namespace ghz
