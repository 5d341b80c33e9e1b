#pragma once

#include <gmpxx.h>

#include <climits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ghz {

using Integer = mpz_class;
using Rational = mpq_class;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Integer floor_of(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline long to_long(const Integer& n) {
  if (!n.fits_slong_p()) throw std::overflow_error("integer does not fit in long: " + n.get_str());
  return n.get_si();
}

inline std::string to_string(const Integer& n) { return n.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "a", "-a" or "a/b" (surrounding blanks allowed).
inline Rational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  auto parse_int = [&](std::string_view s) {
    s = trim(s);
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty()) throw ParseError("malformed rational '" + std::string(text) + "'");
    for (char c : digits)
      if (c < '0' || c > '9') throw ParseError("malformed rational '" + std::string(text) + "'");
    std::string buf(s.front() == '+' ? s.substr(1) : s);
    return Integer(buf);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("malformed rational '" + std::string(text) + "': zero denominator");
  return make_rational(num, den);
}

}  // namespace ghz
