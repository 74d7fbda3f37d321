#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "ore/error.hpp"

namespace ore {

/// Exact arbitrary-precision integer.  GMP keeps a canonical zero and sign,
/// so the type invariants hold by construction.
using Int = mpz_class;

/// Exact rational with gcd(|num|, den) = 1 and den >= 1 (GMP canonical form).
/// All construction sites must go through make_rat or GMP operators, which
/// preserve canonicity.
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) fail(Errc::zero_input, "rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int int_pow(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat r;
  mpq_class b = base;
  mpz_pow_ui(r.get_num_mpz_t(), b.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), b.get_den_mpz_t(), e);
  return r;  // canonical since base was
}

inline Int int_gcd(const Int& a, const Int& b) {
  Int r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& n) {
  if (d == 0) return n == 0;
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline Int div_exact(const Int& n, const Int& d) {
  Int r;
  mpz_divexact(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

/// Floor-symmetric remainder helpers used by the lattice code.
inline void fdiv_qr(Int& q, Int& r, const Int& n, const Int& d) {
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
}

inline Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// a * (a-1) * ... * (a-k+1)
inline Int falling_factorial(long a, unsigned long k) {
  Int r = 1;
  for (unsigned long j = 0; j < k; ++j) r *= Int(a - static_cast<long>(j));
  return r;
}

inline std::string to_string(const Int& n) { return n.get_str(); }

inline std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline Rat parse_rat(const std::string& text) {
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
    fail(Errc::parse_error, "bad rational literal: " + text);
  q.canonicalize();
  if (q.get_den() <= 0 && q != 0) fail(Errc::parse_error, "bad rational literal: " + text);
  return q;
}

}  // namespace ore
