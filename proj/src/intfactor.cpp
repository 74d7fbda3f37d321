#include "ore/intfactor.hpp"

#include "ore/error.hpp"

namespace ore {

IntFactorization factor_int(const Int& n, const Int& bound) {
  if (n == 0) fail(Errc::zero_input, "factor_int(0)");
  IntFactorization out;
  Int m = n;
  if (m < 0) {
    out.unit = -1;
    m = -m;
  }
  for (Int p = 2; p * p <= m && p <= bound; p += (p == 2 ? 1 : 2)) {
    if (!divides(p, m)) continue;
    unsigned long e = 0;
    while (divides(p, m)) {
      m = div_exact(m, p);
      ++e;
    }
    out.factors.emplace_back(p, e);
  }
  if (m > 1) {
    if (m > bound * bound)
      fail(Errc::resource_limit, "factor_int: cofactor " + to_string(m) + " exceeds trial-division bound");
    out.factors.emplace_back(m, 1);
  }
  return out;
}

Int support_part(const Int& n, const std::vector<Int>& primes) {
  if (n == 0) fail(Errc::zero_input, "support_part(0)");
  Int m = abs(n);
  Int part = 1;
  for (const Int& p : primes) {
    while (divides(p, m)) {
      m = div_exact(m, p);
      part *= p;
    }
  }
  return part;
}

bool is_prime_small(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

}  // namespace ore
