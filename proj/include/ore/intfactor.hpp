#pragma once

#include <vector>

#include "ore/numbers.hpp"

namespace ore {

struct IntFactorization {
  int unit = 1;  // +1 or -1
  std::vector<std::pair<Int, unsigned long>> factors;  // (prime, multiplicity), primes ascending
};

/// Factor a nonzero integer by trial division.  Primes are searched up to
/// `bound`; a cofactor below bound^2 is itself prime and accepted, anything
/// larger is rejected (desk-scale inputs only).
IntFactorization factor_int(const Int& n, const Int& bound = Int(1000000));

/// Largest divisor of n whose prime support lies in `primes` (n != 0).
Int support_part(const Int& n, const std::vector<Int>& primes);

bool is_prime_small(const Int& n);

}  // namespace ore
