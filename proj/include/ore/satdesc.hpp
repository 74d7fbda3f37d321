#pragma once

#include <vector>

#include "ore/ring.hpp"

namespace ore {

/// Canonical normal form of a saturated multiplicative set in Z or K[x]:
/// either the set generated (together with units) by finitely many
/// irreducibles, or the complement description listing the finitely many
/// irreducibles that are NOT invertible.  The two modes are disjoint
/// representations; the paper's third type (both sides infinite) is not
/// representable as finite data.
struct SatSetDesc {
  enum class Mode { finite, cofinite };

  RingId ring = RingId::integers();
  Mode mode = Mode::finite;
  std::vector<Int> primes;            // ring Z: positive primes, ascending
  std::vector<UniPoly> irreducibles;  // ring QX: monic irreducibles, sorted

  static SatSetDesc z_finite(std::vector<Int> primes);
  static SatSetDesc z_cofinite(std::vector<Int> primes);
  static SatSetDesc qx_finite(std::vector<UniPoly> irreducibles);
  static SatSetDesc qx_cofinite(std::vector<UniPoly> irreducibles);

  std::size_t count() const {
    return ring.tag == RingId::Tag::Z ? primes.size() : irreducibles.size();
  }
  bool operator==(const SatSetDesc& o) const {
    return ring == o.ring && mode == o.mode && primes == o.primes && irreducibles == o.irreducibles;
  }
  bool operator!=(const SatSetDesc& o) const { return !(*this == o); }
};

/// Exact membership descriptors for the two computable Weyl saturation
/// closures: LSat(Theta_z) and LSat([x,d]) (the latter coincides with the
/// z = 0 Euler closure).
struct WeylSatDesc {
  enum class Kind { euler_closure, union_xd };
  Kind kind = Kind::union_xd;
  Rat z;  // euler_closure only

  static WeylSatDesc euler_closure(const Rat& z) { return {Kind::euler_closure, z}; }
  static WeylSatDesc union_xd() { return {Kind::union_xd, Rat(0)}; }
};

}  // namespace ore
