#pragma once

#include <utility>
#include <vector>

#include "ore/ore_solve.hpp"

namespace ore {

/// Left fraction (s, r) representing s^-1 r in S^-1 R.  Fractions are kept
/// unreduced; equality is the semantic test frac_equals.
struct Fraction {
  OreSetDesc set;
  RingElem den;  // s, a member of the set
  RingElem num;  // r
};

/// Checked constructor: certifies den in S.
Fraction make_fraction(const OreSetDesc& S, const RingElem& den, const RingElem& num,
                       const Budget& budget = {});

/// Structural homomorphism r -> (1, r).
Fraction embed(const OreSetDesc& S, const RingElem& r);

bool frac_is_zero(const Fraction& a);  // (s, r) = 0 iff r = 0
bool frac_is_one(const Fraction& a);   // (s, r) = 1 iff s = r

bool frac_equals(const Fraction& a, const Fraction& b, const Budget& budget = {});
Fraction frac_add(const Fraction& a, const Fraction& b, const Budget& budget = {});
Fraction frac_neg(const Fraction& a);
Fraction frac_sub(const Fraction& a, const Fraction& b, const Budget& budget = {});
Fraction frac_mul(const Fraction& a, const Fraction& b, const Budget& budget = {});

/// Display-only gcd reduction over Z and K[x]; returns the input unchanged
/// when the reduced denominator cannot be certified as a member.
Fraction frac_normalize(const Fraction& a, const Budget& budget = {});

struct UnitInvertResult {
  enum class Status { unit, not_unit, unknown };
  Status status = Status::unknown;
  Fraction inverse;  // valid when status == unit; verified by multiplying back to 1
};

UnitInvertResult unit_invert(const Fraction& a, const Budget& budget = {});

/// Explicit witness assignment generator -> w used by omega_map; witnesses
/// not listed are searched for.
using WitnessMap = std::vector<std::pair<RingElem, RingElem>>;

/// Canonical R-fixing homomorphism S^-1 R -> T^-1 R, (s, r) -> (w_s s, w_s r),
/// where the witness w_s of the composite denominator is assembled from
/// per-generator witnesses.  Requires S subseteq LSat(T), certified witness by
/// witness; throws Errc::missing_witness when one cannot be found in budget.
Fraction omega_map(const OreSetDesc& S, const OreSetDesc& T, const Fraction& a,
                   const WitnessMap& witnesses = {}, const Budget& budget = {});

struct HomIsoResult {
  Tri hom = Tri::unknown;  // S subseteq LSat(T): unique R-fixing hom exists
  Tri iso = Tri::unknown;  // additionally T subseteq LSat(S)
};

HomIsoResult hom_iso_check(const OreSetDesc& S, const OreSetDesc& T, const Budget& budget = {});

/// Membership of every generator of `from` in LSat(to) (generator reduction).
Tri lsat_subset(const OreSetDesc& from, const OreSetDesc& to, const Budget& budget = {});

/// Ore pair inside the localization of a commutative base ring: x, y with
/// x * a = y * b and x != 0 (a arbitrary, b != 0).
std::pair<Fraction, Fraction> frac_ore_pair(const Fraction& a, const Fraction& b,
                                            const Budget& budget = {});

/// Two-step localization for commutative bases: the nested fraction
/// ((1, t), (s, r)) over rho_S(T)^-1 (S^-1 R) maps to (s t, r) over [S u T].
Fraction two_step_compose(const OreSetDesc& S, const OreSetDesc& T, const RingElem& t,
                          const Fraction& inner, const Budget& budget = {});

}  // namespace ore
