#include "ore/fraction.hpp"

#include "ore/satset.hpp"
#include "ore/weyl_div.hpp"

namespace ore {
namespace {

void check_ctx(const Fraction& a, const Fraction& b) {
  if (!(a.set == b.set)) fail(Errc::ring_mismatch, "fractions over different localizations");
}

/// Internal constructor for results whose denominators are products of
/// certified members; skips the membership search.
Fraction trusted(const OreSetDesc& S, RingElem den, RingElem num) {
  return Fraction{S, std::move(den), std::move(num)};
}

}  // namespace

Fraction make_fraction(const OreSetDesc& S, const RingElem& den, const RingElem& num,
                       const Budget& budget) {
  if (den.ring != S.ring || num.ring != S.ring)
    fail(Errc::ring_mismatch, "fraction over a different ring than its set");
  Tri c = contains(S, den, budget);
  if (c == Tri::no) fail(Errc::not_in_set, "denominator " + str(den) + " not in " + S.label());
  if (c == Tri::unknown)
    fail(Errc::not_in_set, "denominator membership could not be certified within budget");
  return Fraction{S, den, num};
}

Fraction embed(const OreSetDesc& S, const RingElem& r) {
  if (r.ring != S.ring) fail(Errc::ring_mismatch, "embed: ring mismatch");
  return trusted(S, RingElem::one_of(S.ring), r);
}

bool frac_is_zero(const Fraction& a) { return a.num.is_zero(); }
bool frac_is_one(const Fraction& a) { return a.den == a.num; }

bool frac_equals(const Fraction& a, const Fraction& b, const Budget& budget) {
  check_ctx(a, b);
  if (frac_is_zero(a) || frac_is_zero(b)) return frac_is_zero(a) == frac_is_zero(b);
  // (s_hat, r_hat) with s_hat*s2 = r_hat*s1; then equality amounts to
  // s_hat*r2 = r_hat*r1 (the existential cofactor cancels in a domain).
  OrePair p = ore_solve(a.set, a.den, b.den, budget);
  return p.s_tilde * b.num == p.r_tilde * a.num;
}

Fraction frac_add(const Fraction& a, const Fraction& b, const Budget& budget) {
  check_ctx(a, b);
  OrePair p = ore_solve(a.set, b.den, a.den, budget);  // p.s_tilde * s1 = p.r_tilde * s2
  return trusted(a.set, p.s_tilde * a.den, p.s_tilde * a.num + p.r_tilde * b.num);
}

Fraction frac_neg(const Fraction& a) { return trusted(a.set, a.den, -a.num); }

Fraction frac_sub(const Fraction& a, const Fraction& b, const Budget& budget) {
  return frac_add(a, frac_neg(b), budget);
}

Fraction frac_mul(const Fraction& a, const Fraction& b, const Budget& budget) {
  check_ctx(a, b);
  OrePair p = ore_solve(a.set, b.den, a.num, budget);  // p.s_tilde * r1 = p.r_tilde * s2
  return trusted(a.set, p.s_tilde * a.den, p.r_tilde * b.num);
}

Fraction frac_normalize(const Fraction& a, const Budget& budget) {
  if (!a.set.ring.is_commutative()) return a;
  if (frac_is_zero(a)) return trusted(a.set, a.den, RingElem::zero_of(a.set.ring));
  RingElem g = a.set.ring.tag == RingId::Tag::Z
                   ? RingElem::integer(int_gcd(a.den.as_int(), a.num.as_int()))
                   : RingElem::poly(UniPoly::gcd(a.den.as_poly(), a.num.as_poly()));
  if (g.is_unit()) return a;
  RingElem den = *exact_right_divide(a.den, g);
  RingElem num = *exact_right_divide(a.num, g);
  if (contains(a.set, den, budget) != Tri::yes) return a;
  return trusted(a.set, den, num);
}

UnitInvertResult unit_invert(const Fraction& a, const Budget& budget) {
  if (frac_is_zero(a)) fail(Errc::zero_input, "unit_invert(0)");
  WitnessResult w = lsat_witness(a.set, a.num, budget);
  if (w.outcome == WitnessResult::Outcome::proven_absent)
    return {UnitInvertResult::Status::not_unit, {}};
  if (w.outcome == WitnessResult::Outcome::unknown)
    return {UnitInvertResult::Status::unknown, {}};
  // (wr, w) inverts (1, r); right-multiply by (1, s) to invert (s, r).
  Fraction inv0 = trusted(a.set, w.witness * a.num, w.witness);
  Fraction inverse = frac_mul(inv0, embed(a.set, a.den), budget);
  Fraction left = frac_mul(inverse, a, budget);
  Fraction right = frac_mul(a, inverse, budget);
  Fraction one = embed(a.set, RingElem::one_of(a.set.ring));
  if (!frac_equals(left, one, budget) || !frac_equals(right, one, budget))
    fail(Errc::unsupported, "unit_invert: inverse verification failed");
  return {UnitInvertResult::Status::unit, inverse};
}

namespace {

/// Certify the precondition S subseteq LSat(T) on generators: every monoid
/// generator must have a witness into T; Euler components are checked at the
/// family level.
void certify_omega_precondition(const OreSetDesc& S, const OreSetDesc& T,
                                const WitnessMap& witnesses, const Budget& budget) {
  switch (S.kind) {
    case OreSetDesc::Kind::monoid: {
      for (const RingElem& g : S.gens) {
        bool supplied = false;
        for (const auto& [gen, w] : witnesses)
          if (gen == g && contains(T, w * g, budget) == Tri::yes) supplied = true;
        if (supplied) continue;
        WitnessResult w = lsat_witness(T, g, budget);
        if (w.outcome != WitnessResult::Outcome::found)
          fail(Errc::missing_witness,
               "omega_map: no witness for generator " + str(g) + " into the target set");
      }
      return;
    }
    case OreSetDesc::Kind::union_set:
      for (const OreSetDesc& p : S.parts) certify_omega_precondition(p, T, witnesses, budget);
      return;
    case OreSetDesc::Kind::euler: {
      if (lsat_subset(S, T, budget) != Tri::yes)
        fail(Errc::missing_witness,
             "omega_map: the Euler generator family is not certified inside LSat of the target");
      return;
    }
    default:
      fail(Errc::unsupported, "omega_map needs a generator-presented source set");
  }
}

}  // namespace

Fraction omega_map(const OreSetDesc& S, const OreSetDesc& T, const Fraction& a,
                   const WitnessMap& witnesses, const Budget& budget) {
  if (!(a.set == S)) fail(Errc::ring_mismatch, "omega_map: fraction is not over S");
  if (S.ring != T.ring) fail(Errc::ring_mismatch, "omega_map: S and T live in different rings");
  certify_omega_precondition(S, T, witnesses, budget);
  auto factors = factor_in_set(S, a.den, budget);
  if (!factors) fail(Errc::not_in_set, "omega_map: could not factor the denominator over S");
  std::vector<RingElem> per;
  for (const RingElem& f : *factors) {
    const RingElem* given = nullptr;
    for (const auto& [gen, w] : witnesses)
      if (gen == f) given = &w;
    if (given) {
      if (contains(T, *given * f, budget) != Tri::yes)
        fail(Errc::missing_witness, "supplied witness for " + str(f) + " does not map into T");
      per.push_back(*given);
      continue;
    }
    WitnessResult w = lsat_witness(T, f, budget);
    if (w.outcome != WitnessResult::Outcome::found)
      fail(Errc::missing_witness,
           "no witness for generator " + str(f) + " in LSat of the target set");
    per.push_back(w.witness);
  }
  RingElem ws = compose_witnesses(T, *factors, per, budget);
  return trusted(T, ws * a.den, ws * a.num);
}

Tri lsat_subset(const OreSetDesc& from, const OreSetDesc& to, const Budget& budget) {
  switch (from.kind) {
    case OreSetDesc::Kind::monoid: {
      Tri acc = Tri::yes;
      for (const RingElem& g : from.gens) acc = tri_and(acc, lsat_member(to, g, budget));
      return acc;
    }
    case OreSetDesc::Kind::euler: {
      if (auto wd = to_weyl_satdesc(to)) {
        Rat z2 = wd->kind == WeylSatDesc::Kind::euler_closure ? wd->z : Rat(0);
        return is_integer(Rat(from.z - z2)) ? Tri::yes : Tri::no;
      }
      for (int w = -budget.exponent; w <= budget.exponent; ++w) {
        Tri m = lsat_member(to, RingElem::weyl(WeylOp::theta_plus(from.z + Rat(w))), budget);
        if (m == Tri::no) return Tri::no;
      }
      return Tri::unknown;
    }
    case OreSetDesc::Kind::union_set: {
      Tri acc = Tri::yes;
      for (const OreSetDesc& p : from.parts) acc = tri_and(acc, lsat_subset(p, to, budget));
      return acc;
    }
    case OreSetDesc::Kind::primes: {
      if (from.prime_set.mode != SatSetDesc::Mode::finite)
        fail(Errc::unsupported, "lsat_subset: cofinite sets are not generator-presented");
      Tri acc = Tri::yes;
      if (from.ring.tag == RingId::Tag::Z) {
        for (const Int& p : from.prime_set.primes)
          acc = tri_and(acc, lsat_member(to, RingElem::integer(p), budget));
      } else {
        for (const UniPoly& q : from.prime_set.irreducibles)
          acc = tri_and(acc, lsat_member(to, RingElem::poly(q), budget));
      }
      return acc;
    }
    case OreSetDesc::Kind::units: return Tri::yes;  // units lie in every left saturation
    default: fail(Errc::unsupported, "lsat_subset: " + from.label() + " is not generator-presented");
  }
}

HomIsoResult hom_iso_check(const OreSetDesc& S, const OreSetDesc& T, const Budget& budget) {
  if (S.ring != T.ring) fail(Errc::ring_mismatch, "hom_iso_check across rings");
  HomIsoResult out;
  out.hom = lsat_subset(S, T, budget);
  if (out.hom == Tri::no) {
    out.iso = Tri::no;
    return out;
  }
  out.iso = tri_and(out.hom, lsat_subset(T, S, budget));
  return out;
}

std::pair<Fraction, Fraction> frac_ore_pair(const Fraction& a, const Fraction& b,
                                            const Budget& budget) {
  check_ctx(a, b);
  if (!a.set.ring.is_commutative())
    fail(Errc::unsupported, "frac_ore_pair is implemented for commutative base rings");
  if (frac_is_zero(b)) fail(Errc::zero_input, "frac_ore_pair: b = 0");
  Fraction one = embed(a.set, RingElem::one_of(a.set.ring));
  if (frac_equals(a, b, budget)) return {one, one};
  // x := (1, r2)(1, s1) and y := (1, r1)(1, s2) satisfy x*a = y*b.
  Fraction x = trusted(a.set, RingElem::one_of(a.set.ring), b.num * a.den);
  Fraction y = trusted(a.set, RingElem::one_of(a.set.ring), a.num * b.den);
  if (!frac_equals(frac_mul(x, a, budget), frac_mul(y, b, budget), budget))
    fail(Errc::unsupported, "frac_ore_pair: verification failed");
  return {x, y};
}

Fraction two_step_compose(const OreSetDesc& S, const OreSetDesc& T, const RingElem& t,
                          const Fraction& inner, const Budget& budget) {
  if (!S.ring.is_commutative()) fail(Errc::unsupported, "two-step localization needs a commutative ring");
  if (!(inner.set == S)) fail(Errc::ring_mismatch, "two_step_compose: inner fraction is not over S");
  if (S.kind != OreSetDesc::Kind::monoid || T.kind != OreSetDesc::Kind::monoid)
    fail(Errc::unsupported, "two_step_compose needs generator-presented sets");
  Tri c = contains(T, t, budget);
  if (c != Tri::yes) fail(Errc::not_in_set, "outer denominator " + str(t) + " not certified in T");
  std::vector<RingElem> gens = S.gens;
  gens.insert(gens.end(), T.gens.begin(), T.gens.end());
  OreSetDesc w = OreSetDesc::monoid(S.ring, std::move(gens));
  return trusted(w, inner.den * t, inner.num);
}

}  // namespace ore
