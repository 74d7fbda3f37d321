#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ore/budget.hpp"
#include "ore/satdesc.hpp"

namespace ore {

/// Symbolic descriptor of a multiplicative set.  1 is always a member (empty
/// product) and 0 never is; generators are rejected at construction when they
/// would break that.  `known_ore` records whether the variant is known to
/// satisfy the left Ore condition (all commutative sets; in the Weyl algebra
/// the monoids over K[x] resp. K[d], the Euler sets Theta_z, unions of Ore
/// sets, and the complement-of-prime sets of the coefficient ring).
struct OreSetDesc {
  enum class Kind { monoid, euler, union_set, nonzero, units, primes, ideal_hat };

  RingId ring;
  Kind kind = Kind::monoid;
  std::vector<RingElem> gens;      // monoid; ideal_hat holds the single ideal generator
  Rat z;                           // euler: Theta_z = [theta + z + Z]
  std::vector<OreSetDesc> parts;   // union_set
  SatSetDesc prime_set;            // primes: saturated set of the (sub)ring
  bool known_ore = false;

  static OreSetDesc monoid(const RingId& ring, std::vector<RingElem> gens);
  static OreSetDesc euler(const Rat& z);
  static OreSetDesc union_of(std::vector<OreSetDesc> parts);
  static OreSetDesc nonzero(const RingId& ring);
  static OreSetDesc units(const RingId& ring);
  static OreSetDesc primes(const RingId& host, SatSetDesc sat);
  static OreSetDesc ideal_hat_set(const RingId& ring, RingElem gen);

  bool operator==(const OreSetDesc& o) const;
  std::string label() const;
};

/// Membership in the described set.  Decidable for commutative monoids,
/// single-generator Weyl monoids, Euler sets, unions of finitely generated
/// Weyl monoids, prime sets, units, nonzero and ideal-hat sets; multi-part
/// unions involving Euler components fall back to a budgeted factor search
/// and may answer unknown.
Tri contains(const OreSetDesc& s, const RingElem& r, const Budget& budget = {});

/// S subseteq T reduced to the generators of S; unknown propagates.
Tri subset_on_generators(const OreSetDesc& s, const OreSetDesc& t, const Budget& budget = {});

/// Decompose s into an ordered product f_1 * ... * f_k of atomic set members
/// (monoid generators resp. linear Euler factors), or nullopt when no
/// decomposition is found within budget.
std::optional<std::vector<RingElem>> factor_in_set(const OreSetDesc& s, const RingElem& elem,
                                                   const Budget& budget = {});

/// Flattened atom list of a generator-presented set (monoid generators of all
/// union components); used by solvers and witness assembly.
std::vector<RingElem> monoid_atoms(const OreSetDesc& s);

/// All elements of the set are homogeneous w.r.t. the Weyl grading (used for
/// exact non-membership arguments).
bool all_elements_graded(const OreSetDesc& s);

}  // namespace ore
