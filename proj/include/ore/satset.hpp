#pragma once

#include <string>
#include <vector>

#include "ore/ore_set.hpp"

namespace ore {

/// Exact membership in a saturated set given by its normal form (r != 0).
bool sat_member(const SatSetDesc& s, const RingElem& r);

/// Exact membership in a describable Weyl saturation closure.  Throws
/// Errc::non_split when the theta-polynomial has a residual the factorizer
/// cannot split (membership is never guessed).
bool weyl_closure_member(const WeylSatDesc& s, const WeylOp& r);

/// Resolve an Ore-set descriptor to the closure descriptor LSat(S) when one
/// of the two computable Weyl shapes applies.
std::optional<WeylSatDesc> to_weyl_satdesc(const OreSetDesc& s);

/// When every generator of a Weyl monoid lies in K[x] (resp. K[d] after a
/// Fourier pass), its saturation question is commutative: d-degrees add in
/// products, so w*r can only land in K[x] when r does.  Returns the
/// commutative model over Q[x] and sets via_fourier accordingly.
std::optional<OreSetDesc> weyl_commutative_model(const OreSetDesc& s, bool& via_fourier);

/// Membership r in LSat(S).  Exact for commutative rings, Euler sets,
/// [x,d]-type monoids and the structurally saturated variants; the remaining
/// Weyl shapes use a budgeted witness search and may answer unknown.
Tri lsat_member(const OreSetDesc& s, const RingElem& r, const Budget& budget = {});

/// Irreducible-generator normal form of LSat(S) for generator-presented sets
/// over Z or K[x].  Throws Errc::non_split when a generator has a residual
/// factor of degree >= 4 (irreducibility undecided by the root factorizer).
SatSetDesc lsat_generators(const OreSetDesc& s);

/// LSat(S1) == LSat(S2), reduced to generators.
Tri closure_equal(const OreSetDesc& s1, const OreSetDesc& s2, const Budget& budget = {});

enum class SatStatus { maximal, pre_maximal, neither };
enum class ZType { finite_invertible, cofinite_invertible, not_applicable };

struct Classification {
  SatStatus status = SatStatus::neither;
  ZType type = ZType::not_applicable;
};

Classification classify(const SatSetDesc& s);
Classification classify(const OreSetDesc& s);

const char* to_string(SatStatus s);
const char* to_string(ZType t);

struct IdealHatResult {
  OreSetDesc set;
  Classification cls;
};

/// The maximal multiplicative set (I \ {0}) u {1} attached to the principal
/// ideal generated by `gen`.
IdealHatResult ideal_hat(const RingElem& gen);
/// Witness w with w*r in the ideal-hat set (any r != 0).
RingElem ideal_hat_witness(const OreSetDesc& hat, const RingElem& r);

/// Lattice operations on saturated-set normal forms (same ring).
SatSetDesc sat_join(const SatSetDesc& a, const SatSetDesc& b);
SatSetDesc sat_meet(const SatSetDesc& a, const SatSetDesc& b);
bool sat_leq(const SatSetDesc& a, const SatSetDesc& b);

/// DOT renderings of the saturated localizations of Z over a chosen prime
/// list: the subset lattice (2^k nodes, k*2^(k-1) covering edges) and the
/// binary decision tree (level i chooses whether the i-th prime becomes
/// invertible).
std::string lattice_dot(const std::vector<Int>& primes);
std::string tree_dot(const std::vector<Int>& primes);

enum class LocType { monoidal, geometric, rational };
std::vector<LocType> loc_type_tags(const OreSetDesc& s);
const char* to_string(LocType t);

}  // namespace ore
