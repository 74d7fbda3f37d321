#pragma once

#include <vector>

#include "ore/ore_set.hpp"

namespace ore {

/// Solution of the left Ore condition: s_tilde in S and s_tilde * r = r_tilde * s.
struct OrePair {
  RingElem s_tilde;
  RingElem r_tilde;
};

/// Solve the left Ore condition for s in S and r in R.  The returned pair is
/// verified by exact expansion before it is handed out.  Dispatch: trivial
/// for commutative rings; power rule for monoids over K[x]; Fourier
/// conjugation for monoids over K[d]; chained Euler steps for Theta_z;
/// factor peeling for unions.  Throws Errc::not_in_set when s cannot be
/// certified as a member and Errc::unsupported for variants without a solver
/// (e.g. [theta], which is not left Ore, or D \ {0}).
OrePair ore_solve(const OreSetDesc& S, const RingElem& s, const RingElem& r,
                  const Budget& budget = {});

struct CommonMultiple {
  RingElem multiple;
  std::vector<RingElem> cofactors;  // multiple == cofactors[i] * elems[i]
};

/// Common left multiple in S of finitely many members, built by iterated
/// ore_solve (commutative rings use the lcm when it is certified to lie in S).
CommonMultiple common_left_multiple(const OreSetDesc& S, const std::vector<RingElem>& elems,
                                    const Budget& budget = {});

struct WitnessResult {
  enum class Outcome { found, proven_absent, unknown };
  Outcome outcome = Outcome::unknown;
  RingElem witness;  // only meaningful when found; w * r lies in S
};

/// Search for w with w * r in S.  Exact (found / proven_absent) wherever an
/// exact LSat membership test exists; otherwise a bounded search over
/// structured candidates that may answer unknown.  Budget exhaustion is never
/// reported as absence.
WitnessResult lsat_witness(const OreSetDesc& S, const RingElem& r, const Budget& budget = {});

struct FalsifyReport {
  bool found = false;
  RingElem s_tilde;
  RingElem r_tilde;  // s_tilde * r = r_tilde * s when found
  long candidates_tried = 0;
  int bound = 0;
};

/// Exhaustively test all s_tilde in S with at most `bound` generator factors
/// for solvability of s_tilde * r in R * s.  A negative report means no
/// solution up to the bound (not a proof of absence beyond it).
FalsifyReport ore_falsify(const OreSetDesc& S, const RingElem& s, const RingElem& r, int bound,
                          const Budget& budget = {});

/// Assemble a saturation witness for the product f_1 * ... * f_k from
/// per-factor witnesses (w_i * f_i in T): commutative rings multiply the
/// witnesses, the Weyl algebra chains them through the Ore condition on T.
/// Every step is verified by exact expansion.
RingElem compose_witnesses(const OreSetDesc& T, const std::vector<RingElem>& factors,
                           const std::vector<RingElem>& witnesses, const Budget& budget = {});

}  // namespace ore
