#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ore/groebner.hpp"
#include "ore/intlattice.hpp"
#include "ore/ore_set.hpp"

namespace ore {

/// Finite schedule of closure steps over a family of Ore sets.
struct ClosurePlan {
  std::vector<OreSetDesc> sets;
  std::vector<int> schedule;  // 0-based indices into sets
  bool commuting = false;
};

enum class ClosureVerdict { stabilized, stabilized_commuting, not_stabilized };

template <class State>
struct ClosureStep {
  int step = 0;       // 1-based position in the schedule
  int set_index = 0;  // which set was applied
  State state;
  bool changed = false;
};

template <class State>
struct ClosureRun {
  State result;
  std::vector<ClosureStep<State>> steps;
  ClosureVerdict verdict = ClosureVerdict::not_stabilized;
};

/// Apply per-set closure oracles along the schedule.  Stops early when a full
/// unchanged round over the whole index set has been observed (that state is
/// the closure w.r.t. the union), or after one pass covering every index when
/// the family is marked commuting.  A schedule that runs out without either
/// condition yields an explicit not_stabilized verdict, never a wrong answer.
template <class State, class Oracle>
ClosureRun<State> iterated_closure(const State& start, const ClosurePlan& plan, Oracle&& oracle) {
  if (plan.schedule.empty() || plan.sets.empty())
    fail(Errc::bad_descriptor, "closure plan needs sets and a nonempty schedule");
  for (int i : plan.schedule)
    if (i < 0 || static_cast<std::size_t>(i) >= plan.sets.size())
      fail(Errc::bad_descriptor, "closure schedule index out of range");

  ClosureRun<State> run;
  run.result = start;
  std::size_t family = plan.sets.size();
  int last_change = 0;  // step index of the most recent change
  std::vector<char> seen_since_change(family, 0);
  std::size_t seen_count = 0;

  for (std::size_t t = 0; t < plan.schedule.size(); ++t) {
    int idx = plan.schedule[t];
    State next = oracle(run.result, idx);
    bool changed = !(next == run.result);
    run.result = next;
    run.steps.push_back({static_cast<int>(t) + 1, idx, next, changed});
    if (plan.commuting) {
      // One pass covering every index suffices for a commuting family.
      std::vector<char> covered(family, 0);
      std::size_t n = 0;
      for (std::size_t j = 0; j <= t; ++j)
        if (!covered[static_cast<std::size_t>(plan.schedule[j])]) {
          covered[static_cast<std::size_t>(plan.schedule[j])] = 1;
          ++n;
        }
      if (n == family) {
        run.verdict = ClosureVerdict::stabilized_commuting;
        return run;
      }
    }
    if (changed) {
      last_change = static_cast<int>(t) + 1;
      std::fill(seen_since_change.begin(), seen_since_change.end(), 0);
      seen_count = 0;
    } else {
      if (!seen_since_change[static_cast<std::size_t>(idx)]) {
        seen_since_change[static_cast<std::size_t>(idx)] = 1;
        ++seen_count;
      }
      if (seen_count == family) {
        run.verdict = ClosureVerdict::stabilized;
        return run;
      }
    }
  }
  (void)last_change;
  run.verdict = ClosureVerdict::not_stabilized;
  return run;
}

/// Closure of the principal ideal (f) of K[x] at a saturated set: divide the
/// S-factors out of f; the result is monic.
UniPoly poly_ideal_closure(const UniPoly& f, const SatSetDesc& s);

/// Per-generator certificate s * g in <old>.
struct SaturationCertificate {
  WeylOp generator;
  WeylOp multiplier;  // element of S
  bool verified = false;
};

struct WeylSatVerifyReport {
  GroebnerBasis gb_old;
  GroebnerBasis gb_new;
  bool old_in_new = false;
  std::vector<SaturationCertificate> certificates;  // one per candidate generator
  bool all_certified = false;
  bool stable_up_to_budget = false;
  std::optional<WeylOp> new_member;  // witness when not stable
};

/// Certificate-based verification of one Weyl closure step with respect to
/// [x], [d] or Theta_z: checks old subseteq new by Groebner membership, finds
/// multipliers s in S with s * g in <old> for every candidate generator, and
/// probes stability by peeling set factors off the new basis elements.  Does
/// NOT prove closure maximality beyond the budget.
WeylSatVerifyReport weyl_saturation_verify(const std::vector<WeylOp>& old_gens,
                                           const std::vector<WeylOp>& candidate_gens,
                                           const OreSetDesc& S, int search_budget,
                                           const Budget& budget = {});

}  // namespace ore
