#include "ore/ore_solve.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "ore/graded.hpp"
#include "ore/polyfactor.hpp"
#include "ore/satset.hpp"
#include "ore/weyl_div.hpp"

namespace ore {
namespace {

long d_degree_or_zero(const WeylOp& r) { return std::max<long>(r.d_degree(), 0); }

void verify_pair(const OrePair& p, const RingElem& s, const RingElem& r) {
  if (p.s_tilde * r != p.r_tilde * s)
    fail(Errc::unsupported, "ore_solve: internal identity check failed");
}

/// Ore pair against a single x-polynomial h: h^(d+1) * r lies in D*h for
/// d = deg_d(r), since moving r across h^-1 produces denominators of order at
/// most d+1.
OrePair solve_against_x_poly(const WeylOp& h, const WeylOp& r, unsigned long extra_power) {
  if (r.is_zero()) return {RingElem::weyl(WeylOp::one()), RingElem::weyl(WeylOp::zero())};
  unsigned long m = static_cast<unsigned long>(d_degree_or_zero(r)) + extra_power;
  WeylOp s_t = h.pow(m);
  auto r_t = exact_right_divide(s_t * r, h.pow(extra_power));
  if (!r_t) fail(Errc::unsupported, "ore_solve: x-polynomial division unexpectedly failed");
  return {RingElem::weyl(s_t), RingElem::weyl(*r_t)};
}

/// Ore pair against one atomic factor: an x-polynomial, a d-polynomial, or a
/// linear Euler factor theta + c.
OrePair solve_single_factor(const WeylOp& f, const WeylOp& r) {
  if (f.is_x_poly()) return solve_against_x_poly(f, r, 1);
  if (f.is_d_poly()) {
    OrePair conj = solve_single_factor(fourier(f), fourier(r));
    return {RingElem::weyl(fourier_inv(conj.s_tilde.as_weyl())),
            RingElem::weyl(fourier_inv(conj.r_tilde.as_weyl()))};
  }
  if (f.is_homogeneous() && f.graded_degree() == 0) {
    ThetaForm tf = theta_form(f);
    if (tf.coeff == 1 && tf.tpoly.degree() == 1) {
      if (r.is_zero()) return {RingElem::weyl(WeylOp::one()), RingElem::weyl(WeylOp::zero())};
      auto [s_t, r_t] = ore_solve_euler(tf.tpoly.coeff(0), r);
      return {RingElem::weyl(s_t), RingElem::weyl(r_t)};
    }
  }
  fail(Errc::unsupported, "ore_solve: no solver for factor " + f.str());
}

/// Peel the factorization right to left: with (s1, r1) solving the tail and
/// (s2, r2) solving r1 against the head, (s2*s1) * r = r2 * (head * tail).
OrePair solve_factors(const std::vector<RingElem>& factors, const WeylOp& r) {
  if (factors.empty()) return {RingElem::weyl(WeylOp::one()), RingElem::weyl(r)};
  std::vector<RingElem> rest(factors.begin() + 1, factors.end());
  OrePair tail = solve_factors(rest, r);
  OrePair head = solve_single_factor(factors.front().as_weyl(), tail.r_tilde.as_weyl());
  return {head.s_tilde * tail.s_tilde, head.r_tilde};
}

void require_member(const OreSetDesc& S, const RingElem& s, const Budget& budget) {
  Tri c = contains(S, s, budget);
  if (c == Tri::no) fail(Errc::not_in_set, str(s) + " is not in " + S.label());
  if (c == Tri::unknown)
    fail(Errc::not_in_set, "membership of " + str(s) + " in " + S.label() +
                               " could not be certified within budget");
}

}  // namespace

OrePair ore_solve(const OreSetDesc& S, const RingElem& s, const RingElem& r, const Budget& budget) {
  if (s.ring != S.ring || r.ring != S.ring) fail(Errc::ring_mismatch, "ore_solve: ring mismatch");
  if (!S.known_ore)
    fail(Errc::unsupported, S.label() + " is not known to be a left Ore set");

  if (S.ring.is_commutative()) {
    require_member(S, s, budget);
    OrePair p{s, r};  // s*r = r*s
    verify_pair(p, s, r);
    return p;
  }

  const WeylOp& sw = s.as_weyl();
  const WeylOp& rw = r.as_weyl();
  OrePair out{RingElem::weyl(WeylOp::one()), r};
  switch (S.kind) {
    case OreSetDesc::Kind::units: {
      require_member(S, s, budget);
      out = {s, r};  // scalars are central
      break;
    }
    case OreSetDesc::Kind::primes: {
      require_member(S, s, budget);
      out = solve_against_x_poly(sw, rw, 1);
      // s_tilde = s^(d+1) is a product of members, hence a member.
      break;
    }
    case OreSetDesc::Kind::monoid: {
      bool all_x = std::all_of(S.gens.begin(), S.gens.end(),
                               [](const RingElem& g) { return g.as_weyl().is_x_poly(); });
      bool all_d = std::all_of(S.gens.begin(), S.gens.end(),
                               [](const RingElem& g) { return g.as_weyl().is_d_poly(); });
      if (all_x) {
        require_member(S, s, budget);
        if (S.gens.size() == 1 && !s.is_one()) {
          // s = f^n exactly; m = n + deg_d(r) suffices.
          const WeylOp& f = S.gens.front().as_weyl();
          unsigned long n = 0;
          WeylOp p = WeylOp::one();
          while (p != sw) {
            p = p * f;
            ++n;
          }
          if (rw.is_zero()) {
            out = {RingElem::weyl(WeylOp::one()), RingElem::weyl(WeylOp::zero())};
          } else {
            WeylOp s_t = f.pow(n + static_cast<unsigned long>(d_degree_or_zero(rw)));
            auto r_t = exact_right_divide(s_t * rw, sw);
            if (!r_t) fail(Errc::unsupported, "ore_solve: power-rule division failed");
            out = {RingElem::weyl(s_t), RingElem::weyl(*r_t)};
          }
        } else {
          out = solve_against_x_poly(sw, rw, 1);
        }
      } else if (all_d) {
        std::vector<RingElem> conj_gens;
        for (const RingElem& g : S.gens) conj_gens.push_back(RingElem::weyl(fourier(g.as_weyl())));
        OreSetDesc conj = OreSetDesc::monoid(S.ring, std::move(conj_gens));
        OrePair p = ore_solve(conj, RingElem::weyl(fourier(sw)), RingElem::weyl(fourier(rw)), budget);
        out = {RingElem::weyl(fourier_inv(p.s_tilde.as_weyl())),
               RingElem::weyl(fourier_inv(p.r_tilde.as_weyl()))};
      } else {
        auto factors = factor_in_set(S, s, budget);
        if (!factors)
          fail(Errc::not_in_set, "could not factor " + str(s) + " over " + S.label());
        out = solve_factors(*factors, rw);
      }
      break;
    }
    case OreSetDesc::Kind::euler:
    case OreSetDesc::Kind::union_set: {
      auto factors = factor_in_set(S, s, budget);
      if (!factors) fail(Errc::not_in_set, "could not factor " + str(s) + " over " + S.label());
      out = solve_factors(*factors, rw);
      break;
    }
    default:
      fail(Errc::unsupported, "ore_solve: no solver for " + S.label());
  }
  verify_pair(out, s, r);
  return out;
}

CommonMultiple common_left_multiple(const OreSetDesc& S, const std::vector<RingElem>& elems,
                                    const Budget& budget) {
  if (elems.empty()) fail(Errc::zero_input, "common_left_multiple of nothing");
  for (const RingElem& e : elems) require_member(S, e, budget);

  if (S.ring.is_commutative()) {
    RingElem m = elems.front();
    if (S.ring.tag == RingId::Tag::Z) {
      Int l = elems.front().as_int();
      for (const RingElem& e : elems) l = int_lcm(l, e.as_int());
      m = RingElem::integer(l);
    } else {
      UniPoly l = elems.front().as_poly();
      for (const RingElem& e : elems) {
        UniPoly g = UniPoly::gcd(l, e.as_poly());
        l = (l * e.as_poly()).divmod(g).first;
      }
      m = RingElem::poly(l);
    }
    if (contains(S, m, budget) == Tri::yes) {
      CommonMultiple out{m, {}};
      for (const RingElem& e : elems) out.cofactors.push_back(*exact_right_divide(m, e));
      return out;
    }
    // lcm not certified in S: fall back to the full product
    RingElem prod = RingElem::one_of(S.ring);
    for (const RingElem& e : elems) prod = prod * e;
    CommonMultiple out{prod, {}};
    for (const RingElem& e : elems) out.cofactors.push_back(*exact_right_divide(prod, e));
    return out;
  }

  CommonMultiple out{elems.front(), {RingElem::one_of(S.ring)}};
  for (std::size_t i = 1; i < elems.size(); ++i) {
    OrePair p = ore_solve(S, elems[i], out.multiple, budget);
    // p.s_tilde * multiple = p.r_tilde * elems[i]
    for (RingElem& c : out.cofactors) c = p.s_tilde * c;
    out.multiple = p.s_tilde * out.multiple;
    out.cofactors.push_back(p.r_tilde);
  }
  return out;
}

namespace {

/// Composition of saturation witnesses along a factorization: from wa*a in S
/// and wb*b in S, the Ore condition yields t*wb = q*(wa*a) with t in S, and
/// then (q*wa)*(a*b) = t*(wb*b) lies in S.
struct WitnessChain {
  RingElem witness;   // w with w * value in S
  RingElem value;     // product of the factors consumed so far
  RingElem in_set;    // w * value, a certified member
};

WitnessChain compose_witness(const OreSetDesc& S, const WitnessChain& acc, const RingElem& f,
                             const RingElem& wf, const Budget& budget) {
  OrePair p = ore_solve(S, acc.in_set, wf, budget);  // p.s_tilde * wf = p.r_tilde * acc.in_set
  WitnessChain next;
  next.witness = p.r_tilde * acc.witness;
  next.value = acc.value * f;
  next.in_set = p.s_tilde * (wf * f);
  if (next.witness * next.value != next.in_set)
    fail(Errc::unsupported, "witness composition: internal identity check failed");
  return next;
}

/// Per-factor witnesses into a set whose atoms are exactly x and d: scalars
/// multiply to 1, x and d are members themselves, and theta + w multiplies
/// into a word by x^w resp. d^(-w).
RingElem xd_factor_witness(const WeylOp& f) {
  if (f.is_scalar()) {
    Rat c = f.coeff(0, 0);
    return RingElem::weyl(WeylOp::scalar(Rat(1) / c));
  }
  if (f == WeylOp::x() || f == WeylOp::d()) return RingElem::weyl(WeylOp::one());
  ThetaForm tf = theta_form(f);
  Rat w = tf.tpoly.coeff(0);
  long wi = static_cast<long>(w.get_num().get_si());
  if (wi >= 0) return RingElem::weyl(WeylOp::x().pow(static_cast<unsigned long>(wi)));
  return RingElem::weyl(WeylOp::d().pow(static_cast<unsigned long>(-wi)));
}

/// Witness for a member of an Euler closure, targeting the literal set shape.
WitnessResult euler_closure_witness(const OreSetDesc& S, const WeylSatDesc& wd, const WeylOp& r,
                                    const Budget& budget) {
  bool member;
  try {
    member = weyl_closure_member(wd, r);
  } catch (const Error& e) {
    if (e.code() == Errc::non_split) return {WitnessResult::Outcome::unknown, {}};
    throw;
  }
  if (!member) return {WitnessResult::Outcome::proven_absent, {}};

  ThetaForm tf = theta_form(r);
  if (S.kind == OreSetDesc::Kind::euler) {
    // Target the monic split product directly: t(theta -+ n) absorbs y^n.
    WeylOp w = WeylOp::scalar(Rat(1) / tf.coeff);
    if (tf.y == ThetaSymbol::d) w = WeylOp::x().pow(tf.n) * w;
    if (tf.y == ThetaSymbol::x) w = WeylOp::d().pow(tf.n) * w;
    return {WitnessResult::Outcome::found, RingElem::weyl(w)};
  }

  // Monoid/union shape: compose per-factor witnesses when the atoms are
  // exactly x and d (plus Euler components).
  bool atoms_are_xd = true;
  for (const RingElem& a : monoid_atoms(S))
    if (a.as_weyl() != WeylOp::x() && a.as_weyl() != WeylOp::d()) atoms_are_xd = false;
  if (!atoms_are_xd) return {WitnessResult::Outcome::unknown, {}};

  // r = coeff * (theta - rho_1) ... (theta - rho_m) * y^n, all rho integral.
  std::vector<RingElem> factors;
  std::vector<RingElem> per_witnesses;
  factors.push_back(RingElem::weyl(WeylOp::scalar(tf.coeff)));
  PolyFactorization pf = factor_poly(tf.tpoly);
  for (const auto& [root, mult] : pf.roots)
    for (unsigned long i = 0; i < mult; ++i)
      factors.push_back(RingElem::weyl(WeylOp::theta_plus(-root)));
  for (unsigned long i = 0; i < tf.n; ++i)
    factors.push_back(RingElem::weyl(tf.y == ThetaSymbol::d ? WeylOp::d() : WeylOp::x()));
  for (const RingElem& f : factors) per_witnesses.push_back(xd_factor_witness(f.as_weyl()));

  RingElem product = RingElem::weyl(WeylOp::one());
  for (const RingElem& f : factors) product = product * f;
  if (product.as_weyl() != r)
    fail(Errc::unsupported, "witness composition: factorization did not reassemble");
  return {WitnessResult::Outcome::found, compose_witnesses(S, factors, per_witnesses, budget)};
}

/// Enumerate set members as words over the atoms (plus linear Euler factors
/// in a bounded shift window), breadth-first by factor count.
template <class Fn>
void for_each_member(const OreSetDesc& S, int max_len, int wbound, long node_cap, Fn&& fn) {
  std::vector<WeylOp> atoms;
  for (const RingElem& a : monoid_atoms(S)) atoms.push_back(a.as_weyl());
  if (S.kind == OreSetDesc::Kind::euler || S.kind == OreSetDesc::Kind::union_set) {
    std::vector<const OreSetDesc*> stack{&S};
    while (!stack.empty()) {
      const OreSetDesc* cur = stack.back();
      stack.pop_back();
      if (cur->kind == OreSetDesc::Kind::union_set)
        for (const OreSetDesc& p : cur->parts) stack.push_back(&p);
      else if (cur->kind == OreSetDesc::Kind::euler)
        for (int w = -wbound; w <= wbound; ++w) atoms.push_back(WeylOp::theta_plus(cur->z + Rat(w)));
    }
  }
  std::deque<std::pair<WeylOp, int>> queue{{WeylOp::one(), 0}};
  std::set<std::string> seen{WeylOp::one().str()};
  long nodes = 0;
  while (!queue.empty()) {
    auto [m, len] = queue.front();
    queue.pop_front();
    if (!fn(m)) return;
    if (len >= max_len) continue;
    for (const WeylOp& a : atoms) {
      if (++nodes > node_cap) return;
      WeylOp next = m * a;
      if (seen.insert(next.str()).second) queue.emplace_back(next, len + 1);
    }
  }
}

WitnessResult commutative_witness(const OreSetDesc& S, const RingElem& r, const Budget& budget) {
  SatSetDesc closure = lsat_generators(S);
  if (!sat_member(closure, r)) return {WitnessResult::Outcome::proven_absent, {}};
  switch (S.kind) {
    case OreSetDesc::Kind::nonzero: return {WitnessResult::Outcome::found, RingElem::one_of(S.ring)};
    case OreSetDesc::Kind::primes: return {WitnessResult::Outcome::found, RingElem::one_of(S.ring)};
    case OreSetDesc::Kind::ideal_hat:
      return {WitnessResult::Outcome::found, ideal_hat_witness(S, r)};
    case OreSetDesc::Kind::units: {
      // w = r^-1 maps r to 1.
      if (S.ring.tag == RingId::Tag::Z) return {WitnessResult::Outcome::found, r};
      UniPoly inv = UniPoly::constant(S.ring.var, Rat(1) / r.as_poly().coeff(0));
      return {WitnessResult::Outcome::found, RingElem::poly(inv)};
    }
    default: break;
  }
  // Generator-presented: search for a product of generators divisible by r.
  std::vector<RingElem> gens = monoid_atoms(S);
  std::deque<std::pair<RingElem, int>> queue{{RingElem::one_of(S.ring), 0}};
  std::set<std::string> seen{str(RingElem::one_of(S.ring))};
  long nodes = 0;
  while (!queue.empty()) {
    auto [m, len] = queue.front();
    queue.pop_front();
    if (auto w = exact_right_divide(m, r)) return {WitnessResult::Outcome::found, *w};
    if (len >= budget.exponent) continue;
    for (const RingElem& g : gens) {
      if (++nodes > budget.search_nodes) return {WitnessResult::Outcome::unknown, {}};
      RingElem next = m * g;
      if (seen.insert(str(next)).second) queue.emplace_back(next, len + 1);
    }
  }
  return {WitnessResult::Outcome::unknown, {}};
}

}  // namespace

WitnessResult lsat_witness(const OreSetDesc& S, const RingElem& r, const Budget& budget) {
  if (r.ring != S.ring) fail(Errc::ring_mismatch, "lsat_witness: ring mismatch");
  if (r.is_zero()) fail(Errc::zero_input, "lsat_witness(0)");

  if (S.ring.is_commutative()) return commutative_witness(S, r, budget);

  switch (S.kind) {
    case OreSetDesc::Kind::nonzero:
      return {WitnessResult::Outcome::found, RingElem::weyl(WeylOp::one())};
    case OreSetDesc::Kind::units: {
      if (!r.is_unit()) return {WitnessResult::Outcome::proven_absent, {}};
      return {WitnessResult::Outcome::found, RingElem::weyl(WeylOp::one())};
    }
    case OreSetDesc::Kind::primes: {
      if (contains(S, r, budget) == Tri::yes)
        return {WitnessResult::Outcome::found, RingElem::weyl(WeylOp::one())};
      return {WitnessResult::Outcome::proven_absent, {}};
    }
    default: break;
  }

  if (auto wd = to_weyl_satdesc(S)) return euler_closure_witness(S, *wd, r.as_weyl(), budget);

  // Monoids inside K[x] (or K[d]): the saturation question is commutative and
  // exact, and a commutative witness works verbatim in D.
  bool via_fourier = false;
  if (auto model = weyl_commutative_model(S, via_fourier)) {
    WeylOp rw = via_fourier ? fourier(r.as_weyl()) : r.as_weyl();
    if (!rw.is_x_poly()) return {WitnessResult::Outcome::proven_absent, {}};
    WitnessResult w = lsat_witness(*model, RingElem::poly(rw.as_x_poly()), budget);
    if (w.outcome != WitnessResult::Outcome::found) return {w.outcome, {}};
    WeylOp ww = WeylOp::from_x_poly(w.witness.as_poly());
    return {WitnessResult::Outcome::found, RingElem::weyl(via_fourier ? fourier_inv(ww) : ww)};
  }

  // No exact closure description.  A non-graded element can never multiply
  // into a set whose members are all graded.
  if (all_elements_graded(S) && !r.as_weyl().is_homogeneous())
    return {WitnessResult::Outcome::proven_absent, {}};

  // Bounded search, route 1: divide set members by r when r is a supported
  // divisor shape.
  WitnessResult result{WitnessResult::Outcome::unknown, {}};
  if (supported_right_divisor(r.as_weyl())) {
    for_each_member(S, budget.exponent, 3, budget.search_nodes, [&](const WeylOp& m) {
      if (m.total_degree() > budget.degree) return true;
      auto q = exact_right_divide(m, r.as_weyl());
      if (q) {
        result = {WitnessResult::Outcome::found, RingElem::weyl(*q)};
        return false;
      }
      return true;
    });
    if (result.outcome == WitnessResult::Outcome::found) return result;
  }

  // Route 2: structured left multipliers (monomials and theta shifts).
  std::vector<WeylOp> candidates;
  int cap = std::min(budget.degree, 8);
  for (int i = 0; i <= cap; ++i)
    for (int j = 0; j + i <= cap; ++j)
      candidates.push_back(WeylOp::x().pow(static_cast<unsigned long>(i)) *
                           WeylOp::d().pow(static_cast<unsigned long>(j)));
  for (int a = -3; a <= 3; ++a) {
    candidates.push_back(WeylOp::theta_plus(Rat(a)));
    for (int b = a; b <= 3; ++b)
      candidates.push_back(WeylOp::theta_plus(Rat(a)) * WeylOp::theta_plus(Rat(b)));
  }
  for (const WeylOp& w : candidates) {
    if (contains(S, RingElem::weyl(w * r.as_weyl()), budget) == Tri::yes)
      return {WitnessResult::Outcome::found, RingElem::weyl(w)};
  }
  return {WitnessResult::Outcome::unknown, {}};
}

RingElem compose_witnesses(const OreSetDesc& T, const std::vector<RingElem>& factors,
                           const std::vector<RingElem>& witnesses, const Budget& budget) {
  if (factors.size() != witnesses.size())
    fail(Errc::bad_descriptor, "compose_witnesses: factor/witness count mismatch");
  if (factors.empty()) return RingElem::one_of(T.ring);
  if (T.ring.is_commutative()) {
    RingElem w = RingElem::one_of(T.ring);
    for (const RingElem& wf : witnesses) w = w * wf;
    return w;
  }
  WitnessChain chain{witnesses.front(), factors.front(), witnesses.front() * factors.front()};
  for (std::size_t i = 1; i < factors.size(); ++i)
    chain = compose_witness(T, chain, factors[i], witnesses[i], budget);
  return chain.witness;
}

FalsifyReport ore_falsify(const OreSetDesc& S, const RingElem& s, const RingElem& r, int bound,
                          const Budget& budget) {
  if (s.ring != S.ring || r.ring != S.ring) fail(Errc::ring_mismatch, "ore_falsify: ring mismatch");
  FalsifyReport report;
  report.bound = bound;

  if (S.ring.is_commutative()) {
    // s_tilde = s always works; try the trivial witness first.
    report.found = true;
    report.s_tilde = s;
    report.r_tilde = r;
    report.candidates_tried = 1;
    return report;
  }

  const WeylOp& sw = s.as_weyl();
  if (!supported_right_divisor(sw))
    fail(Errc::unsupported, "ore_falsify: target " + str(s) + " is not a supported divisor");
  for_each_member(S, bound, bound, budget.search_nodes, [&](const WeylOp& m) {
    ++report.candidates_tried;
    auto q = exact_right_divide(m * r.as_weyl(), sw);
    if (q) {
      report.found = true;
      report.s_tilde = RingElem::weyl(m);
      report.r_tilde = RingElem::weyl(*q);
      return false;
    }
    return true;
  });
  return report;
}

}  // namespace ore
