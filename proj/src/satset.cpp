#include "ore/satset.hpp"

#include <algorithm>
#include <set>

#include "ore/graded.hpp"
#include "ore/intfactor.hpp"
#include "ore/ore_solve.hpp"
#include "ore/polyfactor.hpp"

namespace ore {
namespace {

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (long k = a.degree(); k >= 0; --k) {
    Rat ca = a.coeff(static_cast<std::size_t>(k)), cb = b.coeff(static_cast<std::size_t>(k));
    if (ca != cb) return ca < cb;
  }
  return false;
}

void validate_qx_irreducible(const UniPoly& q) {
  if (q.degree() < 1) fail(Errc::bad_descriptor, "constants cannot be irreducible generators");
  if (q.leading() != 1) fail(Errc::bad_descriptor, "irreducible generators must be monic");
  if (q.degree() >= 2) {
    PolyFactorization pf = factor_poly(q);
    if (!pf.roots.empty())
      fail(Errc::bad_descriptor, "reducible generator " + q.str() + " (has a rational root)");
    if (!UniPoly::gcd(q, q.derivative()).is_one())
      fail(Errc::bad_descriptor, "generator " + q.str() + " is not squarefree");
  }
  // Degree 2 and 3 are now certified irreducible; higher degrees are accepted
  // on the caller's authority (full factorization over Q is out of scope).
}

}  // namespace

SatSetDesc SatSetDesc::z_finite(std::vector<Int> primes) {
  SatSetDesc s;
  s.ring = RingId::integers();
  s.mode = Mode::finite;
  for (Int& p : primes) {
    if (p < 0) p = -p;
    if (!is_prime_small(p)) fail(Errc::bad_descriptor, "not a prime: " + to_string(p));
  }
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  s.primes = std::move(primes);
  return s;
}

SatSetDesc SatSetDesc::z_cofinite(std::vector<Int> primes) {
  SatSetDesc s = z_finite(std::move(primes));
  s.mode = Mode::cofinite;
  return s;
}

SatSetDesc SatSetDesc::qx_finite(std::vector<UniPoly> irreducibles) {
  SatSetDesc s;
  s.ring = RingId::rational_poly(irreducibles.empty() ? "x" : irreducibles.front().var());
  s.mode = Mode::finite;
  for (const UniPoly& q : irreducibles) validate_qx_irreducible(q);
  std::sort(irreducibles.begin(), irreducibles.end(), poly_less);
  irreducibles.erase(std::unique(irreducibles.begin(), irreducibles.end()), irreducibles.end());
  s.irreducibles = std::move(irreducibles);
  return s;
}

SatSetDesc SatSetDesc::qx_cofinite(std::vector<UniPoly> irreducibles) {
  SatSetDesc s = qx_finite(std::move(irreducibles));
  s.mode = Mode::cofinite;
  return s;
}

bool sat_member(const SatSetDesc& s, const RingElem& r) {
  if (r.ring != s.ring) fail(Errc::ring_mismatch, "sat_member: ring mismatch");
  if (r.is_zero()) fail(Errc::zero_input, "sat_member(0)");
  if (s.ring.tag == RingId::Tag::Z) {
    Int m = abs(r.as_int());
    if (s.mode == SatSetDesc::Mode::finite) {
      for (const Int& p : s.primes)
        while (divides(p, m)) m = div_exact(m, p);
      return m == 1;
    }
    for (const Int& p : s.primes)
      if (divides(p, m)) return false;
    return true;
  }
  UniPoly m = r.as_poly().monic();
  if (s.mode == SatSetDesc::Mode::finite) {
    for (const UniPoly& q : s.irreducibles) {
      UniPoly quo;
      while (m.exact_div(q, quo)) m = quo;
    }
    return m.is_one();
  }
  for (const UniPoly& q : s.irreducibles)
    if (q.divides_into(m)) return false;
  return true;
}

bool weyl_closure_member(const WeylSatDesc& s, const WeylOp& r) {
  if (r.is_zero()) fail(Errc::zero_input, "weyl_closure_member(0)");
  Rat z = s.kind == WeylSatDesc::Kind::euler_closure ? s.z : Rat(0);
  if (!r.is_homogeneous()) return false;
  ThetaForm tf = theta_form(r);
  PolyFactorization pf = factor_poly(tf.tpoly);
  if (!pf.split)
    fail(Errc::non_split,
         "theta-polynomial residual " + pf.residual.str() + " is not split into rational roots");
  if (!is_integer(z) && tf.n != 0) return false;
  for (const auto& [root, mult] : pf.roots)
    if (!is_integer(Rat(root + z))) return false;
  return true;
}

std::optional<WeylSatDesc> to_weyl_satdesc(const OreSetDesc& s) {
  if (s.ring.tag != RingId::Tag::WEYL) return std::nullopt;
  if (s.kind == OreSetDesc::Kind::euler) return WeylSatDesc::euler_closure(s.z);

  // Flatten a monoid/union descriptor into pure x-powers, pure d-powers and
  // Euler components; those combinations have describable closures.
  bool has_x = false, has_d = false;
  std::vector<Rat> zs;
  std::vector<const OreSetDesc*> stack{&s};
  while (!stack.empty()) {
    const OreSetDesc* cur = stack.back();
    stack.pop_back();
    switch (cur->kind) {
      case OreSetDesc::Kind::union_set:
        for (const OreSetDesc& p : cur->parts) stack.push_back(&p);
        break;
      case OreSetDesc::Kind::euler: zs.push_back(cur->z); break;
      case OreSetDesc::Kind::monoid:
        for (const RingElem& g : cur->gens) {
          const WeylOp& w = g.as_weyl();
          if (w.term_count() != 1) return std::nullopt;
          auto [e, c] = *w.terms().begin();
          if (e.x >= 1 && e.d == 0)
            has_x = true;
          else if (e.d >= 1 && e.x == 0)
            has_d = true;
          else
            return std::nullopt;
        }
        break;
      default: return std::nullopt;
    }
  }
  if (has_x && has_d) {
    for (const Rat& z : zs)
      if (!is_integer(z)) return std::nullopt;
    return WeylSatDesc::union_xd();
  }
  if (!has_x && !has_d && !zs.empty()) {
    for (std::size_t i = 1; i < zs.size(); ++i)
      if (!is_integer(Rat(zs[i] - zs[0]))) return std::nullopt;
    return WeylSatDesc::euler_closure(zs[0]);
  }
  return std::nullopt;
}

std::optional<OreSetDesc> weyl_commutative_model(const OreSetDesc& s, bool& via_fourier) {
  if (s.ring.tag != RingId::Tag::WEYL) return std::nullopt;
  std::vector<RingElem> atoms;
  std::vector<const OreSetDesc*> stack{&s};
  while (!stack.empty()) {
    const OreSetDesc* cur = stack.back();
    stack.pop_back();
    if (cur->kind == OreSetDesc::Kind::union_set) {
      for (const OreSetDesc& p : cur->parts) stack.push_back(&p);
    } else if (cur->kind == OreSetDesc::Kind::monoid) {
      atoms.insert(atoms.end(), cur->gens.begin(), cur->gens.end());
    } else {
      return std::nullopt;
    }
  }
  if (atoms.empty()) return std::nullopt;
  bool all_x = std::all_of(atoms.begin(), atoms.end(),
                           [](const RingElem& g) { return g.as_weyl().is_x_poly(); });
  bool all_d = std::all_of(atoms.begin(), atoms.end(),
                           [](const RingElem& g) { return g.as_weyl().is_d_poly(); });
  if (!all_x && !all_d) return std::nullopt;
  via_fourier = !all_x;
  std::vector<RingElem> gens;
  for (const RingElem& g : atoms) {
    WeylOp w = via_fourier ? fourier(g.as_weyl()) : g.as_weyl();
    gens.push_back(RingElem::poly(w.as_x_poly()));
  }
  return OreSetDesc::monoid(RingId::rational_poly("x"), std::move(gens));
}

Tri lsat_member(const OreSetDesc& s, const RingElem& r, const Budget& budget) {
  if (r.ring != s.ring) fail(Errc::ring_mismatch, "lsat_member: ring mismatch");
  if (r.is_zero()) fail(Errc::zero_input, "lsat_member(0)");
  switch (s.kind) {
    case OreSetDesc::Kind::nonzero: return Tri::yes;
    case OreSetDesc::Kind::units: return r.is_unit() ? Tri::yes : Tri::no;
    case OreSetDesc::Kind::ideal_hat: return Tri::yes;  // LSat(I-hat) = R \ {0}
    case OreSetDesc::Kind::primes: return contains(s, r, budget);  // already saturated
    default: break;
  }
  if (s.ring.is_commutative()) return sat_member(lsat_generators(s), r) ? Tri::yes : Tri::no;
  if (auto wd = to_weyl_satdesc(s)) return weyl_closure_member(*wd, r.as_weyl()) ? Tri::yes : Tri::no;
  bool via_fourier = false;
  if (auto model = weyl_commutative_model(s, via_fourier)) {
    WeylOp rw = via_fourier ? fourier(r.as_weyl()) : r.as_weyl();
    if (!rw.is_x_poly()) return Tri::no;
    return lsat_member(*model, RingElem::poly(rw.as_x_poly()), budget);
  }
  if (all_elements_graded(s) && !r.as_weyl().is_homogeneous()) return Tri::no;
  WitnessResult w = lsat_witness(s, r, budget);
  return w.outcome == WitnessResult::Outcome::found ? Tri::yes : Tri::unknown;
}

SatSetDesc lsat_generators(const OreSetDesc& s) {
  if (!s.ring.is_commutative())
    fail(Errc::unsupported, "lsat_generators is defined over Z and K[x]");
  switch (s.kind) {
    case OreSetDesc::Kind::units:
      return s.ring.tag == RingId::Tag::Z ? SatSetDesc::z_finite({}) : SatSetDesc::qx_finite({});
    case OreSetDesc::Kind::nonzero:
    case OreSetDesc::Kind::ideal_hat:
      return s.ring.tag == RingId::Tag::Z ? SatSetDesc::z_cofinite({}) : SatSetDesc::qx_cofinite({});
    case OreSetDesc::Kind::primes: return s.prime_set;
    case OreSetDesc::Kind::union_set: {
      SatSetDesc acc = lsat_generators(s.parts.front());
      for (std::size_t i = 1; i < s.parts.size(); ++i) acc = sat_join(acc, lsat_generators(s.parts[i]));
      return acc;
    }
    case OreSetDesc::Kind::monoid: {
      if (s.ring.tag == RingId::Tag::Z) {
        std::vector<Int> primes;
        for (const RingElem& g : s.gens)
          for (const auto& [p, e] : factor_int(g.as_int()).factors) primes.push_back(p);
        return SatSetDesc::z_finite(std::move(primes));
      }
      std::vector<UniPoly> irr;
      for (const RingElem& g : s.gens) {
        if (g.as_poly().is_constant()) continue;  // units contribute nothing
        PolyFactorization pf = factor_poly(g.as_poly());
        for (const auto& [root, mult] : pf.roots)
          irr.push_back(UniPoly(g.as_poly().var(), {-root, Rat(1)}));
        if (!pf.split) {
          if (pf.residual.degree() > 3)
            fail(Errc::non_split, "generator residual " + pf.residual.str() +
                                      " of degree > 3: irreducibility undecided");
          irr.push_back(pf.residual);  // degree 2 or 3 without rational roots is irreducible
        }
      }
      return SatSetDesc::qx_finite(std::move(irr));
    }
    default: fail(Errc::unsupported, "lsat_generators: unsupported descriptor");
  }
}

namespace {

Tri closure_subset_dir(const OreSetDesc& from, const OreSetDesc& to, const Budget& budget) {
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
      for (const OreSetDesc& p : from.parts) acc = tri_and(acc, closure_subset_dir(p, to, budget));
      return acc;
    }
    default: fail(Errc::unsupported, "closure_equal needs generator-presented sets");
  }
}

}  // namespace

Tri closure_equal(const OreSetDesc& s1, const OreSetDesc& s2, const Budget& budget) {
  if (s1.ring != s2.ring) fail(Errc::ring_mismatch, "closure_equal across rings");
  if (s1.ring.is_commutative())
    return lsat_generators(s1) == lsat_generators(s2) ? Tri::yes : Tri::no;
  auto d1 = to_weyl_satdesc(s1), d2 = to_weyl_satdesc(s2);
  if (d1 && d2) {
    Rat z1 = d1->kind == WeylSatDesc::Kind::euler_closure ? d1->z : Rat(0);
    Rat z2 = d2->kind == WeylSatDesc::Kind::euler_closure ? d2->z : Rat(0);
    if (!is_integer(Rat(z1 - z2))) return Tri::no;
    // Same coset: the closures agree unless exactly one allows x/d parts,
    // i.e. union-xd or integral z versus non-integral z (already excluded).
    bool xd1 = d1->kind == WeylSatDesc::Kind::union_xd || is_integer(z1);
    bool xd2 = d2->kind == WeylSatDesc::Kind::union_xd || is_integer(z2);
    return xd1 == xd2 ? Tri::yes : Tri::no;
  }
  return tri_and(closure_subset_dir(s1, s2, budget), closure_subset_dir(s2, s1, budget));
}

Classification classify(const SatSetDesc& s) {
  Classification c;
  if (s.mode == SatSetDesc::Mode::cofinite) {
    if (s.count() == 0)
      c.status = SatStatus::maximal;
    else if (s.count() == 1)
      c.status = SatStatus::pre_maximal;
    else
      c.status = SatStatus::neither;
    c.type = s.ring.tag == RingId::Tag::Z ? ZType::cofinite_invertible : ZType::not_applicable;
  } else {
    c.status = SatStatus::neither;
    c.type = s.ring.tag == RingId::Tag::Z ? ZType::finite_invertible : ZType::not_applicable;
  }
  return c;
}

Classification classify(const OreSetDesc& s) { return classify(lsat_generators(s)); }

const char* to_string(SatStatus s) {
  switch (s) {
    case SatStatus::maximal: return "maximal";
    case SatStatus::pre_maximal: return "pre-maximal";
    default: return "neither";
  }
}

const char* to_string(ZType t) {
  switch (t) {
    case ZType::finite_invertible: return "finite-invertible";
    case ZType::cofinite_invertible: return "cofinite-invertible";
    default: return "NA";
  }
}

IdealHatResult ideal_hat(const RingElem& gen) {
  IdealHatResult out{OreSetDesc::ideal_hat_set(gen.ring, gen), {}};
  out.cls = classify(out.set);
  return out;
}

RingElem ideal_hat_witness(const OreSetDesc& hat, const RingElem& r) {
  if (hat.kind != OreSetDesc::Kind::ideal_hat) fail(Errc::unsupported, "not an ideal-hat set");
  if (r.is_zero()) fail(Errc::zero_input, "ideal_hat_witness(0)");
  return hat.gens.front();  // g*r lies in the ideal and is nonzero
}

namespace {

void check_same_sat_ring(const SatSetDesc& a, const SatSetDesc& b) {
  if (a.ring != b.ring) fail(Errc::ring_mismatch, "lattice operation across rings");
}

template <class T, class Less>
std::vector<T> set_union_sorted(const std::vector<T>& a, const std::vector<T>& b, Less less) {
  std::vector<T> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), less);
  return out;
}
template <class T, class Less>
std::vector<T> set_inter_sorted(const std::vector<T>& a, const std::vector<T>& b, Less less) {
  std::vector<T> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), less);
  return out;
}
template <class T, class Less>
std::vector<T> set_diff_sorted(const std::vector<T>& a, const std::vector<T>& b, Less less) {
  std::vector<T> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), less);
  return out;
}

template <class T, class Less>
SatSetDesc combine(const SatSetDesc& a, const SatSetDesc& b, const std::vector<T>& av,
                   const std::vector<T>& bv, bool join, Less less,
                   SatSetDesc (*fin)(std::vector<T>), SatSetDesc (*cof)(std::vector<T>)) {
  const bool afin = a.mode == SatSetDesc::Mode::finite;
  const bool bfin = b.mode == SatSetDesc::Mode::finite;
  if (join) {
    if (afin && bfin) return fin(set_union_sorted(av, bv, less));
    if (afin && !bfin) return cof(set_diff_sorted(bv, av, less));
    if (!afin && bfin) return cof(set_diff_sorted(av, bv, less));
    return cof(set_inter_sorted(av, bv, less));
  }
  if (afin && bfin) return fin(set_inter_sorted(av, bv, less));
  if (afin && !bfin) return fin(set_diff_sorted(av, bv, less));
  if (!afin && bfin) return fin(set_diff_sorted(bv, av, less));
  return cof(set_union_sorted(av, bv, less));
}

bool int_less(const Int& a, const Int& b) { return a < b; }

}  // namespace

SatSetDesc sat_join(const SatSetDesc& a, const SatSetDesc& b) {
  check_same_sat_ring(a, b);
  if (a.ring.tag == RingId::Tag::Z)
    return combine(a, b, a.primes, b.primes, true, &int_less, &SatSetDesc::z_finite,
                   &SatSetDesc::z_cofinite);
  return combine(a, b, a.irreducibles, b.irreducibles, true, &poly_less, &SatSetDesc::qx_finite,
                 &SatSetDesc::qx_cofinite);
}

SatSetDesc sat_meet(const SatSetDesc& a, const SatSetDesc& b) {
  check_same_sat_ring(a, b);
  if (a.ring.tag == RingId::Tag::Z)
    return combine(a, b, a.primes, b.primes, false, &int_less, &SatSetDesc::z_finite,
                   &SatSetDesc::z_cofinite);
  return combine(a, b, a.irreducibles, b.irreducibles, false, &poly_less, &SatSetDesc::qx_finite,
                 &SatSetDesc::qx_cofinite);
}

bool sat_leq(const SatSetDesc& a, const SatSetDesc& b) {
  check_same_sat_ring(a, b);
  return sat_join(a, b) == b;
}

namespace {

std::string ring_label(const std::vector<Int>& primes, unsigned mask) {
  if (mask == 0) return "Z";
  std::string out = "Z[";
  bool first = true;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!(mask >> i & 1u)) continue;
    if (!first) out += ",";
    out += "1/" + to_string(primes[i]);
    first = false;
  }
  return out + "]";
}

std::vector<Int> checked_primes(std::vector<Int> primes) {
  if (primes.empty() || primes.size() > 16) fail(Errc::bad_descriptor, "need 1..16 primes");
  for (const Int& p : primes)
    if (p < 2 || !is_prime_small(p)) fail(Errc::bad_descriptor, "not a prime: " + to_string(p));
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

}  // namespace

std::string lattice_dot(const std::vector<Int>& primes_in) {
  std::vector<Int> primes = checked_primes(primes_in);
  unsigned total = 1u << primes.size();
  std::string out = "digraph saturated_localizations {\n  rankdir=LR;\n";
  for (unsigned mask = 0; mask < total; ++mask)
    out += "  \"" + ring_label(primes, mask) + "\";\n";
  for (unsigned mask = 0; mask < total; ++mask)
    for (std::size_t i = 0; i < primes.size(); ++i) {
      if (mask >> i & 1u) continue;
      out += "  \"" + ring_label(primes, mask) + "\" -> \"" +
             ring_label(primes, mask | (1u << i)) + "\" [label=\"" + to_string(primes[i]) +
             "^-1\"];\n";
    }
  out += "}\n";
  return out;
}

std::string tree_dot(const std::vector<Int>& primes_in) {
  std::vector<Int> primes = checked_primes(primes_in);
  std::string out = "digraph localization_tree {\n  rankdir=LR;\n";
  // Level i decides whether the i-th prime becomes invertible.
  for (std::size_t level = 0; level <= primes.size(); ++level)
    for (unsigned mask = 0; mask < (1u << level); ++mask)
      out += "  n" + std::to_string(level) + "_" + std::to_string(mask) + " [label=\"" +
             ring_label(primes, mask) + "\"];\n";
  for (std::size_t level = 0; level < primes.size(); ++level)
    for (unsigned mask = 0; mask < (1u << level); ++mask) {
      std::string from = "n" + std::to_string(level) + "_" + std::to_string(mask);
      out += "  " + from + " -> n" + std::to_string(level + 1) + "_" +
             std::to_string(mask | (1u << level)) + " [label=\"" + to_string(primes[level]) +
             "^-1\"];\n";
      out += "  " + from + " -> n" + std::to_string(level + 1) + "_" + std::to_string(mask) +
             ";\n";
    }
  out += "}\n";
  return out;
}

std::vector<LocType> loc_type_tags(const OreSetDesc& s) {
  switch (s.kind) {
    case OreSetDesc::Kind::monoid:
    case OreSetDesc::Kind::euler:
    case OreSetDesc::Kind::units:
    case OreSetDesc::Kind::ideal_hat: return {LocType::monoidal};
    case OreSetDesc::Kind::union_set: {
      for (const OreSetDesc& p : s.parts) {
        auto tags = loc_type_tags(p);
        if (std::find(tags.begin(), tags.end(), LocType::monoidal) == tags.end()) return {};
      }
      return {LocType::monoidal};
    }
    case OreSetDesc::Kind::nonzero: return {LocType::geometric, LocType::rational};
    case OreSetDesc::Kind::primes: {
      if (s.prime_set.mode == SatSetDesc::Mode::finite) return {LocType::monoidal};
      if (s.prime_set.count() == 0) return {LocType::geometric, LocType::rational};
      if (s.prime_set.count() == 1) return {LocType::geometric};
      return {};
    }
  }
  return {};
}

const char* to_string(LocType t) {
  switch (t) {
    case LocType::monoidal: return "monoidal";
    case LocType::geometric: return "geometric";
    default: return "rational";
  }
}

}  // namespace ore
