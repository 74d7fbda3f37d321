#include "ore/ore_set.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "ore/graded.hpp"
#include "ore/polyfactor.hpp"
#include "ore/satset.hpp"
#include "ore/weyl_div.hpp"

namespace ore {

OreSetDesc OreSetDesc::monoid(const RingId& ring, std::vector<RingElem> gens) {
  OreSetDesc s;
  s.ring = ring;
  s.kind = Kind::monoid;
  for (const RingElem& g : gens) {
    if (g.ring != ring) fail(Errc::ring_mismatch, "monoid generator from a different ring");
    if (g.is_zero()) fail(Errc::bad_descriptor, "0 cannot generate a multiplicative set");
  }
  s.gens = std::move(gens);
  if (ring.is_commutative()) {
    s.known_ore = true;
  } else {
    // Monoids over K[x] or K[d] are Ore; mixed generator lists are unions of
    // such monoids and stay Ore.  Anything else (e.g. [theta]) is not known.
    s.known_ore = std::all_of(s.gens.begin(), s.gens.end(), [](const RingElem& g) {
      return g.as_weyl().is_x_poly() || g.as_weyl().is_d_poly();
    });
  }
  return s;
}

OreSetDesc OreSetDesc::euler(const Rat& z) {
  OreSetDesc s;
  s.ring = RingId::weyl();
  s.kind = Kind::euler;
  s.z = z;
  s.known_ore = true;
  return s;
}

OreSetDesc OreSetDesc::union_of(std::vector<OreSetDesc> parts) {
  if (parts.empty()) fail(Errc::bad_descriptor, "union of no sets");
  OreSetDesc s;
  s.ring = parts.front().ring;
  s.kind = Kind::union_set;
  for (const OreSetDesc& p : parts)
    if (p.ring != s.ring) fail(Errc::ring_mismatch, "union components must share the ring");
  s.known_ore = std::all_of(parts.begin(), parts.end(),
                            [](const OreSetDesc& p) { return p.known_ore; });
  s.parts = std::move(parts);
  return s;
}

OreSetDesc OreSetDesc::nonzero(const RingId& ring) {
  OreSetDesc s;
  s.ring = ring;
  s.kind = Kind::nonzero;
  s.known_ore = true;  // D is Noetherian; commutative rings are trivial
  return s;
}

OreSetDesc OreSetDesc::units(const RingId& ring) {
  OreSetDesc s;
  s.ring = ring;
  s.kind = Kind::units;
  s.known_ore = true;
  return s;
}

OreSetDesc OreSetDesc::primes(const RingId& host, SatSetDesc sat) {
  OreSetDesc s;
  s.ring = host;
  s.kind = Kind::primes;
  if (host.tag == RingId::Tag::WEYL) {
    if (sat.ring.tag != RingId::Tag::QX)
      fail(Errc::bad_descriptor, "prime sets inside the Weyl algebra live in the coefficient ring K[x]");
  } else if (sat.ring != host) {
    fail(Errc::ring_mismatch, "prime set ring does not match the host ring");
  }
  s.prime_set = std::move(sat);
  s.known_ore = true;
  return s;
}

OreSetDesc OreSetDesc::ideal_hat_set(const RingId& ring, RingElem gen) {
  if (!ring.is_commutative()) fail(Errc::unsupported, "ideal-hat sets are implemented for Z and K[x]");
  if (gen.is_zero()) fail(Errc::zero_input, "ideal-hat of the zero ideal");
  OreSetDesc s;
  s.ring = ring;
  s.kind = Kind::ideal_hat;
  s.gens.push_back(std::move(gen));
  s.known_ore = true;
  return s;
}

bool OreSetDesc::operator==(const OreSetDesc& o) const {
  if (ring != o.ring || kind != o.kind || known_ore != o.known_ore) return false;
  if (gens.size() != o.gens.size() || parts.size() != o.parts.size()) return false;
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i] != o.gens[i]) return false;
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (!(parts[i] == o.parts[i])) return false;
  return z == o.z && prime_set == o.prime_set;
}

std::string OreSetDesc::label() const {
  switch (kind) {
    case Kind::monoid: {
      std::string out = "[";
      for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + str(gens[i]);
      return out + "]";
    }
    case Kind::euler: return "Theta_" + to_string(z);
    case Kind::union_set: {
      std::string out = "[";
      for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " u " : "") + parts[i].label();
      return out + "]";
    }
    case Kind::nonzero: return ring.name() + "\\{0}";
    case Kind::units: return "U(" + ring.name() + ")";
    case Kind::primes: return "sat-set(" + ring.name() + ")";
    default: return "ideal-hat(" + str(gens.front()) + ")";
  }
}

namespace {

bool z_monoid_member(const Int& r, const std::vector<RingElem>& gens, std::set<Int>& visited) {
  if (r == 1) return true;
  if (!visited.insert(r).second) return false;
  for (const RingElem& ge : gens) {
    const Int& g = ge.as_int();
    if (g == 1) continue;
    if (g == -1) {
      if (z_monoid_member(Int(-r), gens, visited)) return true;
      continue;
    }
    if (divides(g, r) && z_monoid_member(div_exact(r, g), gens, visited)) return true;
  }
  return false;
}

Tri qx_monoid_member(const UniPoly& r, const std::vector<RingElem>& gens, long& nodes,
                     std::set<std::string>& visited) {
  if (r.is_one()) return Tri::yes;
  if (--nodes < 0) return Tri::unknown;
  if (!visited.insert(r.str()).second) return Tri::no;
  bool exhausted = true;
  for (const RingElem& ge : gens) {
    const UniPoly& g = ge.as_poly();
    if (g.is_one()) continue;
    UniPoly q;
    if (!r.exact_div(g, q)) continue;
    Tri sub = qx_monoid_member(q, gens, nodes, visited);
    if (sub == Tri::yes) return Tri::yes;
    if (sub == Tri::unknown) exhausted = false;
  }
  return exhausted ? Tri::no : Tri::unknown;
}

/// Peel atoms from the right by exact division.  Complete (a definite no)
/// when every atom is a supported divisor shape, since in a domain the left
/// quotient by the last factor of any word is unique.
Tri weyl_monoid_member(const WeylOp& r, const std::vector<WeylOp>& atoms, long& nodes,
                       std::set<std::string>& visited, std::vector<WeylOp>* factors) {
  if (r.is_one()) return Tri::yes;
  if (--nodes < 0) return Tri::unknown;
  if (!visited.insert(r.str()).second) return Tri::no;
  bool exhausted = true;
  for (const WeylOp& g : atoms) {
    if (g.is_one()) continue;
    if (g.total_degree() < 1) continue;  // scalar atoms handled by callers
    if (!supported_right_divisor(g)) {
      exhausted = false;
      continue;
    }
    auto q = exact_right_divide(r, g);
    if (!q) continue;
    Tri sub = weyl_monoid_member(*q, atoms, nodes, visited, factors);
    if (sub == Tri::yes) {
      if (factors) factors->push_back(g);
      return Tri::yes;
    }
    if (sub == Tri::unknown) exhausted = false;
  }
  return exhausted ? Tri::no : Tri::unknown;
}

/// Linear Euler factors theta + z + w of a degree-0 graded element, or
/// nullopt when it is not a monic product of such factors.
std::optional<std::vector<Rat>> euler_factor_shifts(const Rat& z, const WeylOp& r) {
  if (r.is_zero()) return std::nullopt;
  auto deg = r.graded_degree();
  if (!deg || *deg != 0) return std::nullopt;
  ThetaForm tf = theta_form(r);
  if (tf.coeff != 1) return std::nullopt;
  PolyFactorization pf = factor_poly(tf.tpoly);
  if (!pf.split) return std::nullopt;
  std::vector<Rat> shifts;  // w with factor theta + z + w
  for (const auto& [root, mult] : pf.roots) {
    Rat w = -root - z;
    if (!is_integer(w)) return std::nullopt;
    for (unsigned long i = 0; i < mult; ++i) shifts.push_back(w);
  }
  return shifts;
}

std::vector<const OreSetDesc*> flatten_parts(const OreSetDesc& s) {
  std::vector<const OreSetDesc*> out;
  if (s.kind != OreSetDesc::Kind::union_set) {
    out.push_back(&s);
    return out;
  }
  for (const OreSetDesc& p : s.parts) {
    auto sub = flatten_parts(p);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

/// Factor search for unions containing Euler components: peel monoid atoms or
/// linear Euler factors from the right.
Tri union_member(const WeylOp& r, const std::vector<WeylOp>& atoms, const std::vector<Rat>& zs,
                 int wbound, long& nodes, std::set<std::string>& visited,
                 std::vector<WeylOp>* factors) {
  if (r.is_one()) return Tri::yes;
  if (--nodes < 0) return Tri::unknown;
  if (!visited.insert(r.str()).second) return Tri::no;
  Tri result = zs.empty() ? Tri::no : Tri::unknown;  // Euler shift range is budgeted
  for (const WeylOp& g : atoms) {
    if (g.is_one() || g.total_degree() < 1 || !supported_right_divisor(g)) continue;
    auto q = exact_right_divide(r, g);
    if (!q) continue;
    if (union_member(*q, atoms, zs, wbound, nodes, visited, factors) == Tri::yes) {
      if (factors) factors->push_back(g);
      return Tri::yes;
    }
  }
  for (const Rat& z : zs) {
    for (int w = -wbound; w <= wbound; ++w) {
      WeylOp factor = WeylOp::theta_plus(z + Rat(w));
      auto q = exact_right_divide(r, factor);
      if (!q) continue;
      if (union_member(*q, atoms, zs, wbound, nodes, visited, factors) == Tri::yes) {
        if (factors) factors->push_back(factor);
        return Tri::yes;
      }
    }
  }
  return result;
}

}  // namespace

std::vector<RingElem> monoid_atoms(const OreSetDesc& s) {
  std::vector<RingElem> atoms;
  for (const OreSetDesc* p : flatten_parts(s))
    if (p->kind == OreSetDesc::Kind::monoid)
      atoms.insert(atoms.end(), p->gens.begin(), p->gens.end());
  return atoms;
}

bool all_elements_graded(const OreSetDesc& s) {
  switch (s.kind) {
    case OreSetDesc::Kind::monoid:
      return std::all_of(s.gens.begin(), s.gens.end(), [](const RingElem& g) {
        return g.ring.tag != RingId::Tag::WEYL || g.as_weyl().is_homogeneous();
      });
    case OreSetDesc::Kind::euler: return true;
    case OreSetDesc::Kind::units: return true;
    case OreSetDesc::Kind::union_set:
      return std::all_of(s.parts.begin(), s.parts.end(),
                         [](const OreSetDesc& p) { return all_elements_graded(p); });
    default: return false;
  }
}

Tri contains(const OreSetDesc& s, const RingElem& r, const Budget& budget) {
  if (r.ring != s.ring) fail(Errc::ring_mismatch, "contains: element ring does not match the set");
  if (r.is_zero()) return Tri::no;
  switch (s.kind) {
    case OreSetDesc::Kind::nonzero: return Tri::yes;
    case OreSetDesc::Kind::units: return r.is_unit() ? Tri::yes : Tri::no;
    case OreSetDesc::Kind::ideal_hat: {
      if (r.is_one()) return Tri::yes;
      return exact_right_divide(r, s.gens.front()).has_value() ? Tri::yes : Tri::no;
    }
    case OreSetDesc::Kind::primes: {
      if (s.ring.tag == RingId::Tag::WEYL) {
        if (!r.as_weyl().is_x_poly()) return Tri::no;
        return sat_member(s.prime_set, RingElem::poly(r.as_weyl().as_x_poly())) ? Tri::yes : Tri::no;
      }
      return sat_member(s.prime_set, r) ? Tri::yes : Tri::no;
    }
    case OreSetDesc::Kind::euler: {
      return euler_factor_shifts(s.z, r.as_weyl()) ? Tri::yes : Tri::no;
    }
    case OreSetDesc::Kind::monoid: {
      switch (s.ring.tag) {
        case RingId::Tag::Z: {
          std::set<Int> visited;
          return z_monoid_member(r.as_int(), s.gens, visited) ? Tri::yes : Tri::no;
        }
        case RingId::Tag::QX: {
          long nodes = budget.search_nodes;
          std::set<std::string> visited;
          return qx_monoid_member(r.as_poly(), s.gens, nodes, visited);
        }
        default: {
          if (s.gens.size() == 1) {
            // r must equal g^k exactly
            const WeylOp& g = s.gens.front().as_weyl();
            if (g.is_one()) return r.is_one() ? Tri::yes : Tri::no;
            if (g.total_degree() >= 1) {
              WeylOp p = WeylOp::one();
              long target = r.as_weyl().total_degree();
              while (p.total_degree() < target) p = p * g;
              return p == r.as_weyl() ? Tri::yes : Tri::no;
            }
          }
          std::vector<WeylOp> atoms;
          for (const RingElem& g : s.gens) atoms.push_back(g.as_weyl());
          long nodes = budget.search_nodes;
          std::set<std::string> visited;
          return weyl_monoid_member(r.as_weyl(), atoms, nodes, visited, nullptr);
        }
      }
    }
    case OreSetDesc::Kind::union_set: {
      auto parts = flatten_parts(s);
      if (s.ring.is_commutative()) {
        std::vector<RingElem> gens;
        for (const OreSetDesc* p : parts) {
          if (p->kind != OreSetDesc::Kind::monoid)
            fail(Errc::unsupported, "union membership needs generator-presented components");
          gens.insert(gens.end(), p->gens.begin(), p->gens.end());
        }
        return contains(OreSetDesc::monoid(s.ring, gens), r, budget);
      }
      std::vector<WeylOp> atoms;
      std::vector<Rat> zs;
      for (const OreSetDesc* p : parts) {
        if (p->kind == OreSetDesc::Kind::monoid)
          for (const RingElem& g : p->gens) atoms.push_back(g.as_weyl());
        else if (p->kind == OreSetDesc::Kind::euler)
          zs.push_back(p->z);
        else
          fail(Errc::unsupported, "union membership needs monoid or Euler components");
      }
      long nodes = budget.search_nodes;
      std::set<std::string> visited;
      return union_member(r.as_weyl(), atoms, zs, budget.exponent, nodes, visited, nullptr);
    }
  }
  return Tri::unknown;
}

Tri subset_on_generators(const OreSetDesc& s, const OreSetDesc& t, const Budget& budget) {
  if (s.ring != t.ring) fail(Errc::ring_mismatch, "subset test across rings");
  if (t.kind == OreSetDesc::Kind::nonzero) return Tri::yes;
  switch (s.kind) {
    case OreSetDesc::Kind::monoid: {
      Tri acc = Tri::yes;
      for (const RingElem& g : s.gens) acc = tri_and(acc, contains(t, g, budget));
      return acc;
    }
    case OreSetDesc::Kind::euler: {
      if (t.kind == OreSetDesc::Kind::euler)
        return is_integer(Rat(s.z - t.z)) ? Tri::yes : Tri::no;
      for (int w = -budget.exponent; w <= budget.exponent; ++w) {
        Tri c = contains(t, RingElem::weyl(WeylOp::theta_plus(s.z + Rat(w))), budget);
        if (c == Tri::no) return Tri::no;
      }
      return Tri::unknown;  // the generator family is infinite
    }
    case OreSetDesc::Kind::union_set: {
      Tri acc = Tri::yes;
      for (const OreSetDesc& p : s.parts) acc = tri_and(acc, subset_on_generators(p, t, budget));
      return acc;
    }
    case OreSetDesc::Kind::units: {
      if (t.kind == OreSetDesc::Kind::units || t.kind == OreSetDesc::Kind::primes) return Tri::yes;
      if (s.ring.tag == RingId::Tag::Z) return contains(t, RingElem::integer(Int(-1)), budget);
      return Tri::unknown;
    }
    case OreSetDesc::Kind::primes: {
      if (s.prime_set.mode != SatSetDesc::Mode::finite)
        fail(Errc::unsupported, "cofinite sets are not generator-presented");
      bool units_covered = t.kind == OreSetDesc::Kind::units || t.kind == OreSetDesc::Kind::primes ||
                           t.kind == OreSetDesc::Kind::nonzero;
      Tri acc = units_covered ? Tri::yes : Tri::unknown;
      if (s.ring.tag == RingId::Tag::Z) {
        if (!units_covered) acc = contains(t, RingElem::integer(Int(-1)), budget);
        for (const Int& p : s.prime_set.primes)
          acc = tri_and(acc, contains(t, RingElem::integer(p), budget));
      } else {
        for (const UniPoly& q : s.prime_set.irreducibles)
          acc = tri_and(acc, contains(t, RingElem::poly(q), budget));
      }
      return acc;
    }
    default: fail(Errc::unsupported, "set " + s.label() + " is not generator-presented");
  }
}

std::optional<std::vector<RingElem>> factor_in_set(const OreSetDesc& s, const RingElem& elem,
                                                   const Budget& budget) {
  if (elem.ring != s.ring) fail(Errc::ring_mismatch, "factor_in_set: ring mismatch");
  if (elem.is_zero()) return std::nullopt;
  if (elem.is_one()) return std::vector<RingElem>{};
  switch (s.kind) {
    case OreSetDesc::Kind::euler: {
      auto shifts = euler_factor_shifts(s.z, elem.as_weyl());
      if (!shifts) return std::nullopt;
      std::vector<RingElem> out;
      for (const Rat& w : *shifts) out.push_back(RingElem::weyl(WeylOp::theta_plus(s.z + w)));
      return out;
    }
    case OreSetDesc::Kind::primes:
    case OreSetDesc::Kind::ideal_hat:
    case OreSetDesc::Kind::nonzero:
    case OreSetDesc::Kind::units: {
      if (contains(s, elem, budget) == Tri::yes) return std::vector<RingElem>{elem};
      return std::nullopt;
    }
    case OreSetDesc::Kind::monoid: {
      if (s.ring.tag == RingId::Tag::Z) {
        std::vector<RingElem> out;
        std::set<Int> visited;
        std::function<bool(Int)> go = [&](Int v) {
          if (v == 1) return true;
          if (!visited.insert(v).second) return false;
          for (const RingElem& ge : s.gens) {
            const Int& g = ge.as_int();
            if (g == 1) continue;
            if (g == -1) {
              out.push_back(ge);
              if (go(Int(-v))) return true;
              out.pop_back();
              continue;
            }
            if (divides(g, v)) {
              out.push_back(ge);
              if (go(div_exact(v, g))) return true;
              out.pop_back();
            }
          }
          return false;
        };
        if (!go(elem.as_int())) return std::nullopt;
        return out;
      }
      if (s.ring.tag == RingId::Tag::QX) {
        std::vector<RingElem> out;
        std::function<bool(UniPoly)> go = [&](UniPoly v) {
          if (v.is_one()) return true;
          for (const RingElem& ge : s.gens) {
            const UniPoly& g = ge.as_poly();
            if (g.is_one()) continue;
            UniPoly q;
            if (v.exact_div(g, q) && (g.degree() >= 1 || q != v)) {
              out.push_back(ge);
              if (go(q)) return true;
              out.pop_back();
            }
          }
          return false;
        };
        if (!go(elem.as_poly())) return std::nullopt;
        return out;
      }
      std::vector<WeylOp> atoms;
      for (const RingElem& g : s.gens) atoms.push_back(g.as_weyl());
      long nodes = budget.search_nodes;
      std::set<std::string> visited;
      std::vector<WeylOp> factors;
      if (weyl_monoid_member(elem.as_weyl(), atoms, nodes, visited, &factors) != Tri::yes)
        return std::nullopt;
      std::vector<RingElem> out;
      for (const WeylOp& f : factors) out.push_back(RingElem::weyl(f));
      return out;
    }
    case OreSetDesc::Kind::union_set: {
      auto parts = flatten_parts(s);
      if (s.ring.is_commutative()) {
        std::vector<RingElem> gens;
        for (const OreSetDesc* p : parts) {
          if (p->kind != OreSetDesc::Kind::monoid)
            fail(Errc::unsupported, "union factoring needs generator-presented components");
          gens.insert(gens.end(), p->gens.begin(), p->gens.end());
        }
        return factor_in_set(OreSetDesc::monoid(s.ring, gens), elem, budget);
      }
      std::vector<WeylOp> atoms;
      std::vector<Rat> zs;
      for (const OreSetDesc* p : parts) {
        if (p->kind == OreSetDesc::Kind::monoid)
          for (const RingElem& g : p->gens) atoms.push_back(g.as_weyl());
        else if (p->kind == OreSetDesc::Kind::euler)
          zs.push_back(p->z);
        else
          fail(Errc::unsupported, "union factoring needs monoid or Euler components");
      }
      long nodes = budget.search_nodes;
      std::set<std::string> visited;
      std::vector<WeylOp> factors;
      if (union_member(elem.as_weyl(), atoms, zs, budget.exponent, nodes, visited, &factors) != Tri::yes)
        return std::nullopt;
      std::vector<RingElem> out;
      for (const WeylOp& f : factors) out.push_back(RingElem::weyl(f));
      return out;
    }
  }
  return std::nullopt;
}

}  // namespace ore
