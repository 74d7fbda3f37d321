#include "ore/json_io.hpp"

#include "ore/expr.hpp"

namespace ore {

Json ring_to_json(const RingId& r) {
  switch (r.tag) {
    case RingId::Tag::Z: return "Z";
    case RingId::Tag::QX: return r.var == "x" ? Json("QX") : Json("QX:" + r.var);
    default: return "weyl";
  }
}

RingId ring_from_json(const Json& j) {
  std::string s = j.get<std::string>();
  if (s == "Z") return RingId::integers();
  if (s == "QX") return RingId::rational_poly();
  if (s.rfind("QX:", 0) == 0) return RingId::rational_poly(s.substr(3));
  if (s == "weyl") return RingId::weyl();
  fail(Errc::parse_error, "unknown ring tag: " + s);
}

Json satset_to_json(const SatSetDesc& s) {
  Json j;
  j["ring"] = ring_to_json(s.ring);
  j["mode"] = s.mode == SatSetDesc::Mode::finite ? "finite" : "cofinite";
  Json irr = Json::array();
  if (s.ring.tag == RingId::Tag::Z)
    for (const Int& p : s.primes) irr.push_back(to_string(p));
  else
    for (const UniPoly& q : s.irreducibles) irr.push_back(q.str());
  j["irreducibles"] = irr;
  return j;
}

SatSetDesc satset_from_json(const Json& j) {
  RingId ring = j.contains("ring") ? ring_from_json(j.at("ring")) : RingId::integers();
  std::string mode = j.at("mode").get<std::string>();
  if (mode != "finite" && mode != "cofinite") fail(Errc::parse_error, "bad saturated-set mode");
  bool finite = mode == "finite";
  if (ring.tag == RingId::Tag::Z) {
    std::vector<Int> primes;
    for (const Json& e : j.at("irreducibles"))
      primes.push_back(e.is_string() ? Int(e.get<std::string>()) : Int(e.get<long>()));
    return finite ? SatSetDesc::z_finite(std::move(primes)) : SatSetDesc::z_cofinite(std::move(primes));
  }
  if (ring.tag == RingId::Tag::QX) {
    std::vector<UniPoly> irr;
    for (const Json& e : j.at("irreducibles"))
      irr.push_back(parse_element(e.get<std::string>(), ring).as_poly());
    return finite ? SatSetDesc::qx_finite(std::move(irr)) : SatSetDesc::qx_cofinite(std::move(irr));
  }
  fail(Errc::parse_error, "saturated sets live in Z or K[x]");
}

Json oreset_to_json(const OreSetDesc& s) {
  Json j;
  j["ring"] = ring_to_json(s.ring);
  switch (s.kind) {
    case OreSetDesc::Kind::monoid: {
      j["kind"] = "monoid";
      Json gens = Json::array();
      for (const RingElem& g : s.gens) gens.push_back(str(g));
      j["gens"] = gens;
      break;
    }
    case OreSetDesc::Kind::euler:
      j["kind"] = "euler";
      j["z"] = to_string(s.z);
      break;
    case OreSetDesc::Kind::union_set: {
      j["kind"] = "union";
      Json parts = Json::array();
      for (const OreSetDesc& p : s.parts) parts.push_back(oreset_to_json(p));
      j["parts"] = parts;
      break;
    }
    case OreSetDesc::Kind::nonzero: j["kind"] = "nonzero"; break;
    case OreSetDesc::Kind::units: j["kind"] = "units"; break;
    case OreSetDesc::Kind::primes: {
      j["kind"] = "primes";
      Json sat = satset_to_json(s.prime_set);
      j["mode"] = sat["mode"];
      j["irreducibles"] = sat["irreducibles"];
      j["subring"] = sat["ring"];
      break;
    }
    case OreSetDesc::Kind::ideal_hat:
      j["kind"] = "ideal-hat";
      j["gens"] = Json::array({str(s.gens.front())});
      break;
  }
  return j;
}

OreSetDesc oreset_from_json(const Json& j) {
  RingId ring = ring_from_json(j.at("ring"));
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "monoid") {
    std::vector<RingElem> gens;
    for (const Json& e : j.at("gens")) gens.push_back(parse_element(e.get<std::string>(), ring));
    return OreSetDesc::monoid(ring, std::move(gens));
  }
  if (kind == "euler") {
    if (ring.tag != RingId::Tag::WEYL) fail(Errc::parse_error, "euler sets live in the Weyl algebra");
    return OreSetDesc::euler(parse_rat(j.at("z").get<std::string>()));
  }
  if (kind == "union") {
    std::vector<OreSetDesc> parts;
    for (const Json& e : j.at("parts")) parts.push_back(oreset_from_json(e));
    return OreSetDesc::union_of(std::move(parts));
  }
  if (kind == "nonzero") return OreSetDesc::nonzero(ring);
  if (kind == "units") return OreSetDesc::units(ring);
  if (kind == "primes") {
    Json sat;
    sat["ring"] = j.contains("subring") ? j.at("subring")
                                        : (ring.tag == RingId::Tag::WEYL ? Json("QX") : ring_to_json(ring));
    sat["mode"] = j.at("mode");
    sat["irreducibles"] = j.at("irreducibles");
    return OreSetDesc::primes(ring, satset_from_json(sat));
  }
  if (kind == "ideal-hat") {
    return OreSetDesc::ideal_hat_set(ring,
                                     parse_element(j.at("gens").at(0).get<std::string>(), ring));
  }
  fail(Errc::parse_error, "unknown set kind: " + kind);
}

Json fraction_to_json(const Fraction& f) {
  Json j;
  j["den"] = str(f.den);
  j["num"] = str(f.num);
  j["set"] = oreset_to_json(f.set);
  return j;
}

Fraction fraction_from_json(const Json& j, const Budget& budget) {
  OreSetDesc set = oreset_from_json(j.at("set"));
  RingElem den = parse_element(j.at("den").get<std::string>(), set.ring);
  RingElem num = parse_element(j.at("num").get<std::string>(), set.ring);
  return make_fraction(set, den, num, budget);
}

Json lattice_to_json(const IntLattice& l) {
  Json j;
  j["ambient"] = l.ambient;
  Json rows = Json::array();
  for (const auto& row : l.rows) {
    Json r = Json::array();
    for (const Int& v : row) r.push_back(to_string(v));
    rows.push_back(r);
  }
  j["rows"] = rows;
  return j;
}

IntLattice lattice_from_json(const Json& j) {
  long ambient = j.at("ambient").get<long>();
  IntMat rows;
  for (const Json& r : j.at("rows")) {
    std::vector<Int> row;
    for (const Json& v : r) row.push_back(v.is_string() ? Int(v.get<std::string>()) : Int(v.get<long>()));
    rows.push_back(std::move(row));
  }
  return IntLattice::from_rows(ambient, std::move(rows));
}

Json plan_to_json(const ClosurePlan& p) {
  Json j;
  Json sets = Json::array();
  for (const OreSetDesc& s : p.sets) sets.push_back(oreset_to_json(s));
  j["sets"] = sets;
  j["schedule"] = p.schedule;
  j["commuting"] = p.commuting;
  return j;
}

ClosurePlan plan_from_json(const Json& j) {
  ClosurePlan p;
  for (const Json& e : j.at("sets")) p.sets.push_back(oreset_from_json(e));
  p.schedule = j.at("schedule").get<std::vector<int>>();
  p.commuting = j.value("commuting", false);
  return p;
}

Fraction parse_fraction_text(const std::string& text, const OreSetDesc& set, const Budget& budget) {
  std::size_t bar = text.find('|');
  if (bar == std::string::npos)
    fail(Errc::parse_error, "fraction literal must be \"denominator | numerator\"");
  RingElem den = parse_element(text.substr(0, bar), set.ring);
  RingElem num = parse_element(text.substr(bar + 1), set.ring);
  return make_fraction(set, den, num, budget);
}

}  // namespace ore
