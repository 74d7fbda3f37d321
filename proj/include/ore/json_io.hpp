#pragma once

#include <json.hpp>

#include "ore/closure.hpp"
#include "ore/fraction.hpp"

namespace ore {

using Json = nlohmann::json;

Json ring_to_json(const RingId& r);
RingId ring_from_json(const Json& j);

Json oreset_to_json(const OreSetDesc& s);
OreSetDesc oreset_from_json(const Json& j);

Json satset_to_json(const SatSetDesc& s);
SatSetDesc satset_from_json(const Json& j);

Json fraction_to_json(const Fraction& f);
Fraction fraction_from_json(const Json& j, const Budget& budget = {});

Json lattice_to_json(const IntLattice& l);
IntLattice lattice_from_json(const Json& j);

Json plan_to_json(const ClosurePlan& p);
ClosurePlan plan_from_json(const Json& j);

/// "s | r" denominator-bar-numerator fraction literal.
Fraction parse_fraction_text(const std::string& text, const OreSetDesc& set,
                             const Budget& budget = {});

}  // namespace ore
