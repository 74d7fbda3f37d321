#pragma once

#include <string>

#include "ore/ring.hpp"

namespace ore {

/// Parse a UTF-8 element expression over the given ring and return its
/// canonical normal form.  Grammar: integers, rationals `a/b`, the symbols
/// `x`, `d` and `theta` (macro for `x*d`, Weyl ring only), operators
/// `+ - * ^` and parentheses.  `^` binds tightest and exponents are
/// non-negative integer literals.
RingElem parse_element(const std::string& text, const RingId& ring);

/// parse + normalize; the canonical printer str() emits the same grammar.
inline RingElem ring_eval(const std::string& text, const RingId& ring) {
  return parse_element(text, ring);
}

}  // namespace ore
