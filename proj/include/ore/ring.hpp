#pragma once

#include <string>
#include <variant>

#include "ore/numbers.hpp"
#include "ore/unipoly.hpp"
#include "ore/weyl.hpp"

namespace ore {

/// Identifies the base ring an element lives in.  Cross-ring operations are
/// rejected at the RingElem level.
struct RingId {
  enum class Tag { Z, QX, WEYL };

  Tag tag = Tag::Z;
  std::string var = "x";  // QX variable name; unused for Z

  static RingId integers() { return {Tag::Z, ""}; }
  static RingId rational_poly(std::string var = "x") { return {Tag::QX, std::move(var)}; }
  static RingId weyl() { return {Tag::WEYL, "x"}; }

  bool is_commutative() const { return tag != Tag::WEYL; }
  std::string name() const {
    switch (tag) {
      case Tag::Z: return "Z";
      case Tag::QX: return "Q[" + var + "]";
      default: return "weyl";
    }
  }
  friend bool operator==(const RingId& a, const RingId& b) {
    if (a.tag != b.tag) return false;
    return a.tag != Tag::QX || a.var == b.var;
  }
  friend bool operator!=(const RingId& a, const RingId& b) { return !(a == b); }
};

/// A base-ring element together with its ring tag.
struct RingElem {
  RingId ring;
  std::variant<Int, UniPoly, WeylOp> value;

  static RingElem integer(Int n) { return {RingId::integers(), std::move(n)}; }
  static RingElem poly(UniPoly p) {
    RingId r = RingId::rational_poly(p.var());
    return {r, std::move(p)};
  }
  static RingElem weyl(WeylOp w) { return {RingId::weyl(), std::move(w)}; }
  static RingElem one_of(const RingId& r);
  static RingElem zero_of(const RingId& r);

  const Int& as_int() const { return std::get<Int>(value); }
  const UniPoly& as_poly() const { return std::get<UniPoly>(value); }
  const WeylOp& as_weyl() const { return std::get<WeylOp>(value); }

  bool is_zero() const;
  bool is_one() const;
  /// Unit of the base ring: +-1 in Z, nonzero constants in Q[x] and D.
  bool is_unit() const;
};

void check_same_ring(const RingElem& a, const RingElem& b);

RingElem operator+(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a, const RingElem& b);
RingElem operator*(const RingElem& a, const RingElem& b);
RingElem operator-(const RingElem& a);
bool operator==(const RingElem& a, const RingElem& b);
inline bool operator!=(const RingElem& a, const RingElem& b) { return !(a == b); }
RingElem pow(const RingElem& a, unsigned long e);

/// Canonical printing in the element grammar.
std::string str(const RingElem& e);

}  // namespace ore
