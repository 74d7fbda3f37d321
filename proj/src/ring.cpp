#include "ore/ring.hpp"

namespace ore {

RingElem RingElem::one_of(const RingId& r) {
  switch (r.tag) {
    case RingId::Tag::Z: return {r, Int(1)};
    case RingId::Tag::QX: return {r, UniPoly::constant(r.var, Rat(1))};
    default: return {r, WeylOp::one()};
  }
}

RingElem RingElem::zero_of(const RingId& r) {
  switch (r.tag) {
    case RingId::Tag::Z: return {r, Int(0)};
    case RingId::Tag::QX: return {r, UniPoly(r.var)};
    default: return {r, WeylOp::zero()};
  }
}

bool RingElem::is_zero() const {
  switch (ring.tag) {
    case RingId::Tag::Z: return as_int() == 0;
    case RingId::Tag::QX: return as_poly().is_zero();
    default: return as_weyl().is_zero();
  }
}

bool RingElem::is_one() const {
  switch (ring.tag) {
    case RingId::Tag::Z: return as_int() == 1;
    case RingId::Tag::QX: return as_poly().is_one();
    default: return as_weyl().is_one();
  }
}

bool RingElem::is_unit() const {
  switch (ring.tag) {
    case RingId::Tag::Z: return as_int() == 1 || as_int() == -1;
    case RingId::Tag::QX: return as_poly().is_constant() && !as_poly().is_zero();
    default: return as_weyl().is_scalar() && !as_weyl().is_zero();
  }
}

void check_same_ring(const RingElem& a, const RingElem& b) {
  if (a.ring != b.ring)
    fail(Errc::ring_mismatch, "elements of different rings: " + a.ring.name() + " vs " + b.ring.name());
}

RingElem operator+(const RingElem& a, const RingElem& b) {
  check_same_ring(a, b);
  switch (a.ring.tag) {
    case RingId::Tag::Z: return {a.ring, Int(a.as_int() + b.as_int())};
    case RingId::Tag::QX: return {a.ring, a.as_poly() + b.as_poly()};
    default: return {a.ring, a.as_weyl() + b.as_weyl()};
  }
}

RingElem operator-(const RingElem& a, const RingElem& b) {
  check_same_ring(a, b);
  switch (a.ring.tag) {
    case RingId::Tag::Z: return {a.ring, Int(a.as_int() - b.as_int())};
    case RingId::Tag::QX: return {a.ring, a.as_poly() - b.as_poly()};
    default: return {a.ring, a.as_weyl() - b.as_weyl()};
  }
}

RingElem operator*(const RingElem& a, const RingElem& b) {
  check_same_ring(a, b);
  switch (a.ring.tag) {
    case RingId::Tag::Z: return {a.ring, Int(a.as_int() * b.as_int())};
    case RingId::Tag::QX: return {a.ring, a.as_poly() * b.as_poly()};
    default: return {a.ring, a.as_weyl() * b.as_weyl()};
  }
}

RingElem operator-(const RingElem& a) {
  switch (a.ring.tag) {
    case RingId::Tag::Z: return {a.ring, Int(-a.as_int())};
    case RingId::Tag::QX: return {a.ring, -a.as_poly()};
    default: return {a.ring, -a.as_weyl()};
  }
}

bool operator==(const RingElem& a, const RingElem& b) {
  if (a.ring != b.ring) return false;
  switch (a.ring.tag) {
    case RingId::Tag::Z: return a.as_int() == b.as_int();
    case RingId::Tag::QX: return a.as_poly() == b.as_poly();
    default: return a.as_weyl() == b.as_weyl();
  }
}

RingElem pow(const RingElem& a, unsigned long e) {
  switch (a.ring.tag) {
    case RingId::Tag::Z: return {a.ring, int_pow(a.as_int(), e)};
    case RingId::Tag::QX: return {a.ring, a.as_poly().pow(e)};
    default: return {a.ring, a.as_weyl().pow(e)};
  }
}

std::string str(const RingElem& e) {
  switch (e.ring.tag) {
    case RingId::Tag::Z: return to_string(e.as_int());
    case RingId::Tag::QX: return e.as_poly().str();
    default: return e.as_weyl().str();
  }
}

}  // namespace ore
