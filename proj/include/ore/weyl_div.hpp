#pragma once

#include <optional>

#include "ore/graded.hpp"
#include "ore/ring.hpp"

namespace ore {

/// Shapes of Weyl-algebra divisors the exact division algorithm supports:
/// polynomials in x alone, polynomials in d alone, and homogeneous elements
/// t(theta) y^n.
bool supported_right_divisor(const WeylOp& divisor);

/// Left quotient by a right divisor: q with q * divisor == p, or nullopt when
/// p is not in D * divisor.  Throws Errc::unsupported for divisor shapes the
/// algorithm does not handle and Errc::zero_input for a zero divisor.
std::optional<WeylOp> exact_right_divide(const WeylOp& p, const WeylOp& divisor);

/// Same contract for any base ring (Z and Q[x] divide commutatively).
std::optional<RingElem> exact_right_divide(const RingElem& p, const RingElem& divisor);

/// Right quotient by a left power: h with y^k * h == p (y = x or d).
std::optional<WeylOp> exact_left_divide_power(const WeylOp& p, ThetaSymbol y, unsigned long k);

/// Right quotient by a left linear theta factor: h with (theta + c) * h == p.
std::optional<WeylOp> exact_left_divide_theta_linear(const WeylOp& p, const Rat& c);

}  // namespace ore
