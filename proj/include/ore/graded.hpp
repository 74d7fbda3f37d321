#pragma once

#include <utility>
#include <vector>

#include "ore/weyl.hpp"

namespace ore {

/// Homogeneous component of a Weyl-algebra element under the grading
/// deg x = -1, deg d = +1 (every term x^a d^b of `component` has b - a equal
/// to `degree`).
struct GradedPart {
  long degree = 0;
  WeylOp component;
};

/// Split r != 0 into homogeneous parts, sorted by degree ascending.
std::vector<GradedPart> grade_decompose(const WeylOp& r);

enum class ThetaSymbol { none, x, d };

/// Normal form coeff * tpoly(theta) * y^n of a homogeneous element, with
/// tpoly monic in the variable "theta".  n = 0 iff y = none.
struct ThetaForm {
  Rat coeff;
  UniPoly tpoly;  // monic, variable "theta"
  ThetaSymbol y = ThetaSymbol::none;
  unsigned long n = 0;
};

ThetaForm theta_form(const WeylOp& h);
WeylOp from_theta_form(const ThetaForm& f);

/// theta(theta-1)...(theta-a+1), the theta-polynomial of x^a d^a.
UniPoly theta_falling(unsigned long a);
/// (theta+1)(theta+2)...(theta+n), the theta-polynomial of d^n x^n.
UniPoly theta_rising(unsigned long n);
/// Substitute theta = x*d into a polynomial in "theta".
WeylOp theta_poly_to_weyl(const UniPoly& tp);

/// Ring automorphism x -> -d, d -> x.
WeylOp fourier(const WeylOp& r);
/// Inverse automorphism x -> d, d -> -x.
WeylOp fourier_inv(const WeylOp& r);

/// Left Ore pair for the Euler set at z: returns (s, t) with s in Theta_z,
/// s = prod (theta+z+k_i) over the graded degrees k_i of r, and
/// s * r = t * (theta + z).  The identity is re-verified by expansion before
/// returning.
std::pair<WeylOp, WeylOp> ore_solve_euler(const Rat& z, const WeylOp& r);

}  // namespace ore
