#pragma once

#include <string>
#include <vector>

#include "ore/budget.hpp"
#include "ore/weyl.hpp"

namespace ore {

/// Monomial order for Groebner computations: total degree first, then
/// lexicographic with d > x.  Degree-compatible, so leading monomials
/// multiply like commutative monomials and left reduction is well-founded.
bool gb_exponent_less(XD a, XD b);

XD leading_exponent(const WeylOp& p);
Rat leading_coefficient(const WeylOp& p);

struct GroebnerBasis {
  std::vector<WeylOp> generators;  // auto-reduced, monic, sorted by leading exponent
  std::string order = "deg-then-lex(d>x)";
};

/// Left Buchberger completion.  Pair selection is normal (sugar-free) with a
/// FIFO queue; throws Errc::resource_limit past the pair budget.
GroebnerBasis groebner_basis(const std::vector<WeylOp>& gens, const Budget& budget = {});

/// Full left-reduction normal form of r modulo the basis.
WeylOp reduce(const WeylOp& r, const std::vector<WeylOp>& basis);

struct MembershipResult {
  bool member;
  WeylOp normal_form;
};

/// r lies in the left ideal iff its normal form vanishes.
MembershipResult ideal_member(const WeylOp& r, const GroebnerBasis& gb);

}  // namespace ore
