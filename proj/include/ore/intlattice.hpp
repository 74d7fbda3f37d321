#pragma once

#include <vector>

#include "ore/numbers.hpp"

namespace ore {

using IntMat = std::vector<std::vector<Int>>;

/// Row-style Hermite normal form: nonzero rows with pivot columns strictly
/// increasing, positive pivots, entries above each pivot reduced into
/// [0, pivot).  Canonical for the row space.
IntMat hermite_normal_form(const IntMat& a);

struct SnfResult {
  IntMat d;      // diagonal, d_i | d_{i+1}, nonnegative
  IntMat u;      // unimodular row transform
  IntMat v;      // unimodular column transform:  u * a * v = d
  IntMat v_inv;  // exact inverse of v
};

/// Smith normal form with transforms; |det u| = |det v| = 1 and the defining
/// identity are verified before returning.
SnfResult smith_normal_form(const IntMat& a);

/// Exact determinant (Bareiss fraction-free elimination); square input.
Int det(const IntMat& a);

IntMat mat_mul(const IntMat& a, const IntMat& b);
IntMat identity_mat(std::size_t n);

/// Sublattice of Z^n given by generating rows; identified canonically by the
/// Hermite normal form of the generator matrix.
struct IntLattice {
  long ambient = 0;
  IntMat rows;

  static IntLattice from_rows(long ambient, IntMat rows);
  static IntLattice full(long ambient);

  IntMat hermite() const { return hermite_normal_form(rows); }
  long rank() const { return static_cast<long>(hermite().size()); }
  bool contains(const std::vector<Int>& v) const;
  bool is_sublattice_of(const IntLattice& other) const;
  bool operator==(const IntLattice& o) const;
  bool operator!=(const IntLattice& o) const { return !(*this == o); }
};

/// Local closure P^S = { v : s v in P for some product s of the given
/// primes }: divide the S-part out of every invariant factor and reassemble
/// through the SNF transforms.  The smallest S-saturated superlattice.
IntLattice lattice_closure_z(const IntLattice& p, const std::vector<Int>& primes);

/// Finitely presented abelian group M = Z^n / P.
struct PresentedModule {
  IntLattice relations;
  long ambient() const { return relations.ambient; }
};

struct TorsionResult {
  std::vector<Int> invariant_factors;  // nontrivial (> 1), divisibility chain
  IntLattice closure;                  // P^S; its rows generate the torsion classes
  bool is_zero() const { return invariant_factors.empty(); }
};

/// S-torsion of M as P^S / P in invariant-factor form.
TorsionResult torsion_z(const PresentedModule& m, const std::vector<Int>& primes);

struct ExtContrReport {
  bool p_contained = false;             // P subseteq (P^e)^c
  bool closure_matches_contraction = false;
  IntLattice closure;
  IntLattice contraction;               // brute-force membership of epsilon-images
};

/// Extension-contraction check on a full-rank instance with bounded
/// determinant: the contraction of S^-1 P is enumerated directly and compared
/// against lattice_closure_z.
ExtContrReport ext_contr_check(const IntLattice& p, const std::vector<Int>& primes);

}  // namespace ore
