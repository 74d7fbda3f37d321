#pragma once

#include <vector>

#include "ore/unipoly.hpp"

namespace ore {

/// Rational-root factorization p = content * prod (x - root_i)^m_i * residual
/// with the residual monic and free of rational roots.  `split` is true when
/// the residual is the constant 1.  Full factorization over Q is out of
/// scope; callers that need a complete splitting must treat a non-trivial
/// residual as an error.
struct PolyFactorization {
  Rat content;
  std::vector<std::pair<Rat, unsigned long>> roots;  // (root, multiplicity), roots ascending
  UniPoly residual;
  bool split = false;
};

PolyFactorization factor_poly(const UniPoly& p);

}  // namespace ore
