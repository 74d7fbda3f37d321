#include "ore/polyfactor.hpp"

#include <algorithm>

#include "ore/intfactor.hpp"

namespace ore {
namespace {

std::vector<Int> divisors_of(const Int& n) {
  IntFactorization f = factor_int(n);
  std::vector<Int> divs{Int(1)};
  for (const auto& [p, e] : f.factors) {
    std::size_t base = divs.size();
    Int pk = 1;
    for (unsigned long k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

/// Integer-coefficient multiple of a monic rational polynomial.
UniPoly clear_denominators(const UniPoly& p) {
  Int l = 1;
  for (const Rat& c : p.coeffs()) l = int_lcm(l, c.get_den());
  return p * Rat(l);
}

}  // namespace

PolyFactorization factor_poly(const UniPoly& p) {
  if (p.is_zero()) fail(Errc::zero_input, "factor_poly(0)");
  PolyFactorization out;
  out.content = p.leading();
  out.residual = UniPoly::constant(p.var(), Rat(1));
  UniPoly m = p.monic();
  const std::string& v = p.var();

  // Root 0: strip the power of x dividing p.
  unsigned long zero_mult = 0;
  while (!m.is_constant() && m.constant_term() == 0) {
    UniPoly q;
    m.exact_div(UniPoly::variable(v), q);
    m = q;
    ++zero_mult;
  }
  if (zero_mult > 0) out.roots.emplace_back(Rat(0), zero_mult);

  // Nonzero rational roots via the rational root theorem on an integer model.
  while (!m.is_constant()) {
    UniPoly z = clear_denominators(m);
    Int c0 = z.constant_term().get_num();
    Int lead = z.leading().get_num();
    bool found = false;
    for (const Int& u : divisors_of(c0)) {
      for (const Int& w : divisors_of(lead)) {
        if (int_gcd(u, w) != 1) continue;
        for (int sign : {1, -1}) {
          Rat cand = make_rat(sign * u, w);
          if (m.eval(cand) != 0) continue;
          unsigned long mult = 0;
          UniPoly lin(v, {-cand, Rat(1)});
          UniPoly q;
          while (m.exact_div(lin, q)) {
            m = q;
            ++mult;
          }
          out.roots.emplace_back(cand, mult);
          found = true;
          break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }

  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.residual = m;  // monic by construction
  out.split = m.is_one();
  return out;
}

}  // namespace ore
