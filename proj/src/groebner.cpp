#include "ore/groebner.hpp"

#include <algorithm>
#include <deque>

#include "ore/error.hpp"

namespace ore {

bool gb_exponent_less(XD a, XD b) {
  long ta = a.x + a.d, tb = b.x + b.d;
  if (ta != tb) return ta < tb;
  if (a.d != b.d) return a.d < b.d;
  return a.x < b.x;
}

XD leading_exponent(const WeylOp& p) {
  if (p.is_zero()) fail(Errc::zero_input, "leading_exponent(0)");
  XD best = p.terms().begin()->first;
  for (const auto& [e, c] : p.terms())
    if (gb_exponent_less(best, e)) best = e;
  return best;
}

Rat leading_coefficient(const WeylOp& p) {
  XD e = leading_exponent(p);
  return p.coeff(e.x, e.d);
}

namespace {

bool exponent_divides(XD a, XD b) { return a.x <= b.x && a.d <= b.d; }

WeylOp monomial_times(XD m, const WeylOp& g) {
  return WeylOp::monomial(m.x, m.d, Rat(1)) * g;
}

}  // namespace

WeylOp reduce(const WeylOp& r, const std::vector<WeylOp>& basis) {
  WeylOp tail;  // fully reduced part
  WeylOp rem = r;
  while (!rem.is_zero()) {
    XD lead = leading_exponent(rem);
    Rat c = rem.coeff(lead.x, lead.d);
    bool reduced = false;
    for (const WeylOp& g : basis) {
      if (g.is_zero()) continue;
      XD lg = leading_exponent(g);
      if (!exponent_divides(lg, lead)) continue;
      XD m{lead.x - lg.x, lead.d - lg.d};
      // The leading term of m*g is exactly lc(g) * x^lead; everything else is
      // smaller in the order, so this cancels the head of rem.
      rem = rem - monomial_times(m, g) * (c / leading_coefficient(g));
      reduced = true;
      break;
    }
    if (!reduced) {
      tail = tail + WeylOp::monomial(lead.x, lead.d, c);
      rem = rem - WeylOp::monomial(lead.x, lead.d, c);
    }
  }
  return tail;
}

namespace {

std::vector<WeylOp> autoreduce(std::vector<WeylOp> basis) {
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      std::vector<WeylOp> others;
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (j != i && !basis[j].is_zero()) others.push_back(basis[j]);
      WeylOp nf = reduce(basis[i], others);
      if (nf != basis[i]) again = true;
      basis[i] = nf;
    }
    basis.erase(std::remove_if(basis.begin(), basis.end(),
                               [](const WeylOp& g) { return g.is_zero(); }),
                basis.end());
  }
  for (WeylOp& g : basis) g = g * (Rat(1) / leading_coefficient(g));
  std::sort(basis.begin(), basis.end(), [](const WeylOp& a, const WeylOp& b) {
    return gb_exponent_less(leading_exponent(a), leading_exponent(b));
  });
  basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
  return basis;
}

}  // namespace

GroebnerBasis groebner_basis(const std::vector<WeylOp>& gens, const Budget& budget) {
  std::vector<WeylOp> basis;
  for (const WeylOp& g : gens)
    if (!g.is_zero()) basis.push_back(g * (Rat(1) / leading_coefficient(g)));
  if (basis.empty()) fail(Errc::zero_input, "groebner_basis: no nonzero generators");

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  long processed = 0;
  while (!pairs.empty()) {
    if (++processed > budget.gb_pair_limit)
      fail(Errc::resource_limit, "groebner_basis: pair budget exceeded");
    auto [i, j] = pairs.front();
    pairs.pop_front();
    XD ei = leading_exponent(basis[i]), ej = leading_exponent(basis[j]);
    XD lcm{std::max(ei.x, ej.x), std::max(ei.d, ej.d)};
    // Both generators are monic, so the S-polynomial has no head coefficient.
    WeylOp s = monomial_times({lcm.x - ei.x, lcm.d - ei.d}, basis[i]) -
               monomial_times({lcm.x - ej.x, lcm.d - ej.d}, basis[j]);
    WeylOp nf = reduce(s, basis);
    if (nf.is_zero()) continue;
    nf = nf * (Rat(1) / leading_coefficient(nf));
    basis.push_back(nf);
    for (std::size_t k = 0; k + 1 < basis.size(); ++k) pairs.emplace_back(k, basis.size() - 1);
  }

  GroebnerBasis gb;
  gb.generators = autoreduce(std::move(basis));
  return gb;
}

MembershipResult ideal_member(const WeylOp& r, const GroebnerBasis& gb) {
  WeylOp nf = reduce(r, gb.generators);
  return {nf.is_zero(), nf};
}

}  // namespace ore
