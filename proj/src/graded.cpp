#include "ore/graded.hpp"

#include <algorithm>
#include <map>

#include "ore/error.hpp"

namespace ore {

std::vector<GradedPart> grade_decompose(const WeylOp& r) {
  if (r.is_zero()) fail(Errc::zero_input, "grade_decompose(0)");
  std::map<long, WeylOp> parts;
  for (const auto& [e, c] : r.terms()) parts[e.d - e.x] = parts[e.d - e.x] + WeylOp::monomial(e.x, e.d, c);
  std::vector<GradedPart> out;
  out.reserve(parts.size());
  for (auto& [k, w] : parts) out.push_back({k, std::move(w)});
  return out;
}

UniPoly theta_falling(unsigned long a) {
  UniPoly t = UniPoly::constant("theta", Rat(1));
  for (unsigned long j = 0; j < a; ++j)
    t = t * UniPoly("theta", {Rat(-static_cast<long>(j)), Rat(1)});
  return t;
}

UniPoly theta_rising(unsigned long n) {
  UniPoly t = UniPoly::constant("theta", Rat(1));
  for (unsigned long j = 1; j <= n; ++j)
    t = t * UniPoly("theta", {Rat(static_cast<long>(j)), Rat(1)});
  return t;
}

WeylOp theta_poly_to_weyl(const UniPoly& tp) {
  WeylOp acc;
  WeylOp theta = WeylOp::euler();
  for (auto it = tp.coeffs().rbegin(); it != tp.coeffs().rend(); ++it)
    acc = acc * theta + WeylOp::scalar(*it);
  return acc;
}

ThetaForm theta_form(const WeylOp& h) {
  if (h.is_zero()) fail(Errc::zero_input, "theta_form(0)");
  auto deg = h.graded_degree();
  if (!deg) fail(Errc::unsupported, "theta_form: element is not homogeneous");
  long k = *deg;
  // For k >= 0:  x^a d^(a+k) = ff_a(theta) d^k.
  // For k <  0:  x^(b+n) d^b = ff_b(theta - n) x^n  with n = -k.
  UniPoly t("theta");
  unsigned long n = static_cast<unsigned long>(k >= 0 ? k : -k);
  for (const auto& [e, c] : h.terms()) {
    if (k >= 0)
      t = t + theta_falling(static_cast<unsigned long>(e.x)) * c;
    else
      t = t + theta_falling(static_cast<unsigned long>(e.d)).shift_arg(Rat(-static_cast<long>(n))) * c;
  }
  ThetaForm f;
  f.coeff = t.leading();
  f.tpoly = t.monic();
  f.n = (k == 0) ? 0 : n;
  f.y = (k == 0) ? ThetaSymbol::none : (k > 0 ? ThetaSymbol::d : ThetaSymbol::x);
  return f;
}

WeylOp from_theta_form(const ThetaForm& f) {
  WeylOp w = theta_poly_to_weyl(f.tpoly) * f.coeff;
  if (f.y == ThetaSymbol::d) w = w * WeylOp::d().pow(f.n);
  if (f.y == ThetaSymbol::x) w = w * WeylOp::x().pow(f.n);
  return w;
}

namespace {

WeylOp map_terms(const WeylOp& r, const WeylOp& img_x, const WeylOp& img_d) {
  WeylOp out;
  for (const auto& [e, c] : r.terms())
    out = out + img_x.pow(static_cast<unsigned long>(e.x)) * img_d.pow(static_cast<unsigned long>(e.d)) * c;
  return out;
}

}  // namespace

WeylOp fourier(const WeylOp& r) { return map_terms(r, -WeylOp::d(), WeylOp::x()); }

WeylOp fourier_inv(const WeylOp& r) { return map_terms(r, WeylOp::d(), -WeylOp::x()); }

std::pair<WeylOp, WeylOp> ore_solve_euler(const Rat& z, const WeylOp& r) {
  if (r.is_zero()) fail(Errc::zero_input, "ore_solve_euler(_, 0)");
  std::vector<GradedPart> parts = grade_decompose(r);
  WeylOp s = WeylOp::one();
  for (const GradedPart& p : parts) s = s * WeylOp::theta_plus(z + Rat(p.degree));
  WeylOp t;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    WeylOp factor = WeylOp::one();
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) factor = factor * WeylOp::theta_plus(z + Rat(parts[j].degree));
    t = t + factor * parts[i].component;
  }
  if (s * r != t * WeylOp::theta_plus(z))
    fail(Errc::unsupported, "ore_solve_euler: internal identity check failed");
  return {s, t};
}

}  // namespace ore
