#include "ore/weyl_div.hpp"

namespace ore {
namespace {

// Divisor h is a polynomial in x: peel the dividend by descending d-degree,
// dividing the d-leading coefficient polynomial by h commutatively.  The
// quotient is forced term by term because the d^e coefficient of
// (q_e(x) d^e) * h is exactly q_e * h.
std::optional<WeylOp> divide_by_x_poly(const WeylOp& p, const UniPoly& h) {
  WeylOp q, rem = p;
  while (!rem.is_zero()) {
    long e = rem.d_degree();
    UniPoly pe = rem.d_coefficient(e);
    UniPoly qe;
    if (!pe.exact_div(h, qe)) return std::nullopt;
    WeylOp qterm = WeylOp::from_x_poly(qe) * WeylOp::d().pow(static_cast<unsigned long>(e));
    q = q + qterm;
    rem = rem - qterm * WeylOp::from_x_poly(h);
  }
  return q;
}

std::optional<WeylOp> divide_by_graded(const WeylOp& p, const WeylOp& divisor) {
  ThetaForm ds = theta_form(divisor);
  long k_s = divisor.graded_degree().value();
  WeylOp q;
  if (p.is_zero()) return q;
  for (const GradedPart& part : grade_decompose(p)) {
    long k_q = part.degree - k_s;
    unsigned long m = static_cast<unsigned long>(k_q >= 0 ? k_q : -k_q);
    WeylOp y_pow = WeylOp::one();
    if (k_q > 0) y_pow = WeylOp::d().pow(m);
    if (k_q < 0) y_pow = WeylOp::x().pow(m);
    // With q_part = v(theta) y^m, we have q_part * divisor = v(theta) * G for
    // G := y^m * divisor, so v is a commutative quotient of theta-polynomials.
    WeylOp g = y_pow * divisor;
    ThetaForm tg = theta_form(g);
    ThetaForm th = theta_form(part.component);
    if (tg.y != th.y || tg.n != th.n) return std::nullopt;
    UniPoly target = th.tpoly * (th.coeff / tg.coeff);
    UniPoly v;
    if (!target.exact_div(tg.tpoly, v)) return std::nullopt;
    q = q + theta_poly_to_weyl(v) * y_pow;
  }
  if (q * divisor != p) return std::nullopt;
  return q;
}

}  // namespace

bool supported_right_divisor(const WeylOp& divisor) {
  return !divisor.is_zero() &&
         (divisor.is_x_poly() || divisor.is_d_poly() || divisor.is_homogeneous());
}

std::optional<WeylOp> exact_right_divide(const WeylOp& p, const WeylOp& divisor) {
  if (divisor.is_zero()) fail(Errc::zero_input, "exact_right_divide by zero");
  if (divisor.is_x_poly()) return divide_by_x_poly(p, divisor.as_x_poly());
  if (divisor.is_d_poly()) {
    // q * g(d) = p  <=>  fourier(q) * g(x)-image = fourier(p)
    auto q = exact_right_divide(fourier(p), fourier(divisor));
    if (!q) return std::nullopt;
    return fourier_inv(*q);
  }
  if (divisor.is_homogeneous()) return divide_by_graded(p, divisor);
  fail(Errc::unsupported, "exact_right_divide: unsupported divisor shape " + divisor.str());
}

std::optional<RingElem> exact_right_divide(const RingElem& p, const RingElem& divisor) {
  check_same_ring(p, divisor);
  if (divisor.is_zero()) fail(Errc::zero_input, "exact_right_divide by zero");
  switch (p.ring.tag) {
    case RingId::Tag::Z: {
      if (!divides(divisor.as_int(), p.as_int())) return std::nullopt;
      return RingElem{p.ring, div_exact(p.as_int(), divisor.as_int())};
    }
    case RingId::Tag::QX: {
      UniPoly q;
      if (!p.as_poly().exact_div(divisor.as_poly(), q)) return std::nullopt;
      return RingElem{p.ring, q};
    }
    default: {
      auto q = exact_right_divide(p.as_weyl(), divisor.as_weyl());
      if (!q) return std::nullopt;
      return RingElem::weyl(*q);
    }
  }
}

std::optional<WeylOp> exact_left_divide_power(const WeylOp& p, ThetaSymbol y, unsigned long k) {
  if (y == ThetaSymbol::none || k == 0) return p;
  if (y == ThetaSymbol::d) {
    auto h = exact_left_divide_power(fourier(p), ThetaSymbol::x, k);
    if (!h) return std::nullopt;
    return fourier_inv(*h);
  }
  // Left multiplication by x^k only shifts x-exponents.
  WeylOp out;
  for (const auto& [e, c] : p.terms()) {
    if (e.x < static_cast<long>(k)) return std::nullopt;
    out = out + WeylOp::monomial(e.x - static_cast<long>(k), e.d, c);
  }
  return out;
}

std::optional<WeylOp> exact_left_divide_theta_linear(const WeylOp& p, const Rat& c) {
  if (p.is_zero()) return p;
  UniPoly lin("theta", {c, Rat(1)});
  WeylOp out;
  for (const GradedPart& part : grade_decompose(p)) {
    ThetaForm tf = theta_form(part.component);
    UniPoly v;
    if (!(tf.tpoly * tf.coeff).exact_div(lin, v)) return std::nullopt;
    WeylOp y_pow = WeylOp::one();
    if (tf.y == ThetaSymbol::d) y_pow = WeylOp::d().pow(tf.n);
    if (tf.y == ThetaSymbol::x) y_pow = WeylOp::x().pow(tf.n);
    out = out + theta_poly_to_weyl(v) * y_pow;
  }
  return out;
}

}  // namespace ore
