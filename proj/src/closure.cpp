#include "ore/closure.hpp"

#include "ore/graded.hpp"
#include "ore/weyl_div.hpp"

namespace ore {

UniPoly poly_ideal_closure(const UniPoly& f, const SatSetDesc& s) {
  if (f.is_zero()) fail(Errc::zero_input, "poly_ideal_closure(0)");
  if (s.ring.tag != RingId::Tag::QX)
    fail(Errc::unsupported, "poly_ideal_closure needs a saturated set over K[x]");
  UniPoly m = f.monic();
  if (s.mode == SatSetDesc::Mode::finite) {
    for (const UniPoly& q : s.irreducibles) {
      UniPoly quo;
      while (m.exact_div(q, quo)) m = quo;
    }
    return m;
  }
  // Cofinite: only the listed irreducibles stay non-invertible, so the
  // closure keeps exactly their multiplicities.
  UniPoly out = UniPoly::constant(f.var(), Rat(1));
  for (const UniPoly& q : s.irreducibles) {
    UniPoly quo;
    while (m.exact_div(q, quo)) {
      out = out * q;
      m = quo;
    }
  }
  return out;
}

namespace {

enum class VerifyMode { x_powers, d_powers, euler };

VerifyMode classify_verify_set(const OreSetDesc& S) {
  if (S.ring.tag != RingId::Tag::WEYL)
    fail(Errc::unsupported, "weyl_saturation_verify: Weyl-algebra sets only");
  if (S.kind == OreSetDesc::Kind::euler) return VerifyMode::euler;
  if (S.kind == OreSetDesc::Kind::monoid && S.gens.size() == 1) {
    const WeylOp& g = S.gens.front().as_weyl();
    if (g == WeylOp::x()) return VerifyMode::x_powers;
    if (g == WeylOp::d()) return VerifyMode::d_powers;
  }
  fail(Errc::unsupported, "weyl_saturation_verify supports [x], [d] and Theta_z");
}

/// Multipliers to try, cheapest first.
std::vector<WeylOp> multiplier_candidates(VerifyMode mode, const Rat& z, int budget) {
  std::vector<WeylOp> out{WeylOp::one()};
  switch (mode) {
    case VerifyMode::x_powers:
      for (int k = 1; k <= budget; ++k) out.push_back(WeylOp::x().pow(static_cast<unsigned long>(k)));
      break;
    case VerifyMode::d_powers:
      for (int k = 1; k <= budget; ++k) out.push_back(WeylOp::d().pow(static_cast<unsigned long>(k)));
      break;
    case VerifyMode::euler: {
      std::vector<WeylOp> singles;
      for (int w = 0; w <= budget; ++w) {
        singles.push_back(WeylOp::theta_plus(z + Rat(w)));
        if (w > 0) singles.push_back(WeylOp::theta_plus(z - Rat(w)));
      }
      out.insert(out.end(), singles.begin(), singles.end());
      for (const WeylOp& a : singles)
        for (const WeylOp& b : singles) out.push_back(a * b);
      break;
    }
  }
  return out;
}

/// One-step left peels f = s * h for atomic s in S.
std::vector<WeylOp> peel_candidates(VerifyMode mode, const Rat& z, int budget, const WeylOp& f) {
  std::vector<WeylOp> out;
  switch (mode) {
    case VerifyMode::x_powers:
      for (int k = 1; k <= budget; ++k)
        if (auto h = exact_left_divide_power(f, ThetaSymbol::x, static_cast<unsigned long>(k)))
          out.push_back(*h);
      break;
    case VerifyMode::d_powers:
      for (int k = 1; k <= budget; ++k)
        if (auto h = exact_left_divide_power(f, ThetaSymbol::d, static_cast<unsigned long>(k)))
          out.push_back(*h);
      break;
    case VerifyMode::euler:
      for (int w = -budget; w <= budget; ++w)
        if (auto h = exact_left_divide_theta_linear(f, z + Rat(w))) out.push_back(*h);
      break;
  }
  return out;
}

}  // namespace

WeylSatVerifyReport weyl_saturation_verify(const std::vector<WeylOp>& old_gens,
                                           const std::vector<WeylOp>& candidate_gens,
                                           const OreSetDesc& S, int search_budget,
                                           const Budget& budget) {
  VerifyMode mode = classify_verify_set(S);
  WeylSatVerifyReport report;
  report.gb_old = groebner_basis(old_gens, budget);
  report.gb_new = groebner_basis(candidate_gens, budget);

  report.old_in_new = true;
  for (const WeylOp& g : old_gens)
    if (!ideal_member(g, report.gb_new).member) report.old_in_new = false;

  std::vector<WeylOp> multipliers = multiplier_candidates(mode, S.z, search_budget);
  report.all_certified = true;
  for (const WeylOp& g : candidate_gens) {
    SaturationCertificate cert;
    cert.generator = g;
    for (const WeylOp& s : multipliers) {
      if (ideal_member(s * g, report.gb_old).member) {
        cert.multiplier = s;
        cert.verified = true;
        break;
      }
    }
    if (!cert.verified) report.all_certified = false;
    report.certificates.push_back(std::move(cert));
  }

  report.stable_up_to_budget = true;
  for (const WeylOp& f : report.gb_new.generators) {
    for (const WeylOp& h : peel_candidates(mode, S.z, search_budget, f)) {
      if (!ideal_member(h, report.gb_new).member) {
        report.stable_up_to_budget = false;
        report.new_member = h;
        break;
      }
    }
    if (!report.stable_up_to_budget) break;
  }
  return report;
}

}  // namespace ore
