#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ore/expr.hpp"
#include "ore/graded.hpp"
#include "ore/groebner.hpp"
#include "oracles.hpp"

using namespace ore;

namespace {
const RingId W = RingId::weyl();
WeylOp ev(const std::string& s) { return ring_eval(s, W).as_weyl(); }
}  // namespace

TEST_CASE("grade_decompose") {
  auto parts = grade_decompose(ev("x + d"));
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].degree == -1);
  CHECK(parts[0].component == WeylOp::x());
  CHECK(parts[1].degree == 1);
  CHECK(parts[1].component == WeylOp::d());

  auto theta = grade_decompose(ev("theta"));
  REQUIRE(theta.size() == 1);
  CHECK(theta[0].degree == 0);

  auto big = grade_decompose(ev("d*(x*d+3)*(3*x*d+1)*(x+d)"));
  REQUIRE(big.size() == 2);
  CHECK(big[0].degree == 0);
  CHECK(big[1].degree == 2);
  CHECK(big[0].component + big[1].component == ev("d*(x*d+3)*(3*x*d+1)*(x+d)"));

  CHECK_THROWS_AS(grade_decompose(WeylOp::zero()), Error);

  oracle::Rng rng(7);
  for (int i = 0; i < 50; ++i) {
    WeylOp r = rng.nonzero_weyl(5, 4);
    WeylOp sum;
    long prev = -100;
    for (const auto& p : grade_decompose(r)) {
      CHECK(p.degree > prev);
      prev = p.degree;
      CHECK(p.component.graded_degree() == p.degree);
      sum = sum + p.component;
    }
    CHECK(sum == r);
  }
}

TEST_CASE("theta_form normal forms") {
  ThetaForm f = theta_form(ev("x^2*d^2"));
  CHECK(f.coeff == 1);
  CHECK(f.tpoly == parse_element("theta^2 - theta", RingId::rational_poly("theta")).as_poly());
  CHECK(f.y == ThetaSymbol::none);
  CHECK(f.n == 0);

  ThetaForm g = theta_form(ev("x*d^2"));
  CHECK(g.tpoly == UniPoly::variable("theta"));
  CHECK(g.y == ThetaSymbol::d);
  CHECK(g.n == 1);

  ThetaForm h = theta_form(WeylOp::x());
  CHECK(h.coeff == 1);
  CHECK(h.tpoly.is_one());
  CHECK(h.y == ThetaSymbol::x);
  CHECK(h.n == 1);

  CHECK_THROWS_AS(theta_form(ev("x + d")), Error);
}

TEST_CASE("theta_form round trips on all homogeneous elements of degree <= 8") {
  // components along one graded stripe, random theta-polynomial contents
  oracle::Rng rng(13);
  for (long k = -8; k <= 8; ++k) {
    for (int trial = 0; trial < 20; ++trial) {
      WeylOp h;
      for (long a = 0; a + std::abs(k) <= 8; ++a) {
        long xe = k >= 0 ? a : a - k;
        long de = k >= 0 ? a + k : a;
        h = h + WeylOp::monomial(xe, de, rng.rat(3));
      }
      if (h.is_zero()) continue;
      ThetaForm f = theta_form(h);
      CHECK(from_theta_form(f) == h);
      CHECK((f.n == 0) == (f.y == ThetaSymbol::none));
      CHECK(f.tpoly.leading() == 1);
    }
  }
}

TEST_CASE("fourier transform") {
  CHECK(fourier(WeylOp::x()) == -WeylOp::d());
  CHECK(fourier(WeylOp::d()) == WeylOp::x());
  CHECK(fourier(ev("theta")) == ev("-theta - 1"));
  oracle::Rng rng(19);
  for (int i = 0; i < 200; ++i) {
    WeylOp a = rng.weyl(4, 3), b = rng.weyl(4, 3);
    CHECK(fourier(a * b) == fourier(a) * fourier(b));
    CHECK(fourier(a + b) == fourier(a) + fourier(b));
    CHECK(fourier_inv(fourier(a)) == a);
    CHECK(fourier(fourier_inv(a)) == a);
  }
}

TEST_CASE("euler commutation identities") {
  // (theta+z)^m x^n = x^n (theta+z+n)^m and d^n (theta+z)^m = (theta+z+n)^m d^n
  for (const Rat& z : {Rat(0), Rat(1), Rat(-2), make_rat(1, 2)}) {
    for (long m = 0; m <= 5; ++m)
      for (long n = 0; n <= 5; ++n) {
        WeylOp tz = WeylOp::theta_plus(z);
        WeylOp tzn = WeylOp::theta_plus(z + Rat(n));
        CHECK(tz.pow(m) * WeylOp::x().pow(n) == WeylOp::x().pow(n) * tzn.pow(m));
        CHECK(WeylOp::d().pow(n) * tz.pow(m) == tzn.pow(m) * WeylOp::d().pow(n));
      }
  }
}

TEST_CASE("homogeneous elements intertwine theta shifts") {
  // (theta+z+k) h = h (theta+z) for homogeneous h of degree k
  oracle::Rng rng(29);
  for (int i = 0; i < 100; ++i) {
    long k = rng.pick(-4, 4);
    WeylOp h;
    for (long a = 0; a + std::labs(k) <= 6; ++a) {
      long xe = k >= 0 ? a : a - k;
      long de = k >= 0 ? a + k : a;
      h = h + WeylOp::monomial(xe, de, rng.rat(3));
    }
    if (h.is_zero()) continue;
    Rat z = rng.rat(2);
    CHECK(WeylOp::theta_plus(z + Rat(k)) * h == h * WeylOp::theta_plus(z));
  }
}

TEST_CASE("ore_solve_euler") {
  auto [s1, r1] = ore_solve_euler(Rat(0), WeylOp::x());
  CHECK(s1 == ev("theta - 1"));
  CHECK(r1 == WeylOp::x());

  auto [s2, r2] = ore_solve_euler(Rat(0), ev("theta + 5"));
  CHECK(s2 == ev("theta"));
  CHECK(r2 == ev("theta + 5"));

  auto [s3, r3] = ore_solve_euler(Rat(0), ev("x + d"));
  CHECK(s3 == ev("(theta - 1)*(theta + 1)"));
  CHECK(r3 == ev("(theta + 1)*x + (theta - 1)*d"));

  CHECK_THROWS_AS(ore_solve_euler(Rat(0), WeylOp::zero()), Error);

  oracle::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    WeylOp r = rng.nonzero_weyl(4, 3);
    Rat z = rng.rat(2);
    auto [s, t] = ore_solve_euler(z, r);
    CHECK(s * r == t * WeylOp::theta_plus(z));
  }
}

TEST_CASE("inhomogeneous identity family") {
  for (int i = -3; i <= 3; ++i) {
    std::string si = std::to_string(i);
    WeylOp lhs = ev("(x*d + (" + si + ") + 1)*(x*d^2 - x*d + ((" + si + ") + 2)*d - (" + si + "))");
    WeylOp rhs = ev("(d - 1)*(x*d + (" + si + "))*(x*d + (" + si + ") + 1)");
    CHECK(lhs == rhs);
  }
}

TEST_CASE("groebner basis collapses {x, d} to the whole ring") {
  GroebnerBasis one = groebner_basis({WeylOp::x(), WeylOp::d()});
  REQUIRE(one.generators.size() == 1);
  CHECK(one.generators[0].is_one());  // 1 = d*x - x*d
}

TEST_CASE("groebner basis principal and membership") {
  WeylOp g = ev("d*(x*d+3)*(3*x*d+1)*(x+d)");
  CHECK(leading_exponent(g) == XD{2, 4});
  CHECK(leading_coefficient(g) == 3);

  GroebnerBasis gb = groebner_basis({g});
  REQUIRE(gb.generators.size() == 1);
  CHECK(leading_exponent(gb.generators[0]) == XD{2, 4});
  CHECK(leading_coefficient(gb.generators[0]) == 1);

  // principal input stays principal and monic
  GroebnerBasis single = groebner_basis({ev("2*x*d + 2")});
  REQUIRE(single.generators.size() == 1);
  CHECK(single.generators[0] == ev("x*d + 1"));

  // members of the generator set are members of the ideal
  CHECK(ideal_member(g, gb).member);
  CHECK(ideal_member(ev("x*d"), groebner_basis({WeylOp::x()})).member == false);

  // random left combinations reduce to zero
  oracle::Rng rng(37);
  std::vector<WeylOp> gens{ev("x*d + 1"), ev("x^2*d - x")};
  GroebnerBasis basis = groebner_basis(gens);
  for (int i = 0; i < 100; ++i) {
    WeylOp combo;
    for (const WeylOp& gen : gens) combo = combo + rng.weyl(3, 2) * gen;
    auto m = ideal_member(combo, basis);
    CHECK(m.member);
    CHECK(m.normal_form.is_zero());
  }
  // and a non-member has a nonzero normal form
  auto nm = ideal_member(WeylOp::x(), groebner_basis({ev("x^2")}));
  CHECK(!nm.member);
  CHECK(nm.normal_form == WeylOp::x());
}

TEST_CASE("groebner pair budget is enforced") {
  Budget tiny;
  tiny.gb_pair_limit = 0;
  CHECK_THROWS_AS(groebner_basis({ev("x^2 + d"), ev("x*d + 1"), ev("d^2 - x")}, tiny), Error);
}
