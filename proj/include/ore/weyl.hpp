#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ore/numbers.hpp"
#include "ore/unipoly.hpp"

namespace ore {

/// Exponent pair of a normal-form term x^a d^b of the first Weyl algebra.
struct XD {
  long x = 0;
  long d = 0;
  friend bool operator==(XD a, XD b) { return a.x == b.x && a.d == b.d; }
};

/// Term order used for storage and printing: d-degree descending, then
/// x-degree descending.
struct XDPrintOrder {
  bool operator()(XD a, XD b) const {
    if (a.d != b.d) return a.d > b.d;
    return a.x > b.x;
  }
};

/// Element of the first Weyl algebra over Q in the canonical normal form
/// sum c_ab x^a d^b (all d's commuted to the right of all x's via dx = xd+1).
/// Values are immutable in spirit: every operation returns a fresh element,
/// and zero coefficients are never stored.
class WeylOp {
public:
  using TermMap = std::map<XD, Rat, XDPrintOrder>;

  WeylOp() = default;

  static WeylOp zero() { return WeylOp(); }
  static WeylOp scalar(const Rat& c) { return monomial(0, 0, c); }
  static WeylOp one() { return scalar(Rat(1)); }
  static WeylOp x() { return monomial(1, 0, Rat(1)); }
  static WeylOp d() { return monomial(0, 1, Rat(1)); }
  static WeylOp euler() { return monomial(1, 1, Rat(1)); }  // theta = x*d
  static WeylOp monomial(long a, long b, const Rat& c) {
    WeylOp w;
    if (c != 0) w.t_[{a, b}] = c;
    return w;
  }
  /// theta + c as an element (x*d + c).
  static WeylOp theta_plus(const Rat& c);

  bool is_zero() const { return t_.empty(); }
  bool is_one() const;
  bool is_scalar() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first == XD{0, 0}); }
  const TermMap& terms() const { return t_; }
  Rat coeff(long a, long b) const {
    auto it = t_.find({a, b});
    return it == t_.end() ? Rat(0) : it->second;
  }
  std::size_t term_count() const { return t_.size(); }

  /// max(a+b) over stored terms; -1 for zero.
  long total_degree() const;
  /// max b over stored terms; -1 for zero.
  long d_degree() const;
  long x_degree() const;

  /// Z-grading with deg x = -1, deg d = +1, i.e. the term degree is b - a.
  /// Returns the single degree if homogeneous.
  std::optional<long> graded_degree() const;
  bool is_homogeneous() const { return is_zero() || graded_degree().has_value(); }

  WeylOp operator-() const;
  WeylOp operator+(const WeylOp& o) const;
  WeylOp operator-(const WeylOp& o) const;
  WeylOp operator*(const WeylOp& o) const;
  WeylOp operator*(const Rat& c) const;
  bool operator==(const WeylOp& o) const { return t_ == o.t_; }
  bool operator!=(const WeylOp& o) const { return !(*this == o); }

  WeylOp pow(unsigned long e) const;

  /// True when every term has d-exponent zero (polynomial in x alone).
  bool is_x_poly() const;
  /// True when every term has x-exponent zero.
  bool is_d_poly() const;
  /// Extract the commutative polynomial when pure in one symbol.
  UniPoly as_x_poly() const;  // variable name "x"
  UniPoly as_d_poly() const;  // variable name "d"
  static WeylOp from_x_poly(const UniPoly& p);
  static WeylOp from_d_poly(const UniPoly& p);

  /// Coefficient polynomial of d^b when the element is written as
  /// sum_b P_b(x) d^b (immediate from the normal form).
  UniPoly d_coefficient(long b) const;

  std::string str() const;

private:
  TermMap t_;
  void add_term(long a, long b, const Rat& c);
};

inline WeylOp operator*(const Rat& c, const WeylOp& w) { return w * c; }

}  // namespace ore
