#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ore/numbers.hpp"

namespace ore {

/// Dense univariate polynomial over Q.  Coefficients are stored from degree 0
/// upward; the leading coefficient is nonzero unless the polynomial is zero
/// (empty coefficient list).  The variable name travels with the value so the
/// same type serves K[x] elements and theta-polynomials.
class UniPoly {
public:
  UniPoly() : var_("x") {}
  explicit UniPoly(std::string var) : var_(std::move(var)) {}
  UniPoly(std::string var, std::vector<Rat> coeffs) : var_(std::move(var)), c_(std::move(coeffs)) {
    trim();
  }

  static UniPoly constant(const std::string& var, const Rat& c) {
    UniPoly p(var);
    if (c != 0) p.c_.push_back(c);
    return p;
  }
  static UniPoly monomial(const std::string& var, std::size_t deg, const Rat& c) {
    UniPoly p(var);
    if (c != 0) {
      p.c_.assign(deg + 1, Rat(0));
      p.c_[deg] = c;
    }
    return p;
  }
  static UniPoly variable(const std::string& var) { return monomial(var, 1, Rat(1)); }

  const std::string& var() const { return var_; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Rat coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rat(0); }
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }
  Rat constant_term() const { return coeff(0); }

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly operator*(const Rat& c) const;
  bool operator==(const UniPoly& o) const { return var_ == o.var_ && c_ == o.c_; }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  UniPoly pow(unsigned long e) const;

  /// Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
  /// Exact quotient, or empty if the remainder is nonzero.
  bool exact_div(const UniPoly& d, UniPoly& q) const;
  bool divides_into(const UniPoly& n) const { UniPoly q; return n.exact_div(*this, q); }

  Rat eval(const Rat& point) const;
  /// p(var + delta)
  UniPoly shift_arg(const Rat& delta) const;
  UniPoly monic() const;
  UniPoly derivative() const;
  UniPoly with_var(const std::string& var) const { return UniPoly(var, c_); }

  /// Monic gcd.
  static UniPoly gcd(UniPoly a, UniPoly b);

  /// Canonical printing in the element grammar ("x^2 - 1/2*x + 3").
  std::string str() const;

private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  void check_var(const UniPoly& o) const;

  std::string var_;
  std::vector<Rat> c_;
};

inline UniPoly operator*(const Rat& c, const UniPoly& p) { return p * c; }

}  // namespace ore
