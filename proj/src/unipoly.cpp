#include "ore/unipoly.hpp"

#include <algorithm>

namespace ore {

void UniPoly::check_var(const UniPoly& o) const {
  if (var_ != o.var_ && !is_constant() && !o.is_constant())
    fail(Errc::ring_mismatch, "mixed polynomial variables: " + var_ + " vs " + o.var_);
}

UniPoly UniPoly::operator-() const {
  UniPoly r(var_);
  r.c_.reserve(c_.size());
  for (const Rat& a : c_) r.c_.push_back(-a);
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  check_var(o);
  UniPoly r(is_constant() ? o.var_ : var_);
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  check_var(o);
  UniPoly r(is_constant() ? o.var_ : var_);
  if (is_zero() || o.is_zero()) return r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

UniPoly UniPoly::operator*(const Rat& c) const {
  UniPoly r(var_);
  if (c == 0) return r;
  r.c_.reserve(c_.size());
  for (const Rat& a : c_) r.c_.push_back(a * c);
  return r;
}

UniPoly UniPoly::pow(unsigned long e) const {
  UniPoly r = constant(var_, Rat(1));
  UniPoly b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
  if (d.is_zero()) fail(Errc::zero_input, "polynomial division by zero");
  check_var(d);
  UniPoly q(var_), r = *this;
  if (degree() >= d.degree()) q.c_.assign(static_cast<std::size_t>(degree() - d.degree()) + 1, Rat(0));
  const Rat lead = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
    Rat factor = r.leading() / lead;
    q.c_[shift] = factor;
    // r -= factor * x^shift * d
    for (std::size_t i = 0; i < d.c_.size(); ++i) r.c_[shift + i] -= factor * d.c_[i];
    r.trim();
  }
  q.trim();
  return {q, r};
}

bool UniPoly::exact_div(const UniPoly& d, UniPoly& q) const {
  auto [qq, rr] = divmod(d);
  if (!rr.is_zero()) return false;
  q = qq;
  return true;
}

Rat UniPoly::eval(const Rat& point) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * point + *it;
  return acc;
}

UniPoly UniPoly::shift_arg(const Rat& delta) const {
  // Horner in (var + delta).
  UniPoly acc(var_);
  UniPoly lin(var_, {delta, Rat(1)});
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * lin + constant(var_, *it);
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rat(1) / leading());
}

UniPoly UniPoly::derivative() const {
  UniPoly r(var_);
  if (c_.size() <= 1) return r;
  r.c_.resize(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r.c_[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return r;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    Rat c = coeff(static_cast<std::size_t>(k));
    if (c == 0) continue;
    bool first = out.empty();
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    if (k > 0) {
      mono = var_;
      if (k > 1) mono += "^" + std::to_string(k);
    }
    if (mono.empty())
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + "*" + mono;
  }
  return out;
}

}  // namespace ore
