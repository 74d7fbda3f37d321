#include "ore/weyl.hpp"

#include <algorithm>

namespace ore {

WeylOp WeylOp::theta_plus(const Rat& c) {
  WeylOp w = euler();
  if (c != 0) w.t_[{0, 0}] = c;
  return w;
}

bool WeylOp::is_one() const {
  return t_.size() == 1 && t_.begin()->first == XD{0, 0} && t_.begin()->second == 1;
}

long WeylOp::total_degree() const {
  long m = -1;
  for (const auto& [e, c] : t_) m = std::max(m, e.x + e.d);
  return m;
}

long WeylOp::d_degree() const {
  long m = -1;
  for (const auto& [e, c] : t_) m = std::max(m, e.d);
  return m;
}

long WeylOp::x_degree() const {
  long m = -1;
  for (const auto& [e, c] : t_) m = std::max(m, e.x);
  return m;
}

std::optional<long> WeylOp::graded_degree() const {
  if (t_.empty()) return std::nullopt;
  long k = t_.begin()->first.d - t_.begin()->first.x;
  for (const auto& [e, c] : t_)
    if (e.d - e.x != k) return std::nullopt;
  return k;
}

void WeylOp::add_term(long a, long b, const Rat& c) {
  if (c == 0) return;
  XD key{a, b};
  auto it = t_.find(key);
  if (it == t_.end()) {
    t_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second == 0) t_.erase(it);
  }
}

WeylOp WeylOp::operator-() const {
  WeylOp r;
  for (const auto& [e, c] : t_) r.t_.emplace(e, -c);
  return r;
}

WeylOp WeylOp::operator+(const WeylOp& o) const {
  WeylOp r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e.x, e.d, c);
  return r;
}

WeylOp WeylOp::operator-(const WeylOp& o) const {
  WeylOp r = *this;
  for (const auto& [e, c] : o.t_) r.add_term(e.x, e.d, -c);
  return r;
}

WeylOp WeylOp::operator*(const WeylOp& o) const {
  // Term product via d^b x^a = sum_j C(b,j) * a(a-1)...(a-j+1) * x^(a-j) d^(b-j).
  WeylOp r;
  for (const auto& [e1, c1] : t_) {
    for (const auto& [e2, c2] : o.t_) {
      Rat cc = c1 * c2;
      long jmax = std::min(e1.d, e2.x);
      for (long j = 0; j <= jmax; ++j) {
        Int coef = binomial(static_cast<unsigned long>(e1.d), static_cast<unsigned long>(j)) *
                   falling_factorial(e2.x, static_cast<unsigned long>(j));
        r.add_term(e1.x + e2.x - j, e1.d + e2.d - j, cc * Rat(coef));
      }
    }
  }
  return r;
}

WeylOp WeylOp::operator*(const Rat& c) const {
  WeylOp r;
  if (c == 0) return r;
  for (const auto& [e, cc] : t_) r.t_.emplace(e, cc * c);
  return r;
}

WeylOp WeylOp::pow(unsigned long e) const {
  WeylOp r = one();
  WeylOp b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool WeylOp::is_x_poly() const {
  for (const auto& [e, c] : t_)
    if (e.d != 0) return false;
  return true;
}

bool WeylOp::is_d_poly() const {
  for (const auto& [e, c] : t_)
    if (e.x != 0) return false;
  return true;
}

UniPoly WeylOp::as_x_poly() const {
  if (!is_x_poly()) fail(Errc::unsupported, "element is not a polynomial in x");
  std::vector<Rat> c(static_cast<std::size_t>(std::max<long>(x_degree() + 1, 0)), Rat(0));
  for (const auto& [e, cc] : t_) c[static_cast<std::size_t>(e.x)] = cc;
  return UniPoly("x", std::move(c));
}

UniPoly WeylOp::as_d_poly() const {
  if (!is_d_poly()) fail(Errc::unsupported, "element is not a polynomial in d");
  std::vector<Rat> c(static_cast<std::size_t>(std::max<long>(d_degree() + 1, 0)), Rat(0));
  for (const auto& [e, cc] : t_) c[static_cast<std::size_t>(e.d)] = cc;
  return UniPoly("d", std::move(c));
}

WeylOp WeylOp::from_x_poly(const UniPoly& p) {
  WeylOp w;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    if (p.coeffs()[k] != 0) w.t_[{static_cast<long>(k), 0}] = p.coeffs()[k];
  return w;
}

WeylOp WeylOp::from_d_poly(const UniPoly& p) {
  WeylOp w;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k)
    if (p.coeffs()[k] != 0) w.t_[{0, static_cast<long>(k)}] = p.coeffs()[k];
  return w;
}

UniPoly WeylOp::d_coefficient(long b) const {
  std::vector<Rat> c;
  for (const auto& [e, cc] : t_) {
    if (e.d != b) continue;
    if (static_cast<std::size_t>(e.x) >= c.size()) c.resize(static_cast<std::size_t>(e.x) + 1, Rat(0));
    c[static_cast<std::size_t>(e.x)] = cc;
  }
  return UniPoly("x", std::move(c));
}

std::string WeylOp::str() const {
  if (t_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : t_) {
    bool first = out.empty();
    bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    if (e.x > 0) {
      mono = "x";
      if (e.x > 1) mono += "^" + std::to_string(e.x);
    }
    if (e.d > 0) {
      if (!mono.empty()) mono += "*";
      mono += "d";
      if (e.d > 1) mono += "^" + std::to_string(e.d);
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
