#include "hallcl/qpoly.hpp"

#include <stdexcept>

#include "hallcl/errors.hpp"

namespace hallcl {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (r.get_den() == 0) throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

QPoly::QPoly(long c) {
  if (c != 0) c_[0] = Rational(c);
}

QPoly::QPoly(const Rational& c) {
  if (c != 0) c_[0] = c;
}

QPoly QPoly::monomial(int exp, Rational coeff) {
  QPoly p;
  if (coeff != 0) p.c_[exp] = std::move(coeff);
  return p;
}

bool QPoly::is_one() const {
  return c_.size() == 1 && c_.begin()->first == 0 && c_.begin()->second == 1;
}

int QPoly::min_exp() const {
  if (c_.empty()) throw std::logic_error("min_exp of zero polynomial");
  return c_.begin()->first;
}

int QPoly::max_exp() const {
  if (c_.empty()) throw std::logic_error("max_exp of zero polynomial");
  return c_.rbegin()->first;
}

Rational QPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rational(0) : it->second;
}

void QPoly::set_coeff(int exp, const Rational& v) {
  if (v == 0)
    c_.erase(exp);
  else
    c_[exp] = v;
}

QPoly QPoly::operator-() const {
  QPoly r;
  for (const auto& [e, v] : c_) r.c_[e] = -v;
  return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  for (const auto& [e, v] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = v;
    } else {
      it->second += v;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  for (const auto& [e, v] : o.c_) {
    auto it = c_.find(e);
    if (it == c_.end()) {
      c_[e] = -v;
    } else {
      it->second -= v;
      if (it->second == 0) c_.erase(it);
    }
  }
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  std::map<int, Rational> out;
  for (const auto& [ea, va] : c_)
    for (const auto& [eb, vb] : o.c_) {
      auto [it, inserted] = out.try_emplace(ea + eb, va * vb);
      if (!inserted) it->second += va * vb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == 0) ? out.erase(it) : std::next(it);
  c_ = std::move(out);
  return *this;
}

QPoly& QPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& [e, v] : c_) v *= s;
  return *this;
}

QPoly QPoly::shifted(int k) const {
  QPoly r;
  for (const auto& [e, v] : c_) r.c_[e + k] = v;
  return r;
}

QPoly QPoly::subst_q_inverse() const {
  QPoly r;
  for (const auto& [e, v] : c_) r.c_[-e] = v;
  return r;
}

QPoly QPoly::pow(int k) const {
  if (k < 0) throw std::invalid_argument("QPoly::pow: negative exponent");
  QPoly r(1), base(*this);
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Rational QPoly::eval(const Rational& q0) const {
  Rational acc(0);
  for (const auto& [e, v] : c_) {
    if (e >= 0) {
      Rational p(1);
      for (int i = 0; i < e; ++i) p *= q0;
      acc += v * p;
    } else {
      if (q0 == 0) throw PoleError("evaluation of negative power at q = 0");
      Rational p(1);
      for (int i = 0; i < -e; ++i) p *= q0;
      acc += v / p;
    }
  }
  return acc;
}

bool QPoly::has_integer_coeffs() const {
  for (const auto& [e, v] : c_)
    if (v.get_den() != 1) return false;
  return true;
}

void QPoly::divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem) {
  if (b.is_zero()) throw std::invalid_argument("QPoly::divmod: division by zero");
  if (!a.has_nonneg_exponents() || !b.has_nonneg_exponents())
    throw std::invalid_argument("QPoly::divmod: Laurent operand");
  quo = QPoly{};
  rem = a;
  const int db = b.max_exp();
  const Rational lb = b.coeff(db);
  while (!rem.is_zero() && rem.max_exp() >= db) {
    const int sh = rem.max_exp() - db;
    const Rational c = rem.coeff(rem.max_exp()) / lb;
    quo.set_coeff(sh, quo.coeff(sh) + c);
    rem -= b.shifted(sh) * c;
  }
}

QPoly QPoly::gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    QPoly q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational inv = Rational(1) / a.coeff(a.max_exp());
  return a * inv;
}

} // namespace hallcl
