#include "hallcl/qrat.hpp"

#include <stdexcept>

#include "hallcl/errors.hpp"

namespace hallcl {

QRat::QRat(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("QRat: zero denominator");
  normalize();
}

void QRat::normalize() {
  if (num_.is_zero()) {
    den_ = QPoly(1);
    return;
  }
  // Strip pure q-powers so both parts are polynomials with nonzero constant
  // term; the net power stays with the numerator.
  const int a = num_.min_exp();
  const int b = den_.min_exp();
  QPoly n = num_.shifted(-a);
  QPoly d = den_.shifted(-b);
  QPoly g = QPoly::gcd(n, d);
  if (!g.is_one()) {
    QPoly quo, rem;
    QPoly::divmod(n, g, quo, rem);
    n = quo;
    QPoly::divmod(d, g, quo, rem);
    d = quo;
  }
  const Rational lead = d.coeff(d.max_exp());
  if (lead != 1) {
    const Rational inv = Rational(1) / lead;
    n *= inv;
    d *= inv;
  }
  num_ = n.shifted(a - b);
  den_ = std::move(d);
}

QPoly QRat::as_polynomial() const {
  if (!den_.is_one()) throw Error("QRat::as_polynomial: nontrivial denominator");
  return num_;
}

QRat QRat::operator-() const {
  QRat r(*this);
  r.num_ = -r.num_;
  return r;
}

QRat& QRat::operator+=(const QRat& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QRat& QRat::operator-=(const QRat& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

QRat& QRat::operator*=(const QRat& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

QRat& QRat::operator/=(const QRat& o) {
  if (o.is_zero()) throw std::invalid_argument("QRat: division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  normalize();
  return *this;
}

QRat QRat::inverse() const {
  if (is_zero()) throw std::invalid_argument("QRat: inverse of zero");
  return QRat(den_, num_);
}

QRat QRat::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  QRat r(1), base(*this);
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

Rational QRat::eval(const Rational& q0) const {
  const Rational d = den_.eval(q0);
  if (d == 0) throw PoleError("QRat::eval: pole at the evaluation point");
  return num_.eval(q0) / d;
}

QRat poch(const QRat& x, int n) {
  QRat r(1);
  for (int i = 1; i <= n; ++i) r *= QRat(1) - x * QRat::q_pow(i - 1);
  return r;
}

QRat poch_self(const QRat& x, int n) {
  QRat r(1), p(1);
  for (int i = 1; i <= n; ++i) {
    p *= x;
    r *= QRat(1) - p;
  }
  return r;
}

QPoly qbinomial(int n, int r) {
  if (n < 0) throw std::invalid_argument("qbinomial: n < 0");
  if (r < 0 || r > n) return QPoly{};
  // [n r]_q = [n-1 r-1]_q + q^r [n-1 r]_q, computed row by row.
  std::vector<QPoly> row = {QPoly(1)};
  for (int i = 1; i <= n; ++i) {
    std::vector<QPoly> next(static_cast<std::size_t>(i) + 1);
    next[0] = QPoly(1);
    next[static_cast<std::size_t>(i)] = QPoly(1);
    for (int j = 1; j < i; ++j)
      next[static_cast<std::size_t>(j)] =
          row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)].shifted(j);
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(r)];
}

QRat qmultinomial(int l, const std::vector<int>& ms, const QRat& base) {
  if (l < 0) throw std::invalid_argument("qmultinomial: l < 0");
  QRat den(1);
  for (int m : ms) {
    if (m < 0) throw std::invalid_argument("qmultinomial: negative multiplicity");
    const QRat f = poch_self(base, m);
    if (f.is_zero()) throw Error("qmultinomial: (t;t)_m vanishes at the given base");
    den *= f;
  }
  return poch_self(base, l) / den;
}

Rational eval_at(const QRat& f, const Rational& q0) { return f.eval(q0); }

} // namespace hallcl
