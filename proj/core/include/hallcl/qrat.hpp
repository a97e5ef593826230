#pragma once

#include <vector>

#include "hallcl/qpoly.hpp"

namespace hallcl {

/// Exact rational function in q over the rationals, the coefficient field of
/// everything downstream. Canonical form: the denominator is a monic
/// polynomial with nonzero constant term and is coprime to the polynomial
/// part of the numerator; any pure power of q is carried by the numerator,
/// which may therefore be a Laurent polynomial. Equality is coefficient-wise
/// on that form.
class QRat {
public:
  QRat() : num_(), den_(1) {}
  QRat(long c) : num_(c), den_(1) {}                    // NOLINT
  QRat(const Rational& c) : num_(c), den_(1) {}         // NOLINT
  QRat(const QPoly& p) : num_(p), den_(1) {}            // NOLINT
  QRat(QPoly num, QPoly den);

  static QRat q() { return QRat(QPoly::q()); }
  static QRat q_pow(int k) { return QRat(QPoly::monomial(k)); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }

  /// The numerator, provided the denominator is 1; throws otherwise.
  QPoly as_polynomial() const;

  QRat operator-() const;
  QRat& operator+=(const QRat& o);
  QRat& operator-=(const QRat& o);
  QRat& operator*=(const QRat& o);
  QRat& operator/=(const QRat& o);
  friend QRat operator+(QRat a, const QRat& b) { return a += b; }
  friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
  friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
  friend QRat operator/(QRat a, const QRat& b) { return a /= b; }
  bool operator==(const QRat& o) const { return num_ == o.num_ && den_ == o.den_; }

  QRat inverse() const;
  QRat pow(int k) const;

  /// Exact evaluation at q = q0; throws PoleError when the denominator
  /// vanishes there (or a negative power meets q0 = 0).
  Rational eval(const Rational& q0) const;

private:
  void normalize();

  QPoly num_, den_;
};

/// q-Pochhammer (x;q)_n = prod_{i=1..n} (1 - x q^{i-1}); equals 1 for n <= 0.
QRat poch(const QRat& x, int n);

/// (x;x)_n for an arbitrary base x, i.e. prod_{i=1..n} (1 - x^i).
QRat poch_self(const QRat& x, int n);

/// Gaussian binomial coefficient as a polynomial in q; zero when r < 0 or
/// r > n. Requires n >= 0.
QPoly qbinomial(int n, int r);

/// t-multinomial (t;t)_l / prod_i (t;t)_{m_i} with base substituted for t.
/// Throws Error when a denominator factor vanishes at the base.
QRat qmultinomial(int l, const std::vector<int>& ms, const QRat& base);

/// Exact evaluation of f at q = q0 (pole error on vanishing denominator).
Rational eval_at(const QRat& f, const Rational& q0);

} // namespace hallcl
