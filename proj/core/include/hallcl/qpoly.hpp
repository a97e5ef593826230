#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace hallcl {

/// Arbitrary-precision rational scalar.
using Rational = mpq_class;

/// Builds a canonicalized rational from numerator/denominator.
Rational make_rational(long num, long den = 1);
/// Parses "a" or "a/b"; throws std::invalid_argument on malformed input.
Rational rational_from_string(const std::string& s);

/// Sparse Laurent polynomial in the single indeterminate q with Rational
/// coefficients. Exponents may be negative; zero coefficients are never
/// stored.
class QPoly {
public:
  QPoly() = default;
  QPoly(long c);                    // NOLINT(google-explicit-constructor)
  QPoly(const Rational& c);         // NOLINT(google-explicit-constructor)
  static QPoly monomial(int exp, Rational coeff = Rational(1));
  static QPoly q() { return monomial(1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const;
  /// Lowest / highest exponent with nonzero coefficient; requires nonzero.
  int min_exp() const;
  int max_exp() const;
  Rational coeff(int exp) const;
  const std::map<int, Rational>& terms() const { return c_; }

  void set_coeff(int exp, const Rational& v);

  QPoly operator-() const;
  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly& operator*=(const Rational& s);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend QPoly operator*(QPoly a, const Rational& s) { return a *= s; }
  friend QPoly operator*(const Rational& s, QPoly a) { return a *= s; }
  bool operator==(const QPoly& o) const { return c_ == o.c_; }

  /// Multiplication by q^k.
  QPoly shifted(int k) const;
  /// Substitution q -> q^{-1} (negates every exponent).
  QPoly subst_q_inverse() const;
  /// Nonnegative power.
  QPoly pow(int k) const;

  /// Exact evaluation; throws PoleError when q0 == 0 meets a negative
  /// exponent.
  Rational eval(const Rational& q0) const;

  bool has_integer_coeffs() const;
  bool has_nonneg_exponents() const { return is_zero() || min_exp() >= 0; }

  /// Polynomial division with remainder over Q[q]. Requires nonnegative
  /// exponents on both operands and b != 0.
  static void divmod(const QPoly& a, const QPoly& b, QPoly& quo, QPoly& rem);
  /// Monic gcd over Q[q]; gcd(0,0) = 0. Requires nonnegative exponents.
  static QPoly gcd(QPoly a, QPoly b);

private:
  std::map<int, Rational> c_;
};

} // namespace hallcl
