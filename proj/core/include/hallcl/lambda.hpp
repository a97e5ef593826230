#pragma once

#include <map>
#include <vector>

#include "hallcl/element.hpp"

namespace hallcl {

/// Element of the symmetric-function ring written in the e_lambda(x) basis.
class LambdaElement {
public:
  LambdaElement() = default;
  static LambdaElement single(const Partition& lambda, QRat coeff = QRat(1));
  static LambdaElement one() { return single(Partition{}); }

  const std::map<Partition, QRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QRat coeff(const Partition& lambda) const;
  void add_term(const Partition& lambda, const QRat& c);

  LambdaElement operator-() const;
  LambdaElement& operator+=(const LambdaElement& o);
  LambdaElement& operator-=(const LambdaElement& o);
  LambdaElement& operator*=(const QRat& s);
  friend LambdaElement operator+(LambdaElement a, const LambdaElement& b) { return a += b; }
  friend LambdaElement operator-(LambdaElement a, const LambdaElement& b) { return a -= b; }
  friend LambdaElement operator*(LambdaElement a, const QRat& s) { return a *= s; }
  bool operator==(const LambdaElement& o) const { return terms_ == o.terms_; }

private:
  std::map<Partition, QRat> terms_;
};

/// Product in Lambda = C[e_1(x), e_2(x), ...]: e-monomials merge freely.
LambdaElement lambda_product(const LambdaElement& a, const LambdaElement& b);

/// The Hopf isomorphism psi: H_cl -> Lambda, [I_{(1^n)}] -> q^{-binom(n,2)}
/// e_n(x); concretely the e-basis coordinates of x relabelled into Lambda.
LambdaElement psi(const HallElement& x);

/// The Hall-Littlewood inner product on Lambda at t = q^{-1}: diagonal on the
/// P_lambda(x;t) basis with <P_lambda, P_lambda> = prod_i
/// (t;t)_{m_i(lambda)}^{-1}; satisfies <psi(a), psi(b)> = q^n <a, b> on
/// degree-n elements.
QRat lambda_pairing(const LambdaElement& a, const LambdaElement& b);

/// Symmetric polynomial in finitely many variables: exponent vector -> QRat.
class MultiPoly {
public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  int nvars() const { return nvars_; }
  const std::map<std::vector<int>, QRat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  QRat coeff(const std::vector<int>& exps) const;
  void add_term(const std::vector<int>& exps, const QRat& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator*=(const QRat& s);
  bool operator==(const MultiPoly& o) const;

  /// Product of two polynomials in the same variable count.
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  /// Image under x_i -> x_{sigma(i)} for a permutation sigma of 0..nvars-1.
  MultiPoly permuted(const std::vector<int>& sigma) const;
  /// Image under x_{nvars-1} -> 0, dropping to nvars-1 variables.
  MultiPoly restricted() const;

private:
  int nvars_;
  std::map<std::vector<int>, QRat> terms_;
};

/// The elementary symmetric polynomial e_r(x_1..x_N); zero for r > N.
MultiPoly elementary_poly(int r, int N);

/// Substitutes e_r -> e_r(x_1..x_N) in every monomial and expands.
MultiPoly expand_vars(const LambdaElement& a, int N);

} // namespace hallcl
