#pragma once

#include <functional>
#include <vector>

#include "hallcl/element.hpp"

namespace hallcl {

/// A degree-graded linear operator on H_cl. Application takes and returns
/// I-basis elements; a homogeneous input of degree d maps into degree
/// d + degree_shift.
struct GradedOperator {
  int degree_shift = 0;
  std::function<HallElement(const HallElement&)> apply;

  HallElement operator()(const HallElement& x) const { return apply(x); }
};

/// Multiplication by p_n; raises degree by n. Requires n >= 1.
GradedOperator mult_p(int n);

/// Formal partial derivative with respect to p_n on the p-basis polynomial
/// model (p_lambda -> m_n(lambda) p_{lambda minus one part n}); lowers degree
/// by n. Requires n >= 1.
GradedOperator del_p(int n);

/// Heisenberg generator acting on H_cl: b_{-n} = mult_p(n), b_n for n > 0 is
/// (n/(q^n-1)) del_p(n), b_0 is the identity.
GradedOperator boson(int n);

/// Exact matrix with partition-labelled rows and columns.
struct RatMatrix {
  std::vector<Partition> rows, cols;
  std::vector<std::vector<QRat>> entries; // entries[r][c]

  bool is_scalar_identity(const QRat& s) const;
  bool is_zero() const;
};

/// Matrix of [b_m, b_n] on the I-basis truncation spanned by all partitions
/// of degree <= max_degree (columns, in partitions_of order, degree-major);
/// rows run over the reachable output degrees. Equals
/// delta_{m+n,0} (m/(q^m-1)) identity.
RatMatrix commutator_matrix(int m, int n, int max_degree);

/// gamma^{alpha,beta}_{mu,nu} = sum_lambda e^mu_{lambda,alpha}
/// e^nu_{beta,lambda} / (a_lambda a_mu a_nu) with e^l_{m,n} = g^l_{m,n} a_m
/// a_n; the coefficient of the derived-Hall straightening relation.
QRat gamma_coeff(const Partition& alpha, const Partition& beta, const Partition& mu,
                 const Partition& nu);

/// Zero mode of D(z) = exp(-sum (q^n-1)/n p_n z^n) * exp(-sum del_{p_n} z^{-n});
/// has every P_lambda as an eigenvector with eigenvalue q^{len(lambda)}.
HallElement vertex_D0(const HallElement& x);

/// Mode B_m of Jing's operator B(z) = exp(+sum (q^n-1)/n p_n z^n) *
/// exp(-sum del_{p_n} z^{-n}).
HallElement vertex_B(int m, const HallElement& x);

/// (B_{lambda_1} * ... * B_{lambda_l})(1); equals Q_lambda in the I basis.
HallElement jing_Q(const Partition& lambda);

} // namespace hallcl
