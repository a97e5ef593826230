#pragma once

#include "hallcl/element.hpp"

namespace hallcl {

/// |Aut(I_lambda)| = q^{|l|+2n(l)} prod_i (q^{-1};q^{-1})_{m_i(l)}.
QRat aut_order(const Partition& lambda);

/// Structure constant g^lambda_{mu,(1^p)} of the Pieri rule: the number of
/// submodules of I_lambda isomorphic to I_{(1^p)} with quotient I_mu, as a
/// polynomial in the field size. Zero unless lambda - mu is a vertical strip
/// of size p.
QPoly pieri_coeff(const Partition& lambda, const Partition& mu, int p);

/// Ringel product. Both factors must carry the I tag (throws
/// BasisMismatchError otherwise); bilinear, graded, commutative.
HallElement product(const HallElement& x, const HallElement& y);

/// Coefficient of [I_lambda] in [I_mu] * [I_nu]; a polynomial in q.
QPoly hall_polynomial(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Green coproduct on the I basis (throws BasisMismatchError otherwise).
TensorElement coproduct(const HallElement& x);

/// Coefficient of the empty partition after conversion to the I basis.
QRat counit(const HallElement& x);

/// Antipode on the I basis: the closed column formula extended as an algebra
/// map through the X factorization.
HallElement antipode(const HallElement& x);

/// Green's Hopf pairing <[I_l],[I_m]> = delta_{l,m} / a_l; both arguments are
/// converted to the I basis first.
QRat pairing(const HallElement& x, const HallElement& y);

/// Componentwise product on tensors, (a (x) b) * (c (x) d) = ac (x) bd
/// (the Euler-form twist is identically 1 for the Jordan quiver). Terms whose
/// left or right degree would exceed a bound are dropped when the bound is
/// nonnegative.
TensorElement tensor_product(const TensorElement& s, const TensorElement& t,
                             int left_degree_bound = -1, int right_degree_bound = -1);

} // namespace hallcl
