#pragma once

#include <utility>
#include <vector>

#include "hallcl/element.hpp"
#include "hallcl/hall.hpp"

namespace hallcl {

/// X_lambda = product over columns k of [I_{(1^{lambda'_k})}], expanded in the
/// I basis; unitriangular with respect to the partial order succeq.
HallElement x_element(const Partition& lambda);

/// Rewrites x in the requested basis. Routes through a fixed chain:
/// I <-> X by unitriangular (back-)substitution, X <-> e by the relabeling
/// X_l = q^{-n(l)} e_{l'}, e <-> p by the Newton-type recursion, and P, Q
/// diagonally over I.
HallElement convert(const HallElement& x, Basis to);

/// p_n = sum_{|l|=n} (q;q)_{len(l)-1} [I_l], in the I basis. Requires n >= 1.
HallElement p_element(int n);

/// e_n = q^{binom(n,2)} [I_{(1^n)}], in the I basis. Requires n >= 0.
HallElement e_element(int n);

/// Checks sum_{r=0}^{n-1} (-1)^r p_{n-r} * e_r = (-1)^{n-1} n e_n exactly.
bool newton_identity_check(int n);

/// Left: sum_{|l|=d} P_l (x) Q_l. Right: the bidegree-(d,d) part of
/// exp(sum_n (q^n-1)/n p_n (x) p_n). Both in I (x) I coordinates.
std::pair<TensorElement, TensorElement> cauchy_kernel_sides(int d);

/// Coefficients of z^0..z^N of exp(sum_n (q^n-1)/n p_n z^n), in the I basis;
/// entry n equals Q_{(n)}.
std::vector<HallElement> q_onecolumn_series(int N);

/// Coefficient of z^lambda in Q(z_1)*...*Q(z_l) prod_{i<j} F(z_j/z_i) with
/// F(z) = (1-qz)/(1-z), in the I basis; requires len(lambda) >= 1. Equals
/// Q_lambda.
HallElement q_multivariate_coeff(const Partition& lambda);

} // namespace hallcl
