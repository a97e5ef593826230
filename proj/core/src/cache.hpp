#pragma once

#include <map>
#include <utility>

#include "hallcl/element.hpp"
#include "hallcl/partition.hpp"
#include "hallcl/qrat.hpp"

// Memoized structure data shared by the product, coproduct, antipode and the
// basis conversions. Everything is guarded by one recursive mutex: rows are
// built once and never mutated afterwards, so returned references stay valid
// (build-once, read-many).
namespace hallcl::detail {

/// Raw coordinate vector indexed by partitions (basis tag kept elsewhere).
using Terms = std::map<Partition, QRat>;
using TensorTerms = std::map<std::pair<Partition, Partition>, QRat>;

void add_to(Terms& acc, const Partition& key, const QRat& c);

/// Multiplies a coordinate vector (I basis) by [I_{(1^r)}] via the Pieri rule.
Terms pieri_mult(const Terms& x, int r);

/// X_kappa expanded in the I basis.
const Terms& x_row(const Partition& kappa);

/// [I_lambda] expanded in the X basis (triangular inversion of x_row).
const Terms& i_row(const Partition& lambda);

/// [I_mu] * [I_nu] in the I basis (arguments may be given in either order).
const Terms& pair_product(const Partition& mu, const Partition& nu);

/// Bilinear product of two I-coordinate vectors.
Terms mult_terms(const Terms& a, const Terms& b);

/// Green coproduct of [I_lambda] in I (x) I coordinates.
const TensorTerms& coproduct_row(const Partition& lambda);

/// Antipode of the X-basis monomial X_kappa, in I coordinates.
const Terms& antipode_x_row(const Partition& kappa);

/// e_n as a polynomial in the p_k (free p-coordinates), via the Newton-type
/// recursion; index by the partition of p-monomials.
const Terms& e_in_p(int n);

/// p_n as a polynomial in the e_k (free e-coordinates), same recursion.
const Terms& p_in_e(int n);

/// Product in a free polynomial basis: monomials merge as multisets.
Terms free_mult(const Terms& a, const Terms& b);

} // namespace hallcl::detail
