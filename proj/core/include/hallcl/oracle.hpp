#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "hallcl/partition.hpp"

namespace hallcl {

/// A concrete nilpotent module over a small prime field: the vector space
/// F_{q0}^dim together with a nilpotent operator in row-major storage.
struct FqModule {
  int q0 = 2;
  int dim = 0;
  std::vector<std::uint8_t> action; // dim x dim, action[i*dim+j]
};

/// A subspace in canonical reduced-row-echelon form (one representative per
/// subspace).
struct Subspace {
  int n = 0;
  std::vector<std::vector<std::uint8_t>> rows;

  int dim() const { return static_cast<int>(rows.size()); }
};

/// The block-Jordan module I_lambda over F_{q0}. Enforced bounds:
/// |lambda| <= 6 and q0 a small prime.
FqModule build_module(const Partition& lambda, int q0);

/// Every subspace invariant under the action, via canonical echelon forms.
/// Bounds: dim <= 6 with q0 = 2, dim <= 5 with q0 = 3.
std::vector<Subspace> invariant_subspaces(const FqModule& m);

/// Isomorphism type of the whole module, recovered from kernel dimensions of
/// the powers of the action.
Partition module_type(const FqModule& m);

/// Type of an invariant subspace as a module (throws Error when the subspace
/// is not invariant).
Partition submodule_type(const FqModule& m, const Subspace& s);

/// Type of the quotient module m / s.
Partition quotient_type(const FqModule& m, const Subspace& s);

/// Tally of (quotient type, subspace type) over all invariant subspaces of
/// I_lambda; count_g(lambda, mu, nu) is the entry at (mu, nu).
std::map<std::pair<Partition, Partition>, long> count_g_table(const Partition& lambda, int q0);

/// Number of invariant subspaces of I_lambda of type nu with quotient type mu.
long count_g(const Partition& lambda, const Partition& mu, const Partition& nu, int q0);

/// |Aut(I_lambda)| over F_{q0} by enumerating the commutant of J_lambda.
/// Bound: commutant dimension sum_{i,j} min(l_i, l_j) <= 16 at q0 = 2,
/// <= 10 at q0 = 3.
long count_aut(const Partition& lambda, int q0);

} // namespace hallcl
