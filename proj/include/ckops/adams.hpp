#pragma once

#include "ckops/classes.hpp"

namespace ck {

// Adams operation psi^k.  psi^1 = id, psi^{-1} is induced by duality on the
// cell basis; for |k| >= 2 the class must lie in the subring generated by
// line bundles (throws unsupported_domain otherwise).
KClass adams_psi(long k, const KClass& x);

// On split classes psi^k is literal: O(a) -> O(ka).
SplitKClass adams_psi_split(long k, const SplitKClass& y);

// Multiplication operator by the Bott class theta^k(y); entries in Z[1/k].
QMat bott_theta_op(long k, const SplitKClass& y);
KClass bott_theta(long k, const SplitKClass& y);  // theta^k(y) itself
Coefficient bott_theta_rank(long k, const SplitKClass& y);  // k^{rank y}

// Homological Adams operation psi_k = theta^k(-T_X) . psi^k.
KClass homological_adams(long k, const KClass& x);

// Chern classes of a split class by the Whitney formula (integral).
ChowClass chern_total(const SplitKClass& y);
ChowClass chern_class(const SplitKClass& y, int codim);

}  // namespace ck
