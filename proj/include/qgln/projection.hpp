#pragma once

#include "qgln/bethe.hpp"

namespace qgln {

// Projected staircase current product W(l,k), realized through the closed
// recurrence
//   W(k+1,k) = 1,
//   W(l,k) = sum_{m=l+1}^{k+1} W(m,k) (q-q^{-1})^{m-l-1} F^+_{l,m}(t^{m-1})
//            * prod_{j=l+1}^{m-1} t^j/(t^j - t^{j-1}),
// with the Gauss coordinates F^+ taken from l_plus at the respective
// variable. t has size k-l+1, t[0] = t^l. Needs 1 <= l <= k+1 <= N.
DenseOperator projected_staircase(const ModuleShape& shape, const Scalar& q, int l, int k,
                                  const std::vector<Scalar>& t);

// Single-factor modified weight function of the projection construction.
// Zero unless the colours of I are exactly {1,...,k} for some k < N, each
// once; otherwise canonical-sort to the staircase, apply W(1,k) to the
// singular vector, multiply the Lambda weights and pull the order back.
KetVector w_P_single(const ModuleShape& shape, const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& vals);

// Modified weight function of the projection construction on any tensor
// product of vector representations: left-nested coproduct expansion down
// to single factors.
KetVector w_P(const ModuleShape& shape, const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& vals);

} // namespace qgln
