#pragma once

#include <utility>
#include <vector>

#include "qgln/tensor.hpp"

namespace qgln {

// Trigonometric R-matrix on C^N (x) C^N:
//
//   R(u,v) = (qu - q^{-1}v)/(u-v) sum_i e_ii (x) e_ii
//          + sum_{i<j} (e_ii (x) e_jj + e_jj (x) e_ii)
//          + (q - q^{-1})/(u-v) sum_{i<j} (v e_ij (x) e_ji + u e_ji (x) e_ij).
//
// Throws DegenerateSample when u = v.
DenseOperator r_matrix(int N, const Scalar& q, const Scalar& u, const Scalar& v);

// R^+(u,v) = ((u-v)/(qu - q^{-1}v)) R(u,v); eigenvalue 1 on e_i (x) e_i.
DenseOperator r_plus(int N, const Scalar& q, const Scalar& u, const Scalar& v);

// R^-(u,v) = (R^+(v,u)^{-1})^{21}; the superscript 21 is conjugation by the
// slot swap. Computed by exact inversion, never by a closed form.
DenseOperator r_minus(int N, const Scalar& q, const Scalar& u, const Scalar& v);

// Factor order of the ordered product over pairs 1 <= i < j <= M:
// R^{(ji)} stands left of R^{(ml)} iff j > m, or j = m and i > l.
// Returned leftmost-first as (j, i) slot pairs (1-based).
std::vector<std::pair<int, int>> ordered_r_pairs(int M);

// The ordered product itself, as an operator on (C^N)^{(x)M};
// factor R^{(ji)} takes arguments (u_j, u_i). u is 1-based off by one:
// u[k] is the variable of slot k+1. M = u.size(); M <= 1 gives the identity.
DenseOperator ordered_r_product(int N, const Scalar& q, const std::vector<Scalar>& u);

} // namespace qgln
