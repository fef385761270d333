#pragma once

#include "qgln/evalmod.hpp"

namespace qgln {

// Triangular factorization data of an operator-valued aux matrix:
//
//   L = (1 + sum_{i<j} F_ij e_ij) (sum_i K_i e_ii) (1 + sum_{i<j} E_ji e_ji),
//
// so that L_ab = sum_{c >= max(a,b)} F_ac K_c E_cb with F_aa = E_bb = 1.
// Entries do not commute; every product keeps the written order.
struct GaussData {
    int N = 0;
    int mdim = 0;
    std::vector<DenseOperator> f_, k_, e_; // f_ used for i<j, e_ for j>i

    GaussData() = default;
    GaussData(int n, int module_dim)
        : N(n), mdim(module_dim),
          f_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), DenseOperator(module_dim)),
          k_(static_cast<std::size_t>(n), DenseOperator(module_dim)),
          e_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), DenseOperator(module_dim)) {}

    const DenseOperator& f(int i, int j) const { // i < j
        if (!(1 <= i && i < j && j <= N)) throw IndexOutOfRange("GaussData::f");
        return f_[static_cast<std::size_t>(i - 1) * N + (j - 1)];
    }
    const DenseOperator& k(int i) const {
        if (!(1 <= i && i <= N)) throw IndexOutOfRange("GaussData::k");
        return k_[static_cast<std::size_t>(i - 1)];
    }
    const DenseOperator& e(int j, int i) const { // j > i
        if (!(1 <= i && i < j && j <= N)) throw IndexOutOfRange("GaussData::e");
        return e_[static_cast<std::size_t>(j - 1) * N + (i - 1)];
    }
    DenseOperator& f_mut(int i, int j) { return f_[static_cast<std::size_t>(i - 1) * N + (j - 1)]; }
    DenseOperator& k_mut(int i) { return k_[static_cast<std::size_t>(i - 1)]; }
    DenseOperator& e_mut(int j, int i) { return e_[static_cast<std::size_t>(j - 1) * N + (i - 1)]; }

    // F * K * E, for checking the factorization entrywise.
    AuxMatrix reconstruct() const;
};

// Corner recursion: K_N = L_NN, F_aN = L_aN K_N^{-1}, E_Nb = K_N^{-1} L_Nb,
// then recurse on L'_ab = L_ab - F_aN K_N E_Nb. Throws SingularCorner when a
// corner is not invertible (a degenerate sample; caller resamples).
GaussData gauss(const AuxMatrix& l);

// Gauss coordinate F^+_ij of an aux matrix, i < j.
DenseOperator f_plus(const AuxMatrix& l, int i, int j);

// Zero mode F_i[0] = -L^-_{i,i+1}(0) (L^-_{i+1,i+1}(0))^{-1} of the i-th
// current, realized on the module. 1 <= i <= N-1.
DenseOperator screening_zero_mode(const ModuleShape& shape, const Scalar& q, int i);

} // namespace qgln
