#pragma once

#include "qgln/gauss.hpp"
#include "qgln/multiset.hpp"

namespace qgln {

// Multiplicities per colour 1..N-1 of a special (colour-sorted) multiset.
struct BarN {
    std::vector<int> counts;

    int total() const {
        int m = 0;
        for (int c : counts) m += c;
        return m;
    }
    // colour of the r-th variable slot, 1-based r
    int colour_of_slot(int r) const {
        int acc = 0;
        for (std::size_t a = 0; a < counts.size(); ++a) {
            acc += counts[a];
            if (r <= acc) return static_cast<int>(a) + 1;
        }
        throw IndexOutOfRange("BarN::colour_of_slot");
    }
};

BarN bar_n_of(const PiMultiset& sorted, int N);

enum class MonodromyVariant { left, right };

// T_[M](u_1..u_M) on (C^N)^{(x)M} (x) V:
//   left  = L^(1)(u_1) ... L^(M)(u_M) * Rprod(u_M..u_1)
//   right = Rprod(u_M..u_1) * L^(M)(u_M) ... L^(1)(u_1)
// The two agree; both are exposed so the agreement can be checked.
DenseOperator monodromy_T(const ModuleShape& shape, const Scalar& q, const std::vector<Scalar>& u,
                          MonodromyVariant variant);

// T_[M](u) * x on (C^N)^{(x)M} (x) V, applying the factors slot-wise
// instead of forming T as a dense product first.
DenseOperator monodromy_mult_left(const ModuleShape& shape, const Scalar& q, const std::vector<Scalar>& u,
                                  MonodromyVariant variant, const DenseOperator& x);

// Trace-formula vector
//   B_nbar(t) v = prod_a prod_{i<j<=n_a} (t^a_i - t^a_j)/(q^{-1}t^a_i - q t^a_j)
//                 * (tr^{(x)M} (x) id)(T_[M](t) e_21^{(x)n_1} (x) ... (x) e_{N,N-1}^{(x)n_{N-1}} (x) 1) v.
// t is the flattened variable list, grouped by colour ascending.
KetVector bethe_B(const ModuleShape& shape, const Scalar& q, const BarN& nbar, const std::vector<Scalar>& t);

// Partial trace-formula operator
//   B_[l,k](t^l..t^k) = tr_{1..k-l+1}( Rprod(t^k..t^l) L^(k-l+1)(t^k) ... L^(1)(t^l)
//                                      e^(k-l+1)_{k+1,k} ... e^(1)_{l+1,l} ),
// with B_[k+1,k] = 1. t has size k-l+1, t[0] = t^l. Needs 1 <= l <= k+1 <= N.
DenseOperator bethe_partial(const ModuleShape& shape, const Scalar& q, int l, int k, const std::vector<Scalar>& t);
KetVector bethe_partial_apply(const ModuleShape& shape, const Scalar& q, int l, int k, const std::vector<Scalar>& t,
                              const KetVector& x);

// Modified weight function of the trace construction on an arbitrary
// multiset: canonical-sort to the special multiset, evaluate bethe_B there,
// pull back with the gamma~ inversion factors of the sorting map.
KetVector w_B(const ModuleShape& shape, const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& vals);

} // namespace qgln
