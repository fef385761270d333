#pragma once

#include <functional>
#include <vector>

#include "qgln/evalmod.hpp"
#include "qgln/scalar.hpp"

namespace qgln {

// Ordered multiset of coloured positions. Elements are identified by their
// position 0..n-1; colours live in 1..N-1. Variables are carried alongside
// as a plain vector indexed the same way.
struct PiMultiset {
    std::vector<int> colours;

    PiMultiset() = default;
    explicit PiMultiset(std::vector<int> c) : colours(std::move(c)) {
        for (int col : colours)
            if (col < 1) throw ConfigInvalid("PiMultiset: colours start at 1");
    }
    int size() const { return static_cast<int>(colours.size()); }
    int colour(int pos) const { return colours.at(static_cast<std::size_t>(pos)); }

    PiMultiset reversed() const { return PiMultiset(std::vector<int>(colours.rbegin(), colours.rend())); }
    PiMultiset subset(const std::vector<int>& positions) const {
        std::vector<int> c;
        c.reserve(positions.size());
        for (int p : positions) c.push_back(colour(p));
        return PiMultiset(std::move(c));
    }
};

// Order-preserving two-block decomposition; position lists are ascending.
struct Split {
    std::vector<int> left, right;
};

// All 2^n order-preserving splits; position p goes left iff bit p of the
// enumeration counter is 0. Deterministic order for reproducible reports.
std::vector<Split> splits(int n);

// The three rational kernels. Conventions (c_i = colour of the first
// argument, c_j of the second):
//   gamma:        (qt_i - q^{-1}t_j)/(t_i - t_j)          if c_i = c_j + 1
//                 (t_i - t_j)/(q^{-1}t_i - qt_j)          if c_j = c_i + 1
//                 (q^{-1}t_i - qt_j)/(qt_i - q^{-1}t_j)   if c_i = c_j
//                 1 otherwise
//   gamma_tilde:  (t_i - t_j)/(qt_i - q^{-1}t_j)          if c_i = c_j + 1
//                 (q^{-1}t_i - qt_j)/(t_i - t_j)          if c_j = c_i + 1
//                 1 otherwise
//   beta:         (q^{-1}t_i - qt_j)/(t_i - t_j)          if c_i = c_j
//                 1 otherwise
Scalar gamma_kernel(const Scalar& q, const Scalar& ti, const Scalar& tj, int ci, int cj);
Scalar gamma_tilde_kernel(const Scalar& q, const Scalar& ti, const Scalar& tj, int ci, int cj);
Scalar beta_kernel(const Scalar& q, const Scalar& ti, const Scalar& tj, int ci, int cj);

// Phi_{I1,I2} = prod_{i in I1, j in I2, i < j} gamma(t_i, t_j).
Scalar phi_factor(const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& t, const Split& s);

// Phi~_{I1,I2} = prod_{i in I1, j in I2} beta(t_i, t_j)
//              * prod_{i in I2, j in I1, i < j} gamma~(t_i, t_j).
Scalar phi_tilde_factor(const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& t, const Split& s);

// Position bijection sigma: I -> J; to[i] is the J-position of I-element i.
// Colour-intertwining (the J colours are those transported by sigma).
struct ColourPermutation {
    std::vector<int> to;

    int size() const { return static_cast<int>(to.size()); }
    ColourPermutation inverse() const {
        ColourPermutation r;
        r.to.resize(to.size());
        for (std::size_t i = 0; i < to.size(); ++i) r.to[static_cast<std::size_t>(to[i])] = static_cast<int>(i);
        return r;
    }
    bool is_identity() const {
        for (std::size_t i = 0; i < to.size(); ++i)
            if (to[i] != static_cast<int>(i)) return false;
        return true;
    }
};

// Stable sort by colour. Returns the sorted multiset (colours ascending,
// equal colours keeping their original relative order) and the sorting map
// sigma with sigma(i) < sigma(j) iff colour(i) < colour(j), or equal
// colours and i < j.
std::pair<PiMultiset, ColourPermutation> canonical_sort(const PiMultiset& I);

// The multiset sigma(I) (colours transported to the target positions).
PiMultiset apply_permutation(const ColourPermutation& sigma, const PiMultiset& I);

// Values transported along sigma: out[sigma(i)] = vals[i]. Feeding the
// result to a J-indexed function realizes w(t_{sigma(i)} | i in I).
std::vector<Scalar> permute_values(const ColourPermutation& sigma, const std::vector<Scalar>& vals);

// prod over inversion pairs (i < j, sigma(j) < sigma(i)) of
// gamma(t_i, t_j) resp. gamma~(t_i, t_j), with I's colours.
Scalar pullback_gamma_factor(const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& t,
                             const ColourPermutation& sigma);
Scalar pullback_tilde_factor(const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& t,
                             const ColourPermutation& sigma);

// A weight-function collection at a fixed sample: multiset + values -> ket.
using Collection = std::function<KetVector(const PiMultiset&, const std::vector<Scalar>&)>;

// Weight function <-> modified weight function conversion:
//   modify:   w_mod(I) = w(reverse I) * prod_{i<j} beta(t_i, t_j)
//                                     * prod_i Lambda_{c_i + 1}(t_i),
//   unmodify: w(I) = w_mod(reverse I) * prod_{i<j} beta(t_j, t_i)^{-1}
//                                     * prod_i Lambda_{c_i + 1}(t_i)^{-1};
// the reversed multiset keeps each element's variable. Mutually inverse.
KetVector modify(const Collection& w, const ModuleShape& shape, const Scalar& q, const PiMultiset& I,
                 const std::vector<Scalar>& t);
KetVector unmodify(const Collection& w_mod, const ModuleShape& shape, const Scalar& q, const PiMultiset& I,
                   const std::vector<Scalar>& t);

} // namespace qgln
