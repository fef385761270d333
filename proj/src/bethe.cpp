#include "qgln/bethe.hpp"

#include <algorithm>

namespace qgln {

BarN bar_n_of(const PiMultiset& sorted, int N) {
    BarN nbar;
    nbar.counts.assign(static_cast<std::size_t>(N - 1), 0);
    for (int p = 0; p < sorted.size(); ++p) {
        int c = sorted.colour(p);
        if (c > N - 1) throw ConfigInvalid("bar_n_of: colour exceeds N-1");
        nbar.counts[static_cast<std::size_t>(c - 1)]++;
    }
    return nbar;
}

namespace {

struct EmbeddedFactor {
    DenseOperator small;
    std::vector<int> slots;
};

// Factors of T_[M] in application order (first applied first). Slot M+1 is
// the module slot; aux slot r carries u[r-1].
std::vector<EmbeddedFactor> monodromy_chain(const ModuleShape& shape, const Scalar& q, const std::vector<Scalar>& u,
                                            MonodromyVariant variant) {
    const int M = static_cast<int>(u.size());
    const int mod_slot = M + 1;
    std::vector<EmbeddedFactor> chain;
    auto push_l = [&](int r) {
        chain.push_back({assemble_aux(l_plus(shape, q, u[static_cast<std::size_t>(r - 1)])), {r, mod_slot}});
    };
    auto push_r_product = [&] {
        auto pairs = ordered_r_pairs(M);
        std::reverse(pairs.begin(), pairs.end()); // rightmost factor applies first
        for (auto [j, i] : pairs)
            chain.push_back({r_matrix(shape.N, q, u[static_cast<std::size_t>(j - 1)], u[static_cast<std::size_t>(i - 1)]),
                             {j, i}});
    };
    if (variant == MonodromyVariant::left) {
        push_r_product();
        for (int r = M; r >= 1; --r) push_l(r);
    } else {
        for (int r = 1; r <= M; ++r) push_l(r);
        push_r_product();
    }
    return chain;
}

TensorShape big_shape(const ModuleShape& shape, int M) {
    std::vector<int> dims(static_cast<std::size_t>(M), shape.N);
    dims.push_back(shape.dim());
    return TensorShape(std::move(dims));
}

KetVector apply_chain(const std::vector<EmbeddedFactor>& chain, const TensorShape& shape, KetVector x) {
    for (const auto& f : chain) x = apply_on_slots(f.small, f.slots, shape, x);
    return x;
}

// <alpha| X (|alpha'> (x) x): embed x at aux digits alpha', apply the chain,
// read off the aux block alpha. Realizes the trace against a product of
// matrix units e_{c+1,c}, which kills every other aux diagonal term.
KetVector aux_block_apply(const std::vector<EmbeddedFactor>& chain, const ModuleShape& shape,
                          const std::vector<int>& alpha, const std::vector<int>& alpha_prime, const KetVector& x) {
    const int M = static_cast<int>(alpha.size());
    TensorShape big = big_shape(shape, M);
    KetVector in(big.total());
    std::vector<int> digits = alpha_prime;
    digits.push_back(0);
    for (int m = 0; m < shape.dim(); ++m) {
        if (x[m].is_zero()) continue;
        digits.back() = m;
        in[big.index_of(digits)] = x[m];
    }
    KetVector out = apply_chain(chain, big, std::move(in));
    KetVector block(shape.dim());
    digits = alpha;
    digits.push_back(0);
    for (int m = 0; m < shape.dim(); ++m) {
        digits.back() = m;
        block[m] = out[big.index_of(digits)];
    }
    return block;
}

} // namespace

DenseOperator monodromy_T(const ModuleShape& shape, const Scalar& q, const std::vector<Scalar>& u,
                          MonodromyVariant variant) {
    const int M = static_cast<int>(u.size());
    return monodromy_mult_left(shape, q, u, variant, DenseOperator::identity(big_shape(shape, M).total()));
}

DenseOperator monodromy_mult_left(const ModuleShape& shape, const Scalar& q, const std::vector<Scalar>& u,
                                  MonodromyVariant variant, const DenseOperator& x) {
    const int M = static_cast<int>(u.size());
    TensorShape big = big_shape(shape, M);
    DenseOperator acc = x;
    for (const auto& f : monodromy_chain(shape, q, u, variant)) acc = mult_embedded_left(f.small, f.slots, big, acc);
    return acc;
}

KetVector bethe_B(const ModuleShape& shape, const Scalar& q, const BarN& nbar, const std::vector<Scalar>& t) {
    const int M = nbar.total();
    if (static_cast<int>(t.size()) != M) throw ShapeMismatch("bethe_B: variable count");
    if (M == 0) return singular_vector(shape);
    if (static_cast<int>(nbar.counts.size()) != shape.N - 1) throw ConfigInvalid("bethe_B: colour count vs N");

    const Scalar qi = q.inv();
    Scalar pre = 1;
    int base = 0;
    for (int count : nbar.counts) {
        for (int i = 0; i < count; ++i)
            for (int j = i + 1; j < count; ++j) {
                const Scalar& ti = t[static_cast<std::size_t>(base + i)];
                const Scalar& tj = t[static_cast<std::size_t>(base + j)];
                pre *= (ti - tj) / (qi * ti - q * tj);
            }
        base += count;
    }

    std::vector<int> alpha, alpha_prime;
    for (int r = 1; r <= M; ++r) {
        int c = nbar.colour_of_slot(r);
        alpha.push_back(c - 1);   // digit of e_c
        alpha_prime.push_back(c); // digit of e_{c+1}
    }
    auto chain = monodromy_chain(shape, q, t, MonodromyVariant::left);
    KetVector block = aux_block_apply(chain, shape, alpha, alpha_prime, singular_vector(shape));
    return scalar_mul(pre, block);
}

KetVector bethe_partial_apply(const ModuleShape& shape, const Scalar& q, int l, int k, const std::vector<Scalar>& t,
                              const KetVector& x) {
    if (!(1 <= l && l <= k + 1 && k + 1 <= shape.N)) throw IndexOutOfRange("bethe_partial: need 1 <= l <= k+1 <= N");
    const int M = k - l + 1;
    if (static_cast<int>(t.size()) != M) throw ShapeMismatch("bethe_partial: variable count");
    if (M == 0) return x;

    // Rprod(t^k..t^l) L^(M)(t^k) ... L^(1)(t^l): right-variant order
    auto chain = monodromy_chain(shape, q, t, MonodromyVariant::right);
    std::vector<int> alpha, alpha_prime;
    for (int r = 1; r <= M; ++r) {
        alpha.push_back(l + r - 2);       // digit of e_{l+r-1}
        alpha_prime.push_back(l + r - 1); // digit of e_{l+r}
    }
    return aux_block_apply(chain, shape, alpha, alpha_prime, x);
}

DenseOperator bethe_partial(const ModuleShape& shape, const Scalar& q, int l, int k, const std::vector<Scalar>& t) {
    DenseOperator op(shape.dim());
    for (int m = 0; m < shape.dim(); ++m) {
        KetVector em(shape.dim());
        em[m] = 1;
        KetVector col = bethe_partial_apply(shape, q, l, k, t, em);
        for (int r = 0; r < shape.dim(); ++r) op.at(r, m) = col[r];
    }
    return op;
}

KetVector w_B(const ModuleShape& shape, const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& vals) {
    if (static_cast<int>(vals.size()) != I.size()) throw ShapeMismatch("w_B: variable count");
    for (int p = 0; p < I.size(); ++p)
        if (I.colour(p) > shape.N - 1) throw ConfigInvalid("w_B: colour exceeds N-1");
    auto [sorted, sigma] = canonical_sort(I);
    KetVector b = bethe_B(shape, q, bar_n_of(sorted, shape.N), permute_values(sigma, vals));
    Scalar f = pullback_tilde_factor(q, I, vals, sigma);
    return scalar_mul(f, b);
}

} // namespace qgln
