#include "qgln/multiset.hpp"

#include <algorithm>
#include <numeric>

namespace qgln {

std::vector<Split> splits(int n) {
    std::vector<Split> out;
    out.reserve(static_cast<std::size_t>(1) << n);
    for (int mask = 0; mask < (1 << n); ++mask) {
        Split s;
        for (int p = 0; p < n; ++p)
            ((mask >> p) & 1 ? s.right : s.left).push_back(p);
        out.push_back(std::move(s));
    }
    return out;
}

Scalar gamma_kernel(const Scalar& q, const Scalar& ti, const Scalar& tj, int ci, int cj) {
    const Scalar qi = q.inv();
    if (ci == cj + 1) return (q * ti - qi * tj) / (ti - tj);
    if (cj == ci + 1) return (ti - tj) / (qi * ti - q * tj);
    if (ci == cj) return (qi * ti - q * tj) / (q * ti - qi * tj);
    return 1;
}

Scalar gamma_tilde_kernel(const Scalar& q, const Scalar& ti, const Scalar& tj, int ci, int cj) {
    const Scalar qi = q.inv();
    if (ci == cj + 1) return (ti - tj) / (q * ti - qi * tj);
    if (cj == ci + 1) return (qi * ti - q * tj) / (ti - tj);
    return 1;
}

Scalar beta_kernel(const Scalar& q, const Scalar& ti, const Scalar& tj, int ci, int cj) {
    if (ci != cj) return Scalar(1);
    return (q.inv() * ti - q * tj) / (ti - tj);
}

Scalar phi_factor(const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& t, const Split& s) {
    Scalar f = 1;
    for (int i : s.left)
        for (int j : s.right) {
            if (i >= j) continue;
            f *= gamma_kernel(q, t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)], I.colour(i), I.colour(j));
        }
    return f;
}

Scalar phi_tilde_factor(const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& t, const Split& s) {
    Scalar f = 1;
    for (int i : s.left)
        for (int j : s.right)
            f *= beta_kernel(q, t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)], I.colour(i), I.colour(j));
    for (int i : s.right)
        for (int j : s.left) {
            if (i >= j) continue;
            f *= gamma_tilde_kernel(q, t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)], I.colour(i), I.colour(j));
        }
    return f;
}

std::pair<PiMultiset, ColourPermutation> canonical_sort(const PiMultiset& I) {
    const int n = I.size();
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return I.colour(a) < I.colour(b); });
    std::vector<int> sorted_colours;
    sorted_colours.reserve(static_cast<std::size_t>(n));
    ColourPermutation sigma;
    sigma.to.resize(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) {
        sorted_colours.push_back(I.colour(order[static_cast<std::size_t>(p)]));
        sigma.to[static_cast<std::size_t>(order[static_cast<std::size_t>(p)])] = p;
    }
    return {PiMultiset(std::move(sorted_colours)), sigma};
}

PiMultiset apply_permutation(const ColourPermutation& sigma, const PiMultiset& I) {
    std::vector<int> c(static_cast<std::size_t>(I.size()));
    for (int i = 0; i < I.size(); ++i) c[static_cast<std::size_t>(sigma.to[static_cast<std::size_t>(i)])] = I.colour(i);
    return PiMultiset(std::move(c));
}

std::vector<Scalar> permute_values(const ColourPermutation& sigma, const std::vector<Scalar>& vals) {
    std::vector<Scalar> out(vals.size());
    for (std::size_t i = 0; i < vals.size(); ++i) out[static_cast<std::size_t>(sigma.to[i])] = vals[i];
    return out;
}

namespace {

template <typename Kernel>
Scalar inversion_product(const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& t,
                         const ColourPermutation& sigma, Kernel kern) {
    Scalar f = 1;
    for (int i = 0; i < I.size(); ++i)
        for (int j = i + 1; j < I.size(); ++j)
            if (sigma.to[static_cast<std::size_t>(j)] < sigma.to[static_cast<std::size_t>(i)])
                f *= kern(q, t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)], I.colour(i), I.colour(j));
    return f;
}

} // namespace

Scalar pullback_gamma_factor(const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& t,
                             const ColourPermutation& sigma) {
    return inversion_product(q, I, t, sigma, gamma_kernel);
}

Scalar pullback_tilde_factor(const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& t,
                             const ColourPermutation& sigma) {
    return inversion_product(q, I, t, sigma, gamma_tilde_kernel);
}

KetVector modify(const Collection& w, const ModuleShape& shape, const Scalar& q, const PiMultiset& I,
                 const std::vector<Scalar>& t) {
    KetVector base = w(I.reversed(), std::vector<Scalar>(t.rbegin(), t.rend()));
    Scalar f = 1;
    for (int i = 0; i < I.size(); ++i)
        for (int j = i + 1; j < I.size(); ++j)
            f *= beta_kernel(q, t[static_cast<std::size_t>(i)], t[static_cast<std::size_t>(j)], I.colour(i), I.colour(j));
    for (int i = 0; i < I.size(); ++i) f *= weight_series(shape, q, I.colour(i) + 1, t[static_cast<std::size_t>(i)]);
    return scalar_mul(f, base);
}

KetVector unmodify(const Collection& w_mod, const ModuleShape& shape, const Scalar& q, const PiMultiset& I,
                   const std::vector<Scalar>& t) {
    KetVector base = w_mod(I.reversed(), std::vector<Scalar>(t.rbegin(), t.rend()));
    Scalar f = 1;
    for (int i = 0; i < I.size(); ++i)
        for (int j = i + 1; j < I.size(); ++j)
            f /= beta_kernel(q, t[static_cast<std::size_t>(j)], t[static_cast<std::size_t>(i)], I.colour(j), I.colour(i));
    for (int i = 0; i < I.size(); ++i) f /= weight_series(shape, q, I.colour(i) + 1, t[static_cast<std::size_t>(i)]);
    return scalar_mul(f, base);
}

} // namespace qgln
