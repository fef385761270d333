#include "qgln/projection.hpp"

#include <algorithm>

namespace qgln {

DenseOperator projected_staircase(const ModuleShape& shape, const Scalar& q, int l, int k,
                                  const std::vector<Scalar>& t) {
    if (!(1 <= l && l <= k + 1 && k + 1 <= shape.N)) throw IndexOutOfRange("projected_staircase: need 1 <= l <= k+1 <= N");
    if (static_cast<int>(t.size()) != k - l + 1) throw ShapeMismatch("projected_staircase: variable count");
    const Scalar qq = q - q.inv();
    auto tv = [&](int j) -> const Scalar& { return t[static_cast<std::size_t>(j - l)]; }; // t^j

    // Gauss data of l_plus at each variable value
    std::vector<GaussData> gd;
    gd.reserve(t.size());
    for (int j = l; j <= k; ++j) gd.push_back(gauss(l_plus(shape, q, tv(j))));
    auto f_at = [&](int a, int b, int j) -> const DenseOperator& { return gd[static_cast<std::size_t>(j - l)].f(a, b); };

    // W(m,k) for m = k+1 down to l
    std::vector<DenseOperator> w(static_cast<std::size_t>(k - l + 2));
    auto W = [&](int m) -> DenseOperator& { return w[static_cast<std::size_t>(m - l)]; };
    W(k + 1) = DenseOperator::identity(shape.dim());
    for (int m = k; m >= l; --m) {
        DenseOperator sum(shape.dim());
        for (int mm = m + 1; mm <= k + 1; ++mm) {
            DenseOperator term = compose(W(mm), f_at(m, mm, mm - 1));
            Scalar coeff = pow_int(qq, mm - m - 1);
            for (int j = m + 1; j <= mm - 1; ++j) coeff *= tv(j) / (tv(j) - tv(j - 1));
            sum += scalar_mul(coeff, term);
        }
        W(m) = std::move(sum);
    }
    return W(l);
}

KetVector w_P_single(const ModuleShape& shape, const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& vals) {
    if (shape.factors() != 1) throw ShapeMismatch("w_P_single: single-factor module expected");
    if (static_cast<int>(vals.size()) != I.size()) throw ShapeMismatch("w_P_single: variable count");
    for (int p = 0; p < I.size(); ++p)
        if (I.colour(p) > shape.N - 1) throw ConfigInvalid("w_P_single: colour exceeds N-1");
    if (I.size() == 0) return singular_vector(shape);

    const int k = I.size();
    // nontrivial only for colours exactly {1,...,k}, each once, k < N
    bool staircase_colours = k < shape.N;
    if (staircase_colours) {
        std::vector<bool> seen(static_cast<std::size_t>(k), false);
        for (int p = 0; p < k; ++p) {
            int c = I.colour(p);
            if (c > k || seen[static_cast<std::size_t>(c - 1)]) { staircase_colours = false; break; }
            seen[static_cast<std::size_t>(c - 1)] = true;
        }
    }
    if (!staircase_colours) return KetVector(shape.dim());

    auto [sorted, sigma] = canonical_sort(I);
    std::vector<Scalar> svals = permute_values(sigma, vals); // svals[p] = t^{p+1}
    KetVector vec = apply(projected_staircase(shape, q, 1, k, svals), singular_vector(shape));
    Scalar f = 1;
    for (int p = 0; p < k; ++p) f *= weight_series(shape, q, p + 2, svals[static_cast<std::size_t>(p)]);
    f *= pullback_tilde_factor(q, I, vals, sigma);
    return scalar_mul(f, vec);
}

KetVector w_P(const ModuleShape& shape, const Scalar& q, const PiMultiset& I, const std::vector<Scalar>& vals) {
    if (static_cast<int>(vals.size()) != I.size()) throw ShapeMismatch("w_P: variable count");
    for (int p = 0; p < I.size(); ++p)
        if (I.colour(p) > shape.N - 1) throw ConfigInvalid("w_P: colour exceeds N-1");
    const int n = shape.factors();
    if (n == 0) {
        KetVector v(1);
        if (I.size() == 0) v[0] = 1;
        return v;
    }
    if (n == 1) return w_P_single(shape, q, I, vals);

    ModuleShape head = shape.factor(0);
    ModuleShape rest = shape.tail(1);
    KetVector out(shape.dim());
    for (const Split& s : splits(I.size())) {
        PiMultiset i1 = I.subset(s.left), i2 = I.subset(s.right);
        std::vector<Scalar> v1, v2;
        for (int p : s.left) v1.push_back(vals[static_cast<std::size_t>(p)]);
        for (int p : s.right) v2.push_back(vals[static_cast<std::size_t>(p)]);
        KetVector w1 = w_P_single(head, q, i1, v1);
        if (w1.is_zero()) continue;
        KetVector w2 = w_P(rest, q, i2, v2);
        if (w2.is_zero()) continue;
        Scalar coeff = phi_tilde_factor(q, I, vals, s);
        for (int p : s.left) coeff *= weight_series(rest, q, I.colour(p), vals[static_cast<std::size_t>(p)]);
        for (int p : s.right) coeff *= weight_series(head, q, I.colour(p) + 1, vals[static_cast<std::size_t>(p)]);
        out += scalar_mul(coeff, kron(w1, w2));
    }
    return out;
}

} // namespace qgln
