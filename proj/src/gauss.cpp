#include "qgln/gauss.hpp"

namespace qgln {

AuxMatrix GaussData::reconstruct() const {
    AuxMatrix out(N, mdim);
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b) {
            DenseOperator sum(mdim);
            for (int c = std::max(a, b); c <= N; ++c) {
                // F_ac K_c E_cb with F_aa = E_bb = 1
                DenseOperator term = k(c);
                if (a < c) term = compose(f(a, c), term);
                if (b < c) term = compose(term, e(c, b));
                sum += term;
            }
            out.at(a, b) = std::move(sum);
        }
    return out;
}

GaussData gauss(const AuxMatrix& l) {
    const int N = l.N;
    GaussData gd(N, l.mdim);
    AuxMatrix w = l;
    for (int c = N; c >= 1; --c) {
        gd.k_mut(c) = w.at(c, c);
        if (c == 1) break;
        DenseOperator kinv = inverse(w.at(c, c));
        for (int a = 1; a < c; ++a) gd.f_mut(a, c) = compose(w.at(a, c), kinv);
        for (int b = 1; b < c; ++b) gd.e_mut(c, b) = compose(kinv, w.at(c, b));
        // F_ac K_c E_cb = W_ac Kinv W_cb = F_ac W_cb
        for (int a = 1; a < c; ++a)
            for (int b = 1; b < c; ++b) w.at(a, b) -= compose(gd.f(a, c), w.at(c, b));
    }
    return gd;
}

DenseOperator f_plus(const AuxMatrix& l, int i, int j) {
    if (!(1 <= i && i < j && j <= l.N)) throw IndexOutOfRange("f_plus: need i < j");
    return gauss(l).f(i, j);
}

DenseOperator screening_zero_mode(const ModuleShape& shape, const Scalar& q, int i) {
    if (i < 1 || i >= shape.N) throw IndexOutOfRange("screening_zero_mode: index");
    AuxMatrix l0 = zero_mode_l_minus(shape, q);
    DenseOperator dinv = inverse(l0.at(i + 1, i + 1));
    return scalar_mul(Scalar(-1), compose(l0.at(i, i + 1), dinv));
}

} // namespace qgln
