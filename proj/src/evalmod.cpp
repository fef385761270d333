#include "qgln/evalmod.hpp"

namespace qgln {

AuxMatrix AuxMatrix::identity(int n, int module_dim) {
    AuxMatrix a(n, module_dim);
    for (int i = 1; i <= n; ++i) a.at(i, i) = DenseOperator::identity(module_dim);
    return a;
}

AuxMatrix aux_blocks(const DenseOperator& r, int N) {
    const int m = r.dim() / N;
    if (m * N != r.dim()) throw ShapeMismatch("aux_blocks: dimension not divisible by N");
    AuxMatrix a(N, m);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            DenseOperator& blk = a.at(i, j);
            for (int mo = 0; mo < m; ++mo)
                for (int mi = 0; mi < m; ++mi) blk.at(mo, mi) = r.at((i - 1) * m + mo, (j - 1) * m + mi);
        }
    return a;
}

AuxMatrix couple(const AuxMatrix& first, const AuxMatrix& second) {
    if (first.N != second.N) throw ShapeMismatch("couple: aux dimensions differ");
    const int N = first.N;
    AuxMatrix out(N, first.mdim * second.mdim);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j) {
            DenseOperator sum(out.mdim);
            bool any = false;
            for (int k = 1; k <= N; ++k) {
                const DenseOperator& a = first.at(k, j);
                const DenseOperator& b = second.at(i, k);
                if (a.is_zero() || b.is_zero()) continue;
                sum += kron(a, b);
                any = true;
            }
            if (any) out.at(i, j) = std::move(sum);
        }
    return out;
}

DenseOperator assemble_aux(const AuxMatrix& a) {
    DenseOperator r(a.N * a.mdim);
    for (int i = 1; i <= a.N; ++i)
        for (int j = 1; j <= a.N; ++j) {
            const DenseOperator& blk = a.at(i, j);
            for (int mo = 0; mo < a.mdim; ++mo)
                for (int mi = 0; mi < a.mdim; ++mi)
                    if (!blk.at(mo, mi).is_zero()) r.at((i - 1) * a.mdim + mo, (j - 1) * a.mdim + mi) = blk.at(mo, mi);
        }
    return r;
}

namespace {

AuxMatrix l_operator(const ModuleShape& shape, const Scalar& q, const Scalar& u, bool plus) {
    AuxMatrix acc = AuxMatrix::identity(shape.N, 1);
    for (int a = 0; a < shape.factors(); ++a) {
        const Scalar& z = shape.z[static_cast<std::size_t>(a)];
        DenseOperator r = plus ? r_plus(shape.N, q, u, z) : r_minus(shape.N, q, u, z);
        acc = couple(acc, aux_blocks(r, shape.N));
    }
    return acc;
}

} // namespace

AuxMatrix l_plus(const ModuleShape& shape, const Scalar& q, const Scalar& u) { return l_operator(shape, q, u, true); }

AuxMatrix l_minus(const ModuleShape& shape, const Scalar& q, const Scalar& u) { return l_operator(shape, q, u, false); }

AuxMatrix zero_mode_l_minus(const ModuleShape& shape, const Scalar& q) { return l_minus(shape, q, Scalar(0)); }

KetVector singular_vector(const ModuleShape& shape) {
    KetVector v(shape.dim());
    v[0] = 1;
    return v;
}

Scalar weight_series(const ModuleShape& shape, const Scalar& q, int i, const Scalar& u) {
    if (i < 1 || i > shape.N) throw IndexOutOfRange("weight_series: index");
    Scalar lam = 1;
    if (i >= 2)
        for (const Scalar& z : shape.z) lam *= (u - z) / (q * u - q.inv() * z);
    return lam;
}

} // namespace qgln
