#include "qgln/rmatrix.hpp"

#include <algorithm>

namespace qgln {

DenseOperator r_matrix(int N, const Scalar& q, const Scalar& u, const Scalar& v) {
    if (N < 2) throw ConfigInvalid("r_matrix: N must be >= 2");
    if (u == v) throw DegenerateSample("r_matrix: u = v");
    const Scalar qi = q.inv();
    const Scalar duv = u - v;
    const Scalar diag = (q * u - qi * v) / duv;
    const Scalar ex_v = (q - qi) * v / duv; // on e_ij (x) e_ji, i < j
    const Scalar ex_u = (q - qi) * u / duv; // on e_ji (x) e_ij, i < j

    auto idx = [N](int a, int b) { return (a - 1) * N + (b - 1); }; // basis e_a (x) e_b
    DenseOperator r(N * N);
    for (int i = 1; i <= N; ++i) r.at(idx(i, i), idx(i, i)) = diag;
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            r.at(idx(i, j), idx(i, j)) = 1;
            r.at(idx(j, i), idx(j, i)) = 1;
            // e_ij (x) e_ji maps e_j (x) e_i -> e_i (x) e_j
            r.at(idx(i, j), idx(j, i)) = ex_v;
            // e_ji (x) e_ij maps e_i (x) e_j -> e_j (x) e_i
            r.at(idx(j, i), idx(i, j)) = ex_u;
        }
    return r;
}

DenseOperator r_plus(int N, const Scalar& q, const Scalar& u, const Scalar& v) {
    const Scalar den = q * u - q.inv() * v;
    if (den.is_zero()) throw DegenerateSample("r_plus: qu = q^{-1}v");
    return scalar_mul((u - v) / den, r_matrix(N, q, u, v));
}

DenseOperator r_minus(int N, const Scalar& q, const Scalar& u, const Scalar& v) {
    DenseOperator inv = inverse(r_plus(N, q, v, u));
    DenseOperator p = permutation_op(TensorShape{N, N}, 1, 2);
    return compose(p, compose(inv, p));
}

std::vector<std::pair<int, int>> ordered_r_pairs(int M) {
    std::vector<std::pair<int, int>> pairs;
    for (int j = M; j >= 2; --j)
        for (int i = j - 1; i >= 1; --i) pairs.emplace_back(j, i);
    return pairs;
}

DenseOperator ordered_r_product(int N, const Scalar& q, const std::vector<Scalar>& u) {
    const int M = static_cast<int>(u.size());
    TensorShape shape(std::vector<int>(static_cast<std::size_t>(M), N));
    DenseOperator acc = DenseOperator::identity(shape.total());
    // right-to-left accumulation: acc = factor * acc
    auto pairs = ordered_r_pairs(M);
    std::reverse(pairs.begin(), pairs.end());
    for (auto [j, i] : pairs) {
        DenseOperator rji = r_matrix(N, q, u[static_cast<std::size_t>(j - 1)], u[static_cast<std::size_t>(i - 1)]);
        acc = mult_embedded_left(rji, {j, i}, shape, acc);
    }
    return acc;
}

} // namespace qgln
