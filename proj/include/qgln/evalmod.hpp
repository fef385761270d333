#pragma once

#include <vector>

#include "qgln/rmatrix.hpp"
#include "qgln/tensor.hpp"

namespace qgln {

// Tensor product of vector evaluation representations
// V = V(z_1) (x) ... (x) V(z_n); n = 0 is the trivial (one-dimensional)
// module, the unit of the tensor product.
struct ModuleShape {
    int N = 2;
    std::vector<Scalar> z;

    int factors() const { return static_cast<int>(z.size()); }
    int dim() const {
        int d = 1;
        for (int a = 0; a < factors(); ++a) d *= N;
        return d;
    }
    TensorShape tensor_shape() const { return TensorShape(std::vector<int>(z.size(), N)); }
    ModuleShape factor(int a) const { return ModuleShape{N, {z.at(static_cast<std::size_t>(a))}}; }
    ModuleShape tail(int from) const { // factors from..n-1
        return ModuleShape{N, std::vector<Scalar>(z.begin() + from, z.end())};
    }
};

// N x N grid of operators on the module: an L-operator (or any aux-space
// matrix) with noncommuting entries. 1-based aux indices.
struct AuxMatrix {
    int N = 0;
    int mdim = 0;
    std::vector<DenseOperator> g; // row-major N x N

    AuxMatrix() = default;
    AuxMatrix(int n, int module_dim)
        : N(n), mdim(module_dim), g(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), DenseOperator(module_dim)) {}

    DenseOperator& at(int i, int j) { return g[static_cast<std::size_t>(i - 1) * N + (j - 1)]; }
    const DenseOperator& at(int i, int j) const { return g[static_cast<std::size_t>(i - 1) * N + (j - 1)]; }

    static AuxMatrix identity(int n, int module_dim);
    friend bool operator==(const AuxMatrix& a, const AuxMatrix& b) { return a.N == b.N && a.mdim == b.mdim && a.g == b.g; }
};

// Slice an operator on (aux) (x) (C^N) into its N x N grid of aux blocks;
// the aux index is the first tensor factor.
AuxMatrix aux_blocks(const DenseOperator& r, int N);

// Coproduct composition: `first` acts on the leading factors, `second` on a
// new trailing factor group. Entry (i,j) of the result is
// sum_k first(k,j) (x) second(i,k), matching Delta(L_ij) = sum_k L_kj (x) L_ik
// with the first coproduct slot on the first module factor.
AuxMatrix couple(const AuxMatrix& first, const AuxMatrix& second);

// Flatten to a single operator on (aux) (x) (module), aux most significant.
DenseOperator assemble_aux(const AuxMatrix& a);

// L^+(u) on the module: R^+(u, z) for one factor, coproduct-composed as
// R^{+,(0,n)}(u,z_n) ... R^{+,(0,1)}(u,z_1) for several. n = 0 gives the
// identity grid.
AuxMatrix l_plus(const ModuleShape& shape, const Scalar& q, const Scalar& u);

// Same with R^-(u, z).
AuxMatrix l_minus(const ModuleShape& shape, const Scalar& q, const Scalar& u);

// L^-(0): the zero mode of the minus L-operator; plain substitution u = 0
// for evaluation modules. Strictly lower aux entries vanish.
AuxMatrix zero_mode_l_minus(const ModuleShape& shape, const Scalar& q);

// e_1 (x) ... (x) e_1.
KetVector singular_vector(const ModuleShape& shape);

// Lambda_i(u): eigenvalue of L_ii(u) on the singular vector. Multiplicative
// over factors; a single factor contributes 1 for i = 1 and
// (u - z)/(qu - q^{-1}z) for i >= 2.
Scalar weight_series(const ModuleShape& shape, const Scalar& q, int i, const Scalar& u);

} // namespace qgln
