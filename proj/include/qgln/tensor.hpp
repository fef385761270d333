#pragma once

#include <initializer_list>
#include <set>
#include <vector>

#include "qgln/scalar.hpp"

namespace qgln {

// Basis convention, fixed once for the whole project: the basis index of a
// tensor product is the mixed-radix number whose FIRST factor is the most
// significant digit. Slot numbers in the public API are 1-based; basis
// indices and digits are 0-based (digit d of a slot of dimension N means
// the basis vector e_{d+1}).
struct TensorShape {
    std::vector<int> dims;

    TensorShape() = default;
    TensorShape(std::initializer_list<int> d) : dims(d) {}
    explicit TensorShape(std::vector<int> d) : dims(std::move(d)) {}

    int num_slots() const { return static_cast<int>(dims.size()); }
    int total() const {
        int p = 1;
        for (int d : dims) p *= d;
        return p;
    }
    int dim_of(int slot) const { return dims.at(static_cast<std::size_t>(slot - 1)); }

    void digits_of(int index, std::vector<int>& out) const;
    int index_of(const std::vector<int>& digits) const;
};

class KetVector {
  public:
    KetVector() = default;
    explicit KetVector(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim)) {}

    int dim() const { return dim_; }
    Scalar& operator[](int i) { return e_[static_cast<std::size_t>(i)]; }
    const Scalar& operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }

    bool is_zero() const {
        for (const Scalar& s : e_)
            if (!s.is_zero()) return false;
        return true;
    }
    friend bool operator==(const KetVector& a, const KetVector& b) {
        if (a.dim_ != b.dim_) return false;
        for (int i = 0; i < a.dim_; ++i)
            if (a.e_[static_cast<std::size_t>(i)] != b.e_[static_cast<std::size_t>(i)]) return false;
        return true;
    }
    friend bool operator!=(const KetVector& a, const KetVector& b) { return !(a == b); }

    KetVector& operator+=(const KetVector& o);

  private:
    int dim_ = 0;
    std::vector<Scalar> e_;
};

// Dense square operator, row-major, rows = output index.
class DenseOperator {
  public:
    DenseOperator() = default;
    explicit DenseOperator(int dim) : dim_(dim), e_(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim)) {}
    static DenseOperator identity(int dim);

    int dim() const { return dim_; }
    Scalar& at(int r, int c) { return e_[static_cast<std::size_t>(r) * dim_ + c]; }
    const Scalar& at(int r, int c) const { return e_[static_cast<std::size_t>(r) * dim_ + c]; }

    bool is_zero() const {
        for (const Scalar& s : e_)
            if (!s.is_zero()) return false;
        return true;
    }
    friend bool operator==(const DenseOperator& a, const DenseOperator& b) {
        if (a.dim_ != b.dim_) return false;
        for (std::size_t i = 0; i < a.e_.size(); ++i)
            if (a.e_[i] != b.e_[i]) return false;
        return true;
    }
    friend bool operator!=(const DenseOperator& a, const DenseOperator& b) { return !(a == b); }

    DenseOperator& operator+=(const DenseOperator& o);
    DenseOperator& operator-=(const DenseOperator& o);

  private:
    int dim_ = 0;
    std::vector<Scalar> e_;
};

// e_{ij}: single 1 in row i, column j (1-based, 1 <= i,j <= N).
DenseOperator matrix_unit(int N, int i, int j);

DenseOperator compose(const DenseOperator& a, const DenseOperator& b); // a∘b
KetVector apply(const DenseOperator& a, const KetVector& x);
DenseOperator kron(const DenseOperator& a, const DenseOperator& b); // a on the first (most significant) factor
DenseOperator kron(const std::vector<DenseOperator>& ops);          // left fold; empty list gives the 1x1 identity
KetVector kron(const KetVector& a, const KetVector& b);
DenseOperator scalar_mul(const Scalar& s, const DenseOperator& a);
KetVector scalar_mul(const Scalar& s, const KetVector& x);
Scalar trace_of(const DenseOperator& a);

// op acting on one slot of the product, identity elsewhere.
DenseOperator embed(const DenseOperator& op, int slot, const TensorShape& shape);

// Swap of two equal-dimension slots.
DenseOperator permutation_op(const TensorShape& shape, int a, int b);

// Trace out the given slots; the result acts on the remaining slots in
// their original order. Tracing every slot gives a 1x1 operator.
DenseOperator partial_trace(const DenseOperator& op, const TensorShape& shape, const std::set<int>& traced_slots);

// Exact Gauss-Jordan inverse. Throws SingularCorner on singular input.
DenseOperator inverse(const DenseOperator& a);

// out += (small acting on the listed slots, identity elsewhere) * in.
// `slots` is an ordered list: the first listed slot is the most significant
// index of `small`. Cost is proportional to the nonzero entries actually
// touched, so chains applied to sparse vectors stay within their weight
// sector for free.
void accumulate_on_slots(const DenseOperator& small, const std::vector<int>& slots, const TensorShape& shape,
                         const KetVector& in, KetVector& out);
KetVector apply_on_slots(const DenseOperator& small, const std::vector<int>& slots, const TensorShape& shape,
                         const KetVector& in);

// embed(small)*X and X*embed(small) without forming embed(small).
DenseOperator mult_embedded_left(const DenseOperator& small, const std::vector<int>& slots, const TensorShape& shape,
                                 const DenseOperator& x);
DenseOperator mult_embedded_right(const DenseOperator& small, const std::vector<int>& slots, const TensorShape& shape,
                                  const DenseOperator& x);

} // namespace qgln
