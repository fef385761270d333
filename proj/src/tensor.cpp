#include "qgln/tensor.hpp"

#include <algorithm>

namespace qgln {

void TensorShape::digits_of(int index, std::vector<int>& out) const {
    out.resize(dims.size());
    for (int s = num_slots() - 1; s >= 0; --s) {
        int d = dims[static_cast<std::size_t>(s)];
        out[static_cast<std::size_t>(s)] = index % d;
        index /= d;
    }
}

int TensorShape::index_of(const std::vector<int>& digits) const {
    if (digits.size() != dims.size()) throw ShapeMismatch("index_of: digit count");
    int idx = 0;
    for (std::size_t s = 0; s < dims.size(); ++s) {
        if (digits[s] < 0 || digits[s] >= dims[s]) throw IndexOutOfRange("index_of: digit out of range");
        idx = idx * dims[s] + digits[s];
    }
    return idx;
}

KetVector& KetVector::operator+=(const KetVector& o) {
    if (dim_ != o.dim_) throw ShapeMismatch("KetVector +=");
    for (int i = 0; i < dim_; ++i)
        if (!o.e_[static_cast<std::size_t>(i)].is_zero()) e_[static_cast<std::size_t>(i)] += o.e_[static_cast<std::size_t>(i)];
    return *this;
}

DenseOperator DenseOperator::identity(int dim) {
    DenseOperator r(dim);
    for (int i = 0; i < dim; ++i) r.at(i, i) = 1;
    return r;
}

DenseOperator& DenseOperator::operator+=(const DenseOperator& o) {
    if (dim_ != o.dim_) throw ShapeMismatch("DenseOperator +=");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!o.e_[i].is_zero()) e_[i] += o.e_[i];
    return *this;
}

DenseOperator& DenseOperator::operator-=(const DenseOperator& o) {
    if (dim_ != o.dim_) throw ShapeMismatch("DenseOperator -=");
    for (std::size_t i = 0; i < e_.size(); ++i)
        if (!o.e_[i].is_zero()) e_[i] -= o.e_[i];
    return *this;
}

DenseOperator matrix_unit(int N, int i, int j) {
    if (i < 1 || i > N || j < 1 || j > N) throw IndexOutOfRange("matrix_unit");
    DenseOperator r(N);
    r.at(i - 1, j - 1) = 1;
    return r;
}

DenseOperator compose(const DenseOperator& a, const DenseOperator& b) {
    if (a.dim() != b.dim()) throw ShapeMismatch("compose");
    const int n = a.dim();
    DenseOperator c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                const Scalar& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                c.at(i, j).add_mul(aik, bkj);
            }
        }
    return c;
}

KetVector apply(const DenseOperator& a, const KetVector& x) {
    if (a.dim() != x.dim()) throw ShapeMismatch("apply");
    const int n = a.dim();
    KetVector y(n);
    for (int k = 0; k < n; ++k) {
        if (x[k].is_zero()) continue;
        for (int i = 0; i < n; ++i) {
            const Scalar& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            y[i].add_mul(aik, x[k]);
        }
    }
    return y;
}

DenseOperator kron(const DenseOperator& a, const DenseOperator& b) {
    const int na = a.dim(), nb = b.dim();
    DenseOperator c(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const Scalar& aij = a.at(i, j);
            if (aij.is_zero()) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l) {
                    const Scalar& bkl = b.at(k, l);
                    if (bkl.is_zero()) continue;
                    c.at(i * nb + k, j * nb + l) = aij * bkl;
                }
        }
    return c;
}

DenseOperator kron(const std::vector<DenseOperator>& ops) {
    DenseOperator acc = DenseOperator::identity(1);
    for (const DenseOperator& op : ops) acc = kron(acc, op);
    return acc;
}

KetVector kron(const KetVector& a, const KetVector& b) {
    KetVector c(a.dim() * b.dim());
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < b.dim(); ++j) {
            if (b[j].is_zero()) continue;
            c[i * b.dim() + j] = a[i] * b[j];
        }
    }
    return c;
}

DenseOperator scalar_mul(const Scalar& s, const DenseOperator& a) {
    DenseOperator c(a.dim());
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (!a.at(i, j).is_zero()) c.at(i, j) = s * a.at(i, j);
    return c;
}

KetVector scalar_mul(const Scalar& s, const KetVector& x) {
    KetVector y(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        if (!x[i].is_zero()) y[i] = s * x[i];
    return y;
}

Scalar trace_of(const DenseOperator& a) {
    Scalar t = 0;
    for (int i = 0; i < a.dim(); ++i) t += a.at(i, i);
    return t;
}

namespace {

// Per-slot strides of the mixed-radix index, first slot most significant.
std::vector<int> strides_of(const TensorShape& shape) {
    std::vector<int> st(shape.dims.size());
    int acc = 1;
    for (int s = shape.num_slots() - 1; s >= 0; --s) {
        st[static_cast<std::size_t>(s)] = acc;
        acc *= shape.dims[static_cast<std::size_t>(s)];
    }
    return st;
}

// Offsets of the combined sub-index of `slots` inside the full index, plus
// the dimension of the combined sub-index.
struct SlotView {
    std::vector<int> offset; // offset[s] = contribution of sub-index s to the full index
    std::vector<int> sub_dims;
    int sub_total = 1;

    SlotView(const std::vector<int>& slots, const TensorShape& shape) {
        auto st = strides_of(shape);
        sub_dims.reserve(slots.size());
        for (int slot : slots) {
            if (slot < 1 || slot > shape.num_slots()) throw IndexOutOfRange("slot out of range");
            sub_dims.push_back(shape.dim_of(slot));
            sub_total *= shape.dim_of(slot);
        }
        offset.assign(static_cast<std::size_t>(sub_total), 0);
        for (int s = 0; s < sub_total; ++s) {
            int rem = s, off = 0;
            for (int k = static_cast<int>(slots.size()) - 1; k >= 0; --k) {
                int d = sub_dims[static_cast<std::size_t>(k)];
                off += (rem % d) * st[static_cast<std::size_t>(slots[static_cast<std::size_t>(k)] - 1)];
                rem /= d;
            }
            offset[static_cast<std::size_t>(s)] = off;
        }
        // sub_index_of needs the strides of the listed slots
        slot_strides.reserve(slots.size());
        for (int slot : slots) slot_strides.push_back(st[static_cast<std::size_t>(slot - 1)]);
    }

    int sub_index_of(int full_index) const {
        int s = 0;
        for (std::size_t k = 0; k < slot_strides.size(); ++k)
            s = s * sub_dims[k] + (full_index / slot_strides[k]) % sub_dims[k];
        return s;
    }

    std::vector<int> slot_strides;
};

} // namespace

void accumulate_on_slots(const DenseOperator& small, const std::vector<int>& slots, const TensorShape& shape,
                         const KetVector& in, KetVector& out) {
    SlotView view(slots, shape);
    if (small.dim() != view.sub_total) throw ShapeMismatch("accumulate_on_slots: operator vs slots");
    if (in.dim() != shape.total() || out.dim() != shape.total()) throw ShapeMismatch("accumulate_on_slots: vector");
    for (int idx = 0; idx < in.dim(); ++idx) {
        if (in[idx].is_zero()) continue;
        int s_in = view.sub_index_of(idx);
        int base = idx - view.offset[static_cast<std::size_t>(s_in)];
        for (int r = 0; r < view.sub_total; ++r) {
            const Scalar& w = small.at(r, s_in);
            if (w.is_zero()) continue;
            out[base + view.offset[static_cast<std::size_t>(r)]].add_mul(w, in[idx]);
        }
    }
}

KetVector apply_on_slots(const DenseOperator& small, const std::vector<int>& slots, const TensorShape& shape,
                         const KetVector& in) {
    KetVector out(shape.total());
    accumulate_on_slots(small, slots, shape, in, out);
    return out;
}

DenseOperator mult_embedded_left(const DenseOperator& small, const std::vector<int>& slots, const TensorShape& shape,
                                 const DenseOperator& x) {
    SlotView view(slots, shape);
    if (small.dim() != view.sub_total) throw ShapeMismatch("mult_embedded_left: operator vs slots");
    if (x.dim() != shape.total()) throw ShapeMismatch("mult_embedded_left: matrix");
    const int n = x.dim();
    DenseOperator res(n);
    std::vector<std::pair<int, const Scalar*>> col; // (destination row, weight)
    for (int r = 0; r < n; ++r) {
        int s_in = view.sub_index_of(r);
        int base = r - view.offset[static_cast<std::size_t>(s_in)];
        col.clear();
        for (int rs = 0; rs < view.sub_total; ++rs) {
            const Scalar& w = small.at(rs, s_in);
            if (!w.is_zero()) col.emplace_back(base + view.offset[static_cast<std::size_t>(rs)], &w);
        }
        if (col.empty()) continue;
        for (int c = 0; c < n; ++c) {
            const Scalar& v = x.at(r, c);
            if (v.is_zero()) continue;
            for (auto& [dest, w] : col) res.at(dest, c).add_mul(*w, v);
        }
    }
    return res;
}

DenseOperator mult_embedded_right(const DenseOperator& small, const std::vector<int>& slots, const TensorShape& shape,
                                  const DenseOperator& x) {
    SlotView view(slots, shape);
    if (small.dim() != view.sub_total) throw ShapeMismatch("mult_embedded_right: operator vs slots");
    if (x.dim() != shape.total()) throw ShapeMismatch("mult_embedded_right: matrix");
    const int n = x.dim();
    DenseOperator res(n);
    // per input column c: list of (destination column, weight = small(s(c), cs))
    std::vector<std::vector<std::pair<int, const Scalar*>>> colmap(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c) {
        int s_c = view.sub_index_of(c);
        int base = c - view.offset[static_cast<std::size_t>(s_c)];
        for (int cs = 0; cs < view.sub_total; ++cs) {
            const Scalar& w = small.at(s_c, cs);
            if (!w.is_zero()) colmap[static_cast<std::size_t>(c)].emplace_back(base + view.offset[static_cast<std::size_t>(cs)], &w);
        }
    }
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            const Scalar& v = x.at(r, c);
            if (v.is_zero()) continue;
            for (auto& [dest, w] : colmap[static_cast<std::size_t>(c)]) res.at(r, dest).add_mul(v, *w);
        }
    return res;
}

DenseOperator embed(const DenseOperator& op, int slot, const TensorShape& shape) {
    if (slot < 1 || slot > shape.num_slots()) throw IndexOutOfRange("embed: slot");
    if (op.dim() != shape.dim_of(slot)) throw ShapeMismatch("embed: operator vs slot dimension");
    return mult_embedded_left(op, {slot}, shape, DenseOperator::identity(shape.total()));
}

DenseOperator permutation_op(const TensorShape& shape, int a, int b) {
    if (a < 1 || a > shape.num_slots() || b < 1 || b > shape.num_slots()) throw IndexOutOfRange("permutation_op: slot");
    if (shape.dim_of(a) != shape.dim_of(b)) throw ShapeMismatch("permutation_op: slot dimensions differ");
    const int n = shape.total();
    DenseOperator r(n);
    std::vector<int> digits;
    for (int idx = 0; idx < n; ++idx) {
        shape.digits_of(idx, digits);
        std::swap(digits[static_cast<std::size_t>(a - 1)], digits[static_cast<std::size_t>(b - 1)]);
        r.at(shape.index_of(digits), idx) = 1;
    }
    return r;
}

DenseOperator partial_trace(const DenseOperator& op, const TensorShape& shape, const std::set<int>& traced_slots) {
    if (op.dim() != shape.total()) throw ShapeMismatch("partial_trace: operator vs shape");
    for (int s : traced_slots)
        if (s < 1 || s > shape.num_slots()) throw IndexOutOfRange("partial_trace: slot");
    std::vector<int> kept, traced;
    for (int s = 1; s <= shape.num_slots(); ++s)
        (traced_slots.count(s) ? traced : kept).push_back(s);

    TensorShape kept_shape, traced_shape;
    for (int s : kept) kept_shape.dims.push_back(shape.dim_of(s));
    for (int s : traced) traced_shape.dims.push_back(shape.dim_of(s));

    const int nk = kept_shape.total();
    const int nt = traced_shape.total();
    DenseOperator res(nk);
    std::vector<int> kd, td, full(static_cast<std::size_t>(shape.num_slots()));
    auto fill_full = [&](const std::vector<int>& kdg, const std::vector<int>& tdg) {
        for (std::size_t i = 0; i < kept.size(); ++i) full[static_cast<std::size_t>(kept[i] - 1)] = kdg[i];
        for (std::size_t i = 0; i < traced.size(); ++i) full[static_cast<std::size_t>(traced[i] - 1)] = tdg[i];
        return shape.index_of(full);
    };
    std::vector<int> kd2;
    for (int i = 0; i < nk; ++i) {
        kept_shape.digits_of(i, kd);
        for (int j = 0; j < nk; ++j) {
            kept_shape.digits_of(j, kd2);
            Scalar sum = 0;
            for (int d = 0; d < nt; ++d) {
                traced_shape.digits_of(d, td);
                sum += op.at(fill_full(kd, td), fill_full(kd2, td));
            }
            res.at(i, j) = sum;
        }
    }
    return res;
}

DenseOperator inverse(const DenseOperator& a) {
    const int n = a.dim();
    DenseOperator m = a;
    DenseOperator r = DenseOperator::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int row = col; row < n; ++row)
            if (!m.at(row, col).is_zero()) { piv = row; break; }
        if (piv < 0) throw SingularCorner();
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(r.at(piv, j), r.at(col, j));
            }
        Scalar inv_p = m.at(col, col).inv();
        if (!inv_p.is_one())
            for (int j = 0; j < n; ++j) {
                if (!m.at(col, j).is_zero()) m.at(col, j) *= inv_p;
                if (!r.at(col, j).is_zero()) r.at(col, j) *= inv_p;
            }
        for (int row = 0; row < n; ++row) {
            if (row == col || m.at(row, col).is_zero()) continue;
            Scalar f = m.at(row, col);
            for (int j = 0; j < n; ++j) {
                if (!m.at(col, j).is_zero()) m.at(row, j) -= f * m.at(col, j);
                if (!r.at(col, j).is_zero()) r.at(row, j) -= f * r.at(col, j);
            }
        }
    }
    return r;
}

} // namespace qgln
