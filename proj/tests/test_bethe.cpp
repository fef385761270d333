#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "qgln/bethe.hpp"
#include "qgln/sample.hpp"

using namespace qgln;

namespace {

KetVector basis_ket(int dim, int i) {
    KetVector v(dim);
    v[i] = 1;
    return v;
}

// brute-force monodromy: dense embeds and dense composition throughout
DenseOperator monodromy_brute(const ModuleShape& mod, const Scalar& q, const std::vector<Scalar>& u, bool left) {
    const int M = static_cast<int>(u.size());
    std::vector<int> dims(static_cast<std::size_t>(M), mod.N);
    dims.push_back(mod.dim());
    TensorShape big(dims);
    auto lk = [&](int r) {
        DenseOperator l = assemble_aux(l_plus(mod, q, u[static_cast<std::size_t>(r - 1)]));
        // dense embed of the (aux r, module) pair through a permutation-free
        // route: expand over the remaining aux slots
        return mult_embedded_left(l, {r, M + 1}, big, DenseOperator::identity(big.total()));
    };
    DenseOperator rprod = DenseOperator::identity(big.total());
    for (auto [j, i] : ordered_r_pairs(M)) {
        DenseOperator rji = mult_embedded_left(r_matrix(mod.N, q, u[static_cast<std::size_t>(j - 1)], u[static_cast<std::size_t>(i - 1)]),
                                               {j, i}, big, DenseOperator::identity(big.total()));
        rprod = compose(rprod, rji);
    }
    DenseOperator acc = DenseOperator::identity(big.total());
    if (left) {
        for (int r = 1; r <= M; ++r) acc = compose(acc, lk(r));
        acc = compose(acc, rprod);
    } else {
        acc = rprod;
        for (int r = M; r >= 1; --r) acc = compose(acc, lk(r));
    }
    return acc;
}

// the trace formula evaluated literally: full monodromy operator, matrix
// units multiplied in, every aux slot partial-traced
KetVector bethe_brute(const ModuleShape& mod, const Scalar& q, const BarN& nbar, const std::vector<Scalar>& t) {
    const int M = nbar.total();
    if (M == 0) return singular_vector(mod);
    std::vector<int> dims(static_cast<std::size_t>(M), mod.N);
    dims.push_back(mod.dim());
    TensorShape big(dims);
    DenseOperator op = monodromy_brute(mod, q, t, true);
    for (int r = 1; r <= M; ++r) {
        int c = nbar.colour_of_slot(r);
        op = mult_embedded_right(matrix_unit(mod.N, c + 1, c), {r}, big, op);
    }
    std::set<int> traced;
    for (int r = 1; r <= M; ++r) traced.insert(r);
    DenseOperator reduced = partial_trace(op, big, traced);
    Scalar pre = 1;
    int base = 0;
    for (int count : nbar.counts) {
        for (int i = 0; i < count; ++i)
            for (int j = i + 1; j < count; ++j)
                pre *= (t[static_cast<std::size_t>(base + i)] - t[static_cast<std::size_t>(base + j)]) /
                       (q.inv() * t[static_cast<std::size_t>(base + i)] - q * t[static_cast<std::size_t>(base + j)]);
        base += count;
    }
    return scalar_mul(pre, apply(reduced, singular_vector(mod)));
}

} // namespace

TEST_CASE("M=1 monodromy is the plain L-operator on aux (x) V") {
    SamplePoint sp = sample_point(1, 1, 1);
    ModuleShape mod{2, {sp.z[0]}};
    DenseOperator t = monodromy_T(mod, sp.q, {sp.t[0]}, MonodromyVariant::left);
    CHECK(t == assemble_aux(l_plus(mod, sp.q, sp.t[0])));
    CHECK(t == monodromy_T(mod, sp.q, {sp.t[0]}, MonodromyVariant::right));
}

TEST_CASE("the two monodromy presentations agree entrywise") {
    for (std::uint64_t seed : {2u, 3u}) {
        SamplePoint sp = sample_point(seed, 1, 2);
        for (int N : {2, 3}) {
            ModuleShape mod{N, {sp.z[0]}};
            CHECK(monodromy_T(mod, sp.q, sp.t, MonodromyVariant::left) ==
                  monodromy_T(mod, sp.q, sp.t, MonodromyVariant::right));
        }
    }
}

TEST_CASE("slot-wise monodromy equals the brute-force dense product") {
    SamplePoint sp = sample_point(4, 1, 2);
    ModuleShape mod{2, {sp.z[0]}};
    CHECK(monodromy_T(mod, sp.q, sp.t, MonodromyVariant::left) == monodromy_brute(mod, sp.q, sp.t, true));
    CHECK(monodromy_T(mod, sp.q, sp.t, MonodromyVariant::right) == monodromy_brute(mod, sp.q, sp.t, false));

    // three variables exercise the ordering of the R-factor product
    SamplePoint sp3 = sample_point(14, 1, 3);
    ModuleShape mod3{2, {sp3.z[0]}};
    CHECK(monodromy_T(mod3, sp3.q, sp3.t, MonodromyVariant::left) == monodromy_brute(mod3, sp3.q, sp3.t, true));
    CHECK(monodromy_T(mod3, sp3.q, sp3.t, MonodromyVariant::right) == monodromy_brute(mod3, sp3.q, sp3.t, false));
}

TEST_CASE("empty multiset gives the singular vector") {
    SamplePoint sp = sample_point(5, 2, 0);
    ModuleShape mod{3, sp.z};
    BarN nbar{{0, 0}};
    CHECK(bethe_B(mod, sp.q, nbar, {}) == singular_vector(mod));
}

TEST_CASE("one excitation on one site: closed form") {
    SamplePoint sp = sample_point(6, 1, 1);
    const Scalar &q = sp.q, &z = sp.z[0], &t = sp.t[0];
    ModuleShape mod{2, {z}};
    KetVector got = bethe_B(mod, q, BarN{{1}}, {t});
    CHECK(got == scalar_mul((q - q.inv()) * z / (q * t - q.inv() * z), basis_ket(2, 1)));
}

TEST_CASE("trace formula agrees with the literal partial-trace evaluation") {
    SamplePoint sp = sample_point(7, 1, 2);
    {
        ModuleShape mod{2, {sp.z[0]}};
        BarN nbar{{2}};
        CHECK(bethe_B(mod, sp.q, nbar, sp.t) == bethe_brute(mod, sp.q, nbar, sp.t));
    }
    {
        ModuleShape mod{3, {sp.z[0]}};
        BarN nbar{{1, 1}};
        CHECK(bethe_B(mod, sp.q, nbar, sp.t) == bethe_brute(mod, sp.q, nbar, sp.t));
    }
}

TEST_CASE("two same-colour variables commute inside the trace vector") {
    SamplePoint sp = sample_point(8, 2, 2);
    ModuleShape mod{2, sp.z};
    BarN nbar{{2}};
    KetVector a = bethe_B(mod, sp.q, nbar, {sp.t[0], sp.t[1]});
    KetVector b = bethe_B(mod, sp.q, nbar, {sp.t[1], sp.t[0]});
    CHECK_FALSE(a.is_zero());
    CHECK(a == b);
}

TEST_CASE("partial operator at l=k is an L-entry; at l=k+1 the identity") {
    SamplePoint sp = sample_point(9, 1, 1);
    for (int N : {2, 3}) {
        ModuleShape mod{N, {sp.z[0]}};
        for (int k = 1; k < N; ++k)
            CHECK(bethe_partial(mod, sp.q, k, k, {sp.t[0]}) == l_plus(mod, sp.q, sp.t[0]).at(k, k + 1));
        CHECK(bethe_partial(mod, sp.q, 2, 1, {}) == DenseOperator::identity(mod.dim()));
    }
}

TEST_CASE("B_[1,k] on the singular vector is the staircase trace vector") {
    SamplePoint sp = sample_point(10, 2, 2);
    ModuleShape mod{3, sp.z};
    KetVector via_partial = bethe_partial_apply(mod, sp.q, 1, 2, sp.t, singular_vector(mod));
    KetVector via_trace = bethe_B(mod, sp.q, BarN{{1, 1}}, sp.t);
    CHECK_FALSE(via_partial.is_zero());
    CHECK(via_partial == via_trace);
}

TEST_CASE("w_B: canonical inputs pass through; the pullback handles the rest") {
    SamplePoint sp = sample_point(11, 1, 2);
    const Scalar& q = sp.q;
    ModuleShape mod{3, {sp.z[0]}};

    CHECK(w_B(mod, q, PiMultiset{}, {}) == singular_vector(mod));
    CHECK(w_B(mod, q, PiMultiset({1, 2}), sp.t) == bethe_B(mod, q, BarN{{1, 1}}, sp.t));

    // colour order (2,1) differs from (1,2) by exactly one gamma~ inversion factor
    KetVector lhs = w_B(mod, q, PiMultiset({2, 1}), {sp.t[0], sp.t[1]});
    KetVector sorted_val = bethe_B(mod, q, BarN{{1, 1}}, {sp.t[1], sp.t[0]});
    KetVector rhs = scalar_mul(gamma_tilde_kernel(q, sp.t[0], sp.t[1], 2, 1), sorted_val);
    CHECK_FALSE(lhs.is_zero());
    CHECK(lhs == rhs);
}

TEST_CASE("invalid colours are rejected") {
    SamplePoint sp = sample_point(12, 1, 1);
    ModuleShape mod{2, {sp.z[0]}};
    CHECK_THROWS_AS(w_B(mod, sp.q, PiMultiset({2}), {sp.t[0]}), ConfigInvalid);
}

namespace {

// sigma restricted to a position subset, renumbered by rank
ColourPermutation restrict_to(const ColourPermutation& sigma, const std::vector<int>& positions) {
    std::vector<int> images;
    for (int p : positions) images.push_back(sigma.to[static_cast<std::size_t>(p)]);
    std::vector<int> sorted = images;
    std::sort(sorted.begin(), sorted.end());
    ColourPermutation out;
    for (int img : images)
        out.to.push_back(static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), img) - sorted.begin()));
    return out;
}

} // namespace

TEST_CASE("pullback is compatible with the coproduct expansion") {
    SamplePoint sp = sample_point(13, 2, 3);
    const Scalar& q = sp.q;
    ModuleShape mod{3, sp.z};
    ModuleShape v1 = mod.factor(0), v2 = mod.factor(1);
    PiMultiset I({2, 1, 1});

    std::vector<int> to{0, 1, 2};
    do {
        ColourPermutation sigma{to};
        PiMultiset J = apply_permutation(sigma, I);
        KetVector lhs = scalar_mul(pullback_tilde_factor(q, I, sp.t, sigma),
                                   w_B(mod, q, J, permute_values(sigma, sp.t)));
        KetVector rhs(mod.dim());
        for (const Split& s : splits(I.size())) {
            auto part = [&](const ModuleShape& m, const std::vector<int>& positions) {
                PiMultiset ip = I.subset(positions);
                std::vector<Scalar> tp;
                for (int p : positions) tp.push_back(sp.t[static_cast<std::size_t>(p)]);
                ColourPermutation sp_ = restrict_to(sigma, positions);
                KetVector w = w_B(m, q, apply_permutation(sp_, ip), permute_values(sp_, tp));
                return scalar_mul(pullback_tilde_factor(q, ip, tp, sp_), w);
            };
            KetVector w1 = part(v1, s.left);
            if (w1.is_zero()) continue;
            KetVector w2 = part(v2, s.right);
            if (w2.is_zero()) continue;
            Scalar coeff = phi_tilde_factor(q, I, sp.t, s);
            for (int p : s.left) coeff *= weight_series(v2, q, I.colour(p), sp.t[static_cast<std::size_t>(p)]);
            for (int p : s.right) coeff *= weight_series(v1, q, I.colour(p) + 1, sp.t[static_cast<std::size_t>(p)]);
            rhs += scalar_mul(coeff, kron(w1, w2));
        }
        CHECK(lhs == rhs);
        CHECK_FALSE(lhs.is_zero());
    } while (std::next_permutation(to.begin(), to.end()));
}
