#include "qgln/checks.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace qgln {

namespace {

// --- witness helpers -------------------------------------------------------

void mismatch_ket(CheckOutcome& out, const std::string& what, const KetVector& a, const KetVector& b) {
    if (!out.pass) return;
    if (a.dim() != b.dim()) {
        out.pass = false;
        out.witness = what + ": dimension " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim());
        return;
    }
    for (int i = 0; i < a.dim(); ++i)
        if (a[i] != b[i]) {
            out.pass = false;
            out.witness = what + " component " + std::to_string(i) + ": " + a[i].str() + " != " + b[i].str();
            return;
        }
}

void mismatch_op(CheckOutcome& out, const std::string& what, const DenseOperator& a, const DenseOperator& b) {
    if (!out.pass) return;
    if (a.dim() != b.dim()) {
        out.pass = false;
        out.witness = what + ": dimension " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim());
        return;
    }
    for (int r = 0; r < a.dim(); ++r)
        for (int c = 0; c < a.dim(); ++c)
            if (a.at(r, c) != b.at(r, c)) {
                out.pass = false;
                out.witness = what + " entry (" + std::to_string(r) + "," + std::to_string(c) + "): " +
                              a.at(r, c).str() + " != " + b.at(r, c).str();
                return;
            }
}

ModuleShape module_of(const CheckParams& p, const SamplePoint& sp) { return ModuleShape{p.N, sp.z}; }

std::string pat_str(const std::vector<int>& pattern) {
    std::string s;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(pattern[i]);
    }
    return s.empty() ? "-" : s;
}

// --- r-matrix level --------------------------------------------------------

CheckOutcome check_yang_baxter(const CheckParams& p, std::uint64_t seed) {
    SamplePoint sp = sample_point(seed, 0, 3);
    const Scalar& q = sp.q;
    const Scalar &u1 = sp.t[0], &u2 = sp.t[1], &u3 = sp.t[2];
    const int N = p.N;
    TensorShape shape{N, N, N};
    DenseOperator r12 = r_matrix(N, q, u1, u2);
    DenseOperator r13 = r_matrix(N, q, u1, u3);
    DenseOperator r23 = r_matrix(N, q, u2, u3);
    // R12 R13 R23
    DenseOperator lhs = mult_embedded_left(r23, {2, 3}, shape, DenseOperator::identity(shape.total()));
    lhs = mult_embedded_left(r13, {1, 3}, shape, lhs);
    lhs = mult_embedded_left(r12, {1, 2}, shape, lhs);
    // R23 R13 R12
    DenseOperator rhs = mult_embedded_left(r12, {1, 2}, shape, DenseOperator::identity(shape.total()));
    rhs = mult_embedded_left(r13, {1, 3}, shape, rhs);
    rhs = mult_embedded_left(r23, {2, 3}, shape, rhs);
    CheckOutcome out;
    mismatch_op(out, "yang-baxter", lhs, rhs);
    return out;
}

CheckOutcome check_inversion(const CheckParams& p, std::uint64_t seed) {
    SamplePoint sp = sample_point(seed, 0, 2);
    const Scalar& q = sp.q;
    const Scalar &u1 = sp.t[0], &u2 = sp.t[1];
    const int N = p.N;
    DenseOperator perm = permutation_op(TensorShape{N, N}, 1, 2);
    DenseOperator r12 = r_matrix(N, q, u1, u2);
    DenseOperator r21 = compose(perm, compose(r_matrix(N, q, u2, u1), perm));
    Scalar c = (q * u1 - q.inv() * u2) * (q.inv() * u1 - q * u2) / ((u1 - u2) * (u1 - u2));
    CheckOutcome out;
    mismatch_op(out, "inversion", compose(r12, r21), scalar_mul(c, DenseOperator::identity(N * N)));
    return out;
}

// --- L-operator level ------------------------------------------------------

CheckOutcome check_rll(const CheckParams& p, std::uint64_t seed) {
    SamplePoint sp = sample_point(seed, p.factors, 2);
    const Scalar& q = sp.q;
    const Scalar &u = sp.t[0], &v = sp.t[1];
    ModuleShape mod = module_of(p, sp);
    TensorShape shape{p.N, p.N, mod.dim()};
    DenseOperator r = r_matrix(p.N, q, u, v);
    DenseOperator lpu = assemble_aux(l_plus(mod, q, u));
    DenseOperator lpv = assemble_aux(l_plus(mod, q, v));
    DenseOperator lmu = assemble_aux(l_minus(mod, q, u));
    DenseOperator lmv = assemble_aux(l_minus(mod, q, v));

    auto rll = [&](const DenseOperator& a, const DenseOperator& b) {
        // R (A (x) 1)(1 (x) B) vs (1 (x) B)(A (x) 1) R, A on aux 1, B on aux 2
        DenseOperator lhs = mult_embedded_left(b, {2, 3}, shape, DenseOperator::identity(shape.total()));
        lhs = mult_embedded_left(a, {1, 3}, shape, lhs);
        lhs = mult_embedded_left(r, {1, 2}, shape, lhs);
        DenseOperator rhs = mult_embedded_left(r, {1, 2}, shape, DenseOperator::identity(shape.total()));
        rhs = mult_embedded_left(a, {1, 3}, shape, rhs);
        rhs = mult_embedded_left(b, {2, 3}, shape, rhs);
        return std::make_pair(lhs, rhs);
    };

    CheckOutcome out;
    auto [l1, r1] = rll(lpu, lpv);
    mismatch_op(out, "rll ++", l1, r1);
    if (!out.pass) return out;
    auto [l2, r2] = rll(lmu, lmv);
    mismatch_op(out, "rll --", l2, r2);
    if (!out.pass) return out;
    auto [l3, r3] = rll(lpu, lmv);
    mismatch_op(out, "rll +-", l3, r3);
    return out;
}

CheckOutcome check_triangularity(const CheckParams& p, std::uint64_t seed) {
    SamplePoint sp = sample_point(seed, p.factors, 1);
    const Scalar& q = sp.q;
    const Scalar& u = sp.t[0];
    ModuleShape mod = module_of(p, sp);
    AuxMatrix l = l_plus(mod, q, u);
    KetVector v = singular_vector(mod);
    CheckOutcome out;
    for (int i = 1; i <= p.N && out.pass; ++i)
        for (int j = 1; j < i && out.pass; ++j)
            mismatch_ket(out, "L_" + std::to_string(i) + std::to_string(j) + " v", apply(l.at(i, j), v),
                         KetVector(mod.dim()));
    for (int i = 1; i <= p.N && out.pass; ++i)
        mismatch_ket(out, "L_" + std::to_string(i) + std::to_string(i) + " v", apply(l.at(i, i), v),
                     scalar_mul(weight_series(mod, q, i, u), v));
    return out;
}

CheckOutcome check_gauss_reconstruct(const CheckParams& p, std::uint64_t seed) {
    SamplePoint sp = sample_point(seed, p.factors, 1);
    const Scalar& q = sp.q;
    const Scalar& u = sp.t[0];
    ModuleShape mod = module_of(p, sp);
    AuxMatrix l = l_plus(mod, q, u);
    GaussData gd = gauss(l);
    AuxMatrix rec = gd.reconstruct();
    CheckOutcome out;
    for (int a = 1; a <= p.N && out.pass; ++a)
        for (int b = 1; b <= p.N && out.pass; ++b)
            mismatch_op(out, "FKE entry (" + std::to_string(a) + "," + std::to_string(b) + ")", rec.at(a, b),
                        l.at(a, b));
    KetVector v = singular_vector(mod);
    for (int i = 1; i <= p.N && out.pass; ++i)
        mismatch_ket(out, "K_" + std::to_string(i) + " v", apply(gd.k(i), v),
                     scalar_mul(weight_series(mod, q, i, u), v));
    return out;
}

CheckOutcome check_screening(const CheckParams& p, std::uint64_t seed) {
    CheckOutcome out;
    if (p.N < 3) return out; // no i < j-1 pairs to check
    SamplePoint sp = sample_point(seed, p.factors, 1);
    const Scalar& q = sp.q;
    const Scalar& t = sp.t[0];
    ModuleShape mod = module_of(p, sp);
    GaussData gd = gauss(l_plus(mod, q, t));
    for (int i = 1; i + 2 <= p.N && out.pass; ++i) {
        DenseOperator fi0 = screening_zero_mode(mod, q, i);
        for (int j = i + 2; j <= p.N && out.pass; ++j) {
            DenseOperator lhs = scalar_mul(q - q.inv(), gd.f(i, j));
            DenseOperator rhs = compose(gd.f(i + 1, j), fi0);
            rhs -= scalar_mul(q, compose(fi0, gd.f(i + 1, j)));
            mismatch_op(out, "screening (" + std::to_string(i) + "," + std::to_string(j) + ")", lhs, rhs);
        }
    }
    return out;
}

// --- trace side ------------------------------------------------------------

CheckOutcome check_symmetry(const CheckParams& p, std::uint64_t seed) {
    const int M = static_cast<int>(p.pattern.size());
    SamplePoint sp = sample_point(seed, p.factors, M);
    const Scalar& q = sp.q;
    ModuleShape mod = module_of(p, sp);
    CheckOutcome out;
    if (M == 0) return out;
    const std::vector<Scalar>& u = sp.t;

    // the two monodromy presentations agree
    DenseOperator t_left = monodromy_T(mod, q, u, MonodromyVariant::left);
    mismatch_op(out, "monodromy left vs right", t_left, monodromy_T(mod, q, u, MonodromyVariant::right));
    if (!out.pass) return out;

    // exchange identity: P R^{(i,i+1)}(u_i,u_{i+1}) T(...,u_i,u_{i+1},...) =
    //                    T(...,u_{i+1},u_i,...) P R^{(i+1,i)}(u_{i+1},u_i)
    TensorShape big(std::vector<int>(static_cast<std::size_t>(M), p.N));
    big.dims.push_back(mod.dim());
    DenseOperator swap2 = permutation_op(TensorShape{p.N, p.N}, 1, 2);
    for (int i = 1; i < M && out.pass; ++i) {
        DenseOperator lhs = mult_embedded_left(r_matrix(p.N, q, u[static_cast<std::size_t>(i - 1)], u[static_cast<std::size_t>(i)]),
                                               {i, i + 1}, big, t_left);
        lhs = mult_embedded_left(swap2, {i, i + 1}, big, lhs);
        std::vector<Scalar> uswap = u;
        std::swap(uswap[static_cast<std::size_t>(i - 1)], uswap[static_cast<std::size_t>(i)]);
        // R^{(i+1,i)}: first factor of the small R sits on slot i+1
        DenseOperator rhs = mult_embedded_left(r_matrix(p.N, q, u[static_cast<std::size_t>(i)], u[static_cast<std::size_t>(i - 1)]),
                                               {i + 1, i}, big, DenseOperator::identity(big.total()));
        rhs = mult_embedded_left(swap2, {i, i + 1}, big, rhs);
        rhs = monodromy_mult_left(mod, q, uswap, MonodromyVariant::left, rhs);
        mismatch_op(out, "exchange identity i=" + std::to_string(i), lhs, rhs);
    }
    if (!out.pass) return out;

    // S_nbar symmetry of the trace vector under same-colour permutations
    auto [sorted, sigma0] = canonical_sort(PiMultiset(p.pattern));
    BarN nbar = bar_n_of(sorted, p.N);
    std::vector<Scalar> t0 = permute_values(sigma0, sp.t);
    KetVector base = bethe_B(mod, q, nbar, t0);
    // enumerate products of per-colour permutations via per-group next_permutation
    std::vector<std::vector<int>> groups;
    int off = 0;
    for (int c : nbar.counts) {
        std::vector<int> g(static_cast<std::size_t>(c));
        for (int i = 0; i < c; ++i) g[static_cast<std::size_t>(i)] = off + i;
        groups.push_back(g);
        off += c;
    }
    std::function<void(std::size_t, std::vector<int>&)> visit = [&](std::size_t gi, std::vector<int>& perm) {
        if (!out.pass) return;
        if (gi == groups.size()) {
            std::vector<Scalar> tp(t0.size());
            for (std::size_t i = 0; i < t0.size(); ++i) tp[i] = t0[static_cast<std::size_t>(perm[i])];
            mismatch_ket(out, "S_nbar symmetry", bethe_B(mod, q, nbar, tp), base);
            return;
        }
        std::vector<int> g = groups[gi];
        std::sort(g.begin(), g.end());
        do {
            for (std::size_t i = 0; i < g.size(); ++i) perm[static_cast<std::size_t>(groups[gi][i])] = g[i];
            visit(gi + 1, perm);
        } while (out.pass && std::next_permutation(g.begin(), g.end()));
    };
    std::vector<int> perm(t0.size());
    visit(0, perm);
    return out;
}

CheckOutcome check_re_r1(const CheckParams& p, std::uint64_t seed) {
    const int kmax = std::min(3, p.N - 1);
    SamplePoint sp = sample_point(seed, p.factors, kmax);
    const Scalar& q = sp.q;
    ModuleShape mod = module_of(p, sp);
    KetVector v = singular_vector(mod);
    auto tv = [&](int j) -> const Scalar& { return sp.t[static_cast<std::size_t>(j - 1)]; }; // t^j

    std::vector<AuxMatrix> lmats;
    std::vector<GaussData> gds;
    for (int j = 1; j <= kmax; ++j) {
        lmats.push_back(l_plus(mod, q, tv(j)));
        gds.push_back(gauss(lmats.back()));
    }

    CheckOutcome out;
    for (int k = 1; k <= kmax && out.pass; ++k)
        for (int l = 1; l <= k && out.pass; ++l) {
            std::vector<Scalar> tlk(sp.t.begin() + (l - 1), sp.t.begin() + k);
            KetVector lhs = bethe_partial_apply(mod, q, l, k, tlk, v);
            KetVector rhs(mod.dim());
            for (int m = l + 1; m <= k + 1; ++m) {
                KetVector vec = v;
                for (int j = l; j <= m - 1; ++j) vec = apply(lmats[static_cast<std::size_t>(j - 1)].at(j + 1, j + 1), vec);
                vec = apply(gds[static_cast<std::size_t>(m - 2)].f(l, m), vec);
                std::vector<Scalar> tmk(sp.t.begin() + (m - 1), sp.t.begin() + k);
                vec = bethe_partial_apply(mod, q, m, k, tmk, vec);
                Scalar coeff = 1;
                for (int j = l + 1; j <= m - 1; ++j) coeff *= (q - q.inv()) * tv(j) / (tv(j) - tv(j - 1));
                rhs += scalar_mul(coeff, vec);
            }
            mismatch_ket(out, "recurrence l=" + std::to_string(l) + " k=" + std::to_string(k), lhs, rhs);
        }
    return out;
}

CheckOutcome check_re_r2_ind1(const CheckParams& p, std::uint64_t seed) {
    const int kmax = std::min(3, p.N - 1);
    SamplePoint sp = sample_point(seed, p.factors, kmax);
    const Scalar& q = sp.q;
    ModuleShape mod = module_of(p, sp);
    KetVector v = singular_vector(mod);

    CheckOutcome out;
    for (int k = 1; k <= kmax && out.pass; ++k) {
        std::vector<Scalar> t(sp.t.begin(), sp.t.begin() + k);
        KetVector lhs = bethe_partial_apply(mod, q, 1, k, t, v);
        DenseOperator wk = projected_staircase(mod, q, 1, k, t);
        KetVector diag = v;
        Scalar lam = 1;
        for (int j = 1; j <= k; ++j) {
            diag = apply(l_plus(mod, q, t[static_cast<std::size_t>(j - 1)]).at(j + 1, j + 1), diag);
            lam *= weight_series(mod, q, j + 1, t[static_cast<std::size_t>(j - 1)]);
        }
        mismatch_ket(out, "staircase projection k=" + std::to_string(k), lhs, apply(wk, diag));
        mismatch_ket(out, "staircase weights k=" + std::to_string(k), lhs, scalar_mul(lam, apply(wk, v)));
    }
    return out;
}

// --- weight-function level -------------------------------------------------

using Family = KetVector (*)(const ModuleShape&, const Scalar&, const PiMultiset&, const std::vector<Scalar>&);

Collection family_on(Family fam, const ModuleShape& mod, const Scalar& q) {
    return [fam, mod, q](const PiMultiset& I, const std::vector<Scalar>& t) { return fam(mod, q, I, t); };
}

// modified-coproduct right-hand side of a two-block decomposition
KetVector coproduct_tilde_sum(Family fam, const ModuleShape& v1, const ModuleShape& v2, const Scalar& q,
                              const PiMultiset& I, const std::vector<Scalar>& vals) {
    KetVector out(v1.dim() * v2.dim());
    for (const Split& s : splits(I.size())) {
        PiMultiset i1 = I.subset(s.left), i2 = I.subset(s.right);
        std::vector<Scalar> t1, t2;
        for (int pos : s.left) t1.push_back(vals[static_cast<std::size_t>(pos)]);
        for (int pos : s.right) t2.push_back(vals[static_cast<std::size_t>(pos)]);
        KetVector w1 = fam(v1, q, i1, t1);
        if (w1.is_zero()) continue;
        KetVector w2 = fam(v2, q, i2, t2);
        if (w2.is_zero()) continue;
        Scalar coeff = phi_tilde_factor(q, I, vals, s);
        for (int pos : s.left) coeff *= weight_series(v2, q, I.colour(pos), vals[static_cast<std::size_t>(pos)]);
        for (int pos : s.right) coeff *= weight_series(v1, q, I.colour(pos) + 1, vals[static_cast<std::size_t>(pos)]);
        out += scalar_mul(coeff, kron(w1, w2));
    }
    return out;
}

CheckOutcome check_coproduct(const CheckParams& p, std::uint64_t seed) {
    PiMultiset I(p.pattern);
    SamplePoint sp = sample_point(seed, p.factors, I.size());
    const Scalar& q = sp.q;
    ModuleShape mod = module_of(p, sp);
    ModuleShape v1 = p.factors >= 1 ? mod.factor(0) : ModuleShape{p.N, {}};
    ModuleShape v2 = p.factors >= 1 ? mod.tail(1) : ModuleShape{p.N, {}};

    CheckOutcome out;
    mismatch_ket(out, "modified coproduct (trace side)", w_B(mod, q, I, sp.t),
                 coproduct_tilde_sum(&w_B, v1, v2, q, I, sp.t));
    if (!out.pass) return out;
    mismatch_ket(out, "modified coproduct (projection side)", w_P(mod, q, I, sp.t),
                 coproduct_tilde_sum(&w_P, v1, v2, q, I, sp.t));
    if (!out.pass) return out;

    // plain coproduct of the unmodified collection obtained by conversion
    auto unmod = [&](const ModuleShape& m) {
        return [&q, m](const PiMultiset& J, const std::vector<Scalar>& t) {
            return unmodify(family_on(&w_B, m, q), m, q, J, t);
        };
    };
    auto u_full = unmod(mod);
    auto u_1 = unmod(v1);
    auto u_2 = unmod(v2);
    KetVector rhs(mod.dim());
    for (const Split& s : splits(I.size())) {
        PiMultiset i1 = I.subset(s.left), i2 = I.subset(s.right);
        std::vector<Scalar> t1, t2;
        for (int pos : s.left) t1.push_back(sp.t[static_cast<std::size_t>(pos)]);
        for (int pos : s.right) t2.push_back(sp.t[static_cast<std::size_t>(pos)]);
        KetVector w1 = u_1(i1, t1);
        if (w1.is_zero()) continue;
        KetVector w2 = u_2(i2, t2);
        if (w2.is_zero()) continue;
        Scalar coeff = phi_factor(q, I, sp.t, s);
        for (int pos : s.left) {
            const Scalar& t = sp.t[static_cast<std::size_t>(pos)];
            coeff *= weight_series(v2, q, I.colour(pos), t) / weight_series(v2, q, I.colour(pos) + 1, t);
        }
        rhs += scalar_mul(coeff, kron(w1, w2));
    }
    mismatch_ket(out, "plain coproduct (converted trace side)", u_full(I, sp.t), rhs);
    return out;
}

CheckOutcome check_pullback_qsym(const CheckParams& p, std::uint64_t seed) {
    PiMultiset I(p.pattern);
    const int n = I.size();
    SamplePoint sp = sample_point(seed, p.factors, n);
    const Scalar& q = sp.q;
    ModuleShape mod = module_of(p, sp);

    CheckOutcome out;
    for (Family fam : {&w_B, &w_P}) {
        KetVector direct = fam(mod, q, I, sp.t);
        std::vector<int> to(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) to[static_cast<std::size_t>(i)] = i;
        do {
            ColourPermutation sigma{to};
            if (sigma.is_identity()) continue;
            PiMultiset J = apply_permutation(sigma, I);
            KetVector pulled = fam(mod, q, J, permute_values(sigma, sp.t));
            pulled = scalar_mul(pullback_tilde_factor(q, I, sp.t, sigma), pulled);
            mismatch_ket(out, std::string("q-symmetry (") + (fam == &w_B ? "trace" : "projection") + " side)",
                         pulled, direct);
            if (!out.pass) return out;
        } while (std::next_permutation(to.begin(), to.end()));
    }
    return out;
}

CheckOutcome check_modify_roundtrip(const CheckParams& p, std::uint64_t seed) {
    PiMultiset I(p.pattern);
    SamplePoint sp = sample_point(seed, p.factors, I.size());
    const Scalar& q = sp.q;
    ModuleShape mod = module_of(p, sp);

    Collection wb = family_on(&w_B, mod, q);
    Collection un = [&](const PiMultiset& J, const std::vector<Scalar>& t) { return unmodify(wb, mod, q, J, t); };
    Collection re = [&](const PiMultiset& J, const std::vector<Scalar>& t) { return modify(un, mod, q, J, t); };
    CheckOutcome out;
    mismatch_ket(out, "modify(unmodify(.))", re(I, sp.t), wb(I, sp.t));
    if (!out.pass) return out;
    Collection back = [&](const PiMultiset& J, const std::vector<Scalar>& t) { return unmodify(re, mod, q, J, t); };
    mismatch_ket(out, "unmodify(modify(.))", back(I, sp.t), un(I, sp.t));
    return out;
}

CheckOutcome check_main_theorem(const CheckParams& p, std::uint64_t seed) {
    PiMultiset I(p.pattern);
    SamplePoint sp = sample_point(seed, p.factors, I.size());
    const Scalar& q = sp.q;
    ModuleShape mod = module_of(p, sp);
    CheckOutcome out;
    mismatch_ket(out, "main theorem [" + pat_str(p.pattern) + "]", w_P(mod, q, I, sp.t), w_B(mod, q, I, sp.t));
    return out;
}

} // namespace

const std::vector<CheckInfo>& check_catalog() {
    static const std::vector<CheckInfo> catalog = {
        {"yang-baxter", CheckAxes::n_only},
        {"inversion", CheckAxes::n_only},
        {"rll", CheckAxes::module},
        {"triangularity", CheckAxes::module},
        {"gauss-reconstruct", CheckAxes::module},
        {"screening", CheckAxes::module},
        {"symmetry", CheckAxes::multiset},
        {"re-r1", CheckAxes::module},
        {"re-r2-ind1", CheckAxes::module},
        {"coproduct", CheckAxes::multiset},
        {"pullback-qsym", CheckAxes::multiset},
        {"modify-roundtrip", CheckAxes::multiset},
        {"main-theorem", CheckAxes::multiset},
    };
    return catalog;
}

bool is_check_name(const std::string& name) {
    for (const auto& info : check_catalog())
        if (name == info.name) return true;
    return false;
}

CheckOutcome run_check(const std::string& name, const CheckParams& p, std::uint64_t seed) {
    if (!p.valid()) throw ConfigInvalid("invalid check parameters for " + name);
    if (name == "yang-baxter") return check_yang_baxter(p, seed);
    if (name == "inversion") return check_inversion(p, seed);
    if (name == "rll") return check_rll(p, seed);
    if (name == "triangularity") return check_triangularity(p, seed);
    if (name == "gauss-reconstruct") return check_gauss_reconstruct(p, seed);
    if (name == "screening") return check_screening(p, seed);
    if (name == "symmetry") return check_symmetry(p, seed);
    if (name == "re-r1") return check_re_r1(p, seed);
    if (name == "re-r2-ind1") return check_re_r2_ind1(p, seed);
    if (name == "coproduct") return check_coproduct(p, seed);
    if (name == "pullback-qsym") return check_pullback_qsym(p, seed);
    if (name == "modify-roundtrip") return check_modify_roundtrip(p, seed);
    if (name == "main-theorem") return check_main_theorem(p, seed);
    throw ConfigInvalid("unknown check: " + name);
}

CheckOutcome run_check_with_retries(const std::string& name, const CheckParams& p, std::uint64_t seed, int budget) {
    for (int attempt = 0; attempt < budget; ++attempt) {
        try {
            return run_check(name, p, retry_seed(seed, attempt));
        } catch (const DegenerateSample&) {
            continue;
        }
    }
    throw SamplingExhausted("check " + name + ": retry budget exhausted at seed " + std::to_string(seed));
}

} // namespace qgln
