#include "hd/dirac.hpp"

#include <stdexcept>

namespace hd {

namespace {

QVec unit(int d, int k) {
    QVec e(d);
    e[k] = Rat(1);
    return e;
}

// Gram matrix of the projections of the coordinate vectors to V'.
Rat proj_gram(const RootSystem& rs, int j, int k) {
    Rat g = j == k ? Rat(1) : Rat(0);
    if (rs.type == RootType::A) g -= Rat(1, rs.dim);
    return g;
}

ClassFunction make_cf(const SpinCover& cover, std::vector<Scalar> vals) {
    ClassFunction f;
    f.classes = cover.group().class_data();
    f.values = std::move(vals);
    return f;
}

// Trace of M on ker / (ker cap im).
Scalar trace_h(const DiracCohomology& h, const Mat& m) { return h.ker.trace_of(m) - h.kerim.trace_of(m); }

// Pairs (a, b) of positive roots with s_a(b) < 0.
std::vector<std::pair<int, int>> negative_pairs(const RootSystem& rs) {
    std::vector<std::pair<int, int>> out;
    for (size_t a = 0; a < rs.positive.size(); ++a)
        for (size_t b = 0; b < rs.positive.size(); ++b) {
            QVec bv(rs.positive[b].begin(), rs.positive[b].end());
            QVec img = rs.reflect(rs.positive[a], bv);
            IVec ii;
            for (auto& x : img) ii.push_back((int)x.small_num());
            // negative root iff -img is positive
            IVec neg = ii;
            for (auto& x : neg) x = -x;
            int pi = rs.positive_index(ii);
            if (pi >= 0 && rs.positive[pi] == neg) out.push_back({(int)a, (int)b});
        }
    return out;
}

}  // namespace

Mat DiracContext::delta(int e) const {
    return kron(t_elem(*alg, X, SpinCover::project(e)), cover->lift(e));
}

DiracContext dirac_matrix(const HAlgebra& alg, const SpinCover& cover, const HModule& X) {
    DiracContext dc;
    dc.alg = &alg;
    dc.cover = &cover;
    dc.X = X;
    const auto& ctx = cover.ctx();
    dc.sdim = ctx.spin_dim;
    int d = alg.dim();
    dc.D = Mat(X.dim * dc.sdim, X.dim * dc.sdim);
    for (int j = 0; j < d; ++j) {
        dc.vt.push_back(vtilde_matrix(alg, X, unit(d, j)));
        dc.D += kron(dc.vt.back(), ctx.G[j]);
    }
    return dc;
}

Mat dirac_matrix_onb(const HAlgebra& alg, const SpinContext& ctx, const HModule& X) {
    int d = alg.dim();
    std::vector<Mat> vt;
    for (int j = 0; j < d; ++j) vt.push_back(vtilde_matrix(alg, X, unit(d, j)));
    Mat D(X.dim * ctx.spin_dim, X.dim * ctx.spin_dim);
    for (size_t i = 0; i < ctx.onb.size(); ++i) {
        Mat ei(X.dim, X.dim);
        for (int j = 0; j < d; ++j)
            if (!ctx.onb[i][j].is_zero()) ei += vt[j].scaled(ctx.onb[i][j]);
        D += kron(ei, ctx.onb_gammas[i]);
    }
    return D;
}

bool anticommutation_ok(const DiracContext& dc) {
    const auto& rs = dc.alg->rs;
    for (int j = 0; j < rs.rank; ++j) {
        Mat dl = dc.delta(dc.cover->stilde_elt(rs.simple[j]));
        if (!(dl * dc.D + dc.D * dl).is_zero()) return false;
    }
    return true;
}

Mat omega_term(const DiracContext& dc) {
    const auto& rs = dc.alg->rs;
    const auto& ctx = dc.cover->ctx();
    Mat om(dc.dim(), dc.dim());
    Rat r2 = dc.alg->r * dc.alg->r / Rat(4);
    for (auto [a, b] : negative_pairs(rs)) {
        Rat coef = r2 * dc.alg->c(rs.positive[a]) * dc.alg->c(rs.positive[b]);
        if (coef.is_zero()) continue;
        // |a||b| s~_a s~_b = g~_a g~_b
        Mat tt = t_elem(*dc.alg, dc.X, dc.alg->W->reflection(a)) * t_elem(*dc.alg, dc.X, dc.alg->W->reflection(b));
        Mat gg = ctx.groot(a) * ctx.groot(b);
        om += kron(tt, gg).scaled(Scalar(coef));
    }
    return om;
}

D2Audit d_squared_audit(const DiracContext& dc) {
    const auto& rs = dc.alg->rs;
    int d = rs.dim, n = dc.X.dim;
    Mat cas(n, n), cas_t(n, n);
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            Rat g = proj_gram(rs, j, k);
            if (g.is_zero()) continue;
            cas += (dc.X.v[j] * dc.X.v[k]).scaled(Scalar(g));
            cas_t += (dc.vt[j] * dc.vt[k]).scaled(Scalar(g));
        }
    Mat I = Mat::identity(dc.sdim);
    Mat om = omega_term(dc);
    Mat D2 = dc.D * dc.D;
    D2Audit res;
    res.printed_ok = D2 == -kron(cas, I) - om;
    res.tilde_ok = D2 == -kron(cas_t, I) - om;
    return res;
}

Decomposition decompose(const SpinCover& cover, const ClassFunction& chi) {
    Decomposition dec;
    const auto& tab = cover.char_table();
    for (int k = 0; k < tab.num(); ++k) {
        long long m = multiplicity(chi, tab.chars[k]);
        if (m) dec.parts.push_back({tab.labels[k], m});
    }
    return dec;
}

std::string Decomposition::str() const {
    if (parts.empty()) return "0";
    std::string s;
    for (auto& [lab, m] : parts) {
        if (!s.empty()) s += " + ";
        if (m != 1) s += std::to_string(m) + "*";
        s += lab;
    }
    return s;
}

DiracCohomology dirac_cohomology(const DiracContext& dc) {
    DiracCohomology h;
    h.ker = kernel(dc.D);
    Subspace im = image(dc.D);
    h.kerim = subspace_intersect(h.ker, im);
    h.dim = h.ker.dim() - h.kerim.dim();
    const auto& cd = dc.cover->group().class_data();
    const auto& ctx = dc.cover->ctx();
    std::vector<Scalar> full, wplus, wgrade;
    Mat omega_big, grade_big;
    if (ctx.odd) omega_big = kron(Mat::identity(dc.X.dim), ctx.omega_hat);
    if (dc.X.grading) grade_big = kron(dc.X.grading->op, Mat::identity(dc.sdim));
    for (int rep : cd->reps) {
        Mat dl = dc.delta(rep);
        full.push_back(trace_h(h, dl));
        if (ctx.odd) wplus.push_back(trace_h(h, dl * omega_big));
        if (dc.X.grading) wgrade.push_back(trace_h(h, dl * grade_big));
    }
    h.character = make_cf(*dc.cover, full);
    Rat half(1, 2);
    auto split = [&](const std::vector<Scalar>& w, int sign) {
        std::vector<Scalar> v;
        for (size_t c = 0; c < full.size(); ++c) v.push_back((full[c] + Scalar(sign) * w[c]).scaled(half));
        return make_cf(*dc.cover, v);
    };
    if (ctx.odd) {
        h.char_splus = split(wplus, 1);
        h.char_sminus = split(wplus, -1);
        h.dim_splus = (int)h.char_splus->values[0].to_rat().small_num();
        h.dim_sminus = (int)h.char_sminus->values[0].to_rat().small_num();
    }
    if (dc.X.grading) {
        h.char_plus = split(wgrade, 1);
        h.char_minus = split(wgrade, -1);
        h.dim_plus = (int)h.char_plus->values[0].to_rat().small_num();
        h.dim_minus = (int)h.char_minus->values[0].to_rat().small_num();
    }
    return h;
}

const ClassFunction& hd_character(const DiracCohomology& h, int sign) {
    if (!h.char_splus) return h.character;
    return sign >= 0 ? *h.char_splus : *h.char_sminus;
}

int hd_dim(const DiracCohomology& h, int sign) {
    if (!h.char_splus) return h.dim;
    return sign >= 0 ? h.dim_splus : h.dim_sminus;
}

Rat norm2_vprime(const RootSystem& rs, const QVec& s) {
    Rat acc;
    for (int j = 0; j < rs.dim; ++j)
        for (int k = 0; k < rs.dim; ++k) {
            Rat g = proj_gram(rs, j, k);
            if (!g.is_zero()) acc += g * s[j] * s[k];
        }
    return acc;
}

Scalar a_value(const HAlgebra& alg, const SpinCover& cover, const ClassFunction& sigma) {
    const auto& rs = alg.rs;
    const auto& G = cover.group();
    Scalar acc;
    for (auto [a, b] : negative_pairs(rs)) {
        Rat coef = alg.c(rs.positive[a]) * alg.c(rs.positive[b]);
        if (coef.is_zero()) continue;
        int e = G.mul(cover.stilde_elt(a), cover.stilde_elt(b));
        Scalar len = sqrt_of(Rat(rs.norm2(rs.positive[a]) * rs.norm2(rs.positive[b])));
        acc += len * sigma.values[G.class_of(e)] * Scalar(coef);
    }
    return (acc / sigma.degree()).scaled(Rat(-1, 4));
}

VoganReport vogan_check(const HAlgebra& alg, const SpinCover& cover, const ClassFunction& hd_char,
                        const QVec& s, const Rat& kappa) {
    VoganReport rep;
    Scalar lhs = Scalar(kappa * norm2_vprime(alg.rs, s));
    const auto& tab = cover.char_table();
    for (int k = 0; k < tab.num(); ++k) {
        if (!multiplicity(hd_char, tab.chars[k])) continue;
        VoganRow row;
        row.label = tab.labels[k];
        row.a = a_value(alg, cover, tab.chars[k]);
        row.lhs = lhs;
        row.ok = lhs == Scalar(alg.r * alg.r) * row.a;
        rep.pass = rep.pass && row.ok;
        rep.rows.push_back(row);
    }
    return rep;
}

ClassFunction dirac_index(const HAlgebra& alg, const SpinCover& cover, const HModule& X) {
    if (!X.grading) throw std::invalid_argument("dirac_index: module is not graded");
    const auto& cd = cover.group().class_data();
    ClassFunction spin = cover.spin_module_character(0);
    std::vector<Scalar> vals;
    for (size_t c = 0; c < cd->reps.size(); ++c) {
        int e = cd->reps[c];
        Scalar tx = (t_elem(alg, X, SpinCover::project(e)) * X.grading->op).trace();
        vals.push_back(tx * spin.values[c]);
    }
    return make_cf(cover, vals);
}

ClassFunction hd_index(const DiracCohomology& h) {
    if (!h.char_plus) throw std::invalid_argument("hd_index: module is not graded");
    ClassFunction f = *h.char_plus;
    for (size_t c = 0; c < f.values.size(); ++c) f.values[c] -= h.char_minus->values[c];
    return f;
}

bool is_zero_function(const ClassFunction& f) {
    for (auto& v : f.values)
        if (!v.is_zero()) return false;
    return true;
}

}  // namespace hd
