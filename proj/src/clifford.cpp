#include "hd/clifford.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hd {

namespace {

Mat pauli(int which) {
    Mat m(2, 2);
    switch (which) {
        case 0: m(0, 0) = 1; m(1, 1) = 1; break;
        case 1: m(0, 1) = 1; m(1, 0) = 1; break;
        case 2: m(0, 1) = -Scalar::i(); m(1, 0) = Scalar::i(); break;
        default: m(0, 0) = 1; m(1, 1) = -1; break;
    }
    return m;
}

Mat tensor_word(const std::vector<int>& w) {
    Mat m = Mat::identity(1);
    for (int x : w) m = kron(m, pauli(x));
    return m;
}

Scalar dot(const Vec& a, const Vec& b) {
    Scalar s;
    for (size_t i = 0; i < a.size(); ++i) s.add_mul(a[i], b[i]);
    return s;
}

}  // namespace

SpinContext build_spin_context(const RootSystem& rs, std::vector<int> order) {
    SpinContext ctx;
    ctx.rs = rs;
    ctx.n = rs.dim_vprime();
    if (ctx.n > 12) throw std::length_error("build_spin_context: dim V' exceeds 12");
    ctx.odd = ctx.n % 2;
    int N = rs.dim;
    if (rs.type == RootType::C && N % 2) ++N;
    int k = N / 2;
    ctx.spin_dim = 1 << k;
    for (int a = 0; a < k; ++a)
        for (int which : {1, 2}) {
            std::vector<int> w(k, 0);
            for (int t = 0; t < a; ++t) w[t] = 3;
            w[a] = which;
            ctx.gammas.push_back(tensor_word(w).scaled(Scalar::i()));
        }
    if (N % 2) ctx.gammas.push_back(tensor_word(std::vector<int>(k, 3)).scaled(Scalar::i()));

    Mat avg(ctx.spin_dim, ctx.spin_dim);
    if (rs.type == RootType::A) {
        for (int j = 0; j < rs.dim; ++j) avg += ctx.gammas[j];
        avg = avg.scaled(Scalar(Rat(1, rs.dim)));
    }
    for (int j = 0; j < rs.dim; ++j) ctx.G.push_back(ctx.gammas[j] - avg);

    if (order.empty()) {
        order.resize(rs.rank);
        std::iota(order.begin(), order.end(), 0);
    }
    ctx.onb_order = order;
    for (int j : order) {
        const IVec& a = rs.simple_root(j);
        Vec v(a.begin(), a.end());
        for (auto& e : ctx.onb) {
            Scalar c = dot(v, e);
            for (int t = 0; t < rs.dim; ++t) v[t] -= c * e[t];
        }
        Scalar nrm = dot(v, v);
        if (!nrm.is_rational()) throw std::logic_error("Gram-Schmidt: irrational squared norm");
        Scalar s = sqrt_of(nrm.to_rat()).inv();
        for (auto& x : v) x = x * s;
        ctx.onb.push_back(v);
    }
    for (auto& e : ctx.onb) {
        Mat g(ctx.spin_dim, ctx.spin_dim);
        for (int j = 0; j < rs.dim; ++j)
            if (!e[j].is_zero()) g += ctx.gammas[j].scaled(e[j]);
        ctx.onb_gammas.push_back(g);
    }
    if (ctx.odd) {
        Mat w = Mat::identity(ctx.spin_dim);
        for (auto& g : ctx.onb_gammas) w = w * g;
        Mat sq = w * w;
        if (sq == Mat::identity(ctx.spin_dim, Scalar(-1))) w = w.scaled(Scalar::i());
        else if (sq != Mat::identity(ctx.spin_dim)) throw std::logic_error("volume element does not square to +-1");
        ctx.omega_hat = w;
        ctx.s_plus = kernel(w - Mat::identity(ctx.spin_dim));
        ctx.s_minus = kernel(w + Mat::identity(ctx.spin_dim));
    }
    return ctx;
}

Mat SpinContext::gtilde(const QVec& v) const {
    Mat g(spin_dim, spin_dim);
    for (int j = 0; j < rs.dim; ++j)
        if (!v[j].is_zero()) g += G[j].scaled(Scalar(v[j]));
    return g;
}

Mat SpinContext::gtilde(const IVec& v) const {
    Mat g(spin_dim, spin_dim);
    for (int j = 0; j < rs.dim; ++j)
        if (v[j]) g += G[j].scaled(Scalar(v[j]));
    return g;
}

Mat SpinContext::stilde(int pos_root) const {
    return groot(pos_root).scaled(sqrt_of((long)rs.norm2(rs.positive[pos_root])).inv());
}

std::vector<Mat> SpinContext::gammas_on(int sign) const {
    if (!odd) return onb_gammas;
    const Subspace& s = sign > 0 ? s_plus : s_minus;
    std::vector<Mat> out;
    for (auto& g : onb_gammas) out.push_back(s.restrict_map(g));
    return out;
}

// ---------------------------------------------------------------- spin cover

namespace {
// Returns c in {+1,-1} with a = c * b, or 0 if not proportional by a sign.
int sign_relation(const Mat& a, const Mat& b) {
    if (a == b) return 1;
    if (a == -b) return -1;
    return 0;
}
}  // namespace

SpinCover::SpinCover(const WeylGroup& w, const SpinContext& ctx) : w_(&w), ctx_(&ctx) {
    int n = w.order();
    if (2LL * n > WeylGroup::kMaxTable) throw std::length_error("spin cover too large");
    const RootSystem& rs = ctx.rs;
    std::vector<Mat> gsimple;
    std::vector<Rat> nsimple;
    for (int j = 0; j < rs.rank; ++j) {
        gsimple.push_back(ctx.gtilde(rs.simple_root(j)));
        nsimple.push_back(Rat(rs.norm2(rs.simple_root(j))));
    }
    raw_.resize(n);
    n2_.resize(n);
    raw_[0] = Mat::identity(ctx.spin_dim);
    n2_[0] = Rat(1);
    for (int x = 1; x < n; ++x) {
        raw_[x] = raw_[w.parent(x)] * gsimple[w.last_gen(x)];
        n2_[x] = n2_[w.parent(x)] * nsimple[w.last_gen(x)];
    }
    // c[x][j]: L(x) s~_j = c L(x s_j).
    std::vector<std::vector<int8_t>> c(n, std::vector<int8_t>(rs.rank));
    for (int x = 0; x < n; ++x)
        for (int j = 0; j < rs.rank; ++j) {
            int y = w.mul(x, w.simple(j));
            Rat q = n2_[x] * nsimple[j] / n2_[y];
            Mat lhs = raw_[x] * gsimple[j];
            Mat rhs = raw_[y].scaled(sqrt_of(q));
            int s = sign_relation(lhs, rhs);
            if (!s) throw std::logic_error("spin cover: lift mismatch");
            c[x][j] = (int8_t)s;
        }
    // sigma(a, b): L(a) L(b) = (-1)^sigma L(ab), by induction along parents of b.
    std::vector<uint8_t> sigma((size_t)n * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 1; b < n; ++b) {
            int p = w.parent(b), j = w.last_gen(b);
            int ap = w.mul(a, p);
            sigma[(size_t)a * n + b] = sigma[(size_t)a * n + p] ^ (c[ap][j] < 0);
        }
    int N = 2 * n;
    std::vector<int> table((size_t)N * N);
    for (int e1 = 0; e1 < N; ++e1)
        for (int e2 = 0; e2 < N; ++e2) {
            int a = e1 / 2, b = e2 / 2;
            int bit = (e1 % 2) ^ (e2 % 2) ^ sigma[(size_t)a * n + b];
            table[(size_t)e1 * N + e2] = 2 * w.mul(a, b) + bit;
        }
    std::vector<int> gens;
    for (int j = 0; j < rs.rank; ++j) gens.push_back(2 * w.simple(j));
    std::vector<std::vector<int>> words(N);
    for (int e = 0; e < N; ++e) {
        if (e % 2) words[e].push_back(-1);
        auto wd = w.word(e / 2);
        words[e].insert(words[e].end(), wd.begin(), wd.end());
    }
    group_ = FiniteGroup(N, std::move(table), gens, std::move(words));
    if (group_.elt_order(minus_one()) != 2) throw std::logic_error("spin cover: -1 not of order 2");

    for (size_t p = 0; p < rs.positive.size(); ++p) {
        int x = w.reflection((int)p);
        Mat g = ctx.groot((int)p);
        Rat q = n2_[x] / Rat(rs.norm2(rs.positive[p]));
        int s = sign_relation(g.scaled(sqrt_of(q)), raw_[x]);
        if (!s) throw std::logic_error("spin cover: root element is not a lift");
        stilde_.push_back(2 * x + (s < 0));
    }
}

Scalar SpinCover::norm(int w) const { return sqrt_of(n2_[w]); }

Mat SpinCover::lift(int e) const {
    Scalar f = norm(e / 2).inv();
    if (e % 2) f = -f;
    return raw_[e / 2].scaled(f);
}

ClassFunction SpinCover::spin_module_character(int sign) const {
    ClassFunction cf;
    cf.classes = group_.class_data();
    for (int rep : cf.classes->reps) {
        const Mat& m = raw_[rep / 2];
        Scalar t = m.trace();
        if (sign && ctx_->odd) {
            Scalar tw = (m * ctx_->omega_hat).trace();
            t = (sign > 0 ? t + tw : t - tw).scaled(Rat(1, 2));
        }
        t = t * norm(rep / 2).inv();
        cf.values.push_back(rep % 2 ? -t : t);
    }
    return cf;
}

ClassFunction SpinCover::sign_character() const {
    ClassFunction cf;
    cf.classes = group_.class_data();
    for (int rep : cf.classes->reps) cf.values.push_back(Scalar(w_->length(rep / 2) % 2 ? -1 : 1));
    return cf;
}

bool SpinCover::is_genuine(int k) const {
    const auto& t = char_table();
    int cm = group_.class_of(minus_one());
    return t.chars[k].values[cm] == -t.chars[k].values[0];
}

const std::vector<int>& SpinCover::genuine() const {
    char_table();
    return genuine_;
}

int SpinCover::associate(int k) const {
    const auto& t = char_table();
    ClassFunction s = sign_character();
    for (int r = 0; r < t.num(); ++r) {
        bool eq = true;
        for (size_t c = 0; c < s.values.size() && eq; ++c) eq = t.chars[r].values[c] == t.chars[k].values[c] * s.values[c];
        if (eq) return r;
    }
    throw std::logic_error("associate not found");
}

const CharTable& SpinCover::char_table() const {
    if (table_) return *table_;
    auto t = std::make_unique<CharTable>(dixon_char_table(group_));
    int k = t->num();
    t->labels.assign(k, "");
    int cm = group_.class_of(minus_one());
    genuine_.clear();
    for (int r = 0; r < k; ++r)
        if (t->chars[r].values[cm] == -t->chars[r].values[0]) genuine_.push_back(r);
    auto same = [&](const ClassFunction& a, const ClassFunction& b) { return a.values == b.values; };
    table_ = std::move(t);  // associate() needs the table
    CharTable& tb = *table_;
    const RootSystem& rs = ctx_->rs;
    // Non-genuine characters come from W.
    const CharTable& wt = w_->char_table();
    for (int r = 0; r < k; ++r) {
        if (std::find(genuine_.begin(), genuine_.end(), r) != genuine_.end()) continue;
        for (int q = 0; q < wt.num(); ++q) {
            bool eq = true;
            for (int c = 0; c < k && eq; ++c) {
                int rep = tb.classes->reps[c];
                eq = tb.chars[r].values[c] == wt.chars[q].values[w_->group().class_of(rep / 2)];
            }
            if (eq) { tb.labels[r] = "W" + wt.labels[q]; break; }
        }
    }
    if (rs.type == RootType::A) {
        int l = rs.dim;
        std::vector<char> used(k, 0);
        auto take = [&](int r, const std::string& lab) { tb.labels[r] = lab; used[r] = 1; };
        std::string basic = "(" + std::to_string(l) + ")";
        for (int sgn : ctx_->odd ? std::vector<int>{1, -1} : std::vector<int>{0}) {
            ClassFunction s = spin_module_character(sgn);
            for (int r : genuine_)
                if (same(tb.chars[r], s)) take(r, basic + (sgn > 0 ? "+" : sgn < 0 ? "-" : ""));
        }
        for (auto& lam : strict_partitions_of(l)) {
            if (lam.length() == 1) continue;
            long long d = spin_irrep_dimension(lam);
            bool plus = is_dp_plus(lam);
            std::vector<int> cand;
            for (int r : genuine_)
                if (!used[r] && tb.chars[r].degree() == Scalar(d) && (associate(r) == r) == plus) cand.push_back(r);
            if ((int)cand.size() != (plus ? 1 : 2)) throw std::runtime_error("spin table: ambiguous labelling for " + lam.str());
            if (plus) take(cand[0], lam.str());
            else take(cand[0], lam.str() + "+"), take(cand[1], lam.str() + "-");
        }
        for (int r : genuine_)
            if (!used[r]) throw std::runtime_error("spin table: unlabelled genuine character");
    } else {
        int g = 0;
        for (int r : genuine_) tb.labels[r] = "spin" + std::to_string(g++);
    }
    return tb;
}

// ---------------------------------------------------------------- strict partitions

long long spin_irrep_dimension(const Partition& lambda) {
    if (!lambda.distinct_parts()) throw std::invalid_argument("spin_irrep_dimension: parts must be distinct");
    int l = lambda.size(), len = lambda.length();
    Rat d(factorial(l));
    for (int x : lambda.parts) d /= Rat(factorial(x));
    for (int i = 0; i < len; ++i)
        for (int j = i + 1; j < len; ++j) d *= Rat(lambda.parts[i] - lambda.parts[j], lambda.parts[i] + lambda.parts[j]);
    d *= Rat(1LL << ((l - len) / 2));
    if (!d.is_integer()) throw std::logic_error("spin_irrep_dimension: non-integral");
    return d.small_num();
}

bool is_dp_plus(const Partition& lambda) {
    if (!lambda.distinct_parts()) throw std::invalid_argument("dp_class: parts must be distinct");
    return (lambda.size() - lambda.length()) % 2 == 0;
}

Scalar epsilon_of(const Partition& lambda) { return is_dp_plus(lambda) ? Scalar(1) : sqrt_of(2L); }

}  // namespace hd
