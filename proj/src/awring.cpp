#include "hd/awring.hpp"

#include <map>
#include <stdexcept>

namespace hd {

HAlgebra aw_algebra(const HAlgebra& alg) {
    HAlgebra a = alg;
    a.c_zero = true;
    return a;
}

Subspace isotypic_component(const HAlgebra& alg, const HModule& X, const ClassFunction& chi) {
    const FiniteGroup& g = alg.W->group();
    Mat P(X.dim, X.dim);
    for (int w = 0; w < alg.W->order(); ++w) {
        Scalar f = chi.values[g.class_of(w)].conj();
        if (f.is_zero()) continue;
        P += t_elem(alg, X, w).scaled(f);
    }
    return image(P);
}

std::vector<Mat> restrict_w(const HModule& X, const Subspace& s) {
    std::vector<Mat> out;
    for (const Mat& t : X.t) out.push_back(s.restrict_map(t));
    return out;
}

namespace {

// Basis adapted to the filtration, lowest layer first; dims receives the layer sizes.
std::vector<Vec> adapted_basis(const std::vector<Subspace>& layers, std::vector<int>& dims) {
    std::vector<Vec> out;
    Subspace run(layers.front().ambient());
    for (const Subspace& L : layers) {
        int before = (int)out.size();
        for (int k = 0; k < L.dim(); ++k) {
            Vec v = L.vec(k);
            if (run.contains(v)) continue;
            out.push_back(v);
            run = Subspace::span(out, L.ambient());
        }
        dims.push_back((int)out.size() - before);
    }
    return out;
}

}  // namespace

AWModule assoc_graded(const HAlgebra& alg, const HModule& X, const Subspace& sigma) {
    if (sigma.ambient() != X.dim || sigma.dim() == 0) throw std::invalid_argument("assoc_graded: bad sigma");
    std::vector<Mat> vt;
    for (int j = 0; j < alg.dim(); ++j) {
        QVec e(alg.dim());
        e[j] = Rat(1);
        vt.push_back(vtilde_matrix(alg, X, e));
    }
    std::vector<Subspace> layers{sigma};
    while (true) {
        Subspace next = layers.back();
        for (const Mat& m : vt) next = subspace_sum(next, map_subspace(m, layers.back()));
        if (next.dim() == layers.back().dim()) break;
        layers.push_back(next);
    }
    if (layers.back().dim() != X.dim) throw std::invalid_argument("not a choice of deformation");

    AWModule out;
    std::vector<Vec> cols = adapted_basis(layers, out.graded_dims);
    Mat P = Mat::from_rows(cols, X.dim).transpose();
    Mat Pinv = *inverse(P);
    std::vector<int> start{0};
    for (int d : out.graded_dims) start.push_back(start.back() + d);
    int deg = (int)out.graded_dims.size();

    HModule& M = out.M;
    M.dim = X.dim;
    M.provenance = "gr(" + X.provenance + ")";
    for (const Mat& t : X.t) {
        Mat c = Pinv * t * P, b(X.dim, X.dim);
        for (int i = 0; i < deg; ++i)
            for (int r = start[i]; r < start[i + 1]; ++r)
                for (int s = start[i]; s < start[i + 1]; ++s) b(r, s) = c(r, s);
        M.t.push_back(b);
    }
    for (const Mat& v : vt) {
        Mat c = Pinv * v * P, b(X.dim, X.dim);
        for (int i = 0; i + 1 < deg; ++i)
            for (int r = start[i + 1]; r < start[i + 2]; ++r)
                for (int s = start[i]; s < start[i + 1]; ++s) b(r, s) = c(r, s);
        M.v.push_back(b);
    }
    return out;
}

WOrder type_a_order(const WeylGroup& W) {
    if (W.roots().type != RootType::A) throw std::invalid_argument("type_a_order: type A only");
    auto parts = partitions_of(W.roots().dim);
    return [parts](int tau, int sigma) { return dominates(parts.at(tau), parts.at(sigma)); };
}

namespace {

using Mono = std::vector<int>;

std::vector<Mono> monomials(int nvars, int d) {
    std::vector<Mono> out;
    Mono cur(nvars, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
        if (i == nvars - 1) {
            cur[i] = left;
            out.push_back(cur);
            return;
        }
        for (int k = left; k >= 0; --k) {
            cur[i] = k;
            self(self, i + 1, left - k);
        }
    };
    if (nvars == 0) return d == 0 ? std::vector<Mono>{Mono{}} : out;
    rec(rec, 0, d);
    return out;
}

// Degree-by-degree data of the free module S(V) (x) sigma.
class FreeKato {
public:
    FreeKato(const HAlgebra& alg, const std::vector<Mat>& sigma_rep) : alg_(alg), W_(*alg.W) {
        ds_ = sigma_rep.at(0).rows();
        // sigma(w) along parent / last generator
        sig_.resize(W_.order());
        sig_[0] = Mat::identity(ds_);
        for (int w = 1; w < W_.order(); ++w) sig_[w] = sig_[W_.parent(w)] * sigma_rep[W_.last_gen(w)];
    }

    int sdim() const { return ds_; }
    const std::vector<Mono>& monos(int d) {
        while ((int)monos_.size() <= d) {
            monos_.push_back(monomials(alg_.dim(), (int)monos_.size()));
            std::map<Mono, int> idx;
            for (size_t k = 0; k < monos_.back().size(); ++k) idx[monos_.back()[k]] = (int)k;
            index_.push_back(std::move(idx));
        }
        return monos_[d];
    }
    int index(int d, const Mono& m) { monos(d); return index_[d].at(m); }
    int dim(int d) { return (int)monos(d).size() * ds_; }

    // w(x^a) = sign * x^b.
    std::pair<int, int> act_mono(int w, int d, int k) {
        const SignedPerm& p = W_.perm(w);
        const Mono& a = monos(d)[k];
        Mono b(a.size(), 0);
        int sign = 1;
        for (size_t i = 0; i < a.size(); ++i) {
            int img = p[i];
            int tgt = std::abs(img) - 1;
            b[tgt] = a[i];
            if (img < 0 && (a[i] & 1)) sign = -sign;
        }
        return {index(d, b), sign};
    }

    Mat rho(int w, int d) {
        int n = (int)monos(d).size();
        Mat out(n * ds_, n * ds_);
        for (int k = 0; k < n; ++k) {
            auto [k2, sg] = act_mono(w, d, k);
            for (int i = 0; i < ds_; ++i)
                for (int j = 0; j < ds_; ++j)
                    if (!sig_[w](i, j).is_zero()) out(k2 * ds_ + i, k * ds_ + j) = sig_[w](i, j).scaled(Rat(sg));
        }
        return out;
    }

    // Sum of the isotypic idempotents of the characters listed.
    Mat isotypic_projector(int d, const std::vector<int>& chars) {
        const CharTable& ct = W_.char_table();
        const FiniteGroup& g = W_.group();
        int n = (int)monos(d).size();
        Mat P(n * ds_, n * ds_);
        for (int w = 0; w < W_.order(); ++w) {
            Scalar f;
            for (int c : chars) {
                const ClassFunction& chi = ct.chars[c];
                f += chi.values[g.class_of(w)].conj() * chi.degree();
            }
            if (f.is_zero()) continue;
            for (int k = 0; k < n; ++k) {
                auto [k2, sg] = act_mono(w, d, k);
                for (int i = 0; i < ds_; ++i)
                    for (int j = 0; j < ds_; ++j)
                        if (!sig_[w](i, j).is_zero()) P(k2 * ds_ + i, k * ds_ + j).add_mul(f, sig_[w](i, j).scaled(Rat(sg)));
            }
        }
        return P.scaled(Scalar(Rat(1, W_.order())));
    }

    // Multiplication by e_j: degree d -> d+1.
    Mat raise(int j, int d) {
        int n = (int)monos(d).size(), n2 = (int)monos(d + 1).size();
        Mat out(n2 * ds_, n * ds_);
        for (int k = 0; k < n; ++k) {
            Mono b = monos_[d][k];
            b[j] += 1;
            int k2 = index(d + 1, b);
            for (int i = 0; i < ds_; ++i) out(k2 * ds_ + i, k * ds_ + i) = Scalar(1);
        }
        return out;
    }

    Mat simple_t(int j, int d) { return rho(W_.simple(j), d); }

private:
    const HAlgebra& alg_;
    const WeylGroup& W_;
    int ds_ = 0;
    std::vector<Mat> sig_;
    std::vector<std::vector<Mono>> monos_;
    std::vector<std::map<Mono, int>> index_;
};

// Assemble a graded module from per-degree matrices of t_j (square) and raise_j (d -> d+1).
AWModule assemble(const std::vector<int>& dims, const std::vector<std::vector<Mat>>& tblocks,
                  const std::vector<std::vector<Mat>>& vblocks, int rank, int nv) {
    AWModule out;
    out.graded_dims = dims;
    std::vector<int> start{0};
    for (int d : dims) start.push_back(start.back() + d);
    int n = start.back();
    out.M.dim = n;
    for (int j = 0; j < rank; ++j) {
        Mat T(n, n);
        for (size_t d = 0; d < dims.size(); ++d)
            for (int r = 0; r < dims[d]; ++r)
                for (int s = 0; s < dims[d]; ++s) T(start[d] + r, start[d] + s) = tblocks[d][j](r, s);
        out.M.t.push_back(T);
    }
    for (int j = 0; j < nv; ++j) {
        Mat V(n, n);
        for (size_t d = 0; d + 1 < dims.size(); ++d)
            for (int r = 0; r < dims[d + 1]; ++r)
                for (int s = 0; s < dims[d]; ++s) V(start[d + 1] + r, start[d] + s) = vblocks[d][j](r, s);
        out.M.v.push_back(V);
    }
    return out;
}

// Coordinates of y in K_d / N_d on the non-pivot basis.
Vec project(const Subspace& N, const std::vector<int>& free_cols, const Vec& y) {
    Vec r(y);
    const Mat& B = N.basis();
    for (int k = 0; k < N.dim(); ++k) {
        Scalar f = r[N.pivots()[k]];
        if (f.is_zero()) continue;
        for (int c = 0; c < B.cols(); ++c)
            if (!B(k, c).is_zero()) r[c].add_mul(-f, B(k, c));
    }
    Vec out;
    for (int c : free_cols) out.push_back(r[c]);
    return out;
}

std::vector<int> non_pivots(const Subspace& N) {
    std::vector<bool> piv(N.ambient(), false);
    for (int p : N.pivots()) piv[p] = true;
    std::vector<int> out;
    for (int c = 0; c < N.ambient(); ++c)
        if (!piv[c]) out.push_back(c);
    return out;
}

// Map induced on quotients, on the non-pivot bases.
Mat induced_block(const Mat& A, const std::vector<int>& src_free, const Subspace& Ntgt,
                  const std::vector<int>& tgt_free) {
    Mat out((int)tgt_free.size(), (int)src_free.size());
    for (size_t s = 0; s < src_free.size(); ++s) {
        Vec y = A.col(src_free[s]);
        Vec c = project(Ntgt, tgt_free, y);
        for (size_t r = 0; r < tgt_free.size(); ++r) out((int)r, (int)s) = c[r];
    }
    return out;
}

KatoModule build_kato(const HAlgebra& alg, const std::vector<Mat>& sigma_rep, int sigma_index,
                      const std::vector<int>* killers, int N) {
    FreeKato F(alg, sigma_rep);
    std::vector<Subspace> Ns;
    std::vector<std::vector<int>> frees;
    std::vector<int> dims;
    KatoModule out;
    out.sigma = sigma_index;
    for (int d = 0; d <= N; ++d) {
        Subspace Nd(F.dim(d));
        if (d > 0) {
            for (int j = 0; j < alg.dim(); ++j) Nd = subspace_sum(Nd, map_subspace(F.raise(j, d - 1), Ns.back()));
            if (killers && !killers->empty()) Nd = subspace_sum(Nd, image(F.isotypic_projector(d, *killers)));
        }
        Ns.push_back(Nd);
        frees.push_back(non_pivots(Nd));
        dims.push_back((int)frees.back().size());
        out.truncation = d;
        if (dims.back() == 0) {
            dims.pop_back();
            Ns.pop_back();
            frees.pop_back();
            out.stabilized = true;
            break;
        }
    }
    std::vector<std::vector<Mat>> tb(dims.size()), vb(dims.size());
    for (size_t d = 0; d < dims.size(); ++d) {
        for (int j = 0; j < alg.rank(); ++j)
            tb[d].push_back(induced_block(F.simple_t(j, (int)d), frees[d], Ns[d], frees[d]));
        if (d + 1 < dims.size())
            for (int j = 0; j < alg.dim(); ++j)
                vb[d].push_back(induced_block(F.raise(j, (int)d), frees[d], Ns[d + 1], frees[d + 1]));
    }
    out.module = assemble(dims, tb, vb, alg.rank(), alg.dim());
    out.module.M.provenance = killers ? "Kato quotient" : "Kato free (truncated)";
    return out;
}

}  // namespace

KatoModule kato_free(const HAlgebra& alg, const std::vector<Mat>& sigma_rep, int sigma_index, int N) {
    return build_kato(alg, sigma_rep, sigma_index, nullptr, N);
}

KatoModule big_kato(const HAlgebra& alg, const std::vector<Mat>& sigma_rep, int sigma_index,
                    const WOrder& order, int N) {
    std::vector<int> killers;
    for (int tau = 0; tau < alg.W->char_table().num(); ++tau)
        if (order(tau, sigma_index)) killers.push_back(tau);
    return build_kato(alg, sigma_rep, sigma_index, &killers, N);
}

DiracCohomology dirac_A_cohomology(const HAlgebra& alg, const SpinCover& cover, const AWModule& M) {
    HAlgebra a0 = aw_algebra(alg);
    HModule X = M.M;
    X.t_cache = std::make_shared<std::map<int, Mat>>();
    DiracContext dc = dirac_matrix(a0, cover, X);
    return dirac_cohomology(dc);
}

}  // namespace hd
