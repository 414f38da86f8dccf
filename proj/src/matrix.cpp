#include "hd/matrix.hpp"

#include <algorithm>
#include <map>

namespace hd {

Mat Mat::identity(int n, const Scalar& diag) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = diag;
    return m;
}

Mat Mat::from_rows(const std::vector<Vec>& rows, int cols) {
    int c = cols >= 0 ? cols : (rows.empty() ? 0 : (int)rows[0].size());
    Mat m((int)rows.size(), c);
    for (int i = 0; i < (int)rows.size(); ++i) {
        if ((int)rows[i].size() != c) throw std::invalid_argument("ragged rows");
        for (int j = 0; j < c; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::column(const Vec& v) {
    Mat m((int)v.size(), 1);
    for (int i = 0; i < (int)v.size(); ++i) m(i, 0) = v[i];
    return m;
}

Vec Mat::col(int j) const {
    Vec v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

void Mat::set_row(int i, const Vec& v) {
    for (int j = 0; j < c_; ++j) (*this)(i, j) = v[j];
}

bool Mat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool Mat::is_rational() const {
    for (const auto& x : a_)
        if (!x.is_rational()) return false;
    return true;
}

bool Mat::is_gaussian() const {
    for (const auto& x : a_)
        if (!x.is_gaussian()) return false;
    return true;
}

Mat Mat::transpose() const {
    Mat t(c_, r_);
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Mat Mat::scaled(const Scalar& s) const {
    Mat m(*this);
    if (s.is_one()) return m;
    for (auto& x : m.a_)
        if (!x.is_zero()) x = x * s;
    return m;
}

Mat Mat::block(int r0, int c0, int nr, int nc) const {
    Mat m(nr, nc);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

Vec Mat::apply(const Vec& v) const {
    if ((int)v.size() != c_) throw std::invalid_argument("apply: dimension mismatch");
    Vec out(r_);
    for (int i = 0; i < r_; ++i) {
        Scalar acc;
        for (int j = 0; j < c_; ++j) {
            const Scalar& a = (*this)(i, j);
            if (!a.is_zero() && !v[j].is_zero()) acc.add_mul(a, v[j]);
        }
        out[i] = std::move(acc);
    }
    return out;
}

Vec Mat::apply_left(const Vec& v) const {
    if ((int)v.size() != r_) throw std::invalid_argument("apply_left: dimension mismatch");
    Vec out(c_);
    for (int i = 0; i < r_; ++i) {
        if (v[i].is_zero()) continue;
        for (int j = 0; j < c_; ++j) {
            const Scalar& a = (*this)(i, j);
            if (!a.is_zero()) out[j].add_mul(v[i], a);
        }
    }
    return out;
}

Scalar Mat::trace() const {
    Scalar t;
    for (int i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix product: dimension mismatch");
    Mat m(a.r_, b.c_);
    std::vector<int> nz;
    for (int i = 0; i < a.r_; ++i)
        for (int k = 0; k < a.c_; ++k) {
            const Scalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (int j = 0; j < b.c_; ++j) {
                const Scalar& y = b(k, j);
                if (!y.is_zero()) m(i, j).add_mul(x, y);
            }
        }
    return m;
}

Mat operator+(const Mat& a, const Mat& b) {
    Mat m(a);
    m += b;
    return m;
}

Mat& Mat::operator+=(const Mat& b) {
    if (r_ != b.r_ || c_ != b.c_) throw std::invalid_argument("matrix sum: dimension mismatch");
    for (size_t k = 0; k < a_.size(); ++k)
        if (!b.a_[k].is_zero()) a_[k] += b.a_[k];
    return *this;
}

Mat operator-(const Mat& a, const Mat& b) { return a + b.scaled(Scalar(-1)); }

bool operator==(const Mat& a, const Mat& b) { return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_; }

std::vector<std::vector<std::string>> Mat::to_strings() const {
    std::vector<std::vector<std::string>> out(r_, std::vector<std::string>(c_));
    for (int i = 0; i < r_; ++i)
        for (int j = 0; j < c_; ++j) out[i][j] = (*this)(i, j).str();
    return out;
}

Mat kron(const Mat& a, const Mat& b) {
    Mat m(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& x = a(i, j);
            if (x.is_zero()) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l)
                    if (!b(k, l).is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * b(k, l);
        }
    return m;
}

Mat vstack(const Mat& a, const Mat& b) {
    if (a.rows() == 0) return b;
    if (b.rows() == 0) return a;
    if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
    Mat m(a.rows() + b.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, j) = b(i, j);
    return m;
}

Mat hstack(const Mat& a, const Mat& b) { return vstack(a.transpose(), b.transpose()).transpose(); }

Mat direct_sum(const Mat& a, const Mat& b) {
    Mat m(a.rows() + b.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
    for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m(a.rows() + i, a.cols() + j) = b(i, j);
    return m;
}

std::vector<int> rref(Mat& m) {
    std::vector<int> piv;
    int R = m.rows(), C = m.cols();
    int cur = 0;
    std::vector<int> nz;
    for (int j = 0; j < C && cur < R; ++j) {
        int p = -1;
        for (int i = cur; i < R; ++i)
            if (!m(i, j).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != cur)
            for (int k = j; k < C; ++k) std::swap(m(p, k), m(cur, k));
        Scalar inv = m(cur, j).inv();
        nz.clear();
        for (int k = j + 1; k < C; ++k)
            if (!m(cur, k).is_zero()) {
                m(cur, k) = m(cur, k) * inv;
                nz.push_back(k);
            }
        m(cur, j) = Scalar(1);
        for (int i = 0; i < R; ++i) {
            if (i == cur || m(i, j).is_zero()) continue;
            Scalar f = -m(i, j);
            for (int k : nz) m(i, k).add_mul(f, m(cur, k));
            m(i, j) = Scalar();
        }
        piv.push_back(j);
        ++cur;
    }
    return piv;
}

int rank(const Mat& m) { return Subspace::span(m).dim(); }

std::optional<Mat> inverse(const Mat& m) {
    if (!m.is_square()) throw std::invalid_argument("inverse of non-square matrix");
    int n = m.rows();
    Mat aug = hstack(m, Mat::identity(n));
    auto piv = rref(aug);
    if ((int)piv.size() < n || piv[n - 1] != n - 1) return std::nullopt;
    return aug.block(0, n, n, n);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
    int n = a.cols();
    Mat aug = hstack(a, b);
    auto piv = rref(aug);
    Mat x(n, b.cols());
    for (size_t k = 0; k < piv.size(); ++k) {
        if (piv[k] >= n) return std::nullopt;
        for (int j = 0; j < b.cols(); ++j) x(piv[k], j) = aug((int)k, n + j);
    }
    return x;
}

// ---- Subspace ----

bool rref_modular(const Mat& m, Mat& basis, std::vector<int>& pivots);

namespace {
constexpr long kModularThreshold = 400;
}

Subspace Subspace::span(const Mat& rows) {
    Subspace s;
    s.n_ = rows.cols();
    if ((long)rows.rows() * rows.cols() >= kModularThreshold && rows.rows() > 1 &&
        rref_modular(rows, s.basis_, s.piv_))
        return s;
    Mat m(rows);
    s.piv_ = rref(m);
    s.basis_ = m.block(0, 0, (int)s.piv_.size(), m.cols());
    return s;
}

Subspace Subspace::span(const std::vector<Vec>& vecs, int ambient) {
    if (vecs.empty()) return Subspace(ambient);
    return span(Mat::from_rows(vecs, ambient));
}

Subspace Subspace::full(int ambient) { return span(Mat::identity(ambient)); }

bool Subspace::contains(const Vec& v) const {
    if ((int)v.size() != n_) throw std::invalid_argument("contains: ambient mismatch");
    Vec r(v);
    for (int k = 0; k < dim(); ++k) {
        Scalar f = r[piv_[k]];
        if (f.is_zero()) continue;
        Scalar nf = -f;
        for (int j = piv_[k]; j < n_; ++j)
            if (!basis_(k, j).is_zero()) r[j].add_mul(nf, basis_(k, j));
    }
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

bool Subspace::contains(const Subspace& b) const {
    for (int k = 0; k < b.dim(); ++k)
        if (!contains(b.vec(k))) return false;
    return true;
}

Mat Subspace::restrict_map(const Mat& m) const {
    int d = dim();
    Mat r(d, d);
    for (int k = 0; k < d; ++k) {
        Vec y = m.apply(vec(k));
        Vec c = coords(y);
        // stability check: y must equal sum c_j b_j
        Vec z(n_);
        for (int j = 0; j < d; ++j)
            if (!c[j].is_zero())
                for (int t = 0; t < n_; ++t)
                    if (!basis_(j, t).is_zero()) z[t].add_mul(c[j], basis_(j, t));
        if (z != y) throw std::logic_error("restrict_map: subspace is not stable");
        for (int j = 0; j < d; ++j) r(j, k) = c[j];
    }
    return r;
}

Scalar Subspace::trace_of(const Mat& m) const {
    Scalar t;
    for (int k = 0; k < dim(); ++k) {
        int p = piv_[k];
        Scalar acc;
        for (int j = 0; j < n_; ++j)
            if (!basis_(k, j).is_zero() && !m(p, j).is_zero()) acc.add_mul(m(p, j), basis_(k, j));
        t += acc;
    }
    return t;
}

Subspace kernel(const Mat& m) {
    Subspace rs = Subspace::span(m);
    const Mat& r = rs.basis();
    const auto& piv = rs.pivots();
    int n = m.cols();
    std::vector<char> is_piv(n, 0);
    for (int p : piv) is_piv[p] = 1;
    std::vector<Vec> basis;
    for (int f = 0; f < n; ++f) {
        if (is_piv[f]) continue;
        Vec v(n);
        v[f] = Scalar(1);
        for (size_t k = 0; k < piv.size(); ++k)
            if (!r((int)k, f).is_zero()) v[piv[k]] = -r((int)k, f);
        basis.push_back(std::move(v));
    }
    return Subspace::span(basis, n);
}

Subspace image(const Mat& m) { return Subspace::span(m.transpose()); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace_sum: ambient mismatch");
    return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace annihilator(const Subspace& a) {
    if (a.dim() == 0) return Subspace::full(a.ambient());
    return kernel(a.basis());
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("subspace_intersect: ambient mismatch");
    Subspace aa = annihilator(a), ab = annihilator(b);
    Mat st = vstack(aa.basis(), ab.basis());
    if (st.rows() == 0) return Subspace::full(a.ambient());
    return kernel(st);
}

int quotient_dim(const Subspace& a, const Subspace& b) {
    if (a.ambient() != b.ambient()) throw std::invalid_argument("quotient_dim: ambient mismatch");
    if (!a.contains(b)) throw std::invalid_argument("quotient_dim: B is not contained in A");
    return a.dim() - b.dim();
}

Subspace map_subspace(const Mat& m, const Subspace& s) {
    if (s.dim() == 0) return Subspace(m.rows());
    return Subspace::span((m * s.basis().transpose()).transpose());
}

// ---- characteristic polynomial and rational eigenvalues ----

std::vector<Scalar> charpoly(const Mat& m0) {
    if (!m0.is_square()) throw std::invalid_argument("charpoly of non-square matrix");
    int n = m0.rows();
    Mat h(m0);
    for (int j = 0; j + 2 < n; ++j) {
        int p = -1;
        for (int i = j + 1; i < n; ++i)
            if (!h(i, j).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != j + 1) {
            for (int k = 0; k < n; ++k) std::swap(h(p, k), h(j + 1, k));
            for (int k = 0; k < n; ++k) std::swap(h(k, p), h(k, j + 1));
        }
        Scalar inv = h(j + 1, j).inv();
        for (int i = j + 2; i < n; ++i) {
            if (h(i, j).is_zero()) continue;
            Scalar f = h(i, j) * inv;
            Scalar nf = -f;
            for (int k = 0; k < n; ++k)
                if (!h(j + 1, k).is_zero()) h(i, k).add_mul(nf, h(j + 1, k));
            for (int k = 0; k < n; ++k)
                if (!h(k, i).is_zero()) h(k, j + 1).add_mul(f, h(k, i));
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{ik} prod_{m=i+1..k} h_{m,m-1} p_{i-1}
    std::vector<std::vector<Scalar>> p(n + 1);
    p[0] = {Scalar(1)};
    for (int k = 1; k <= n; ++k) {
        std::vector<Scalar> q(k + 1);
        for (int d = 0; d < (int)p[k - 1].size(); ++d) {
            q[d + 1] += p[k - 1][d];
            q[d] -= h(k - 1, k - 1) * p[k - 1][d];
        }
        Scalar prod(1);
        for (int i = k - 1; i >= 1; --i) {
            prod = prod * h(i, i - 1);
            if (prod.is_zero()) break;
            Scalar c = h(i - 1, k - 1) * prod;
            if (c.is_zero()) continue;
            for (int d = 0; d < (int)p[i - 1].size(); ++d) q[d] -= c * p[i - 1][d];
        }
        p[k] = std::move(q);
    }
    return p[n];
}

namespace {

mpz_class lcm_den(const std::vector<Scalar>& poly) {
    mpz_class l = 1;
    for (const auto& c : poly) {
        mpz_class d = c.to_rat().den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return l;
}

}  // namespace

std::vector<std::pair<Rat, int>> rational_roots(const std::vector<Scalar>& poly0) {
    std::vector<std::pair<Rat, int>> out;
    int n = (int)poly0.size() - 1;
    if (n <= 0) return out;
    // integer coefficients
    mpz_class L = lcm_den(poly0);
    std::vector<mpz_class> c(n + 1);
    for (int k = 0; k <= n; ++k) {
        mpq_class q = poly0[k].to_rat().to_mpq() * L;
        c[k] = q.get_num();
    }
    int zero_mult = 0;
    while (!c.empty() && c[0] == 0) { c.erase(c.begin()); ++zero_mult; }
    if (zero_mult) out.push_back({Rat(0), zero_mult});
    // substitute y = lead * x: monic integer polynomial in y
    int deg = (int)c.size() - 1;
    mpz_class lead = c[deg];
    std::vector<mpz_class> q(deg + 1);
    mpz_class pw = 1;
    for (int k = deg; k >= 0; --k) {
        // q_k = c_k * lead^{deg-1-k} for k < deg; q_deg = 1
        if (k == deg) q[k] = 1;
        else {
            q[k] = c[k] * pw;
            pw *= lead;
        }
    }
    // q_k for k<deg computed with pw = lead^{deg-1-k}
    auto eval = [&](const mpz_class& y) {
        mpz_class acc = 0;
        for (int k = (int)q.size() - 1; k >= 0; --k) acc = acc * y + q[k];
        return acc;
    };
    // Cauchy bound on integer roots
    while (q.size() > 1) {
        mpz_class bound = 0;
        for (size_t k = 0; k + 1 < q.size(); ++k) {
            mpz_class a = abs(q[k]);
            if (a > bound) bound = a;
        }
        bound += 1;
        mpz_class q0 = abs(q[0]);
        bool found = false;
        // candidate integer roots divide q0; scan divisors up to a limit
        if (q0 == 0) {
            found = true;  // y = 0 cannot happen after stripping zeros; guard
        }
        mpz_class lim = bound;
        if (lim > 2000000) lim = 2000000;
        for (mpz_class y = 1; y <= lim && !found; ++y) {
            if (q0 % y != 0) continue;
            for (int sgn : {1, -1}) {
                mpz_class yy = sgn * y;
                if (eval(yy) == 0) {
                    int mult = 0;
                    while (q.size() > 1 && eval(yy) == 0) {
                        // synthetic division
                        std::vector<mpz_class> nq(q.size() - 1);
                        mpz_class carry = 0;
                        for (int k = (int)q.size() - 1; k >= 1; --k) {
                            carry = carry * yy + q[k];
                            nq[k - 1] = carry;
                        }
                        q = std::move(nq);
                        ++mult;
                    }
                    out.push_back({Rat(mpq_class(yy, lead)), mult});
                    found = true;
                    break;
                }
            }
        }
        if (!found) {
            if (bound > lim) throw std::domain_error("rational_roots: root search bound exceeded");
            throw std::domain_error("characteristic polynomial has non-rational roots");
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

namespace {

Subspace generalized_kernel(const Mat& n) {
    Mat p(n);
    Subspace k = kernel(p);
    for (;;) {
        if (k.dim() == n.rows()) return k;
        p = p * n;
        Subspace k2 = kernel(p);
        if (k2.dim() == k.dim()) return k;
        k = k2;
    }
}

}  // namespace

std::vector<WeightSpace> simultaneous_generalized_eigenspaces(const std::vector<Mat>& mats,
                                                             const std::vector<std::vector<Rat>>* candidates) {
    if (mats.empty()) throw std::invalid_argument("no matrices");
    int n = mats[0].rows();
    for (size_t a = 0; a < mats.size(); ++a)
        for (size_t b = a + 1; b < mats.size(); ++b)
            if (mats[a] * mats[b] != mats[b] * mats[a]) throw std::invalid_argument("matrices do not commute");
    std::vector<WeightSpace> cur{{{}, Subspace::full(n)}};
    for (size_t j = 0; j < mats.size(); ++j) {
        std::vector<WeightSpace> next;
        for (auto& ws : cur) {
            int d = ws.space.dim();
            Mat r = ws.space.restrict_map(mats[j]);
            std::vector<Rat> mus;
            if (candidates) {
                for (const auto& c : *candidates) {
                    if (!std::equal(ws.weight.begin(), ws.weight.end(), c.begin())) continue;
                    if (std::find(mus.begin(), mus.end(), c[j]) == mus.end()) mus.push_back(c[j]);
                }
                std::sort(mus.begin(), mus.end());
            } else {
                for (auto& [mu, mult] : rational_roots(charpoly(r))) mus.push_back(mu);
            }
            int total = 0;
            for (const auto& mu : mus) {
                Mat nm = r - Mat::identity(d, Scalar(mu));
                Subspace gk = generalized_kernel(nm);
                if (gk.dim() == 0) continue;
                total += gk.dim();
                Subspace amb = Subspace::span(gk.basis() * ws.space.basis());
                auto w = ws.weight;
                w.push_back(mu);
                next.push_back({w, amb});
            }
            if (total != d) throw std::logic_error("eigenspace decomposition incomplete (candidate weights missing?)");
        }
        cur = std::move(next);
    }
    std::sort(cur.begin(), cur.end(), [](const WeightSpace& a, const WeightSpace& b) { return a.weight < b.weight; });
    return cur;
}

}  // namespace hd
