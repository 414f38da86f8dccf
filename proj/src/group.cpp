#include "hd/group.hpp"

#include "hd/matrix.hpp"
#include "hd/modp.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace hd {

// ---------------------------------------------------------------- partitions

Partition::Partition(std::vector<int> p) {
    for (int x : p)
        if (x > 0) parts.push_back(x);
    std::sort(parts.rbegin(), parts.rend());
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition Partition::transpose() const {
    std::vector<int> t;
    if (!parts.empty())
        for (int j = 1; j <= parts[0]; ++j) {
            int c = 0;
            for (int x : parts) c += x >= j;
            t.push_back(c);
        }
    return Partition(t);
}

int Partition::hook(int i, int j) const {
    if (i < 0 || i >= length() || j < 0 || j >= parts[i]) throw std::out_of_range("hook: box outside the diagram");
    int leg = 0;
    for (int r = i + 1; r < length() && parts[r] > j; ++r) ++leg;
    return parts[i] - j - 1 + leg + 1;
}

bool Partition::distinct_parts() const {
    for (size_t k = 1; k < parts.size(); ++k)
        if (parts[k] == parts[k - 1]) return false;
    return true;
}

std::string Partition::str() const {
    std::string s = "(";
    for (size_t k = 0; k < parts.size(); ++k) s += (k ? "," : "") + std::to_string(parts[k]);
    return s + ")";
}

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxp) {
        if (left == 0) { out.push_back(Partition(cur)); return; }
        for (int p = std::min(left, maxp); p >= 1; --p) {
            cur.push_back(p);
            rec(left - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

std::vector<Partition> strict_partitions_of(int n) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (p.distinct_parts()) out.push_back(p);
    return out;
}

bool dominates(const Partition& a, const Partition& b) {
    int sa = 0, sb = 0;
    size_t len = std::max(a.parts.size(), b.parts.size());
    for (size_t k = 0; k < len; ++k) {
        sa += k < a.parts.size() ? a.parts[k] : 0;
        sb += k < b.parts.size() ? b.parts[k] : 0;
        if (sa < sb) return false;
    }
    return true;
}

long long factorial(int n) {
    long long f = 1;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

namespace {
// Beta-set recursion; beads sorted, rim hooks of length k move a bead down by k.
long long mn_rec(std::vector<int>& beads, const std::vector<int>& mu, size_t idx,
                 std::map<std::pair<std::vector<int>, size_t>, long long>& memo) {
    if (idx == mu.size()) return 1;
    auto key = std::make_pair(beads, idx);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    int k = mu[idx];
    long long total = 0;
    for (size_t a = 0; a < beads.size(); ++a) {
        int b = beads[a], t = b - k;
        if (t < 0 || std::binary_search(beads.begin(), beads.end(), t)) continue;
        int between = 0;
        for (int x : beads) between += x > t && x < b;
        std::vector<int> nb(beads);
        nb[a] = t;
        std::sort(nb.begin(), nb.end());
        long long v = mn_rec(nb, mu, idx + 1, memo);
        total += (between % 2 ? -v : v);
    }
    memo[key] = total;
    return total;
}
}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size()) throw std::invalid_argument("mn_character: size mismatch");
    int L = lambda.length();
    std::vector<int> beads;
    for (int i = 0; i < L; ++i) beads.push_back(lambda.parts[i] + (L - 1 - i));
    std::sort(beads.begin(), beads.end());
    std::map<std::pair<std::vector<int>, size_t>, long long> memo;
    return mn_rec(beads, mu.parts, 0, memo);
}

// ---------------------------------------------------------------- class functions

Scalar inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.classes != b.classes && (a.classes->sizes != b.classes->sizes || a.classes->group_order != b.classes->group_order))
        throw std::invalid_argument("inner_product: class functions of different groups");
    Scalar s;
    for (size_t c = 0; c < a.values.size(); ++c)
        s.add_mul(a.values[c] * b.values[c].conj(), Scalar(a.classes->sizes[c]));
    return s.scaled(Rat(1, a.classes->group_order));
}

long long multiplicity(const ClassFunction& chi, const ClassFunction& sigma) {
    Scalar s = inner_product(chi, sigma);
    if (!s.is_rational() || !s.to_rat().is_integer() || s.to_rat().sign() < 0)
        throw std::runtime_error("multiplicity: non-integral inner product " + s.str());
    return s.to_rat().small_num();
}

// ---------------------------------------------------------------- groups

FiniteGroup::FiniteGroup(int n, std::vector<int> table, std::vector<int> gens, std::vector<std::vector<int>> words)
    : n_(n), table_(std::move(table)), gens_(std::move(gens)) {
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b)
            if (mul(a, b) == 0) { inv_[a] = b; break; }
    ord_.assign(n_, 0);
    for (int a = 0; a < n_; ++a) {
        int x = a, k = 1;
        while (x != 0) { x = mul(x, a); ++k; }
        ord_[a] = k;
    }
    // Conjugacy classes: orbits under conjugation by generators, numbered by least member.
    cls_.assign(n_, -1);
    for (int a = 0; a < n_; ++a) {
        if (cls_[a] >= 0) continue;
        int c = (int)members_.size();
        members_.push_back({a});
        cls_[a] = c;
        for (size_t q = 0; q < members_[c].size(); ++q) {
            int x = members_[c][q];
            for (int g : gens_) {
                int y = mul(mul(inv_[g], x), g);
                if (cls_[y] < 0) { cls_[y] = c; members_[c].push_back(y); }
            }
        }
        std::sort(members_[c].begin(), members_[c].end());
    }
    data_ = std::make_shared<ClassData>();
    data_->group_order = n_;
    for (auto& m : members_) {
        data_->sizes.push_back((long long)m.size());
        data_->reps.push_back(m[0]);
        data_->orders.push_back(ord_[m[0]]);
        data_->words.push_back(words.empty() ? std::vector<int>{} : words[m[0]]);
    }
}

int FiniteGroup::power_class(int c, int k) const {
    int g = members_[c][0], x = 0;
    k %= ord_[g];
    if (k < 0) k += ord_[g];
    for (int t = 0; t < k; ++t) x = mul(x, g);
    return cls_[x];
}

int CharTable::find(const std::string& label) const {
    for (size_t k = 0; k < labels.size(); ++k)
        if (labels[k] == label) return (int)k;
    return -1;
}

// ---------------------------------------------------------------- Dixon

namespace {

using modp::u64;

// Integer polynomials modulo x^N - 1, reduced later modulo the cyclotomic polynomial.
using IPoly = std::vector<long long>;

IPoly cyclotomic(int N) {
    // x^N - 1 divided by Phi_d for proper divisors d.
    IPoly num(N + 1, 0);
    num[0] = -1;
    num[N] = 1;
    for (int d = 1; d < N; ++d) {
        if (N % d) continue;
        IPoly den = cyclotomic(d);
        IPoly q(num.size() - den.size() + 1, 0);
        IPoly r = num;
        for (int k = (int)r.size() - 1; k >= (int)den.size() - 1; --k) {
            long long c = r[k];
            if (!c) continue;
            int s = k - ((int)den.size() - 1);
            q[s] = c;
            for (size_t t = 0; t < den.size(); ++t) r[s + t] -= c * den[t];
        }
        num = q;
    }
    return num;
}

// Coordinates of a class of Z[x]/(x^N-1) in the power basis of Q(zeta_N).
std::vector<long long> reduce_cyclo(IPoly a, const IPoly& phi) {
    int d = (int)phi.size() - 1;
    for (int k = (int)a.size() - 1; k >= d; --k) {
        long long c = a[k];
        if (!c) continue;
        for (int t = 0; t <= d; ++t) a[k - d + t] -= c * phi[t];
    }
    a.resize(d);
    return a;
}

IPoly cmul(const IPoly& a, const IPoly& b, int N) {
    IPoly c(N, 0);
    for (int i = 0; i < N; ++i)
        if (a[i])
            for (int j = 0; j < N; ++j)
                if (b[j]) c[(i + j) % N] += a[i] * b[j];
    return c;
}

int legendre(long a, long q) {
    a %= q;
    if (a < 0) a += q;
    if (a == 0) return 0;
    return modp::pow((u64)a, (u64)(q - 1) / 2, (u64)q) == 1 ? 1 : -1;
}

// Converts sum_k mu_k zeta_o^k into the radical tower by matching against
// i^a * sqrt(prod of primes dividing 2o).
Scalar cyclotomic_to_tower(const std::vector<long long>& mu, int o) {
    if (o == 1) return Scalar((long long)mu[0]);
    int N = std::lcm(o, 8);
    IPoly val(N, 0);
    for (int k = 0; k < o; ++k) val[(long long)k * (N / o) % N] += mu[k];
    std::vector<long> primes = {2};
    for (long q = 3; q <= o; q += 2) {
        bool pr = true;
        for (long d = 3; d * d <= q; d += 2) pr &= q % d != 0;
        if (pr && o % q == 0) primes.push_back(q);
    }
    auto unit = [&](int e) { IPoly p(N, 0); p[((e % N) + N) % N] = 1; return p; };
    IPoly ipoly = unit(N / 4);
    std::vector<IPoly> roots;  // cyclotomic expressions of sqrt(q)
    for (long q : primes) {
        IPoly s(N, 0);
        if (q == 2) {
            s[N / 8] += 1;
            s[N - N / 8] += 1;
        } else {
            for (long a = 1; a < q; ++a) s[a * (N / q) % N] += legendre(a, q);
            if (q % 4 == 3) {
                s = cmul(s, ipoly, N);
                for (auto& x : s) x = -x;
            }
        }
        roots.push_back(s);
    }
    IPoly phi = cyclotomic(N);
    int d = (int)phi.size() - 1;
    std::vector<IPoly> cand;
    std::vector<std::pair<int, long>> cand_id;  // (a, radicand)
    for (int a = 0; a < 2; ++a)
        for (int s = 0; s < (1 << primes.size()); ++s) {
            IPoly p = a ? ipoly : unit(0);
            long rad = 1;
            for (size_t t = 0; t < primes.size(); ++t)
                if (s >> t & 1) { p = cmul(p, roots[t], N); rad *= primes[t]; }
            cand.push_back(p);
            cand_id.push_back({a, rad});
        }
    int K = (int)cand.size();
    Mat A(d, K), B(d, 1);
    for (int k = 0; k < K; ++k) {
        auto c = reduce_cyclo(cand[k], phi);
        for (int t = 0; t < d; ++t) A(t, k) = Scalar((long long)c[t]);
    }
    auto v = reduce_cyclo(val, phi);
    for (int t = 0; t < d; ++t) B(t, 0) = Scalar((long long)v[t]);
    auto sol = solve(A, B);
    if (!sol) throw std::runtime_error("character value outside the radical tower");
    Scalar out;
    for (int k = 0; k < K; ++k) {
        const Scalar& c = (*sol)(k, 0);
        if (c.is_zero()) continue;
        Scalar term = cand_id[k].second == 1 ? Scalar(1) : sqrt_of(cand_id[k].second);
        if (cand_id[k].first) term = term * Scalar::i();
        out += c * term;
    }
    return out;
}

u64 choose_prime(long long order, int exponent) {
    u64 lo = std::max<u64>(2 * order + 1, 20011);
    u64 p = (lo / exponent + 1) * exponent + 1;
    while (!modp::is_prime(p)) p += exponent;
    return p;
}

}  // namespace

CharTable dixon_char_table(const FiniteGroup& g) {
    int k = g.num_classes();
    long long n = g.order();
    auto data = g.class_data();
    int expo = 1;
    for (int o : data->orders) expo = std::lcm(expo, o);
    u64 p = choose_prime(n, expo);

    // Class multiplication coefficients a[j][c][l] = #{x in C_j : x^-1 z_l in C_c}.
    std::vector<std::vector<std::vector<u64>>> a(k, std::vector<std::vector<u64>>(k, std::vector<u64>(k, 0)));
    for (int j = 0; j < k; ++j)
        for (int l = 0; l < k; ++l) {
            int z = data->reps[l];
            for (int x : g.class_members(j)) a[j][g.class_of(g.mul(g.inv(x), z))][l]++;
        }
    std::vector<int> inv_class(k);
    for (int c = 0; c < k; ++c) inv_class[c] = g.class_of(g.inv(data->reps[c]));

    std::mt19937_64 rng(12345);
    std::vector<std::vector<u64>> omegas;
    for (int attempt = 0; attempt < 200 && (int)omegas.size() != k; ++attempt) {
        std::vector<u64> coef(k);
        for (auto& c : coef) c = rng() % p;
        std::vector<u64> M((size_t)k * k, 0);
        for (int j = 0; j < k; ++j)
            for (int r = 0; r < k; ++r)
                for (int l = 0; l < k; ++l) M[(size_t)r * k + l] = modp::add(M[(size_t)r * k + l], modp::mul(coef[j], a[j][r][l] % p, p), p);
        auto cp = modp::charpoly(M, k, p);
        std::vector<u64> roots;
        for (u64 x = 0; x < p && (int)roots.size() <= k; ++x) {
            u64 v = 0;
            for (int t = k; t >= 0; --t) v = modp::add(modp::mul(v, x, p), cp[t], p);
            if (!v) roots.push_back(x);
        }
        if ((int)roots.size() != k) continue;
        omegas.clear();
        bool ok = true;
        for (u64 lam : roots) {
            std::vector<u64> A(M);
            for (int r = 0; r < k; ++r) A[(size_t)r * k + r] = modp::sub(A[(size_t)r * k + r], lam, p);
            auto ker = modp::kernel(A, k, k, p);
            if (ker.size() != 1 || ker[0][0] == 0) { ok = false; break; }
            u64 s = modp::inv(ker[0][0], p);
            for (auto& x : ker[0]) x = modp::mul(x, s, p);
            omegas.push_back(ker[0]);
        }
        if (!ok) omegas.clear();
    }
    if ((int)omegas.size() != k) throw std::runtime_error("dixon: failed to split class algebra");

    u64 prim = modp::primitive_root(p);
    CharTable t;
    t.classes = data;
    for (auto& om : omegas) {
        u64 s = 0;
        for (int j = 0; j < k; ++j)
            s = modp::add(s, modp::mul(modp::mul(om[j], om[inv_class[j]], p), modp::inv((u64)data->sizes[j] % p, p), p), p);
        u64 dsq = modp::mul((u64)n % p, modp::inv(s, p), p);
        long long deg = 0;
        for (long long dd = 1; dd * dd <= n; ++dd)
            if ((u64)(dd * dd) % p == dsq) { deg = dd; break; }
        if (!deg) throw std::runtime_error("dixon: degree not found");
        std::vector<u64> chi(k);
        for (int j = 0; j < k; ++j)
            chi[j] = modp::mul(modp::mul(om[j], (u64)deg % p, p), modp::inv((u64)data->sizes[j] % p, p), p);
        ClassFunction cf;
        cf.classes = data;
        for (int j = 0; j < k; ++j) {
            int o = data->orders[j];
            u64 z = modp::pow(prim, (p - 1) / o, p);
            u64 zinv = modp::inv(z, p), oinv = modp::inv((u64)o, p);
            std::vector<long long> mu(o);
            for (int e = 0; e < o; ++e) {
                u64 acc = 0;
                u64 step = modp::pow(zinv, (u64)e, p), w = 1;
                for (int tt = 0; tt < o; ++tt) {
                    acc = modp::add(acc, modp::mul(chi[g.power_class(j, tt)], w, p), p);
                    w = modp::mul(w, step, p);
                }
                acc = modp::mul(acc, oinv, p);
                long long m = acc > p / 2 ? -(long long)(p - acc) : (long long)acc;
                if (m < 0 || m > deg) throw std::runtime_error("dixon: eigenvalue multiplicity out of range");
                mu[e] = m;
            }
            cf.values.push_back(cyclotomic_to_tower(mu, o));
        }
        t.chars.push_back(std::move(cf));
    }
    std::sort(t.chars.begin(), t.chars.end(), [](const ClassFunction& x, const ClassFunction& y) {
        Rat dx = x.values[0].to_rat(), dy = y.values[0].to_rat();
        if (dx != dy) return dx < dy;
        for (size_t c = 0; c < x.values.size(); ++c) {
            double a = x.values[c].approx_re(), b = y.values[c].approx_re();
            if (std::abs(a - b) > 1e-9) return a > b;
            a = x.values[c].approx_im(), b = y.values[c].approx_im();
            if (std::abs(a - b) > 1e-9) return a > b;
        }
        return false;
    });
    return t;
}

bool check_orthogonality(const CharTable& t) {
    int k = t.num();
    if (k != (int)t.classes->sizes.size()) return false;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            Scalar ip = inner_product(t.chars[a], t.chars[b]);
            if (!(a == b ? ip.is_one() : ip.is_zero())) return false;
        }
    // Column relation: sum_chi chi(c) conj chi(d) = delta |G|/|C|.
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
            Scalar s;
            for (auto& ch : t.chars) s.add_mul(ch.values[c], ch.values[d].conj());
            Scalar want = c == d ? Scalar(Rat(t.classes->group_order) / Rat(t.classes->sizes[c])) : Scalar();
            if (s != want) return false;
        }
    return true;
}

}  // namespace hd
