// Multimodular reduced echelon form over the scalar tower, certified exactly.
// Each prime p is chosen so that i and the needed radicals exist mod p; the matrix is
// reduced under every sign embedding, coefficients are recovered by a Walsh-Hadamard
// inversion, combined by CRT and rational reconstruction, and the candidate echelon
// basis is accepted only after an exact containment check over the tower.
#include "hd/matrix.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace hd {

namespace {

using u64 = unsigned long long;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return (u64)((u128)a * b % p); }
u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}
u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

// Tonelli-Shanks; returns 0 if a is a non-residue.
u64 sqrtmod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (powmod(a, (p - 1) / 2, p) != 1) return 0;
    u64 q = p - 1;
    int s = 0;
    while ((q & 1) == 0) { q >>= 1; ++s; }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), r = powmod(a, (q + 1) / 2, p);
    while (t != 1) {
        u64 i = 0, tt = t;
        while (tt != 1) { tt = mulmod(tt, tt, p); ++i; }
        u64 b = c;
        for (u64 j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        m = i;
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        r = mulmod(r, b, p);
    }
    return r;
}

struct PrimeData {
    u64 p;
    std::vector<u64> gen;  // images of the generators: i, then sqrt of each radical prime
};

// generators: index 0 is i (if used), then tower primes with bits in `mask`.
struct FieldShape {
    bool uses_i = false;
    std::vector<int> rad_bits;
    int ngen() const { return (uses_i ? 1 : 0) + (int)rad_bits.size(); }
};

std::vector<PrimeData>& prime_cache(const FieldShape& sh) {
    static std::map<std::pair<bool, std::vector<int>>, std::vector<PrimeData>> cache;
    return cache[{sh.uses_i, sh.rad_bits}];
}

PrimeData next_prime(const FieldShape& sh, size_t index) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto& cache = prime_cache(sh);
    while (cache.size() <= index) {
        u64 start = cache.empty() ? ((1ULL << 62) - 1) : cache.back().p - 2;
        if (start % 2 == 0) --start;
        for (u64 n = start;; n -= 2) {
            if (!is_prime(n)) continue;
            PrimeData pd{n, {}};
            bool ok = true;
            if (sh.uses_i) {
                u64 r = sqrtmod(n - 1, n);
                if (!r) ok = false;
                else pd.gen.push_back(r);
            }
            for (int b : sh.rad_bits) {
                if (!ok) break;
                u64 r = sqrtmod((u64)tower_primes()[b], n);
                if (!r) ok = false;
                else pd.gen.push_back(r);
            }
            if (ok) {
                cache.push_back(pd);
                break;
            }
        }
    }
    return cache[index];
}

// Reduce a rational mod p; false if the denominator vanishes.
bool rat_mod(const Rat& q, u64 p, u64& out) {
    if (q.is_small()) {
        long long n = q.small_num(), d = q.small_den();
        u64 nm = n >= 0 ? (u64)n % p : (p - (u64)(-n) % p) % p;
        u64 dm = (u64)d % p;
        if (dm == 0) return false;
        out = mulmod(nm, invmod(dm, p), p);
        return true;
    }
    mpz_class pp((unsigned long)p);
    mpz_class nm = q.num() % pp, dm = q.den() % pp;
    if (nm < 0) nm += pp;
    if (dm == 0) return false;
    out = mulmod((u64)nm.get_ui(), invmod((u64)dm.get_ui(), p), p);
    return true;
}

// Coefficient slot of a term: bit 0 = i, bits 1.. = radical generators in shape order.
struct Embedder {
    const FieldShape& sh;
    std::vector<int> bitpos;  // tower bit -> generator index
    explicit Embedder(const FieldShape& s) : sh(s), bitpos(64, -1) {
        int off = sh.uses_i ? 1 : 0;
        for (size_t k = 0; k < sh.rad_bits.size(); ++k) bitpos[sh.rad_bits[k]] = off + (int)k;
    }
    // Image of x under the embedding with generator signs given by `signs` (bit g set = negate).
    bool image(const Scalar& x, const PrimeData& pd, unsigned signs, u64& out) const {
        u64 p = pd.p;
        u64 acc = 0;
        for (const auto& t : x.terms()) {
            u64 rad = 1;
            for (uint64_t m = t.mask; m;) {
                int b = __builtin_ctzll(m);
                m &= m - 1;
                int g = bitpos[b];
                u64 v = pd.gen[g];
                if (signs >> g & 1) v = p - v;
                rad = mulmod(rad, v, p);
            }
            u64 re = 0, im = 0;
            if (!rat_mod(t.re, p, re) || !rat_mod(t.im, p, im)) return false;
            u64 val = re;
            if (!t.im.is_zero()) {
                u64 iota = pd.gen[0];
                if (signs & 1) iota = p - iota;
                val = (val + mulmod(im, iota, p)) % p;
            }
            acc = (acc + mulmod(val, rad, p)) % p;
        }
        out = acc;
        return true;
    }
};

// RREF mod p in place; returns pivots.
std::vector<int> rref_mod(std::vector<u64>& a, int R, int C, u64 p) {
    std::vector<int> piv;
    int cur = 0;
    for (int j = 0; j < C && cur < R; ++j) {
        int pr = -1;
        for (int i = cur; i < R; ++i)
            if (a[(size_t)i * C + j]) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != cur)
            for (int k = j; k < C; ++k) std::swap(a[(size_t)pr * C + k], a[(size_t)cur * C + k]);
        u64 inv = invmod(a[(size_t)cur * C + j], p);
        for (int k = j; k < C; ++k) a[(size_t)cur * C + k] = mulmod(a[(size_t)cur * C + k], inv, p);
        for (int i = 0; i < R; ++i) {
            if (i == cur) continue;
            u64 f = a[(size_t)i * C + j];
            if (!f) continue;
            u64 nf = p - f;
            for (int k = j; k < C; ++k) {
                u64 v = a[(size_t)cur * C + k];
                if (v) a[(size_t)i * C + k] = (a[(size_t)i * C + k] + mulmod(nf, v, p)) % p;
            }
        }
        piv.push_back(j);
        ++cur;
    }
    return piv;
}

// Rational reconstruction of r mod m with |n|, d <= sqrt(m/2).
bool ratrecon(const mpz_class& r, const mpz_class& m, mpq_class& out) {
    mpz_class bound;
    mpz_class half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
    mpz_class r0 = m, r1 = r, t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        mpz_class t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return false;
    out = mpq_class(r1, t1);
    out.canonicalize();
    return true;
}

bool row_in_span(const Vec& a, const Mat& b, const std::vector<int>& piv) {
    int n = (int)a.size();
    Vec r(a);
    for (int k = 0; k < b.rows(); ++k) {
        Scalar f = r[piv[k]];
        if (f.is_zero()) continue;
        Scalar nf = -f;
        for (int j = piv[k]; j < n; ++j)
            if (!b(k, j).is_zero()) r[j].add_mul(nf, b(k, j));
    }
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

}  // namespace

// Returns false if the modular route does not apply; otherwise fills the echelon basis.
bool rref_modular(const Mat& m, Mat& basis, std::vector<int>& pivots) {
    int R = m.rows(), C = m.cols();
    FieldShape sh;
    uint64_t mask = 0;
    for (int i = 0; i < R; ++i)
        for (int j = 0; j < C; ++j)
            for (const auto& t : m(i, j).terms()) {
                mask |= t.mask;
                if (!t.im.is_zero()) sh.uses_i = true;
            }
    for (int b = 0; b < 64; ++b)
        if (mask >> b & 1) sh.rad_bits.push_back(b);
    int g = sh.ngen();
    if (g > 6) return false;
    unsigned nemb = 1u << g;
    Embedder emb(sh);

    std::vector<int> best_piv;
    int best_rank = -1;
    // residues[prime][entry][coef]
    std::vector<u64> moduli;
    std::vector<std::vector<std::vector<u64>>> residues;
    std::vector<mpq_class> prev;  // last reconstruction, flattened

    for (size_t pi = 0; pi < 40; ++pi) {
        PrimeData pd = next_prime(sh, pi);
        u64 p = pd.p;
        std::vector<std::vector<u64>> imgs(nemb);
        std::vector<int> piv0;
        bool bad = false;
        for (unsigned s = 0; s < nemb && !bad; ++s) {
            std::vector<u64> a((size_t)R * C);
            for (int i = 0; i < R && !bad; ++i)
                for (int j = 0; j < C; ++j)
                    if (!m(i, j).is_zero() && !emb.image(m(i, j), pd, s, a[(size_t)i * C + j])) { bad = true; break; }
            if (bad) break;
            auto piv = rref_mod(a, R, C, p);
            if (s == 0) piv0 = piv;
            else if (piv != piv0) bad = true;
            imgs[s] = std::move(a);
        }
        if (bad) continue;
        int rk = (int)piv0.size();
        if (rk > best_rank || (rk == best_rank && piv0 < best_piv)) {
            if (rk != best_rank || piv0 != best_piv) {
                moduli.clear();
                residues.clear();
                prev.clear();
            }
            best_rank = rk;
            best_piv = piv0;
        } else if (rk < best_rank || piv0 != best_piv) {
            continue;  // unlucky prime
        }
        // coefficient recovery: c_T = 2^-g * prod_{t in T} beta_t^-1 * sum_s (-1)^{|s & T|} img_s
        size_t ne = (size_t)rk * C;
        std::vector<std::vector<u64>> coef(ne, std::vector<u64>(nemb));
        u64 inv2g = invmod(powmod(2, g, p), p);
        std::vector<u64> tinv(nemb);
        for (unsigned T = 0; T < nemb; ++T) {
            u64 prod = 1;
            for (int t = 0; t < g; ++t)
                if (T >> t & 1) prod = mulmod(prod, pd.gen[t], p);
            tinv[T] = mulmod(invmod(prod, p), inv2g, p);
        }
        for (size_t e = 0; e < ne; ++e) {
            int i = (int)(e / C), j = (int)(e % C);
            for (unsigned T = 0; T < nemb; ++T) {
                u64 acc = 0;
                for (unsigned s = 0; s < nemb; ++s) {
                    u64 v = imgs[s][(size_t)i * C + j];
                    if (__builtin_popcount(s & T) & 1) acc = (acc + p - v) % p;
                    else acc = (acc + v) % p;
                }
                coef[e][T] = mulmod(acc, tinv[T], p);
            }
        }
        moduli.push_back(p);
        residues.push_back(std::move(coef));

        // CRT and reconstruction
        mpz_class M = 1;
        for (u64 q : moduli) M *= mpz_class((unsigned long)q);
        std::vector<mpq_class> rec(ne * nemb);
        bool ok = true;
        for (size_t e = 0; e < ne && ok; ++e)
            for (unsigned T = 0; T < nemb && ok; ++T) {
                mpz_class x = 0, mod = 1;
                for (size_t k = 0; k < moduli.size(); ++k) {
                    mpz_class pk((unsigned long)moduli[k]);
                    mpz_class rk2((unsigned long)residues[k][e][T]);
                    // x = x + mod * ((rk - x) * mod^-1 mod pk)
                    mpz_class diff = (rk2 - x) % pk;
                    if (diff < 0) diff += pk;
                    mpz_class inv;
                    mpz_invert(inv.get_mpz_t(), mod.get_mpz_t(), pk.get_mpz_t());
                    mpz_class t = diff * inv % pk;
                    x += mod * t;
                    mod *= pk;
                }
                if (!ratrecon(x, M, rec[e * nemb + T])) ok = false;
            }
        if (!ok) continue;
        bool stable = (rec == prev);
        prev = rec;
        if (!stable && moduli.size() < 2) continue;
        if (!stable) continue;
        // assemble candidate basis
        Mat b(rk, C);
        for (int i = 0; i < rk; ++i)
            for (int j = 0; j < C; ++j) {
                Scalar x;
                size_t e = (size_t)i * C + j;
                for (unsigned T = 0; T < nemb; ++T) {
                    const mpq_class& q = rec[e * nemb + T];
                    if (q == 0) continue;
                    bool has_i = sh.uses_i && (T & 1);
                    uint64_t tm = 0;
                    int off = sh.uses_i ? 1 : 0;
                    for (size_t k = 0; k < sh.rad_bits.size(); ++k)
                        if (T >> (off + k) & 1) tm |= 1ULL << sh.rad_bits[k];
                    Rat rq(q);
                    x += has_i ? Scalar::radical(tm, Rat(), rq) : Scalar::radical(tm, rq);
                }
                b(i, j) = std::move(x);
            }
        // certificate: each row of m lies in span(b); rank(b) = rk <= rank(m) by the modular image
        bool cert = true;
        for (int i = 0; i < R && cert; ++i)
            if (!row_in_span(m.row(i), b, best_piv)) cert = false;
        if (!cert) continue;
        basis = std::move(b);
        pivots = best_piv;
        return true;
    }
    return false;
}

}  // namespace hd
