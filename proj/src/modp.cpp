#include "hd/modp.hpp"

#include <algorithm>

namespace hd::modp {

bool is_prime(u64 n) {
    if (n < 2) return false;
    static const u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : small)
        if (n % q == 0) return n == q;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : small) {
        u64 x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mul(x, x, n);
            if (x == n - 1) { comp = false; break; }
        }
        if (comp) return false;
    }
    return true;
}

u64 primitive_root(u64 p) {
    std::vector<u64> fs;
    u64 m = p - 1;
    for (u64 q = 2; q * q <= m; ++q)
        if (m % q == 0) {
            fs.push_back(q);
            while (m % q == 0) m /= q;
        }
    if (m > 1) fs.push_back(m);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 q : fs)
            if (pow(g, (p - 1) / q, p) == 1) { ok = false; break; }
        if (ok) return g;
    }
}

std::vector<int> rref(std::vector<u64>& a, int R, int C, u64 p) {
    std::vector<int> piv;
    int cur = 0;
    for (int j = 0; j < C && cur < R; ++j) {
        int pr = -1;
        for (int i = cur; i < R; ++i)
            if (a[(size_t)i * C + j]) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != cur)
            for (int k = j; k < C; ++k) std::swap(a[(size_t)pr * C + k], a[(size_t)cur * C + k]);
        u64 iv = inv(a[(size_t)cur * C + j], p);
        for (int k = j; k < C; ++k) a[(size_t)cur * C + k] = mul(a[(size_t)cur * C + k], iv, p);
        for (int i = 0; i < R; ++i) {
            if (i == cur) continue;
            u64 f = a[(size_t)i * C + j];
            if (!f) continue;
            u64 nf = p - f;
            for (int k = j; k < C; ++k) {
                u64 v = a[(size_t)cur * C + k];
                if (v) a[(size_t)i * C + k] = add(a[(size_t)i * C + k], mul(nf, v, p), p);
            }
        }
        piv.push_back(j);
        ++cur;
    }
    return piv;
}

std::vector<std::vector<u64>> kernel(const std::vector<u64>& a0, int R, int C, u64 p) {
    std::vector<u64> a(a0);
    auto piv = rref(a, R, C, p);
    std::vector<char> is_piv(C, 0);
    for (int q : piv) is_piv[q] = 1;
    std::vector<std::vector<u64>> out;
    for (int f = 0; f < C; ++f) {
        if (is_piv[f]) continue;
        std::vector<u64> v(C, 0);
        v[f] = 1;
        for (size_t k = 0; k < piv.size(); ++k) v[piv[k]] = (p - a[k * C + f]) % p;
        out.push_back(v);
    }
    return out;
}

std::vector<u64> charpoly(const std::vector<u64>& a0, int n, u64 p) {
    std::vector<u64> h(a0);
    auto H = [&](int i, int j) -> u64& { return h[(size_t)i * n + j]; };
    for (int j = 0; j + 2 < n; ++j) {
        int pr = -1;
        for (int i = j + 1; i < n; ++i)
            if (H(i, j)) { pr = i; break; }
        if (pr < 0) continue;
        if (pr != j + 1) {
            for (int k = 0; k < n; ++k) std::swap(H(pr, k), H(j + 1, k));
            for (int k = 0; k < n; ++k) std::swap(H(k, pr), H(k, j + 1));
        }
        u64 iv = inv(H(j + 1, j), p);
        for (int i = j + 2; i < n; ++i) {
            if (!H(i, j)) continue;
            u64 f = mul(H(i, j), iv, p);
            for (int k = 0; k < n; ++k) H(i, k) = sub(H(i, k), mul(f, H(j + 1, k), p), p);
            for (int k = 0; k < n; ++k) H(k, j + 1) = add(H(k, j + 1), mul(f, H(k, i), p), p);
        }
    }
    std::vector<std::vector<u64>> P(n + 1);
    P[0] = {1};
    for (int k = 1; k <= n; ++k) {
        std::vector<u64> q(k + 1, 0);
        for (int d = 0; d < (int)P[k - 1].size(); ++d) {
            q[d + 1] = add(q[d + 1], P[k - 1][d], p);
            q[d] = sub(q[d], mul(H(k - 1, k - 1), P[k - 1][d], p), p);
        }
        u64 prod = 1;
        for (int i = k - 1; i >= 1; --i) {
            prod = mul(prod, H(i, i - 1), p);
            if (!prod) break;
            u64 c = mul(H(i - 1, k - 1), prod, p);
            if (!c) continue;
            for (int d = 0; d < (int)P[i - 1].size(); ++d) q[d] = sub(q[d], mul(c, P[i - 1][d], p), p);
        }
        P[k] = std::move(q);
    }
    return P[n];
}

}  // namespace hd::modp
