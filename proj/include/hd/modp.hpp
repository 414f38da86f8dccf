#pragma once
// Small prime-field helpers shared by the modular routines.
#include <cstdint>
#include <vector>

namespace hd::modp {

using u64 = unsigned long long;

inline u64 mul(u64 a, u64 b, u64 p) { return (u64)((unsigned __int128)a * b % p); }
inline u64 pow(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}
inline u64 inv(u64 a, u64 p) { return pow(a, p - 2, p); }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 add(u64 a, u64 b, u64 p) { u64 s = a + b; return s >= p ? s - p : s; }

bool is_prime(u64 n);
// A generator of the multiplicative group.
u64 primitive_root(u64 p);
// Reduced row echelon form of an R x C row-major matrix; returns pivots.
std::vector<int> rref(std::vector<u64>& a, int R, int C, u64 p);
// Null space basis vectors (column convention: a x = 0).
std::vector<std::vector<u64>> kernel(const std::vector<u64>& a, int R, int C, u64 p);
// Characteristic polynomial, low to high, monic.
std::vector<u64> charpoly(const std::vector<u64>& a, int n, u64 p);

}  // namespace hd::modp
