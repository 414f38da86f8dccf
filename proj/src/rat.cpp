#include "hd/rat.hpp"

#include <stdexcept>

namespace hd {

namespace {

using u128 = unsigned __int128;

u128 gcd128(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        unsigned long long x = (unsigned long long)a, y = (unsigned long long)b;
        while (y) { unsigned long long t = x % y; x = y; y = t; }
        return x;
    }
    while (b) { u128 t = a % b; a = b; b = t; }
    return a;
}

long long gcd64(long long a, long long b) {
    unsigned long long x = a < 0 ? -(unsigned long long)a : a;
    unsigned long long y = b < 0 ? -(unsigned long long)b : b;
    while (y) { unsigned long long t = x % y; x = y; y = t; }
    return (long long)x;
}

mpz_class z_from_i128(__int128 v) {
    bool neg = v < 0;
    u128 u = neg ? -(u128)v : (u128)v;
    mpz_class hi((unsigned long)(unsigned long long)(u >> 64));
    mpz_class lo((unsigned long)(unsigned long long)u);
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

constexpr __int128 kMax = INT64_MAX;

}  // namespace

Rat::Rat(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    *this = from_i128(n, d);
}

Rat Rat::from_i128(__int128 n, __int128 d) {
    if (d < 0) { n = -n; d = -d; }
    u128 un = n < 0 ? -(u128)n : (u128)n;
    u128 g = gcd128(un, (u128)d);
    if (g > 1) { n /= (__int128)g; d /= (__int128)g; }
    Rat r;
    if (n <= kMax && n >= -kMax && d <= kMax) {
        r.n_ = (long long)n;
        r.d_ = (long long)d;
    } else {
        mpq_class q(z_from_i128(n), z_from_i128(d));
        r.set_big(q);
    }
    return r;
}

void Rat::set_big(const mpq_class& q0) {
    mpq_class q(q0);
    q.canonicalize();
    if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p() && q.get_num() != LONG_MIN) {
        n_ = q.get_num().get_si();
        d_ = q.get_den().get_si();
        big_.reset();
    } else {
        n_ = 0; d_ = 1;
        big_ = std::make_unique<mpq_class>(q);
    }
}

Rat Rat::parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return Rat(q);
}

bool Rat::is_integer() const { return big_ ? big_->get_den() == 1 : d_ == 1; }

mpq_class Rat::to_mpq() const {
    if (big_) return *big_;
    return mpq_class(mpz_class((long)n_), mpz_class((long)d_));
}
mpz_class Rat::num() const { return big_ ? big_->get_num() : mpz_class((long)n_); }
mpz_class Rat::den() const { return big_ ? big_->get_den() : mpz_class((long)d_); }

std::string Rat::str() const {
    if (big_) return big_->get_str();
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
}

double Rat::to_double() const { return big_ ? big_->get_d() : (double)n_ / (double)d_; }

Rat operator+(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
        if (a.n_ == 0) return b;
        if (b.n_ == 0) return a;
        if (a.d_ == 1 && b.d_ == 1) {
            __int128 s = (__int128)a.n_ + b.n_;
            if (s <= kMax && s >= -kMax) { Rat r; r.n_ = (long long)s; return r; }
        }
        __int128 n = (__int128)a.n_ * b.d_ + (__int128)b.n_ * a.d_;
        __int128 d = (__int128)a.d_ * b.d_;
        return Rat::from_i128(n, d);
    }
    Rat r;
    r.set_big(a.to_mpq() + b.to_mpq());
    return r;
}

Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }

Rat Rat::operator-() const {
    Rat r(*this);
    if (r.big_) { *r.big_ = -*r.big_; } else r.n_ = -r.n_;
    return r;
}

Rat operator*(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) {
        if (a.n_ == 0 || b.n_ == 0) return Rat();
        long long g1 = gcd64(a.n_, b.d_), g2 = gcd64(b.n_, a.d_);
        __int128 n = (__int128)(a.n_ / g1) * (b.n_ / g2);
        __int128 d = (__int128)(a.d_ / g2) * (b.d_ / g1);
        if (n <= kMax && n >= -kMax && d <= kMax) {
            Rat r;
            r.n_ = (long long)n;
            r.d_ = (long long)d;
            return r;
        }
        return Rat::from_i128(n, d);
    }
    Rat r;
    r.set_big(a.to_mpq() * b.to_mpq());
    return r;
}

Rat Rat::inv() const {
    if (is_zero()) throw std::domain_error("division by zero rational");
    if (!big_) {
        Rat r;
        r.n_ = n_ < 0 ? -d_ : d_;
        r.d_ = n_ < 0 ? -n_ : n_;
        return r;
    }
    Rat r;
    r.set_big(1 / *big_);
    return r;
}

Rat operator/(const Rat& a, const Rat& b) { return a * b.inv(); }

bool operator==(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) return a.n_ == b.n_ && a.d_ == b.d_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;  // canonical forms differ in storage class
}

bool operator<(const Rat& a, const Rat& b) {
    if (!a.big_ && !b.big_) return (__int128)a.n_ * b.d_ < (__int128)b.n_ * a.d_;
    return a.to_mpq() < b.to_mpq();
}

}  // namespace hd
