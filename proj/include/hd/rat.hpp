#pragma once
// Rational numbers: int64 fast path, GMP fallback on overflow.
#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>

namespace hd {

class Rat {
public:
    Rat() = default;
    Rat(long long n) : n_(n) { if (n == INT64_MIN) promote_from(mpq_class(mpz_class(std::to_string(n)))); }
    Rat(int n) : n_(n) {}
    Rat(long n) : Rat((long long)n) {}
    Rat(long long n, long long d);
    explicit Rat(const mpq_class& q) { set_big(q); }
    Rat(const Rat& o) : n_(o.n_), d_(o.d_) { if (o.big_) big_ = std::make_unique<mpq_class>(*o.big_); }
    Rat(Rat&&) noexcept = default;
    Rat& operator=(const Rat& o) {
        if (this != &o) {
            n_ = o.n_; d_ = o.d_;
            big_ = o.big_ ? std::make_unique<mpq_class>(*o.big_) : nullptr;
        }
        return *this;
    }
    Rat& operator=(Rat&&) noexcept = default;

    static Rat parse(const std::string& s);  // "p" or "p/q"

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    int sign() const { return big_ ? sgn(*big_) : (n_ > 0) - (n_ < 0); }
    bool is_small() const { return !big_; }
    long long small_num() const { return n_; }
    long long small_den() const { return d_; }

    mpq_class to_mpq() const;
    mpz_class num() const;
    mpz_class den() const;
    std::string str() const;
    double to_double() const;

    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const;
    Rat& operator+=(const Rat& b) { *this = *this + b; return *this; }
    Rat& operator-=(const Rat& b) { *this = *this - b; return *this; }
    Rat& operator*=(const Rat& b) { *this = *this * b; return *this; }
    Rat& operator/=(const Rat& b) { *this = *this / b; return *this; }
    Rat inv() const;

    friend bool operator==(const Rat& a, const Rat& b);
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b);
    friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
    friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
    friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

private:
    long long n_ = 0, d_ = 1;
    std::unique_ptr<mpq_class> big_;

    void set_big(const mpq_class& q);
    void promote_from(const mpq_class& q) { set_big(q); }
    static Rat from_i128(__int128 n, __int128 d);
};

}  // namespace hd
