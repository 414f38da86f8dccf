#pragma once
// Elements of Q(i, sqrt2, sqrt3, sqrt5, ...): sums of (p + q i) * sqrt(d), d square-free.
#include "hd/rat.hpp"

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace hd {

// Radicals are indexed by a bitmask over kPrimes; mask 0 is the rational part.
const std::vector<long>& tower_primes();
long mask_value(uint64_t mask);  // product of the primes in mask

class Scalar {
public:
    struct Term {
        uint64_t mask;
        Rat re, im;
    };

    Scalar() = default;
    Scalar(int n) { if (n) terms_.push_back({0, Rat(n), Rat()}); }
    Scalar(long n) { if (n) terms_.push_back({0, Rat(n), Rat()}); }
    Scalar(long long n) { if (n) terms_.push_back({0, Rat(n), Rat()}); }
    Scalar(const Rat& q) { if (!q.is_zero()) terms_.push_back({0, q, Rat()}); }
    static Scalar gauss(const Rat& re, const Rat& im);
    static Scalar i();
    static Scalar radical(uint64_t mask, const Rat& re, const Rat& im = Rat());
    static Scalar parse(const std::string& text);  // throws ParseError

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return terms_.size() == 1 && terms_[0].mask == 0 && terms_[0].re.is_one() && terms_[0].im.is_zero(); }
    bool is_gaussian() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mask == 0); }
    bool is_rational() const { return terms_.empty() || (is_gaussian() && terms_[0].im.is_zero()); }
    bool is_real() const;
    Rat to_rat() const;  // throws unless rational
    uint64_t radical_support() const;  // OR of masks
    const boost::container::small_vector<Term, 1>& terms() const { return terms_; }

    Scalar conj() const;  // complex conjugation (radicals are real)
    Scalar inv() const;
    Scalar operator-() const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b) { return *this += -b; }
    Scalar& operator*=(const Scalar& b) { *this = *this * b; return *this; }
    Scalar& operator/=(const Scalar& b) { *this = *this * b.inv(); return *this; }
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    // this += a*b without building the product for the common Gaussian case.
    void add_mul(const Scalar& a, const Scalar& b);
    Scalar scaled(const Rat& q) const;

    std::string str() const;
    // Sign of a real element; throws if not real. Uses exact comparisons only.
    int real_sign() const;
    double approx_re() const;
    double approx_im() const;

private:
    boost::container::small_vector<Term, 1> terms_;  // sorted by mask, no zero terms
    void normalize();
};

Scalar sqrt_of(long n);
Scalar sqrt_of(const Rat& q);

struct ParseError : std::runtime_error {
    size_t pos;
    ParseError(const std::string& msg, size_t p) : std::runtime_error(msg + " at position " + std::to_string(p)), pos(p) {}
};

}  // namespace hd
