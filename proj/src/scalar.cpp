#include "hd/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace hd {

const std::vector<long>& tower_primes() {
    static const std::vector<long> primes = [] {
        std::vector<long> ps;
        for (long n = 2; ps.size() < 64; ++n) {
            bool prime = true;
            for (long p : ps) {
                if (p * p > n) break;
                if (n % p == 0) { prime = false; break; }
            }
            if (prime) ps.push_back(n);
        }
        return ps;
    }();
    return primes;
}

long mask_value(uint64_t mask) {
    const auto& ps = tower_primes();
    __int128 v = 1;
    for (int k = 0; mask; ++k, mask >>= 1)
        if (mask & 1) {
            v *= ps[k];
            if (v > INT64_MAX) throw std::overflow_error("radical product too large");
        }
    return (long)v;
}

Scalar Scalar::gauss(const Rat& re, const Rat& im) {
    Scalar s;
    if (!re.is_zero() || !im.is_zero()) s.terms_.push_back({0, re, im});
    return s;
}

Scalar Scalar::i() { return gauss(Rat(0), Rat(1)); }

Scalar Scalar::radical(uint64_t mask, const Rat& re, const Rat& im) {
    Scalar s;
    if (!re.is_zero() || !im.is_zero()) s.terms_.push_back({mask, re, im});
    return s;
}

void Scalar::normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) { return a.mask < b.mask; });
    size_t w = 0;
    for (size_t r = 0; r < terms_.size();) {
        Term t = std::move(terms_[r]);
        size_t q = r + 1;
        while (q < terms_.size() && terms_[q].mask == t.mask) {
            t.re += terms_[q].re;
            t.im += terms_[q].im;
            ++q;
        }
        if (!t.re.is_zero() || !t.im.is_zero()) terms_[w++] = std::move(t);
        r = q;
    }
    terms_.resize(w);
}

bool Scalar::is_real() const {
    for (const auto& t : terms_)
        if (!t.im.is_zero()) return false;
    return true;
}

Rat Scalar::to_rat() const {
    if (!is_rational()) throw std::domain_error("scalar is not rational: " + str());
    return terms_.empty() ? Rat() : terms_[0].re;
}

uint64_t Scalar::radical_support() const {
    uint64_t m = 0;
    for (const auto& t : terms_) m |= t.mask;
    return m;
}

Scalar Scalar::conj() const {
    Scalar s(*this);
    for (auto& t : s.terms_) t.im = -t.im;
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s(*this);
    for (auto& t : s.terms_) { t.re = -t.re; t.im = -t.im; }
    return s;
}

Scalar& Scalar::operator+=(const Scalar& b) {
    if (b.terms_.empty()) return *this;
    if (terms_.empty()) { *this = b; return *this; }
    if (terms_.size() == 1 && b.terms_.size() == 1 && terms_[0].mask == b.terms_[0].mask) {
        terms_[0].re += b.terms_[0].re;
        terms_[0].im += b.terms_[0].im;
        if (terms_[0].re.is_zero() && terms_[0].im.is_zero()) terms_.clear();
        return *this;
    }
    for (const auto& t : b.terms_) terms_.push_back(t);
    normalize();
    return *this;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar s(a);
    s += b;
    return s;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar s;
    if (a.terms_.empty() || b.terms_.empty()) return s;
    for (const auto& x : a.terms_)
        for (const auto& y : b.terms_) {
            Rat re, im;
            if (x.im.is_zero() && y.im.is_zero()) {
                re = x.re * y.re;
            } else {
                re = x.re * y.re - x.im * y.im;
                im = x.re * y.im + x.im * y.re;
            }
            uint64_t common = x.mask & y.mask;
            if (common) {
                Rat f(mask_value(common));
                re *= f;
                im *= f;
            }
            s.terms_.push_back({x.mask ^ y.mask, std::move(re), std::move(im)});
        }
    if (s.terms_.size() > 1) s.normalize();
    else if (s.terms_[0].re.is_zero() && s.terms_[0].im.is_zero()) s.terms_.clear();
    return s;
}

void Scalar::add_mul(const Scalar& a, const Scalar& b) {
    if (a.terms_.empty() || b.terms_.empty()) return;
    if (a.terms_.size() == 1 && b.terms_.size() == 1 && a.terms_[0].mask == 0 && b.terms_[0].mask == 0 &&
        (terms_.empty() || (terms_.size() == 1 && terms_[0].mask == 0))) {
        const Term& x = a.terms_[0];
        const Term& y = b.terms_[0];
        if (terms_.empty()) terms_.push_back({0, Rat(), Rat()});
        Term& t = terms_[0];
        if (x.im.is_zero() && y.im.is_zero()) {
            t.re += x.re * y.re;
        } else {
            t.re += x.re * y.re - x.im * y.im;
            t.im += x.re * y.im + x.im * y.re;
        }
        if (t.re.is_zero() && t.im.is_zero()) terms_.clear();
        return;
    }
    *this += a * b;
}

Scalar Scalar::scaled(const Rat& q) const {
    if (q.is_zero()) return Scalar();
    Scalar s(*this);
    for (auto& t : s.terms_) { t.re *= q; t.im *= q; }
    return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t k = 0; k < a.terms_.size(); ++k) {
        const auto& x = a.terms_[k];
        const auto& y = b.terms_[k];
        if (x.mask != y.mask || x.re != y.re || x.im != y.im) return false;
    }
    return true;
}

namespace {

int top_bit(uint64_t m) { return 63 - __builtin_clzll(m); }

// x = a + b*sqrt(p) with p the prime at bit k; a, b free of bit k.
void split_at(const Scalar& x, int k, Scalar& a, Scalar& b) {
    a = Scalar();
    b = Scalar();
    uint64_t bit = 1ULL << k;
    for (const auto& t : x.terms()) {
        if (t.mask & bit) b += Scalar::radical(t.mask & ~bit, t.re, t.im);
        else a += Scalar::radical(t.mask, t.re, t.im);
    }
}

}  // namespace

Scalar Scalar::inv() const {
    if (terms_.empty()) throw std::domain_error("division by zero scalar");
    uint64_t sup = radical_support();
    if (sup == 0) {
        const Term& t = terms_[0];
        if (t.im.is_zero()) return Scalar(t.re.inv());
        Rat n = t.re * t.re + t.im * t.im;
        return gauss(t.re / n, -t.im / n);
    }
    if (terms_.size() == 1) {
        // (c sqrt d)^-1 = c^-1 sqrt d / d
        const Term& t = terms_[0];
        Scalar c = gauss(t.re, t.im).inv();
        Rat d(mask_value(t.mask));
        Scalar r = c * radical(t.mask, Rat(1));
        return r.scaled(d.inv());
    }
    int k = top_bit(sup);
    Scalar a, b;
    split_at(*this, k, a, b);
    Scalar sp = radical(1ULL << k, Rat(1));
    Scalar conj_k = a - b * sp;
    Scalar norm = a * a - (b * b).scaled(Rat(tower_primes()[k]));
    return conj_k * norm.inv();
}

int Scalar::real_sign() const {
    if (!is_real()) throw std::domain_error("sign of non-real scalar");
    if (terms_.empty()) return 0;
    uint64_t sup = radical_support();
    if (sup == 0) return terms_[0].re.sign();
    int k = top_bit(sup);
    Scalar a, b;
    split_at(*this, k, a, b);
    int sa = a.real_sign(), sb = b.real_sign();
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    Scalar diff = a * a - (b * b).scaled(Rat(tower_primes()[k]));
    return sa * diff.real_sign();
}

double Scalar::approx_re() const {
    double v = 0;
    for (const auto& t : terms_) v += t.re.to_double() * std::sqrt((double)mask_value(t.mask));
    return v;
}

double Scalar::approx_im() const {
    double v = 0;
    for (const auto& t : terms_) v += t.im.to_double() * std::sqrt((double)mask_value(t.mask));
    return v;
}

namespace {

// Signed monomials for printing: (negative?, body)
void push_mono(std::vector<std::pair<bool, std::string>>& out, const Rat& c, const std::string& unit) {
    if (c.is_zero()) return;
    bool neg = c.sign() < 0;
    Rat a = neg ? -c : c;
    std::string body;
    if (unit.empty()) body = a.str();
    else if (a.is_one()) body = unit;
    else body = a.str() + "*" + unit;
    out.emplace_back(neg, body);
}

std::string gauss_str(const Rat& re, const Rat& im) {
    std::vector<std::pair<bool, std::string>> m;
    push_mono(m, re, "");
    push_mono(m, im, "i");
    std::string s;
    for (size_t k = 0; k < m.size(); ++k) {
        if (k == 0) s += m[k].first ? "-" + m[k].second : m[k].second;
        else s += (m[k].first ? " - " : " + ") + m[k].second;
    }
    return s;
}

}  // namespace

std::string Scalar::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<bool, std::string>> monos;
    for (const auto& t : terms_) {
        if (t.mask == 0) {
            push_mono(monos, t.re, "");
            push_mono(monos, t.im, "i");
            continue;
        }
        std::string rad = "sqrt(" + std::to_string(mask_value(t.mask)) + ")";
        if (t.im.is_zero()) push_mono(monos, t.re, rad);
        else if (t.re.is_zero()) push_mono(monos, t.im, "i*" + rad);
        else monos.emplace_back(false, "(" + gauss_str(t.re, t.im) + ")*" + rad);
    }
    std::string s;
    for (size_t k = 0; k < monos.size(); ++k) {
        if (k == 0) s += monos[k].first ? "-" + monos[k].second : monos[k].second;
        else s += (monos[k].first ? " - " : " + ") + monos[k].second;
    }
    return s;
}

Scalar sqrt_of(long n) {
    if (n < 1) throw std::domain_error("sqrt_of needs a positive integer");
    const auto& ps = tower_primes();
    long square = 1;
    uint64_t mask = 0;
    for (size_t k = 0; k < ps.size() && n > 1; ++k) {
        long p = ps[k];
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        for (int j = 0; j < e / 2; ++j) square *= p;
        if (e % 2) mask |= 1ULL << k;
    }
    if (n != 1) throw std::domain_error("sqrt_of: prime factor outside the radical table");
    return Scalar::radical(mask, Rat((long long)square));
}

Scalar sqrt_of(const Rat& q) {
    if (q.sign() <= 0) {
        if (q.is_zero()) return Scalar();
        throw std::domain_error("sqrt_of negative rational");
    }
    if (!q.is_small()) throw std::domain_error("sqrt_of: rational too large");
    long p = q.small_num(), d = q.small_den();
    __int128 prod = (__int128)p * d;
    if (prod > INT64_MAX) throw std::domain_error("sqrt_of: rational too large");
    return sqrt_of((long)prod).scaled(Rat(1, d));
}

// ---- parser ----

namespace {

struct Parser {
    const std::string& s;
    size_t p = 0;

    void ws() { while (p < s.size() && std::isspace((unsigned char)s[p])) ++p; }
    bool eat(char c) {
        ws();
        if (p < s.size() && s[p] == c) { ++p; return true; }
        return false;
    }
    Scalar expr() {
        Scalar v = term();
        for (;;) {
            if (eat('+')) v += term();
            else if (eat('-')) v -= term();
            else return v;
        }
    }
    Scalar term() {
        Scalar v = unary();
        for (;;) {
            if (eat('*')) v *= unary();
            else if (eat('/')) {
                size_t at = p;
                Scalar d = unary();
                if (d.is_zero()) throw ParseError("division by zero", at);
                v /= d;
            } else return v;
        }
    }
    Scalar unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return atom();
    }
    Scalar atom() {
        ws();
        if (p >= s.size()) throw ParseError("unexpected end of input", p);
        char c = s[p];
        if (std::isdigit((unsigned char)c)) {
            size_t st = p;
            while (p < s.size() && std::isdigit((unsigned char)s[p])) ++p;
            return Scalar(Rat::parse(s.substr(st, p - st)));
        }
        if (s.compare(p, 4, "sqrt") == 0) {
            size_t at = p;
            p += 4;
            if (!eat('(')) throw ParseError("expected '(' after sqrt", p);
            Scalar arg = expr();
            if (!eat(')')) throw ParseError("expected ')'", p);
            if (!arg.is_rational() || arg.to_rat().sign() < 0)
                throw ParseError("sqrt needs a non-negative rational argument", at);
            try {
                return sqrt_of(arg.to_rat());
            } catch (const std::exception& e) {
                throw ParseError(e.what(), at);
            }
        }
        if (c == 'i') {
            ++p;
            return Scalar::i();
        }
        if (c == '(') {
            ++p;
            Scalar v = expr();
            if (!eat(')')) throw ParseError("expected ')'", p);
            return v;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", p);
    }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
    Parser ps{text};
    Scalar v = ps.expr();
    ps.ws();
    if (ps.p != text.size()) throw ParseError("trailing input", ps.p);
    return v;
}

}  // namespace hd
