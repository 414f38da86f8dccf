#include "hd/segments.hpp"

#include <set>

#include "hd/clifford.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hd {

namespace {

struct Cursor {
    const std::string& s;
    size_t p = 0;
    void ws() { while (p < s.size() && std::isspace((unsigned char)s[p])) ++p; }
    bool eat(char c) {
        ws();
        if (p < s.size() && s[p] == c) { ++p; return true; }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) throw ParseError(std::string("expected '") + c + "'", p);
    }
    int integer() {
        ws();
        size_t start = p;
        if (p < s.size() && (s[p] == '-' || s[p] == '+')) ++p;
        size_t digits = p;
        while (p < s.size() && std::isdigit((unsigned char)s[p])) ++p;
        if (p == digits) throw ParseError("expected integer", start);
        try {
            return std::stoi(s.substr(start, p - start));
        } catch (const std::out_of_range&) {
            throw ParseError("integer out of range", start);
        }
    }
};

}  // namespace

Multisegment Multisegment::parse(const std::string& text) {
    Multisegment m;
    Cursor c{text};
    c.ws();
    if (c.p == text.size()) throw ParseError("empty multisegment", 0);
    do {
        c.expect('[');
        size_t at = c.p;
        int a = c.integer();
        c.expect(',');
        int b = c.integer();
        c.expect(']');
        if (b < a) throw ParseError("segment with b < a", at);
        m.segs.push_back({a, b});
    } while (c.eat(';'));
    c.ws();
    if (c.p != text.size()) throw ParseError("trailing input", c.p);
    return m;
}

std::string Multisegment::str() const {
    std::string out;
    for (size_t k = 0; k < segs.size(); ++k) {
        if (k) out += ';';
        out += "[" + std::to_string(segs[k].a) + "," + std::to_string(segs[k].b) + "]";
    }
    return out;
}

int Multisegment::l() const {
    int s = 0;
    for (auto& g : segs) s += g.length();
    return s;
}

bool Multisegment::in_Z() const {
    for (size_t k = 1; k < segs.size(); ++k)
        if (!(segs[k - 1].b > segs[k].b)) return false;
    return true;
}

bool Multisegment::is_ladder() const {
    if (!in_Z()) return false;
    for (size_t k = 1; k < segs.size(); ++k)
        if (!(segs[k - 1].a > segs[k].a)) return false;
    return true;
}

int m_profile(const Multisegment& m, int e) {
    int c = 0;
    for (auto& g : m.segs) c += (g.a <= e && e <= g.b);
    return c;
}

std::vector<std::pair<int, int>> m_profile_all(const Multisegment& m) {
    std::vector<std::pair<int, int>> out;
    if (m.segs.empty()) return out;
    int lo = m.segs[0].a, hi = m.segs[0].b;
    for (auto& g : m.segs) lo = std::min(lo, g.a), hi = std::max(hi, g.b);
    for (int e = lo; e <= hi; ++e) out.push_back({e, m_profile(m, e)});
    return out;
}

bool up_and_then_down(const Multisegment& m) {
    auto prof = m_profile_all(m);
    size_t k = 0;
    while (k + 1 < prof.size() && prof[k].second <= prof[k + 1].second) ++k;
    while (k + 1 < prof.size() && prof[k].second >= prof[k + 1].second) ++k;
    return k + 1 >= prof.size();
}

std::optional<Multisegment> temp_of(const Multisegment& m) {
    auto prof = m_profile_all(m);
    std::map<int, int> mp(prof.begin(), prof.end());
    auto at = [&](int e) { auto it = mp.find(e); return it == mp.end() ? 0 : it->second; };
    int hi = prof.empty() ? -1 : prof.back().first;
    int lo = prof.empty() ? 0 : prof.front().first;
    if (lo != -hi) return std::nullopt;
    for (int e = 0; e <= hi; ++e)
        if (at(e) != at(-e)) return std::nullopt;
    Multisegment t;
    for (int e = hi; e >= 0; --e) {
        int k = at(e) - at(e + 1);
        if (k < 0 || k > 1) return std::nullopt;  // needs distinct b
        if (k == 1) t.segs.push_back({-e, e});
    }
    if (t.l() != m.l()) return std::nullopt;
    return t;
}

bool is_elliptic_cc(const Multisegment& m) { return temp_of(m).has_value(); }

bool is_symmetric(const Multisegment& m) {
    if (!m.in_Z()) return false;
    for (auto& g : m.segs)
        if (g.a != -g.b) return false;
    return true;
}

bool is_symmetric_mod_center(const Multisegment& m) {
    std::set<int> lens;
    for (auto& g : m.segs) {
        if (g.a + g.b != m.segs[0].a + m.segs[0].b) return false;
        if (!lens.insert(g.length()).second) return false;
    }
    return true;
}

std::vector<LinkClass> linkage_classes(const Multisegment& m) {
    if (!m.is_ladder()) throw std::invalid_argument("linkage classes need a ladder: " + m.str());
    int n = m.n();
    // next[i] = the segment right-linked below i: b_j + 1 = a_i.
    std::vector<int> next(n, -1), prev(n, -1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && m.segs[j].b + 1 == m.segs[i].a) {
                if (next[i] != -1 || prev[j] != -1)
                    throw std::logic_error("segment with two links of the same side in " + m.str());
                next[i] = j;
                prev[j] = i;
            }
    std::vector<LinkClass> out;
    for (int i = 0; i < n; ++i) {
        if (prev[i] != -1) continue;
        LinkClass f;
        for (int k = i; k != -1; k = next[k]) f.members.push_back(k);
        f.b = m.segs[f.members.front()].b;
        f.a = m.segs[f.members.back()].a;
        out.push_back(f);
    }
    return out;
}

WResult w_of(const Multisegment& m) {
    WResult r;
    r.classes = linkage_classes(m);
    int p = (int)r.classes.size();
    r.by_b.resize(p);
    r.by_a.resize(p);
    std::iota(r.by_b.begin(), r.by_b.end(), 0);
    std::iota(r.by_a.begin(), r.by_a.end(), 0);
    auto& cl = r.classes;
    std::sort(r.by_b.begin(), r.by_b.end(), [&](int x, int y) { return cl[x].b > cl[y].b; });
    std::sort(r.by_a.begin(), r.by_a.end(), [&](int x, int y) { return cl[x].a < cl[y].a; });
    for (int e = 1; e < p; ++e) {
        if (cl[r.by_b[e - 1]].b == cl[r.by_b[e]].b || cl[r.by_a[e - 1]].a == cl[r.by_a[e]].a)
            throw std::logic_error("tie in class ordering for " + m.str());
    }
    // G on left endpoints. The first segment of the e-th class (by b) goes to the
    // last left endpoint of the e-th class (by a); later members go to the previous member.
    std::map<int, int> G;
    for (int e = 0; e < p; ++e) {
        const auto& fi = cl[r.by_b[e]];
        const auto& fj = cl[r.by_a[e]];
        G[m.segs[fi.members[0]].a] = m.segs[fj.members.back()].a;
        for (size_t d = 1; d < fi.members.size(); ++d)
            G[m.segs[fi.members[d]].a] = m.segs[fi.members[d - 1]].a;
    }
    int n = m.n();
    std::map<int, int> pos;
    for (int i = 0; i < n; ++i) pos[m.segs[i].a] = i + 1;
    r.perm.resize(n);
    std::vector<bool> hit(n + 1, false);
    for (int i = 0; i < n; ++i) {
        int img = pos.at(G.at(m.segs[i].a));
        if (hit[img]) throw std::logic_error("G is not bijective for " + m.str());
        hit[img] = true;
        r.perm[i] = img;
    }
    return r;
}

std::string cycle_notation(const std::vector<int>& perm) {
    int n = (int)perm.size();
    std::vector<bool> seen(n + 1, false);
    std::string out;
    for (int i = 1; i <= n; ++i) {
        if (seen[i] || perm[i - 1] == i) continue;
        out += "(";
        for (int k = i; !seen[k]; k = perm[k - 1]) {
            seen[k] = true;
            if (k != i) out += ",";
            out += std::to_string(k);
        }
        out += ")";
    }
    return out.empty() ? "id" : out;
}

Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs) {
    int s = (int)arms.size();
    if ((int)legs.size() != s) throw std::invalid_argument("frobenius coordinate length mismatch");
    for (int e = 0; e < s; ++e) {
        if (arms[e] < 0 || legs[e] < 0) throw std::invalid_argument("negative frobenius coordinate");
        if (e && (arms[e] >= arms[e - 1] || legs[e] >= legs[e - 1]))
            throw std::invalid_argument("frobenius coordinates not strictly decreasing");
    }
    std::vector<int> rows;
    for (int e = 0; e < s; ++e) rows.push_back(arms[e] + e + 1);
    int depth = s ? legs[0] + 1 : 0;
    for (int i = s + 1; i <= depth; ++i) {
        int len = 0;
        for (int k = 1; k <= s; ++k)
            if (legs[k - 1] + k >= i) ++len;
        rows.push_back(len);
    }
    return Partition(rows);
}

AlphaResult alpha_of(const Multisegment& m) {
    if (!is_elliptic_cc(m)) throw std::invalid_argument("alpha needs an elliptic central character: " + m.str());
    WResult w = w_of(m);
    AlphaResult r;
    int p = (int)w.classes.size();
    std::vector<int> arms, legs;
    for (int e = 0; e < p; ++e) {
        int top = w.classes[w.by_b[e]].b;
        int bot = w.classes[w.by_a[e]].a;
        int hk = top - bot + 1, ht = 0;
        for (auto& g : m.segs) ht += (bot <= g.b && g.b <= top);
        r.hk.push_back(hk);
        r.ht.push_back(ht);
        arms.push_back(hk - ht);
        legs.push_back(ht - 1);
    }
    try {
        r.alpha_prime = from_frobenius(arms, legs);
    } catch (const std::invalid_argument& ex) {
        throw std::logic_error("inconsistent hooks for " + m.str() + ": " + ex.what());
    }
    if (r.alpha_prime.size() != m.l()) throw std::logic_error("hook data does not fill l for " + m.str());
    r.alpha = r.alpha_prime.transpose();
    return r;
}

Partition lambda_of(const Multisegment& m) {
    std::vector<int> parts;
    for (auto& g : m.segs) parts.push_back(g.length());
    return Partition(parts);
}

std::vector<BggTerm> bgg_terms(const Multisegment& m) {
    int n = m.n();
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::vector<BggTerm> out;
    do {
        BggTerm t;
        t.w = w;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) t.length += w[i] > w[j];
        Multisegment mw;
        bool zero = false;
        for (int k = 0; k < n; ++k) {
            int a = m.segs[w[k] - 1].a, b = m.segs[k].b;
            if (a > b + 1) { zero = true; break; }
            if (a <= b) mw.segs.push_back({a, b});
        }
        if (!zero) t.m = mw;
        out.push_back(t);
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

LadderPrediction ladder_hd_prediction(const Multisegment& m) {
    auto t = temp_of(m);
    if (!m.in_Z() || !t) throw std::invalid_argument("prediction needs an elliptic central character");
    LadderPrediction p;
    p.lambda = lambda_of(*t);
    int l = m.l(), n = m.n();
    p.basic = p.lambda.length() == 1;
    p.basic_dim = 1LL << ((l - 1) / 2);
    Scalar two_pow = sqrt_of(1L << std::max(0, p.lambda.length() - 1));  // 2^{(len-1)/2}
    Scalar el = epsilon_of(p.lambda);
    p.k_n = two_pow / (el * epsilon_of(Partition({n})));
    p.k_l = two_pow / (el * epsilon_of(Partition({l})));
    long long d = spin_irrep_dimension(p.lambda);
    bool plus = is_dp_plus(p.lambda);
    p.block_printed = plus ? 2 * d : d;
    p.block_swapped = plus ? d : 2 * d;
    return p;
}

std::vector<Multisegment> enumerate_Z(int l, int B) {
    std::vector<Multisegment> out;
    Multisegment cur;
    // Segments chosen with b strictly decreasing.
    std::function<void(int, int)> rec = [&](int left, int bmax) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int b = bmax; b >= -B; --b)
            for (int a = b; a >= std::max(-B, b - left + 1); --a) {
                cur.segs.push_back({a, b});
                rec(left - (b - a + 1), b - 1);
                cur.segs.pop_back();
            }
    };
    rec(l, B);
    return out;
}

}  // namespace hd
