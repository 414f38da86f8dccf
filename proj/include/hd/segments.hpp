#pragma once
// Zelevinsky multisegments and the combinatorics attached to ladders.
#include "hd/group.hpp"
#include "hd/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hd {

struct Segment {
    int a = 0, b = 0;
    int length() const { return b - a + 1; }
    friend bool operator==(const Segment& x, const Segment& y) { return x.a == y.a && x.b == y.b; }
};

struct Multisegment {
    std::vector<Segment> segs;

    // "[-1,1];[0,0]"; throws ParseError with a position.
    static Multisegment parse(const std::string& text);
    std::string str() const;
    int l() const;
    int n() const { return (int)segs.size(); }
    bool in_Z() const;       // b strictly decreasing
    bool is_ladder() const;  // also a strictly decreasing
    friend bool operator==(const Multisegment& x, const Multisegment& y) { return x.segs == y.segs; }
    friend bool operator<(const Multisegment& x, const Multisegment& y) { return x.str() < y.str(); }
};

int m_profile(const Multisegment& m, int e);
// (e, m(e)) over the support, ascending e.
std::vector<std::pair<int, int>> m_profile_all(const Multisegment& m);
bool up_and_then_down(const Multisegment& m);

std::optional<Multisegment> temp_of(const Multisegment& m);
bool is_elliptic_cc(const Multisegment& m);
bool is_symmetric(const Multisegment& m);  // of the form {[-b,b]} with distinct b
// A translate of a symmetric multisegment by a central (possibly half-integral) shift.
bool is_symmetric_mod_center(const Multisegment& m);

struct LinkClass {
    std::vector<int> members;  // segment indices, rightmost first (a decreasing)
    int a = 0, b = 0;          // J(f) = [a, b]
};
std::vector<LinkClass> linkage_classes(const Multisegment& m);

struct WResult {
    std::vector<int> perm;                 // perm[i-1] = w(i), 1-based values
    std::vector<int> by_b, by_a;           // class orderings of Step 1
    std::vector<LinkClass> classes;
};
WResult w_of(const Multisegment& m);
std::string cycle_notation(const std::vector<int>& perm);  // "(1,4,2,3)", "id"

struct AlphaResult {
    std::vector<int> hk, ht;
    Partition alpha_prime, alpha;
};
AlphaResult alpha_of(const Multisegment& m);
Partition lambda_of(const Multisegment& m);
// Partition from Frobenius coordinates (arms, legs), both strictly decreasing.
Partition from_frobenius(const std::vector<int>& arms, const std::vector<int>& legs);

struct BggTerm {
    std::vector<int> w;  // 1-based images
    int length = 0;      // Coxeter length of w
    std::optional<Multisegment> m;  // nullopt = zero term
};
std::vector<BggTerm> bgg_terms(const Multisegment& m);

struct LadderPrediction {
    Partition lambda;
    bool basic = false;          // lambda = (l): prediction is S itself
    Scalar k_n, k_l;             // epsilon_(n) with n = #segments, or epsilon_(l)
    long long block_printed = 0; // sigma~ block when the +- sum is attached to DP+
    long long block_swapped = 0; // sigma~ block when the +- sum is attached to DP-
    long long basic_dim = 0;     // dim S
};
LadderPrediction ladder_hd_prediction(const Multisegment& m);

// All multisegments in Z_l with endpoints in [-B, B], b strictly decreasing.
std::vector<Multisegment> enumerate_Z(int l, int B);

}  // namespace hd
